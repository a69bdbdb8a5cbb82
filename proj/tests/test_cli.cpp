#include "cli.hpp"
#include "cli_io.hpp"
#include "oracles.hpp"

#include "geomet/catalog.hpp"
#include "geomet/circle.hpp"
#include "geomet/enumerate.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace geomet;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

// Scratch directory removed at scope exit.
struct Scratch {
    fs::path dir;
    Scratch() {
        static int counter = 0;
        dir = fs::temp_directory_path() / ("geomet_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(dir);
    }
    ~Scratch() { fs::remove_all(dir); }
    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(dir / name) << text;
        return (dir / name).string();
    }
    std::string path(const std::string& name) const { return (dir / name).string(); }
    std::string bundled(const std::string& name) const { return write(fs::path(name).filename().string(), bundled_file(name)); }
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("metrize the Petersen system and verify the certificate") {
    Scratch s;
    std::string g = s.bundled("fixtures/petersen.graph"), p = s.bundled("fixtures/petersen.paths");
    Run r = run({"metrize", "--graph", g, "--system", p, "--out", s.path("cert.txt")});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("certificate") != std::string::npos);
    Certificate c = cli::load_certificate(s.path("cert.txt"));
    PathSystem ps = cli::load_system(p, cli::load_graph(g));
    CHECK(oracle::certificate_sound(ps, c));
    auto coef = oracle::coefficients(ps.graph(), c);
    for (EdgeId e = 0; e < ps.graph().edge_count(); ++e) {
        const Edge& ed = ps.graph().edge(e);
        CHECK(coef[e] == (ed.u >= 5 ? 1 : 0));
    }

    CHECK(run({"verify-cert", "--graph", g, "--system", p, "--cert", s.path("cert.txt")}).code == cli::kOk);
    // Zero the first multiplier.
    std::string text = cli::read_file(s.path("cert.txt"));
    auto pos = text.find("lambda ");
    REQUIRE(pos != std::string::npos);
    auto end = text.find(' ', pos + 7);
    text.replace(pos + 7, end - pos - 7, "0");
    std::string bad = s.write("bad.cert", text);
    CHECK(run({"verify-cert", "--graph", g, "--system", p, "--cert", bad}).code == cli::kNegative);
}

TEST_CASE("metrize to JSON weights and verify them") {
    Scratch s;
    Graph c5 = cycle_graph(5);
    std::string g = s.write("c5.graph", format_graph(c5));
    std::string p = s.write("c5.paths", format_path_system(canonical_odd_system(5)));
    Run r = run({"--format", "json", "--out", s.path("w.json"), "metrize", "--graph", g, "--system", p, "--strict"});
    CHECK(r.code == cli::kOk);
    std::string json_text = cli::read_file(s.path("w.json"));
    CHECK(cli::looks_like_json(json_text));
    Weights w = cli::load_weights(s.path("w.json"), c5);
    CHECK(oracle::induces(canonical_odd_system(5), w, true));
    CHECK(run({"verify-weights", "--graph", g, "--system", p, "--weights", s.path("w.json"), "--strict"}).code == cli::kOk);
    std::string zero = s.write("zero.w", format_weights(c5, Weights(5, 0)));
    CHECK(run({"verify-weights", "--graph", g, "--system", p, "--weights", zero}).code == cli::kNegative);

    CHECK(run({"metrize", "--graph", g, "--system", p, "--strict", "--constructive"}).code == cli::kOk);
    Run bumps = run({"--seed", "7", "metrize", "--graph", g, "--system", p, "--strict", "--perturb-check", "20"});
    CHECK(bumps.code == cli::kOk);
    CHECK(bumps.out == run({"--seed", "7", "metrize", "--graph", g, "--system", p, "--strict", "--perturb-check", "20"}).out);
}

TEST_CASE("decide-graph exit codes") {
    Scratch s;
    std::string k4 = s.write("k4.graph", format_graph(complete_graph(4)));
    Run r = run({"decide-graph", "--graph", k4, "--strict"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("StrictlyMetrizable") != std::string::npos);

    std::string pet = s.write("pet.graph", format_graph(petersen_graph()));
    Run p = run({"decide-graph", "--graph", pet, "--explain"});
    CHECK(p.code == cli::kNegative);
    CHECK(p.out.find("NonMetrizable") != std::string::npos);

    std::string b = s.bundled("fixtures/contraction_b.graph");
    Run u = run({"decide-graph", "--graph", b, "--no-shortcuts", "--budget-systems", "50"});
    CHECK(u.code == cli::kUnknown);
    CHECK(u.out.find("Unknown") != std::string::npos);
}

TEST_CASE("usage and input errors") {
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"no-such-command"}).code == cli::kUsage);
    CHECK(run({"metrize", "--graph", "/nonexistent/g"}).code == cli::kUsage);
    CHECK(run({"metrize", "--graph", "/nonexistent/g", "--system", "/nonexistent/p"}).code == cli::kUsage);
    CHECK(run({"--format", "xml", "fixtures", "list"}).code == cli::kUsage);
    Scratch s;
    std::string broken = s.write("broken.graph", "3 2\n0 1\n1 1\n");
    CHECK(run({"screen", "--graph", broken}).code == cli::kUsage);
    Run h = run({"metrize", "--help"});
    CHECK(h.code == cli::kOk);
    CHECK(h.out.find("--strict") != std::string::npos);
}

TEST_CASE("check-system, enumerate and cycle-classify") {
    Scratch s;
    Graph c4 = cycle_graph(4);
    std::string g = s.write("c4.graph", format_graph(c4));
    std::string ok = s.write("ok.paths", format_path_system(induce_from_weights(c4, Weights{1, 2, 3, 5})));
    CHECK(run({"check-system", "--graph", g, "--system", ok}).code == cli::kOk);
    // 0-2 through 1 but 0-1 the long way round.
    std::string bad = s.write("bad.paths", "pathsystem 4\n0 1: 0 3 2 1\n0 2: 0 1 2\n0 3: 0 3\n1 2: 1 2\n1 3: 1 2 3\n2 3: 2 3\n");
    CHECK(run({"check-system", "--graph", g, "--system", bad}).code == cli::kNegative);

    Graph c5 = cycle_graph(5);
    std::string g5 = s.write("c5.graph", format_graph(c5));
    CHECK(run({"--out", s.path("all.txt"), "enumerate", "--graph", g5}).code == cli::kOk);
    auto systems = cli::parse_system_list(cli::read_file(s.path("all.txt")), c5);
    CHECK(systems.size() == count_consistent_systems(c5));
    CHECK(systems == all_consistent_systems(c5));
    CHECK(run({"enumerate", "--graph", g5, "--limit", "3", "--decide"}).code == cli::kOk);
    std::string big = s.write("c10.graph", format_graph(cycle_graph(10)));
    CHECK(run({"enumerate", "--graph", big}).code == cli::kUsage);

    std::string s5 = s.write("s5.paths", format_path_system(canonical_odd_system(5)));
    Run cc = run({"cycle-classify", "--graph", g5, "--system", s5});
    CHECK(cc.code == cli::kOk);
    CHECK(cc.out.find("5") != std::string::npos);
}

TEST_CASE("screen and suspended-lift") {
    Scratch s;
    std::string k7 = s.write("k7.graph", format_graph(complete_graph(7)));
    Run r = run({"screen", "--graph", k7});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("(a)") != std::string::npos);
    std::string c9 = s.write("c9.graph", format_graph(cycle_graph(9)));
    CHECK(run({"screen", "--graph", c9}).code == cli::kNegative);

    Graph g(5);
    for (auto [a, b] : {std::pair{0, 1}, {0, 2}, {1, 2}, {0, 3}, {3, 4}, {1, 4}}) g.add_edge(a, b);
    PathSystem ps = induce_from_weights(g, Weights{Rational(1, 10), 1, 1, 1, 1, 1});
    std::string gf = s.write("g.graph", format_graph(g));
    std::string pf = s.write("g.paths", format_path_system(ps));
    Run lift = run({"--out", s.path("lift.w"), "suspended-lift", "--graph", gf, "--system", pf, "--path", "0,3,4,1"});
    CHECK(lift.code == cli::kOk);
    CHECK(oracle::induces(ps, cli::load_weights(s.path("lift.w"), g), false));
}

TEST_CASE("circle-check") {
    Scratch s;
    std::string a = s.write("a.circle", format_circle(antipodal_map(256).values));
    CHECK(run({"circle-check", "--map", a}).code == cli::kOk);
    std::string u = s.write("u.circle", format_circle(uniform_density(256).values));
    CHECK(run({"circle-check", "--map", a, "--density", u, "--tol", "1e-6"}).code == cli::kOk);
    std::string m = s.write("m.json", cli::circle_to_json(conjugated_antipodal(512, 0.3).values).dump());
    CHECK(run({"circle-check", "--map", m}).code == cli::kOk);
    CHECK(run({"circle-check", "--map", m, "--density", u}).code == cli::kUsage);  // sizes differ
    std::string q = s.write("q.circle", format_circle(shift_map(256, 0.25).values));
    CHECK(run({"circle-check", "--map", q}).code == cli::kNegative);
}

TEST_CASE("fixtures subcommands") {
    Run list = run({"fixtures", "list"});
    CHECK(list.code == cli::kOk);
    CHECK(list.out.find("catalog/MANIFEST") != std::string::npos);
    Run show = run({"fixtures", "show", "fixtures/prism.graph"});
    CHECK(show.code == cli::kOk);
    CHECK(show.out == bundled_file("fixtures/prism.graph"));
    CHECK(run({"fixtures", "show", "nope"}).code == cli::kUsage);
}

TEST_CASE("JSON mirrors round-trip") {
    PathSystem pet = parse_path_system(bundled_file("fixtures/petersen.paths"), petersen_graph());
    const Graph& g = pet.graph();
    CHECK(format_graph(cli::graph_from_json(cli::graph_to_json(g))) == format_graph(g));
    CHECK(cli::system_from_json(cli::system_to_json(pet), g) == pet);
    Weights w(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) w[e] = ratio(2 * e + 1, 3);
    CHECK(cli::weights_from_json(cli::weights_to_json(g, w), g) == w);
    Certificate c = parse_certificate(bundled_file("fixtures/petersen.cert"));
    CHECK(format_certificate(cli::certificate_from_json(cli::certificate_to_json(c))) == format_certificate(c));
    auto circ = conjugated_antipodal(32, 0.1).values;
    CHECK(cli::circle_from_json(cli::circle_to_json(circ)) == circ);

    // Field names follow the text keywords.
    CHECK(cli::system_to_json(pet).contains("pathsystem"));
    CHECK(cli::certificate_to_json(c).contains("certificate"));
    CHECK(cli::circle_to_json(circ).contains("circle"));
    CHECK_THROWS(cli::graph_from_json(cli::json{{"n", 2}, {"edges", {{0, 5}}}}));
}

}  // TEST_SUITE
