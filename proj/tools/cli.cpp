#include "cli.hpp"

#include "cli_io.hpp"
#include "geomet/catalog.hpp"
#include "geomet/circle.hpp"
#include "geomet/enumerate.hpp"
#include "geomet/error.hpp"
#include "geomet/metrize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

namespace geomet::cli {

namespace {

struct Globals {
    std::string out_path;
    std::string format = "text";
    std::uint64_t seed = 0;
    int jobs = 1;
};

// Writes the machine-readable artifact: to --out when given, else JSON goes to
// stdout and text is dropped (the human summary already covers it).
class Emitter {
public:
    Emitter(const Globals& g, std::ostream& out) : g_(g), out_(out) {}
    void emit(const std::string& text, const json& j) const {
        const bool as_json = g_.format == "json";
        if (g_.out_path.empty()) {
            if (as_json) out_ << j.dump(2) << '\n';
            return;
        }
        std::ofstream f(g_.out_path, std::ios::binary);
        if (!f) fail(ErrorCode::InvalidArgument, "cannot write '" + g_.out_path + "'");
        if (as_json)
            f << j.dump(2) << '\n';
        else
            f << text;
    }

private:
    const Globals& g_;
    std::ostream& out_;
};

std::string edge_str(const Graph& g, EdgeId e) {
    return std::to_string(g.edge(e).u) + "-" + std::to_string(g.edge(e).v);
}

std::string edges_str(const Graph& g, const std::vector<EdgeId>& es) {
    std::string s = "{";
    for (size_t i = 0; i < es.size(); ++i) s += (i ? ", " : "") + edge_str(g, es[i]);
    return s + "}";
}

std::string path_str(const Path& p) {
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + std::to_string(p[i]);
    return s;
}

json edges_json(const Graph& g, const std::vector<EdgeId>& es) {
    json a = json::array();
    for (EdgeId e : es) a.push_back({g.edge(e).u, g.edge(e).v});
    return a;
}

Path parse_path_arg(const std::string& text) {
    std::string t = text;
    std::replace(t.begin(), t.end(), ',', ' ');
    std::istringstream in(t);
    Path p;
    Vertex v;
    while (in >> v) p.push_back(v);
    if (!in.eof()) fail(ErrorCode::ParseError, "bad path '" + text + "'");
    return p;
}

void print_weights(std::ostream& out, const Graph& g, const Weights& w) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) out << "  w(" << edge_str(g, e) << ") = " << to_text(w[e]) << '\n';
}

void print_certificate(std::ostream& out, const PathSystem& ps, const Certificate& c) {
    const Graph& g = ps.graph();
    out << "  " << (c.strict ? "strict" : "non-strict") << " certificate, " << c.terms.size() << " terms\n";
    for (const auto& t : c.terms)
        out << "  " << to_text(t.multiplier) << " * [ w(" << path_str(t.chosen) << ") - w(" << path_str(t.competitor) << ") ]\n";
    auto coef = certificate_coefficients(ps, c);
    out << "  sum = ";
    bool any = false;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (sgn(coef[e]) == 0) continue;
        out << (any ? " + " : "") << to_text(coef[e]) << " w(" << edge_str(g, e) << ")";
        any = true;
    }
    out << (any ? "" : "0") << (c.strict ? " < 0" : " <= 0") << '\n';
    out << "  forced edges: " << edges_str(g, forced_edges(ps, c)) << '\n';
}

// Nonnegative bumps up to the perturbation radius; returns failures.
int perturbation_trials(const PathSystem& ps, const Weights& w, int trials, std::uint64_t seed) {
    Rational r = perturbation_radius(ps, w);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> step(0, 1000);
    int bad = 0;
    for (int t = 0; t < trials; ++t) {
        Weights x = w;
        for (auto& v : x) v += r * ratio(step(rng), 1000);
        if (!verify_weights(ps, x, true)) ++bad;
    }
    return bad;
}

json block_json(const GraphVerdict& gv, const BlockVerdict& b) {
    (void)gv;
    json j{{"vertices", b.block.to_host},
           {"kind", std::string(to_string(b.kind))},
           {"reason", std::string(to_string(b.reason))},
           {"systems", b.systems}};
    if (b.rule) j["rule"] = std::string(1, b.rule);
    if (b.hit) {
        std::vector<Vertex> branch;
        for (Vertex v : b.hit->witness.branch) branch.push_back(b.block.to_host[v]);
        j["catalog_entry"] = b.hit->entry_id;
        j["branch"] = branch;
    }
    if (b.witness) j["witness"] = system_to_json(*b.witness);
    if (b.certificate) j["certificate"] = certificate_to_json(*b.certificate);
    return j;
}

void explain_block(std::ostream& out, int idx, const BlockVerdict& b) {
    const Graph& g = b.block.graph;
    out << "block " << idx << ": vertices";
    for (Vertex v : b.block.to_host) out << ' ' << v;
    out << " (" << g.vertex_count() << " vertices, " << g.edge_count() << " edges)\n";
    out << "  " << to_string(b.kind) << " by " << to_string(b.reason);
    switch (b.reason) {
        case VerdictReason::Small: out << ": at most 4 vertices"; break;
        case VerdictReason::Outerplanar: out << ": outerplanar block"; break;
        case VerdictReason::Structural: out << ": rule (" << b.rule << ")"; break;
        case VerdictReason::Catalog: {
            out << ": contains a subdivision of catalog graph " << b.hit->entry_id << ", branch vertices";
            for (Vertex v : b.hit->witness.branch) out << ' ' << b.block.to_host[v];
            break;
        }
        case VerdictReason::Exhaustive: out << ": " << b.systems << " systems enumerated"; break;
        case VerdictReason::Budget: out << ": budget spent after " << b.systems << " systems"; break;
    }
    out << '\n';
    if (b.witness) {
        out << "  witness system (block-local labels):\n";
        std::istringstream lines(format_path_system(*b.witness));
        for (std::string l; std::getline(lines, l);) out << "    " << l << '\n';
    }
    if (b.certificate) print_certificate(out, *b.witness, *b.certificate);
}

int exit_for(VerdictKind k) {
    switch (k) {
        case VerdictKind::NonMetrizable:
        case VerdictKind::NotStrictlyMetrizable: return kNegative;
        case VerdictKind::Unknown: return kUnknown;
        default: return kOk;
    }
}

// Screens every block with at least three vertices.
struct ScreenLine {
    Subgraph block;
    std::optional<char> rule;
    std::optional<CatalogHit> hit;
};

std::vector<ScreenLine> screen_blocks(const Graph& g) {
    std::vector<ScreenLine> lines;
    for (const auto& comp : connected_components(g)) {
        Subgraph part = induced_subgraph(g, comp);
        for (Subgraph& b : biconnected_components(part.graph)) {
            if (b.graph.vertex_count() < 3) continue;
            for (Vertex& v : b.to_host) v = part.to_host[v];
            for (EdgeId& e : b.host_edges) e = part.host_edges[e];
            ScreenLine s{std::move(b), std::nullopt, std::nullopt};
            s.rule = screen_structural(s.block.graph);
            s.hit = screen_catalog(s.block.graph);
            lines.push_back(std::move(s));
        }
    }
    return lines;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Globals gl;
    CLI::App app{"Metrizability of consistent path systems in graphs", "geomet"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--out", gl.out_path, "Write the machine-readable result to FILE");
    app.add_option("--format", gl.format, "Format of --out: text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", gl.seed, "Seed for randomized checks");
    app.add_option("--jobs", gl.jobs, "Worker threads for enumeration")->check(CLI::PositiveNumber);

    std::string graph_path, system_path, cert_path, weights_path;
    auto graph_opt = [&](CLI::App* s) { s->add_option("--graph", graph_path, "Graph file")->required(); };
    auto system_opt = [&](CLI::App* s) { s->add_option("--system", system_path, "Path system file")->required(); };

    bool strict = false, constructive = false, explain = false, no_shortcuts = false, decide = false, allow_large = false;
    int perturb = 0, max_vertices = 9;
    std::uint64_t budget = 1000000, limit = 0;

    auto* c_check = app.add_subcommand("check-system", "Check consistency of a path system");
    graph_opt(c_check);
    system_opt(c_check);

    auto* c_metrize = app.add_subcommand("metrize", "Find inducing weights or an infeasibility certificate");
    graph_opt(c_metrize);
    system_opt(c_metrize);
    c_metrize->add_flag("--strict", strict, "Require strictly inducing weights");
    c_metrize->add_flag("--constructive", constructive, "Use the outerplanar construction instead of the LP");
    c_metrize->add_option("--perturb-check", perturb, "Random bumps within the perturbation radius to test");

    auto* c_vcert = app.add_subcommand("verify-cert", "Verify an infeasibility certificate");
    graph_opt(c_vcert);
    system_opt(c_vcert);
    c_vcert->add_option("--cert", cert_path, "Certificate file")->required();

    auto* c_vw = app.add_subcommand("verify-weights", "Verify that weights induce a path system");
    graph_opt(c_vw);
    system_opt(c_vw);
    c_vw->add_option("--weights", weights_path, "Weights file")->required();
    c_vw->add_flag("--strict", strict, "Require unique geodesics");

    auto* c_enum = app.add_subcommand("enumerate", "Enumerate consistent path systems of a graph");
    graph_opt(c_enum);
    c_enum->add_option("--limit", limit, "Stop after this many systems (0 = all)");
    c_enum->add_option("--max-vertices", max_vertices, "Refuse larger graphs unless --allow-large");
    c_enum->add_flag("--allow-large", allow_large, "Lift the vertex guard");
    c_enum->add_flag("--decide", decide, "Decide metrizability of every system");

    auto* c_decide = app.add_subcommand("decide-graph", "Decide whether a graph is (strictly) metrizable");
    graph_opt(c_decide);
    c_decide->add_flag("--strict", strict, "Strict metrizability");
    c_decide->add_option("--budget-systems", budget, "Enumeration budget across all blocks");
    c_decide->add_flag("--explain", explain, "Report the reason for each block");
    c_decide->add_flag("--no-shortcuts", no_shortcuts, "Skip theorems and screens; enumerate everything");

    auto* c_screen = app.add_subcommand("screen", "Run the structural and catalog screens");
    graph_opt(c_screen);

    auto* c_cycle = app.add_subcommand("cycle-classify", "Classify a path system on a cycle");
    graph_opt(c_cycle);
    system_opt(c_cycle);

    std::string path_arg, wh_path, wc_path, wp_path;
    auto* c_lift = app.add_subcommand("suspended-lift", "Lift weights across a suspended path");
    graph_opt(c_lift);
    system_opt(c_lift);
    c_lift->add_option("--path", path_arg, "Suspended path x .. y, vertices separated by spaces or commas")->required();
    c_lift->add_option("--wh", wh_path, "Weights on H = G minus the inner path vertices");
    c_lift->add_option("--wc", wc_path, "Weights on the cycle C = Q + xy");
    c_lift->add_option("--wprime", wp_path, "Weights on the derived graph");

    std::string map_path, density_path;
    double tol = 1e-2, inv_tol = 1e-3;
    auto* c_circle = app.add_subcommand("circle-check", "Check a sampled circle map and a density");
    c_circle->add_option("--map", map_path, "Sampled map file")->required();
    c_circle->add_option("--density", density_path, "Sampled density file (derived from T' when absent)");
    c_circle->add_option("--tol", tol, "Tolerance for the measure checks");
    c_circle->add_option("--involution-tol", inv_tol, "Tolerance for T(T(x)) = x");

    std::string fixture_name;
    auto* c_fix = app.add_subcommand("fixtures", "Bundled data and published fixtures");
    c_fix->require_subcommand(1);
    auto* c_runall = c_fix->add_subcommand("run-all", "Reproduce every published fixture");
    auto* c_list = c_fix->add_subcommand("list", "List bundled data files");
    auto* c_show = c_fix->add_subcommand("show", "Print a bundled data file");
    c_show->add_option("name", fixture_name, "Name as printed by 'fixtures list'")->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        const CLI::App* s = &app;
        while (!s->get_subcommands().empty()) s = s->get_subcommands().front();
        out << s->help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\nrun with --help for usage\n";
        return kUsage;
    }

    Emitter emit(gl, out);
    try {
        if (*c_check) {
            Graph g = load_graph(graph_path);
            PathSystem ps = load_system(system_path, g);
            auto bad = find_inconsistency(ps);
            json j{{"consistent", !bad.has_value()}};
            if (bad) {
                out << "inconsistent: the path " << path_str(bad->path) << " passes through " << bad->x << " and " << bad->y
                    << " but P(" << bad->x << "," << bad->y << ") = " << path_str(ps.path(bad->x, bad->y)) << '\n';
                j["path"] = bad->path;
                j["x"] = bad->x;
                j["y"] = bad->y;
                emit.emit("inconsistent\n", j);
                return kNegative;
            }
            auto pers = persistent_edges(ps);
            auto unused = unused_edges(ps);
            out << "consistent\n";
            out << "  neighborly: " << (is_neighborly(ps) ? "yes" : "no") << '\n';
            out << "  trivial: " << (is_trivial_system(ps) ? "yes" : "no") << '\n';
            out << "  persistent edges: " << edges_str(g, pers) << '\n';
            out << "  unused edges: " << edges_str(g, unused) << '\n';
            j["neighborly"] = is_neighborly(ps);
            j["trivial"] = is_trivial_system(ps);
            j["persistent_edges"] = edges_json(g, pers);
            j["unused_edges"] = edges_json(g, unused);
            emit.emit("consistent\n", j);
            return kOk;
        }
        if (*c_metrize) {
            Graph g = load_graph(graph_path);
            PathSystem ps = load_system(system_path, g);
            if (!is_consistent(ps)) fail(ErrorCode::InconsistentInput, "system is not consistent");
            Weights w;
            if (constructive) {
                w = metrize_outerplanar(ps, true);
                out << "strictly induced by the outerplanar construction\n";
            } else {
                Verdict v = decide_metrizable(ps, strict);
                if (!v.metrizable()) {
                    out << (strict ? "not strictly metrizable" : "not metrizable") << " (" << v.rounds << " rounds, " << v.cuts
                        << " cuts)\n";
                    print_certificate(out, ps, *v.certificate);
                    emit.emit(format_certificate(*v.certificate), certificate_to_json(*v.certificate));
                    return kOk;
                }
                w = *v.weights;
                out << (strict ? "strictly induced" : "induced") << " by the weights below (" << v.rounds << " rounds, "
                    << v.cuts << " cuts)\n";
            }
            print_weights(out, g, w);
            if (perturb > 0) {
                if (!strict && !constructive) fail(ErrorCode::InvalidArgument, "--perturb-check needs --strict or --constructive");
                int bad = perturbation_trials(ps, w, perturb, gl.seed);
                out << "perturbation radius " << to_text(perturbation_radius(ps, w)) << ": " << perturb - bad << "/" << perturb
                    << " bumps stay strict\n";
                if (bad) return kNegative;
            }
            emit.emit(format_weights(g, w), weights_to_json(g, w));
            return kOk;
        }
        if (*c_vcert) {
            Graph g = load_graph(graph_path);
            PathSystem ps = load_system(system_path, g);
            Certificate c = load_certificate(cert_path);
            bool ok = verify_certificate(ps, c);
            out << (ok ? "valid" : "invalid") << " certificate\n";
            json j{{"valid", ok}};
            if (ok) {
                print_certificate(out, ps, c);
                j["forced_edges"] = edges_json(g, forced_edges(ps, c));
            }
            emit.emit(ok ? "valid\n" : "invalid\n", j);
            return ok ? kOk : kNegative;
        }
        if (*c_vw) {
            Graph g = load_graph(graph_path);
            PathSystem ps = load_system(system_path, g);
            Weights w = load_weights(weights_path, g);
            OracleResult r = separation_oracle(ps, w, strict);
            bool ok = r.ok && verify_weights(ps, w, strict);
            json j{{"valid", ok}, {"strict", strict}};
            if (ok) {
                out << (strict ? "weights strictly induce the system\n" : "weights induce the system\n");
                if (auto m = strict_margin(ps, w)) {
                    out << "  margin " << to_text(*m) << '\n';
                    j["margin"] = to_text(*m);
                }
            } else {
                out << "weights do not " << (strict ? "strictly " : "") << "induce the system\n";
                if (!r.chosen.empty()) {
                    out << "  P = " << path_str(r.chosen) << " loses to Q = " << path_str(r.competitor) << '\n';
                    j["chosen"] = r.chosen;
                    j["competitor"] = r.competitor;
                }
            }
            emit.emit(ok ? "valid\n" : "invalid\n", j);
            return ok ? kOk : kNegative;
        }
        if (*c_enum) {
            Graph g = load_graph(graph_path);
            EnumerateOptions eo;
            eo.max_vertices = max_vertices;
            eo.allow_large = allow_large;
            eo.jobs = gl.jobs;
            if (limit) eo.limit = limit;
            const bool keep = !gl.out_path.empty() || gl.format == "json";
            std::vector<PathSystem> kept;
            std::uint64_t metr = 0, strict_metr = 0;
            std::uint64_t n = enumerate_consistent_systems(g, eo, [&](const PathSystem& ps) {
                if (keep) kept.push_back(ps);
                if (decide) {
                    if (decide_metrizable(ps, true).metrizable()) {
                        ++metr;
                        ++strict_metr;
                    } else if (decide_metrizable(ps, false).metrizable()) {
                        ++metr;
                    }
                }
                return true;
            });
            out << n << " consistent path systems" << (limit && n >= limit ? " (limit reached)" : "") << '\n';
            json j{{"count", n}};
            if (decide) {
                out << "  metrizable: " << metr << "\n  strictly metrizable: " << strict_metr << '\n';
                j["metrizable"] = metr;
                j["strictly_metrizable"] = strict_metr;
            }
            if (keep) {
                json arr = json::array();
                for (const auto& ps : kept) arr.push_back(system_to_json(ps));
                j["systems"] = arr;
                emit.emit(format_system_list(kept), j);
            }
            return kOk;
        }
        if (*c_decide) {
            Graph g = load_graph(graph_path);
            DecideOptions opt;
            opt.strict = strict;
            opt.budget_systems = budget;
            opt.jobs = gl.jobs;
            opt.shortcuts = !no_shortcuts;
            GraphVerdict gv = decide_graph(g, opt);
            out << to_string(gv.kind) << '\n';
            std::ostringstream report;
            for (size_t i = 0; i < gv.blocks.size(); ++i) explain_block(report, static_cast<int>(i), gv.blocks[i]);
            if (explain) out << report.str();
            json blocks = json::array();
            for (const auto& b : gv.blocks) blocks.push_back(block_json(gv, b));
            json j{{"verdict", std::string(to_string(gv.kind))}, {"strict", strict}, {"deciding_block", gv.deciding_block},
                   {"blocks", blocks}};
            emit.emit(std::string(to_string(gv.kind)) + "\n" + report.str(), j);
            return exit_for(gv.kind);
        }
        if (*c_screen) {
            Graph g = load_graph(graph_path);
            auto lines = screen_blocks(g);
            bool fired = false;
            json arr = json::array();
            std::ostringstream text;
            for (const auto& s : lines) {
                text << "block";
                for (Vertex v : s.block.to_host) text << ' ' << v;
                text << ":\n  structural: " << (s.rule ? std::string("rule (") + *s.rule + ")" : std::string("none")) << '\n';
                json jb{{"vertices", s.block.to_host}};
                if (s.rule) jb["rule"] = std::string(1, *s.rule);
                if (s.hit) {
                    text << "  catalog: graph " << s.hit->entry_id << ", branch vertices";
                    std::vector<Vertex> branch;
                    for (Vertex v : s.hit->witness.branch) branch.push_back(s.block.to_host[v]);
                    for (Vertex v : branch) text << ' ' << v;
                    text << '\n';
                    jb["catalog_entry"] = s.hit->entry_id;
                    jb["branch"] = branch;
                } else {
                    text << "  catalog: none\n";
                }
                fired = fired || s.rule || s.hit;
                arr.push_back(jb);
            }
            text << (fired ? "non-metrizable\n" : "no screen fires\n");
            out << text.str();
            emit.emit(text.str(), json{{"blocks", arr}, {"fired", fired}});
            return fired ? kOk : kNegative;
        }
        if (*c_cycle) {
            Graph g = load_graph(graph_path);
            PathSystem ps = load_system(system_path, g);
            CrossingFunction cf = crossing_function_of(ps);
            CycleClass cc = classify_cycle_system(ps);
            out << (cc.trivial ? "trivial system" : "reduces to S_" + std::to_string(cc.m)) << '\n';
            out << "  crossing function:";
            json jf = json::array();
            for (Vertex v = 0; v < g.vertex_count(); ++v) {
                out << ' ' << v << "->" << edge_str(g, cf.f[v]);
                jf.push_back({g.edge(cf.f[v]).u, g.edge(cf.f[v]).v});
            }
            out << '\n';
            auto pers = persistent_edges(ps);
            out << "  persistent edges: " << edges_str(g, pers) << '\n';
            Weights w = metrize_cycle(ps);
            out << "  strictly inducing weights:\n";
            print_weights(out, g, w);
            json j{{"trivial", cc.trivial}, {"m", cc.m}, {"crossing", jf}, {"persistent_edges", edges_json(g, pers)},
                   {"weights", weights_to_json(g, w)["weights"]}};
            emit.emit(format_weights(g, w), j);
            return kOk;
        }
        if (*c_lift) {
            Graph g = load_graph(graph_path);
            PathSystem ps = load_system(system_path, g);
            if (!is_consistent(ps)) fail(ErrorCode::InconsistentInput, "system is not consistent");
            Path q = parse_path_arg(path_arg);
            SuspendedSetup s = suspended_setup(g, q);
            auto ps_h = restricts_to(ps, s.h);
            auto ps_c = restricts_to(ps, s.c);
            if (!ps_h || !ps_c) fail(ErrorCode::PreconditionViolated, "the system does not restrict to H and C");
            // Missing inputs are computed with the LP.
            auto solve = [&](const PathSystem& part, const char* what) -> std::optional<Weights> {
                Verdict v = decide_metrizable(part, true);
                if (!v.metrizable()) v = decide_metrizable(part, false);
                if (!v.metrizable()) {
                    out << what << " is not metrizable\n";
                    return std::nullopt;
                }
                return v.weights;
            };
            std::optional<Weights> w_h, w_c, w_p;
            w_h = wh_path.empty() ? solve(*ps_h, "P|H") : load_weights(wh_path, s.h.graph);
            w_c = wc_path.empty() ? solve(*ps_c, "P|C") : load_weights(wc_path, s.c.graph);
            if (!w_h || !w_c) return kNegative;
            try {
                DerivedSystem d = build_derived_system(ps, q);
                out << "derived graph: " << d.graph.vertex_count() << " vertices, " << d.graph.edge_count() << " edges\n";
                w_p = wp_path.empty() ? solve(d.system, "derived system") : load_weights(wp_path, d.graph);
                if (!w_p) return kNegative;
            } catch (const Error& e) {
                if (e.code() != ErrorCode::EmptyFiber) throw;
                out << "no cycle vertex crosses at xy; gluing directly\n";
                w_p = Weights{};
            }
            Weights w = lift_suspended_path(ps, q, *w_h, *w_c, *w_p);
            bool st = verify_weights(ps, w, true);
            out << "lifted weights " << (st ? "strictly induce" : "induce") << " the system\n";
            print_weights(out, g, w);
            emit.emit(format_weights(g, w), weights_to_json(g, w));
            return kOk;
        }
        if (*c_circle) {
            SampledCircleMap t = make_circle_map(load_circle(map_path));
            CrossingCheck cc = is_crossing(t);
            bool inv = check_involution(t, inv_tol);
            out << "samples: " << t.resolution() << '\n';
            out << "crossing: " << (cc.ok ? "yes" : "no");
            if (cc.witness) out << " (chords at samples " << cc.witness->first << " and " << cc.witness->second << " miss)";
            out << "\ninvolution: " << (inv ? "yes" : "no") << '\n';
            json j{{"samples", t.resolution()}, {"crossing", cc.ok}, {"involution", inv}};
            SampledDensity mu;
            bool have = true;
            if (!density_path.empty()) {
                mu = make_density(load_circle(density_path), tol);
            } else {
                try {
                    mu = compatible_density_from_derivative(t, inv_tol);
                    out << "density: sqrt(T') from central differences\n";
                } catch (const Error& e) {
                    out << "density: " << e.what() << '\n';
                    have = false;
                }
            }
            bool comp = false, invar = false;
            if (have) {
                comp = verify_compatibility(t, mu, tol);
                invar = verify_invariance(t, mu, tol);
                out << "compatible: " << (comp ? "yes" : "no") << "\ninvariant: " << (invar ? "yes" : "no") << '\n';
                if (comp != invar) out << "warning: compatibility and invariance disagree at this tolerance\n";
                j["compatible"] = comp;
                j["invariant"] = invar;
                j["density"] = circle_to_json(mu.values);
            }
            bool ok = cc.ok && inv && comp && invar;
            emit.emit(have ? format_circle(mu.values) : std::string(), j);
            return ok ? kOk : kNegative;
        }
        if (*c_fix) {
            if (*c_list) {
                for (const auto& [name, content] : bundled_files()) out << name << '\n';
                return kOk;
            }
            if (*c_show) {
                out << bundled_file(fixture_name);
                return kOk;
            }
            if (*c_runall) {
                auto rows = run_all_fixtures(&err);
                bool all = true;
                json arr = json::array();
                std::ostringstream text;
                for (const auto& r : rows) {
                    text << std::left << std::setw(6) << r.id << std::setw(44) << r.name << (r.pass ? "PASS" : "FAIL") << "  "
                         << std::fixed << std::setprecision(2) << r.seconds << "s  " << r.detail << '\n';
                    all = all && r.pass;
                    arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
                }
                out << text.str() << (all ? "all fixtures reproduced\n" : "some fixtures FAILED\n");
                emit.emit(text.str(), json{{"fixtures", arr}, {"pass", all}});
                return all ? kOk : kNegative;
            }
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace geomet::cli
