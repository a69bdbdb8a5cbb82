#include "cli.hpp"

#include "geomet/catalog.hpp"
#include "geomet/circle.hpp"
#include "geomet/enumerate.hpp"
#include "geomet/error.hpp"
#include "geomet/metrize.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <ostream>

namespace geomet::cli {

namespace {

struct Fixture {
    PathSystem system;
    Certificate cert;
    bool has_cert = false;
};

Fixture load_fixture(const std::string& name) {
    Graph g = parse_graph(bundled_file("fixtures/" + name + ".graph"));
    Fixture f{parse_path_system(bundled_file("fixtures/" + name + ".paths"), g), {}, false};
    const auto& files = bundled_files();
    if (auto it = files.find("fixtures/" + name + ".cert"); it != files.end()) {
        f.cert = parse_certificate(it->second);
        f.has_cert = true;
    }
    return f;
}

EdgeId edge_of(const Graph& g, Vertex u, Vertex v) {
    EdgeId e = g.edge_id(u, v);
    if (e < 0) fail(ErrorCode::CorruptData, "fixture lacks edge " + std::to_string(u) + "-" + std::to_string(v));
    return e;
}

using Check = std::function<std::string()>;  // empty string = pass, else the failure

std::string petersen() {
    Fixture f = load_fixture("petersen");
    if (!is_consistent(f.system)) return "system inconsistent";
    Verdict v = decide_metrizable(f.system, false);
    if (v.metrizable()) return "LP found weights";
    const Graph& g = f.system.graph();
    std::vector<Rational> want(g.edge_count(), 0);
    for (auto [a, b] : {std::pair{5, 7}, {6, 8}, {7, 9}, {5, 8}, {6, 9}}) want[edge_of(g, a, b)] = 1;
    if (certificate_coefficients(f.system, *v.certificate) != want) return "coefficients differ from the five inner edges";
    if (!verify_certificate(f.system, f.cert)) return "bundled certificate rejected";
    return {};
}

std::string not_strict() {
    Fixture f = load_fixture("prism");
    const Graph& g = f.system.graph();
    if (!verify_weights(f.system, Weights(g.edge_count(), 1), false)) return "unit weights do not induce";
    if (verify_weights(f.system, Weights(g.edge_count(), 1), true)) return "unit weights induce strictly";
    Verdict v = decide_metrizable(f.system, true);
    if (v.metrizable()) return "strict LP found weights";
    auto coef = certificate_coefficients(f.system, *v.certificate);
    if (std::any_of(coef.begin(), coef.end(), [](const Rational& c) { return sgn(c) != 0; })) return "coefficients not zero";
    Rational total = 0;
    for (const auto& t : v.certificate->terms) total += t.multiplier;
    if (sgn(total) <= 0 || !v.certificate->strict) return "not a 0 < 0 certificate";
    if (!verify_certificate(f.system, *v.certificate)) return "certificate rejected";
    return {};
}

Check catalog_entry(int idx) {
    return [idx] {
        const CatalogEntry& e = catalog().at(idx);
        if (!is_consistent(e.system)) return std::string("system inconsistent");
        if (!verify_certificate(e.system, e.certificate)) return std::string("bundled certificate rejected");
        Verdict v = decide_metrizable(e.system, false);
        if (v.metrizable()) return std::string("LP found weights");
        auto forced = forced_edges(e.system, *v.certificate);
        if (!std::binary_search(forced.begin(), forced.end(), e.forced_edge)) return std::string("stated edge not forced");
        return std::string();
    };
}

std::string small_graphs() {
    DecideOptions opt;
    opt.strict = true;
    opt.shortcuts = false;
    int graphs = 0;
    for (int n = 1; n <= 4; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
        for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
            Graph g(n);
            for (size_t i = 0; i < pairs.size(); ++i)
                if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
            if (!is_connected(g)) continue;
            ++graphs;
            if (decide_graph(g, opt).kind != VerdictKind::StrictlyMetrizable)
                return "graph " + std::to_string(graphs) + " on " + std::to_string(n) + " vertices is not strictly metrizable";
        }
    }
    return {};
}

std::string met_quotient() {
    Fixture f = load_fixture("metquotient");
    const Graph& g = f.system.graph();
    auto pers = persistent_edges(f.system);
    EdgeId e = edge_of(g, 0, 1);
    if (!std::binary_search(pers.begin(), pers.end(), e)) return "edge 0-1 is not persistent";
    if (decide_metrizable(f.system, false).metrizable()) return "original system is metrizable";
    if (!decide_metrizable(quotient_by_edge(f.system, e).system, false).metrizable()) return "quotient is not metrizable";
    return {};
}

std::string contraction_a() {
    Fixture f = load_fixture("contraction_a");
    Verdict v = decide_metrizable(f.system, false);
    if (v.metrizable()) return "system is metrizable";
    auto forced = forced_edges(f.system, *v.certificate);
    if (!std::binary_search(forced.begin(), forced.end(), edge_of(f.system.graph(), 2, 3))) return "edge 2-3 not forced";
    if (!verify_certificate(f.system, f.cert)) return "bundled certificate rejected";
    if (decide_graph(f.system.graph()).kind != VerdictKind::NonMetrizable) return "graph not reported non-metrizable";
    return {};
}

std::string contraction_b() {
    Graph g = parse_graph(bundled_file("fixtures/contraction_b.graph"));
    DecideOptions opt;
    opt.shortcuts = false;
    GraphVerdict gv = decide_graph(g, opt);
    if (gv.kind != VerdictKind::Metrizable) return std::string("verdict ") + std::string(to_string(gv.kind));
    return {};
}

std::string cycles() {
    for (int n = 3; n <= 8; ++n) {
        Graph g = cycle_graph(n);
        std::string bad;
        enumerate_consistent_systems(g, {}, [&](const PathSystem& ps) {
            CrossingFunction cf = crossing_function_of(ps);
            if (!(system_of_crossing(g, cf) == ps)) bad = "crossing function does not reproduce a system";
            CycleClass cc = classify_cycle_system(ps);
            if (!cc.trivial && (cc.m % 2 == 0 || !is_shorter_arc_system(cc.quotient.system))) bad = "bad reduced cycle";
            if (!verify_weights(ps, metrize_cycle(ps), true)) bad = "cycle weights not strict";
            return bad.empty();
        });
        if (!bad.empty()) return "C_" + std::to_string(n) + ": " + bad;
    }
    return {};
}

std::string outerplanar() {
    for (int n : {6, 7})
        for (int chord = 2; chord <= n / 2; ++chord) {
            Graph g = cycle_graph(n);
            g.add_edge(0, chord);
            std::string bad;
            enumerate_consistent_systems(g, {}, [&](const PathSystem& ps) {
                if (!verify_weights(ps, metrize_outerplanar(ps), true)) bad = "construction failed";
                if (!decide_metrizable(ps, true).metrizable()) bad = "LP disagrees";
                return bad.empty();
            });
            if (!bad.empty()) return "C_" + std::to_string(n) + " + chord 0-" + std::to_string(chord) + ": " + bad;
        }
    return {};
}

std::string kn2() {
    KnTwoResult two = kn2_family_check(2), four = kn2_family_check(4);
    if (!two.metrizable || !two.strictly) return "K_{2,2} should be strictly metrizable";
    if (!four.metrizable || four.strictly) return "K_{2,4} should be metrizable but not strictly";
    Fixture f = load_fixture("k24");
    if (!is_neighborly(f.system) || !f.cert.strict || !verify_certificate(f.system, f.cert)) return "witness certificate rejected";
    return {};
}

std::string screens() {
    if (screen_structural(complete_graph(7)) != 'a') return "K_7 does not fire (a)";
    if (screen_structural(petersen_graph()) != 'c') return "Petersen does not fire (c)";
    for (const CatalogEntry& e : catalog())
        for (EdgeId x = 0; x < e.graph.edge_count(); ++x) {
            Graph s = subdivide_edge(e.graph, x, 1);
            auto hit = screen_catalog(s);
            if (!hit) return "subdivided graph " + std::to_string(e.id) + " missed";
            if (!validate_witness(s, catalog().at(hit->entry_id - 1).graph, hit->witness)) return "invalid witness";
        }
    return {};
}

std::string circle() {
    const int n = 1024;
    auto t = antipodal_map(n);
    auto u = uniform_density(n);
    if (!is_crossing(t).ok || !check_involution(t, 1e-9)) return "antipodal map rejected";
    if (!verify_compatibility(t, u, 1e-6) || !verify_invariance(t, u, 1e-6)) return "uniform density rejected";
    for (double a : {0.1, 0.3, 0.5}) {
        auto m = conjugated_antipodal(n, a);
        auto d = compatible_density_from_derivative(m);
        for (const SampledDensity& mu : {d, mobius_density(n, a)})
            if (verify_compatibility(m, mu, 1e-2) != verify_invariance(m, mu, 1e-2)) return "checks disagree";
        if (!verify_compatibility(m, d, 1e-3)) return "sqrt(T') density not compatible";
    }
    return {};
}

}  // namespace

std::vector<FixtureRow> run_all_fixtures(std::ostream* log) {
    std::vector<std::tuple<std::string, std::string, Check>> items = {
        {"1", "Petersen system, inner-edge certificate", petersen},
        {"2", "prism system, 0 < 0 certificate", not_strict},
    };
    for (int i = 0; i < 11; ++i)
        items.emplace_back("3." + std::to_string(i + 1), "catalog graph " + std::to_string(i + 1), catalog_entry(i));
    items.emplace_back("4", "graphs of order <= 4 strictly metrizable", small_graphs);
    items.emplace_back("5", "metrizable after contracting 0-1", met_quotient);
    items.emplace_back("6a", "contraction graph (a) forces 2-3", contraction_a);
    items.emplace_back("6b", "contraction graph (b) metrizable", contraction_b);
    items.emplace_back("7", "cycle systems C_3..C_8", cycles);
    items.emplace_back("8", "C_6, C_7 plus one chord", outerplanar);
    items.emplace_back("9", "K_{2,2} and K_{2,4}", kn2);
    items.emplace_back("10", "structural and catalog screens", screens);
    items.emplace_back("11", "circle maps and densities", circle);

    std::vector<FixtureRow> rows;
    for (auto& [id, name, check] : items) {
        if (log) *log << "running " << id << " " << name << '\n';
        auto start = std::chrono::steady_clock::now();
        FixtureRow r{id, name, false, {}, 0};
        try {
            r.detail = check();
            r.pass = r.detail.empty();
        } catch (const std::exception& e) {
            r.detail = e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace geomet::cli
