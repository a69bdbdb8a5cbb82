#include "oracles.hpp"

#include "geomet/catalog.hpp"
#include "geomet/enumerate.hpp"
#include "geomet/error.hpp"

#include <doctest.h>

#include <random>

using namespace geomet;

namespace {

Graph graph_of(int n, std::initializer_list<std::pair<int, int>> es) {
    Graph g(n);
    for (auto [a, b] : es) g.add_edge(a, b);
    return g;
}

Weights lp_weights(const PathSystem& ps) {
    Verdict v = decide_metrizable(ps, true);
    if (!v.metrizable()) v = decide_metrizable(ps, false);
    REQUIRE(v.metrizable());
    return *v.weights;
}

struct LiftRun {
    bool lifted = false;
    bool empty_fiber = false;
};

// Feeds LP weights for H, C and G' into the lift; preconditions that fail
// for this system are reported as not lifted.
LiftRun lift_with_lp(const PathSystem& ps, const Path& q) {
    LiftRun run;
    SuspendedSetup s = suspended_setup(ps.graph(), q);
    auto ph = restricts_to(ps, s.h);
    auto pc = restricts_to(ps, s.c);
    if (!ph || !pc) return run;
    Weights wp;
    try {
        DerivedSystem d = build_derived_system(ps, q);
        CHECK(oracle::consistent(d.system));
        wp = lp_weights(d.system);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::EmptyFiber) {
            run.empty_fiber = true;
        } else {
            CHECK(e.code() == ErrorCode::PreconditionViolated);
            return run;
        }
    }
    Weights w = lift_suspended_path(ps, q, lp_weights(*ph), lp_weights(*pc), wp);
    CHECK(oracle::induces(ps, w, false));
    if (verify_weights(ps, w, true)) CHECK(oracle::induces(ps, w, true));
    run.lifted = true;
    return run;
}

}  // namespace

TEST_SUITE("metrize") {

TEST_CASE("cycle metrization") {
    Weights w7 = metrize_cycle(canonical_odd_system(7));
    CHECK(oracle::induces(canonical_odd_system(7), w7, true));

    PathSystem triv = system_of_crossing(CrossingFunction{5, {2, 2, 2, 2, 2}});
    Weights wt = metrize_cycle(triv);
    for (EdgeId e = 0; e < 5; ++e) CHECK(wt[e] == (e == 2 ? 5 : 1));
    CHECK(oracle::induces(triv, wt, true));

    for (const PathSystem& ps : all_consistent_systems(cycle_graph(6))) CHECK(oracle::induces(ps, metrize_cycle(ps), true));
    CHECK_THROWS_AS(metrize_cycle(parse_path_system(bundled_file("fixtures/k24.paths"), complete_bipartite(2, 4))), Error);
}

TEST_CASE("lifting across a persistent edge") {
    PathSystem path3 = induce_from_weights(path_graph(3), Weights(2, 1));
    Weights lifted = lift_quotient_weights(path3, 0, Weights{1});
    CHECK(oracle::induces(path3, lifted, true));

    int checked = 0;
    for (const PathSystem& ps : all_consistent_systems(cycle_graph(6))) {
        auto pe = persistent_edges(ps);
        if (pe.size() != 1) continue;
        Quotient q = quotient_by_edge(ps, pe[0]);
        CHECK(verify_weights(q.system, Weights(5, 1), true));
        CHECK(oracle::induces(ps, lift_quotient_weights(ps, pe[0], Weights(5, 1)), true));
        ++checked;
    }
    CHECK(checked > 0);

    // The quotient of this system is metrizable only non-strictly, so nothing lifts.
    Graph g = parse_graph(bundled_file("fixtures/metquotient.graph"));
    PathSystem mq = parse_path_system(bundled_file("fixtures/metquotient.paths"), g);
    EdgeId e = g.edge_id(0, 1);
    PathSystem quot = quotient_by_edge(mq, e).system;
    Verdict loose = decide_metrizable(quot, false);
    REQUIRE(loose.metrizable());
    CHECK_FALSE(decide_metrizable(quot, true).metrizable());
    CHECK_FALSE(decide_metrizable(mq, false).metrizable());
    CHECK_THROWS_AS(lift_quotient_weights(mq, e, *loose.weights), Error);
}

TEST_CASE("suspended path: glue case") {
    // Triangle 0-1-2 plus Q = 0-3-4-1; xy = 0-1 lies in every tree of C.
    Graph g = graph_of(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {3, 4}, {1, 4}});
    Weights w{Rational(1, 10), 1, 1, 1, 1, 1};
    PathSystem ps = induce_from_weights(g, w);
    CHECK_THROWS_AS(build_derived_system(ps, {0, 3, 4, 1}), Error);
    LiftRun r = lift_with_lp(ps, {0, 3, 4, 1});
    CHECK(r.lifted);
    CHECK(r.empty_fiber);
}

TEST_CASE("suspended path: full construction on two 4-cycles") {
    // H = 0-1-2-3 (4-cycle), Q = 0-4-5-1.
    Graph g = graph_of(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {4, 5}, {1, 5}});
    int lifted = 0, full = 0;
    for (const PathSystem& ps : all_consistent_systems(g)) {
        LiftRun r = lift_with_lp(ps, {0, 4, 5, 1});
        lifted += r.lifted;
        full += r.lifted && !r.empty_fiber;
    }
    CHECK(full > 0);
    CHECK(lifted > full);
}

TEST_CASE("suspended path preconditions") {
    Graph g = graph_of(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {3, 4}, {1, 4}});
    CHECK_NOTHROW(suspended_setup(g, {0, 2, 1}));
    CHECK_THROWS_AS(suspended_setup(g, {0, 3, 4}), Error);  // ends not adjacent
    CHECK_THROWS_AS(suspended_setup(g, {0, 1}), Error);     // no inner vertex
    // xy unused by every path: the C-edge precondition fails.
    Weights heavy{10, 1, 1, 1, 1, 1};
    PathSystem ps = induce_from_weights(g, heavy);
    CHECK_THROWS_AS(build_derived_system(ps, {0, 3, 4, 1}), Error);
}

TEST_CASE("outerplanar metrization") {
    for (const PathSystem& ps : all_consistent_systems(cycle_graph(5)))
        CHECK(metrize_outerplanar(ps) == metrize_cycle(ps));
    Graph c6 = cycle_graph(6);
    c6.add_edge(0, 3);
    for (const PathSystem& ps : all_consistent_systems(c6)) {
        Weights w = metrize_outerplanar(ps);
        CHECK(oracle::induces(ps, w, true));
        CHECK(decide_metrizable(ps, true).metrizable());
    }
    // Fan: path 0..4 with hub 5.
    Graph fan = path_graph(5);
    Graph f6(6);
    for (const Edge& e : fan.edges()) f6.add_edge(e.u, e.v);
    for (Vertex v = 0; v < 5; ++v) f6.add_edge(v, 5);
    std::mt19937_64 rng(50);
    for (int i = 0; i < 50; ++i) {
        PathSystem ps = induce_from_weights(f6, oracle::random_weights(rng, f6, 6));
        Weights w = metrize_outerplanar(ps);
        CHECK(induce_from_weights(f6, w) == ps);
    }
    CHECK_THROWS_AS(metrize_outerplanar(induce_from_weights(complete_graph(4), Weights(6, 1))), Error);
}

}  // TEST_SUITE
