#include "oracles.hpp"

#include "geomet/catalog.hpp"
#include "geomet/enumerate.hpp"
#include "geomet/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

using namespace geomet;

namespace {

PathSystem fixture(const std::string& name) {
    Graph g = parse_graph(bundled_file("fixtures/" + name + ".graph"));
    return parse_path_system(bundled_file("fixtures/" + name + ".paths"), g);
}

PathSystem tree_system(const Graph& tree) { return induce_from_weights(tree, Weights(tree.edge_count(), 1)); }

Graph small_tree() {
    Graph t(5);
    t.add_edge(0, 1);
    t.add_edge(1, 2);
    t.add_edge(1, 3);
    t.add_edge(3, 4);
    return t;
}

}  // namespace

TEST_SUITE("path_system") {

TEST_CASE("pair indexing is a bijection") {
    const int n = 7;
    for (int i = 0; i < pair_count(n); ++i) {
        auto [u, v] = pair_at(i, n);
        CHECK(u < v);
        CHECK(pair_index(u, v, n) == i);
        CHECK(pair_index(v, u, n) == i);
    }
}

TEST_CASE("consistency checks") {
    CHECK(is_consistent(tree_system(small_tree())));
    CHECK(is_consistent(fixture("petersen")));
    CHECK(oracle::consistent(fixture("petersen")));

    // C4 with P(0,2) = 0-1-2 but P(0,1) = 0-3-2-1.
    Graph c4 = cycle_graph(4);
    std::vector<Path> paths(pair_count(4));
    paths[pair_index(0, 1, 4)] = {0, 3, 2, 1};
    paths[pair_index(0, 2, 4)] = {0, 1, 2};
    paths[pair_index(0, 3, 4)] = {0, 3};
    paths[pair_index(1, 2, 4)] = {1, 2};
    paths[pair_index(1, 3, 4)] = {1, 2, 3};
    paths[pair_index(2, 3, 4)] = {2, 3};
    PathSystem bad(c4, paths);
    auto v = find_inconsistency(bad);
    REQUIRE(v.has_value());
    CHECK_FALSE(oracle::consistent(bad));
    // The witness names a stored path and two of its vertices whose chosen path differs.
    CHECK(std::find(v->path.begin(), v->path.end(), v->x) != v->path.end());
    CHECK(std::find(v->path.begin(), v->path.end(), v->y) != v->path.end());
}

TEST_CASE("path systems reject non-paths") {
    Graph c4 = cycle_graph(4);
    std::vector<Path> paths(pair_count(4));
    for (int i = 0; i < pair_count(4); ++i) {
        auto [u, v] = pair_at(i, 4);
        paths[i] = {u, v};
    }
    CHECK_THROWS_AS(PathSystem(c4, paths), Error);  // 0-2 is not an edge
}

TEST_CASE("tree systems") {
    SUBCASE("a tree has its unique system both ways") {
        PathSystem ps = tree_system(small_tree());
        CHECK(to_path_system(to_tree_system(ps)) == ps);
        CHECK(is_trivial_system(ps));
        CHECK(persistent_edges(ps).size() == 4);
    }
    SUBCASE("S5 trees miss the antipodal edge") {
        PathSystem s5 = canonical_odd_system(5);
        TreeSystem ts = to_tree_system(s5);
        for (Vertex v = 0; v < 5; ++v) {
            auto te = tree_edges(ts, v);
            CHECK(te.size() == 4);
            CHECK_FALSE(std::binary_search(te.begin(), te.end(), (v + 2) % 5));
        }
        CHECK(persistent_edges(s5).empty());
    }
    SUBCASE("round trip on every C4 system") {
        for (const PathSystem& ps : all_consistent_systems(cycle_graph(4)))
            CHECK(to_path_system(to_tree_system(ps)) == ps);
    }
}

TEST_CASE("persistent edges and quotients") {
    PathSystem mq = fixture("metquotient");
    auto pers = persistent_edges(mq);
    CHECK(std::binary_search(pers.begin(), pers.end(), mq.graph().edge_id(0, 1)));

    // Contracting everything persistent in a trivial system leaves one vertex.
    PathSystem ts = tree_system(small_tree());
    Quotient q = quotient(ts, persistent_edges(ts));
    CHECK(q.system.vertex_count() == 1);

    // A C6 system with one persistent edge reduces to S5.
    bool found = false;
    for (const PathSystem& ps : all_consistent_systems(cycle_graph(6))) {
        auto pe = persistent_edges(ps);
        if (pe.size() != 1) continue;
        Quotient qc = quotient_by_edge(ps, pe[0]);
        CHECK(qc.system.vertex_count() == 5);
        CHECK(is_shorter_arc_system(qc.system));
        found = true;
    }
    CHECK(found);

    CHECK_THROWS_AS(quotient_by_edge(canonical_odd_system(5), 0), Error);
}

TEST_CASE("weights induce consistent geodesic systems") {
    CHECK(induce_from_weights(cycle_graph(5), Weights(5, 1)) == canonical_odd_system(5));
    PathSystem c4 = induce_from_weights(cycle_graph(4), Weights(4, 1));
    CHECK(oracle::consistent(c4));
    CHECK(oracle::induces(c4, Weights(4, 1), false));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 60; ++i) {
        Graph g = oracle::random_connected_graph(rng, 6, 0.5);
        Weights w = oracle::random_weights(rng, g, 3);  // small range forces ties
        PathSystem ps = induce_from_weights(g, w);
        CHECK(oracle::consistent(ps));
        CHECK(oracle::induces(ps, w, false));
    }
}

TEST_CASE("partial systems and neighborly extension") {
    Graph g = parse_graph(bundled_file("fixtures/nonextendable.graph"));
    std::istringstream in(bundled_file("fixtures/nonextendable.partial"));
    PartialPathSystem pps = read_partial(in, g);
    CHECK(is_consistent_partial(pps));
    // No consistent completion exists.
    bool extends = false;
    enumerate_consistent_systems(g, {}, [&](const PathSystem& ps) {
        bool all = true;
        for (const auto& [key, p] : pps.paths) all = all && ps.path(key.first, key.second) == p;
        extends = extends || all;
        return !extends;
    });
    CHECK_FALSE(extends);

    SUBCASE("from a single vertex of K4") {
        Graph k1(1);
        PathSystem one(k1, {});
        PathSystem ext = extend_neighborly(complete_graph(4), {2}, one);
        CHECK(oracle::consistent(ext));
        CHECK(is_neighborly(ext));
    }
    SUBCASE("C4 inside a five-vertex host") {
        Graph host = cycle_graph(4);
        Graph h5(5);
        for (const Edge& e : host.edges()) h5.add_edge(e.u, e.v);
        h5.add_edge(0, 4);
        h5.add_edge(1, 4);
        PathSystem c4 = induce_from_weights(host, Weights(4, 1));
        PathSystem ext = extend_neighborly(h5, {0, 1, 2, 3}, c4);
        CHECK(oracle::consistent(ext));
        CHECK(is_neighborly(ext));
        for (Vertex u = 0; u < 4; ++u)
            for (Vertex v = u + 1; v < 4; ++v) CHECK(ext.path(u, v) == c4.path(u, v));
    }
}

TEST_CASE("crossing functions") {
    SUBCASE("S5 maps every vertex to its antipodal edge") {
        CrossingFunction cf = crossing_function_of(canonical_odd_system(5));
        for (Vertex v = 0; v < 5; ++v) CHECK(cf.f[v] == (v + 2) % 5);
    }
    SUBCASE("a trivial C4 system is constant") {
        PathSystem ps = system_of_crossing(CrossingFunction{4, {0, 0, 0, 0}});
        CHECK(is_trivial_system(ps));
        CHECK(crossing_function_of(ps).f == std::vector<EdgeId>{0, 0, 0, 0});
    }
    SUBCASE("systems and crossing functions correspond for n = 3..8") {
        for (int n = 3; n <= 8; ++n) {
            auto fs = oracle::crossing_functions(n);
            auto systems = all_consistent_systems(cycle_graph(n));
            CHECK(fs.size() == systems.size());
            std::vector<std::vector<EdgeId>> from_systems;
            for (const auto& ps : systems) from_systems.push_back(crossing_function_of(ps).f);
            std::sort(from_systems.begin(), from_systems.end());
            std::sort(fs.begin(), fs.end());
            CHECK(from_systems == fs);
            for (const auto& f : fs) CHECK(is_consistent(system_of_crossing(CrossingFunction{n, f})));
        }
    }
    SUBCASE("a non-separating function is rejected") {
        std::pair<Vertex, Vertex> w;
        Graph c6 = cycle_graph(6);
        CrossingFunction bad{6, {3, 0, 3, 3, 3, 3}};
        CHECK_FALSE(satisfies_crossing_condition(c6, bad, &w));
        CHECK_THROWS_AS(system_of_crossing(c6, bad), Error);
    }
}

TEST_CASE("cycle classification") {
    CycleClass c7 = classify_cycle_system(canonical_odd_system(7));
    CHECK_FALSE(c7.trivial);
    CHECK(c7.m == 7);
    CHECK(classify_cycle_system(system_of_crossing(CrossingFunction{6, {1, 1, 1, 1, 1, 1}})).trivial);
    for (int n = 3; n <= 8; ++n)
        for (const auto& ps : all_consistent_systems(cycle_graph(n))) {
            CycleClass c = classify_cycle_system(ps);
            CHECK(c.trivial == is_trivial_system(ps));
            if (!c.trivial) {
                CHECK(c.m % 2 == 1);
                CHECK(c.quotient.system == canonical_odd_system(c.m));
            }
        }
}

TEST_CASE("canonical odd systems") {
    PathSystem s3 = canonical_odd_system(3);
    for (const Path& p : s3.paths()) CHECK(p.size() == 2);
    PathSystem s5 = canonical_odd_system(5);
    for (const Path& p : s5.paths()) CHECK(p.size() <= 3);
    CHECK(canonical_odd_system(7) == induce_from_weights(cycle_graph(7), Weights(7, 1)));
    CHECK(oracle::induces(canonical_odd_system(7), Weights(7, 1), true));
    CHECK_THROWS_AS(canonical_odd_system(6), Error);
}

TEST_CASE("restriction to subgraphs") {
    PathSystem pet = parse_path_system(bundled_file("fixtures/petersen.paths"), petersen_graph());
    std::vector<Vertex> all(10);
    for (int i = 0; i < 10; ++i) all[i] = i;
    auto whole = restricts_to(pet, induced_subgraph(petersen_graph(), all));
    REQUIRE(whole.has_value());
    CHECK(*whole == pet);

    PathSystem s5 = canonical_odd_system(5);
    // 0-1-2 carries its own geodesics; 0-1-2-3 does not (P(0,3) = 0-4-3).
    CHECK(restricts_to(s5, edge_subgraph(s5.graph(), {0, 1})).has_value());
    CHECK_FALSE(restricts_to(s5, edge_subgraph(s5.graph(), {0, 1, 2})).has_value());
}

TEST_CASE("path system text format") {
    PathSystem pet = parse_path_system(bundled_file("fixtures/petersen.paths"), petersen_graph());
    CHECK(parse_path_system(format_path_system(pet), petersen_graph()) == pet);
    Graph k3 = complete_graph(3);
    CHECK_THROWS_AS(parse_path_system("pathsystem 3\n0 1 : 0 1\n0 2 : 0 2\n", k3), Error);
    CHECK_THROWS_AS(parse_path_system("pathsystem 3\n0 1 : 0 1\n0 1 : 0 1\n1 2 : 1 2\n", k3), Error);
    CHECK_THROWS_AS(parse_path_system("pathsystem 3\n0 1 : 0 2 1\n0 2 : 0 2\n1 2 : 1 0\n", k3), Error);
}

}  // TEST_SUITE
