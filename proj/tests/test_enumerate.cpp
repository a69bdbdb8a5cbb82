#include "oracles.hpp"

#include "geomet/enumerate.hpp"
#include "geomet/error.hpp"

#include <doctest.h>

#include <set>

using namespace geomet;

TEST_SUITE("enumerate") {

TEST_CASE("small counts agree with the naive generator") {
    Graph k2(2);
    k2.add_edge(0, 1);
    CHECK(count_consistent_systems(k2) == 1);
    Graph star(4);
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    CHECK(count_consistent_systems(star) == 1);
    CHECK(count_consistent_systems(cycle_graph(3)) == oracle::crossing_functions(3).size());
    CHECK(count_consistent_systems(cycle_graph(4)) == oracle::count_systems(cycle_graph(4)));
    CHECK(count_consistent_systems(cycle_graph(5)) == oracle::crossing_functions(5).size());
    CHECK(count_consistent_systems(complete_graph(4)) == oracle::count_systems(complete_graph(4)));
    CHECK(count_consistent_systems(complete_bipartite(2, 3)) == oracle::count_systems(complete_bipartite(2, 3)));
    Graph c5chord = cycle_graph(5);
    c5chord.add_edge(0, 2);
    CHECK(count_consistent_systems(c5chord) == oracle::count_systems(c5chord));
}

TEST_CASE("enumeration visits distinct consistent systems") {
    std::set<std::vector<Path>> seen;
    std::uint64_t n = enumerate_consistent_systems(complete_graph(4), {}, [&](const PathSystem& ps) {
        CHECK(oracle::consistent(ps));
        seen.insert(ps.paths());
        return true;
    });
    CHECK(seen.size() == n);
}

TEST_CASE("limit and early stop") {
    EnumerateOptions opt;
    opt.limit = 10;
    CHECK(enumerate_consistent_systems(complete_graph(4), opt, [](const PathSystem&) { return true; }) == 10);
    int calls = 0;
    enumerate_consistent_systems(complete_graph(4), {}, [&](const PathSystem&) { return ++calls < 3; });
    CHECK(calls == 3);
}

TEST_CASE("size guard") {
    CHECK_THROWS_AS(count_consistent_systems(cycle_graph(10)), Error);
    EnumerateOptions opt;
    opt.allow_large = true;
    opt.limit = 5;
    CHECK(count_consistent_systems(cycle_graph(10), opt) == 5);
}

TEST_CASE("parallel search returns the sequential first hit") {
    auto pred = [](const PathSystem& ps) { return ps.path(0, 2).size() == 3 && ps.path(1, 3).size() == 3; };
    EnumerateOptions one, many;
    many.jobs = 3;
    Graph g = complete_graph(4);
    SearchOutcome a = find_first_system(g, one, pred), b = find_first_system(g, many, pred);
    REQUIRE(a.hit.has_value());
    REQUIRE(b.hit.has_value());
    CHECK(*a.hit == *b.hit);
    CHECK(count_consistent_systems(g, many) == count_consistent_systems(g, one));
    SearchOutcome none = find_first_system(g, many, [](const PathSystem&) { return false; });
    CHECK(none.exhausted);
    CHECK(none.visited == count_consistent_systems(g));
}

TEST_CASE("simple path listing matches DFS") {
    Graph p = petersen_graph();
    auto mine = all_simple_paths(p, 0, 7);
    auto ref = oracle::simple_paths(p, 0, 7);
    CHECK(mine.size() == ref.size());
    std::set<Path> a(mine.begin(), mine.end()), b(ref.begin(), ref.end());
    CHECK(a == b);
    for (size_t i = 1; i < mine.size(); ++i) CHECK(mine[i - 1].size() <= mine[i].size());
}

}  // TEST_SUITE
