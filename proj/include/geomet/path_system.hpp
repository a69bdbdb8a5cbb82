#pragma once

#include "geomet/graph.hpp"
#include "geomet/graph_algorithms.hpp"
#include "geomet/rational.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace geomet {

using Path = std::vector<Vertex>;

// Index of the unordered pair {u, v}, u != v, among the n(n-1)/2 pairs in
// lexicographic order.
int pair_index(Vertex u, Vertex v, int n);
std::pair<Vertex, Vertex> pair_at(int index, int n);
inline int pair_count(int n) { return n * (n - 1) / 2; }

// Edge ids along a path; throws InvalidPath if a step is not an edge.
std::vector<EdgeId> path_edges(const Graph& g, const Path& p);
bool is_simple_path(const Graph& g, const Path& p);
Rational path_weight(const Graph& g, const std::vector<Rational>& w, const Path& p);

// One simple path per unordered pair. Stored with the smaller endpoint first.
class PathSystem {
public:
    PathSystem() = default;
    // paths[pair_index(u, v)] joins u and v in either orientation.
    PathSystem(Graph g, std::vector<Path> paths);

    const Graph& graph() const { return g_; }
    int vertex_count() const { return g_.vertex_count(); }
    const Path& path(Vertex u, Vertex v) const;
    Path oriented(Vertex from, Vertex to) const;
    const std::vector<Path>& paths() const { return paths_; }

    bool operator==(const PathSystem& o) const { return g_.same_as(o.g_) && paths_ == o.paths_; }

private:
    Graph g_;
    std::vector<Path> paths_;
};

struct ConsistencyViolation {
    Path path;  // the stored path whose subpath disagrees
    Vertex x = 0, y = 0;
};
std::optional<ConsistencyViolation> find_inconsistency(const PathSystem& ps);
inline bool is_consistent(const PathSystem& ps) { return !find_inconsistency(ps).has_value(); }

bool is_neighborly(const PathSystem& ps);
// Edges used by no path at all.
std::vector<EdgeId> unused_edges(const PathSystem& ps);

struct TreeSystem {
    Graph graph;
    // parent[r][v]: next vertex from v toward r; parent[r][r] = -1.
    std::vector<std::vector<Vertex>> parent;
};
TreeSystem to_tree_system(const PathSystem& ps);
PathSystem to_path_system(const TreeSystem& ts);
// Edge ids of T_r.
std::vector<EdgeId> tree_edges(const TreeSystem& ts, Vertex r);

std::vector<EdgeId> persistent_edges(const PathSystem& ps);
bool is_trivial_system(const PathSystem& ps);

struct Quotient {
    PathSystem system;
    std::vector<Vertex> vertex_map;  // original vertex -> quotient vertex
    std::vector<EdgeId> edge_map;    // original edge -> quotient edge, -1 if contracted
};
// Contracts the given persistent edges one at a time in ascending id order.
Quotient quotient(const PathSystem& ps, std::vector<EdgeId> edges);
Quotient quotient_by_edge(const PathSystem& ps, EdgeId e);

// Geodesics for positive weights. Among equal-weight paths the one whose edge
// set contains the smallest id of the symmetric difference wins.
PathSystem induce_from_weights(const Graph& g, const std::vector<Rational>& w);

struct PartialPathSystem {
    Graph graph;
    std::map<std::pair<Vertex, Vertex>, Path> paths;  // key (u, v) with u < v
};
bool is_consistent_partial(const PartialPathSystem& pps);
PartialPathSystem read_partial(std::istream& in, const Graph& g);

// ps_sub lives on g[sub] with local vertex i = sub[i].
PathSystem extend_neighborly(const Graph& g, const std::vector<Vertex>& sub, const PathSystem& ps_sub);

// f(v) is the edge of the cycle missing from T_v.
struct CrossingFunction {
    int cycle_length = 0;
    std::vector<EdgeId> f;
};
// Vertices of a cycle graph in cyclic order starting at 0 toward its smaller neighbor.
std::vector<Vertex> cycle_order(const Graph& g);
bool is_cycle_graph(const Graph& g);
bool satisfies_crossing_condition(const Graph& cycle, const CrossingFunction& cf,
                                  std::pair<Vertex, Vertex>* witness = nullptr);
CrossingFunction crossing_function_of(const PathSystem& ps);
PathSystem system_of_crossing(const Graph& cycle, const CrossingFunction& cf);
PathSystem system_of_crossing(const CrossingFunction& cf);  // on cycle_graph(n)

struct CycleClass {
    bool trivial = false;
    int m = 0;  // length of the reduced cycle when not trivial
    Quotient quotient;
};
CycleClass classify_cycle_system(const PathSystem& ps);
// True when every path is the shorter arc of an odd cycle.
bool is_shorter_arc_system(const PathSystem& ps);
PathSystem canonical_odd_system(int n);

// Restriction to a subgraph, or nothing when some path between two of its
// vertices leaves it.
std::optional<PathSystem> restricts_to(const PathSystem& ps, const Subgraph& h);

PathSystem read_path_system(std::istream& in, const Graph& g);
PathSystem parse_path_system(const std::string& text, const Graph& g);
std::string format_path_system(const PathSystem& ps);

}  // namespace geomet
