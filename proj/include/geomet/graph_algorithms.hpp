#pragma once

#include "geomet/graph.hpp"

#include <optional>
#include <vector>

namespace geomet {

// A subgraph relabeled to 0..k-1 together with the way back to the host.
struct Subgraph {
    Graph graph;
    std::vector<Vertex> to_host;      // local vertex -> host vertex
    std::vector<EdgeId> host_edges;   // local edge -> host edge
};

bool is_connected(const Graph& g);
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

Subgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices);
// Vertices are those touched by the edges, in increasing order.
Subgraph edge_subgraph(const Graph& g, const std::vector<EdgeId>& edges);

// Blocks of a connected graph; bridges come out as single-edge blocks.
// A graph with one vertex and no edges yields one trivial block.
std::vector<Subgraph> biconnected_components(const Graph& g);
std::vector<Vertex> articulation_points(const Graph& g);
bool is_biconnected(const Graph& g);

int vertex_connectivity(const Graph& g);

struct SubdivisionWitness {
    std::vector<Vertex> branch;              // pattern vertex -> host vertex
    std::vector<std::vector<Vertex>> paths;  // pattern edge -> host path branch[u]..branch[v]
};

constexpr int kMaxPatternVertices = 12;

std::optional<SubdivisionWitness> find_subdivision(const Graph& host, const Graph& pattern);
bool contains_subdivision(const Graph& host, const Graph& pattern);
bool validate_witness(const Graph& host, const Graph& pattern, const SubdivisionWitness& w);

bool is_planar(const Graph& g);
bool is_outerplanar(const Graph& g);

// Replaces edge e by a path with k new internal vertices n..n+k-1.
// Other edges keep their ids; the path edges are appended.
Graph subdivide_edge(const Graph& g, EdgeId e, int k);

struct SuppressResult {
    Graph graph;
    std::vector<Vertex> to_host;                  // new vertex -> original vertex
    std::vector<std::vector<Vertex>> edge_paths;  // new edge -> original vertex path
};
// Suppresses degree-2 vertices until none is left whose neighbors are
// non-adjacent (suppressing would otherwise create a parallel edge).
SuppressResult suppress_degree2(const Graph& g);

struct ContractResult {
    Graph graph;
    std::vector<Vertex> vertex_map;  // old vertex -> new vertex
    std::vector<EdgeId> edge_map;    // old edge -> new edge, -1 for the contracted one
};
// Merges the endpoints into the smaller one; larger ids shift down by one.
ContractResult contract_edge(const Graph& g, EdgeId e);

// Maximal paths with at least one internal vertex, all internal vertices of
// degree 2, ends of degree != 2. Oriented with the smaller end first.
std::vector<std::vector<Vertex>> suspended_paths(const Graph& g);

// Lexicographically largest upper-triangle adjacency string over all
// relabelings; two graphs are isomorphic iff their forms agree.
std::vector<Edge> canonical_form(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);

// Hop distances from s, -1 for unreachable.
std::vector<int> bfs_distances(const Graph& g, Vertex s);

}  // namespace geomet
