#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace geomet {

using Vertex = int;
using EdgeId = int;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph on vertices 0..n-1. Edge ids are positions in the
// insertion order and stay stable; endpoints are stored with u < v.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<Edge>& edges);

    EdgeId add_edge(Vertex a, Vertex b);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_.at(e); }

    // -1 when absent.
    EdgeId edge_id(Vertex a, Vertex b) const;
    bool has_edge(Vertex a, Vertex b) const { return edge_id(a, b) >= 0; }

    // Neighbors in increasing order.
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
    int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
    Vertex other(EdgeId e, Vertex v) const;

    std::vector<std::string> labels;  // optional, empty or one per vertex

    // Same vertex count and same edge set (edge order ignored).
    bool same_as(const Graph& other) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::vector<EdgeId>> adj_ids_;  // parallel to adj_
};

// Common families.
Graph path_graph(int n);
Graph cycle_graph(int n);  // edge i joins i and (i+1) mod n
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);  // left side 0..a-1
Graph petersen_graph();                  // outer 0..4, spokes i~i+5, inner pentagram
Graph wheel_graph(int rim);              // hub = rim
Graph prism_graph();                     // triangles 0,1,2 and 3,4,5, spokes i~i+3

// Text format: "n m" then m lines "u v"; '#' starts a comment line.
Graph read_graph(std::istream& in);
Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);

}  // namespace geomet
