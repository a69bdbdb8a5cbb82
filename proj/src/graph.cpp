#include "geomet/graph.hpp"

#include "geomet/error.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace geomet {

Graph::Graph(int n) : n_(n), adj_(n), adj_ids_(n) {
    if (n < 0) fail(ErrorCode::InvalidGraph, "negative vertex count");
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (const Edge& e : edges) add_edge(e.u, e.v);
}

EdgeId Graph::add_edge(Vertex a, Vertex b) {
    if (a < 0 || b < 0 || a >= n_ || b >= n_)
        fail(ErrorCode::InvalidGraph, "edge endpoint out of range");
    if (a == b) fail(ErrorCode::InvalidGraph, "self-loop at " + std::to_string(a));
    if (a > b) std::swap(a, b);
    if (has_edge(a, b))
        fail(ErrorCode::InvalidGraph, "duplicate edge " + std::to_string(a) + " " + std::to_string(b));
    EdgeId id = edge_count();
    edges_.push_back({a, b});
    auto insert = [&](Vertex x, Vertex y) {
        auto& nb = adj_[x];
        auto pos = std::lower_bound(nb.begin(), nb.end(), y) - nb.begin();
        nb.insert(nb.begin() + pos, y);
        adj_ids_[x].insert(adj_ids_[x].begin() + pos, id);
    };
    insert(a, b);
    insert(b, a);
    return id;
}

EdgeId Graph::edge_id(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) return -1;
    const auto& nb = adj_[a];
    auto it = std::lower_bound(nb.begin(), nb.end(), b);
    if (it == nb.end() || *it != b) return -1;
    return adj_ids_[a][it - nb.begin()];
}

Vertex Graph::other(EdgeId e, Vertex v) const {
    const Edge& ed = edge(e);
    return ed.u == v ? ed.v : ed.u;
}

bool Graph::same_as(const Graph& o) const {
    if (n_ != o.n_ || edge_count() != o.edge_count()) return false;
    for (const Edge& e : edges_)
        if (!o.has_edge(e.u, e.v)) return false;
    return true;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) fail(ErrorCode::InvalidArgument, "cycle needs at least 3 vertices");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

Graph petersen_graph() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
    for (int i = 0; i < 5; ++i) g.add_edge(i, i + 5);
    for (int i = 0; i < 5; ++i) g.add_edge(5 + i, 5 + (i + 2) % 5);
    return g;
}

Graph wheel_graph(int rim) {
    Graph g = cycle_graph(rim);
    Graph w(rim + 1, g.edges());
    for (int i = 0; i < rim; ++i) w.add_edge(i, rim);
    return w;
}

Graph prism_graph() {
    return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

namespace {

// Next line that is neither blank nor a comment.
bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        return true;
    }
    return false;
}

}  // namespace

Graph read_graph(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) fail(ErrorCode::ParseError, "empty graph input");
    std::istringstream head(line);
    long n = -1, m = -1;
    std::string extra;
    if (!(head >> n >> m) || (head >> extra) || n < 0 || m < 0)
        fail(ErrorCode::ParseError, "bad graph header '" + line + "'");
    Graph g(static_cast<int>(n));
    for (long i = 0; i < m; ++i) {
        if (!next_content_line(in, line)) fail(ErrorCode::ParseError, "missing edge lines");
        std::istringstream es(line);
        long u = -1, v = -1;
        if (!(es >> u >> v) || (es >> extra)) fail(ErrorCode::ParseError, "bad edge line '" + line + "'");
        if (u >= v) fail(ErrorCode::ParseError, "edge must satisfy u < v: '" + line + "'");
        try {
            g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
        } catch (const Error& e) {
            fail(ErrorCode::ParseError, e.what());
        }
    }
    if (next_content_line(in, line)) fail(ErrorCode::ParseError, "trailing content '" + line + "'");
    return g;
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

}  // namespace geomet
