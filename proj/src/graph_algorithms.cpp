#include "geomet/graph_algorithms.hpp"

#include "geomet/error.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace geomet {

std::vector<int> bfs_distances(const Graph& g, Vertex s) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<Vertex> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    std::vector<std::vector<Vertex>> comps;
    std::vector<char> seen(g.vertex_count(), 0);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        auto d = bfs_distances(g, s);
        std::vector<Vertex> comp;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (d[v] >= 0) {
                comp.push_back(v);
                seen[v] = 1;
            }
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) {
    return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

Subgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
    Subgraph s;
    s.to_host = vertices;
    std::vector<int> local(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
        if (local.at(vertices[i]) >= 0) fail(ErrorCode::InvalidArgument, "repeated vertex in subset");
        local[vertices[i]] = i;
    }
    s.graph = Graph(static_cast<int>(vertices.size()));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (local[ed.u] >= 0 && local[ed.v] >= 0) {
            s.graph.add_edge(local[ed.u], local[ed.v]);
            s.host_edges.push_back(e);
        }
    }
    return s;
}

Subgraph edge_subgraph(const Graph& g, const std::vector<EdgeId>& edges) {
    std::vector<char> used(g.vertex_count(), 0);
    for (EdgeId e : edges) used[g.edge(e).u] = used[g.edge(e).v] = 1;
    Subgraph s;
    std::vector<int> local(g.vertex_count(), -1);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (used[v]) {
            local[v] = static_cast<int>(s.to_host.size());
            s.to_host.push_back(v);
        }
    s.graph = Graph(static_cast<int>(s.to_host.size()));
    for (EdgeId e : edges) {
        s.graph.add_edge(local[g.edge(e).u], local[g.edge(e).v]);
        s.host_edges.push_back(e);
    }
    return s;
}

namespace {

struct BlockFinder {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<EdgeId> stack;
    std::vector<std::vector<EdgeId>> blocks;
    std::vector<char> cut;
    int timer = 0;

    explicit BlockFinder(const Graph& graph)
        : g(graph), disc(graph.vertex_count(), -1), low(graph.vertex_count(), 0), cut(graph.vertex_count(), 0) {}

    void dfs(Vertex v, EdgeId parent_edge) {
        disc[v] = low[v] = timer++;
        int children = 0;
        for (Vertex w : g.neighbors(v)) {
            EdgeId e = g.edge_id(v, w);
            if (e == parent_edge) continue;
            if (disc[w] < 0) {
                stack.push_back(e);
                ++children;
                dfs(w, e);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    if (parent_edge >= 0 || children > 1) cut[v] = 1;
                    std::vector<EdgeId> block;
                    EdgeId top;
                    do {
                        top = stack.back();
                        stack.pop_back();
                        block.push_back(top);
                    } while (top != e);
                    std::sort(block.begin(), block.end());
                    blocks.push_back(std::move(block));
                }
            } else if (disc[w] < disc[v]) {
                stack.push_back(e);
                low[v] = std::min(low[v], disc[w]);
            }
        }
        if (parent_edge < 0 && children > 1) cut[v] = 1;
    }
};

}  // namespace

std::vector<Subgraph> biconnected_components(const Graph& g) {
    if (!is_connected(g)) fail(ErrorCode::DisconnectedInput, "graph is not connected");
    std::vector<Subgraph> out;
    if (g.vertex_count() == 0) return out;
    if (g.edge_count() == 0) {
        out.push_back(induced_subgraph(g, {0}));
        return out;
    }
    BlockFinder bf(g);
    bf.dfs(0, -1);
    std::sort(bf.blocks.begin(), bf.blocks.end());
    for (const auto& b : bf.blocks) out.push_back(edge_subgraph(g, b));
    return out;
}

std::vector<Vertex> articulation_points(const Graph& g) {
    BlockFinder bf(g);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (bf.disc[v] < 0) bf.dfs(v, -1);
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (bf.cut[v]) out.push_back(v);
    return out;
}

bool is_biconnected(const Graph& g) {
    return g.vertex_count() >= 3 && is_connected(g) && articulation_points(g).empty();
}

namespace {

// Maximum number of internally vertex-disjoint s-t paths, s and t non-adjacent.
int local_connectivity(const Graph& g, Vertex s, Vertex t) {
    const int n = g.vertex_count();
    const int N = 2 * n;  // v_in = 2v, v_out = 2v+1
    std::vector<std::vector<int>> cap(N, std::vector<int>(N, 0));
    const int big = n + 1;
    for (Vertex v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? big : 1;
    for (const Edge& e : g.edges()) {
        cap[2 * e.u + 1][2 * e.v] = big;
        cap[2 * e.v + 1][2 * e.u] = big;
    }
    const int src = 2 * s + 1, dst = 2 * t;
    int flow = 0;
    while (true) {
        std::vector<int> prev(N, -1);
        prev[src] = src;
        std::queue<int> q;
        q.push(src);
        while (!q.empty() && prev[dst] < 0) {
            int a = q.front();
            q.pop();
            for (int b = 0; b < N; ++b)
                if (prev[b] < 0 && cap[a][b] > 0) {
                    prev[b] = a;
                    q.push(b);
                }
        }
        if (prev[dst] < 0) break;
        for (int b = dst; b != src; b = prev[b]) {
            --cap[prev[b]][b];
            ++cap[b][prev[b]];
        }
        ++flow;
    }
    return flow;
}

}  // namespace

int vertex_connectivity(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) fail(ErrorCode::TooSmall, "connectivity needs at least 2 vertices");
    if (!is_connected(g)) return 0;
    int best = n - 1;
    for (Vertex s = 0; s < n; ++s)
        for (Vertex t = s + 1; t < n; ++t)
            if (!g.has_edge(s, t)) best = std::min(best, local_connectivity(g, s, t));
    return best;
}

// ---------------------------------------------------------------------------
// Subdivision search

namespace {

class SubdivisionSearch {
public:
    SubdivisionSearch(const Graph& host, const Graph& pattern) : h_(host), p_(pattern) {}

    std::optional<SubdivisionWitness> run() {
        const int pn = p_.vertex_count();
        order_.resize(pn);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return p_.degree(a) > p_.degree(b); });
        comp_.assign(h_.vertex_count(), -1);
        auto comps = connected_components(h_);
        for (int c = 0; c < static_cast<int>(comps.size()); ++c)
            for (Vertex v : comps[c]) comp_[v] = c;
        branch_.assign(pn, -1);
        is_branch_.assign(h_.vertex_count(), 0);
        if (assign(0)) return witness_;
        return std::nullopt;
    }

private:
    const Graph& h_;
    const Graph& p_;
    std::vector<Vertex> order_;
    std::vector<int> comp_;
    std::vector<Vertex> branch_;
    std::vector<char> is_branch_;
    std::vector<char> used_;  // internal vertices taken by routed paths
    std::vector<std::vector<Vertex>> routed_;
    SubdivisionWitness witness_;

    bool assign(int k) {
        if (k == static_cast<int>(order_.size())) return route_all();
        Vertex p = order_[k];
        for (Vertex h = 0; h < h_.vertex_count(); ++h) {
            if (is_branch_[h] || h_.degree(h) < p_.degree(p)) continue;
            bool ok = true;
            for (Vertex q : p_.neighbors(p))
                if (branch_[q] >= 0 && comp_[branch_[q]] != comp_[h]) ok = false;
            if (!ok) continue;
            branch_[p] = h;
            is_branch_[h] = 1;
            if (assign(k + 1)) return true;
            branch_[p] = -1;
            is_branch_[h] = 0;
        }
        return false;
    }

    bool route_all() {
        used_.assign(h_.vertex_count(), 0);
        routed_.assign(p_.edge_count(), {});
        // Direct edges first: they cost nothing and never hurt.
        std::vector<EdgeId> order(p_.edge_count());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
            auto direct = [&](EdgeId e) { return h_.has_edge(branch_[p_.edge(e).u], branch_[p_.edge(e).v]); };
            return direct(a) && !direct(b);
        });
        if (!route(order, 0)) return false;
        witness_.branch = branch_;
        witness_.paths = routed_;
        return true;
    }

    bool free_vertex(Vertex v) const { return !is_branch_[v] && !used_[v]; }

    // Distances to target through free vertices (target itself allowed).
    std::vector<int> free_distances(Vertex target) const {
        std::vector<int> d(h_.vertex_count(), -1);
        std::queue<Vertex> q;
        d[target] = 0;
        q.push(target);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : h_.neighbors(v))
                if (d[w] < 0 && free_vertex(w)) {
                    d[w] = d[v] + 1;
                    q.push(w);
                }
        }
        return d;
    }

    bool remaining_feasible(const std::vector<EdgeId>& order, size_t from) const {
        std::vector<int> need(h_.vertex_count(), 0);
        for (size_t i = from; i < order.size(); ++i) {
            const Edge& pe = p_.edge(order[i]);
            Vertex a = branch_[pe.u], b = branch_[pe.v];
            ++need[a];
            ++need[b];
            if (h_.has_edge(a, b)) continue;
            auto d = free_distances(b);
            bool reach = false;
            for (Vertex w : h_.neighbors(a))
                if (free_vertex(w) && d[w] >= 0) reach = true;
            if (!reach) return false;
        }
        for (Vertex v = 0; v < h_.vertex_count(); ++v) {
            if (!is_branch_[v] || need[v] == 0) continue;
            int avail = 0;
            for (Vertex w : h_.neighbors(v))
                if (free_vertex(w) || (is_branch_[w] && !edge_taken(v, w))) ++avail;
            if (avail < need[v]) return false;
        }
        return true;
    }

    bool route(const std::vector<EdgeId>& order, size_t i) {
        if (i == order.size()) return true;
        if (!remaining_feasible(order, i)) return false;
        EdgeId pe = order[i];
        Vertex a = branch_[p_.edge(pe).u], b = branch_[p_.edge(pe).v];
        std::vector<Vertex> path{a};
        auto dist = free_distances(b);
        return extend(order, i, path, b, dist);
    }

    bool extend(const std::vector<EdgeId>& order, size_t i, std::vector<Vertex>& path, Vertex target,
                const std::vector<int>& dist) {
        Vertex v = path.back();
        if (h_.has_edge(v, target) && !(path.size() == 1 && edge_taken(v, target))) {
            path.push_back(target);
            routed_[order[i]] = path;
            if (route(order, i + 1)) return true;
            routed_[order[i]].clear();
            path.pop_back();
        }
        std::vector<Vertex> next;
        for (Vertex w : h_.neighbors(v))
            if (free_vertex(w) && dist[w] > 0) next.push_back(w);
        std::stable_sort(next.begin(), next.end(), [&](Vertex x, Vertex y) { return dist[x] < dist[y]; });
        for (Vertex w : next) {
            used_[w] = 1;
            path.push_back(w);
            if (extend(order, i, path, target, dist)) return true;
            path.pop_back();
            used_[w] = 0;
        }
        return false;
    }

    // A direct host edge between two branch vertices can serve only one pattern edge.
    bool edge_taken(Vertex a, Vertex b) const {
        for (const auto& r : routed_)
            if (r.size() == 2 && ((r[0] == a && r[1] == b) || (r[0] == b && r[1] == a))) return true;
        return false;
    }
};

}  // namespace

std::optional<SubdivisionWitness> find_subdivision(const Graph& host, const Graph& pattern) {
    if (pattern.vertex_count() > kMaxPatternVertices)
        fail(ErrorCode::PatternTooLarge, "pattern has " + std::to_string(pattern.vertex_count()) + " vertices");
    if (pattern.vertex_count() > host.vertex_count() || pattern.edge_count() > host.edge_count())
        return std::nullopt;
    return SubdivisionSearch(host, pattern).run();
}

bool contains_subdivision(const Graph& host, const Graph& pattern) {
    return find_subdivision(host, pattern).has_value();
}

bool validate_witness(const Graph& host, const Graph& pattern, const SubdivisionWitness& w) {
    if (static_cast<int>(w.branch.size()) != pattern.vertex_count()) return false;
    if (static_cast<int>(w.paths.size()) != pattern.edge_count()) return false;
    std::vector<int> owner(host.vertex_count(), -1);  // -2 = branch image
    for (Vertex b : w.branch) {
        if (b < 0 || b >= host.vertex_count() || owner[b] != -1) return false;
        owner[b] = -2;
    }
    std::set<std::pair<Vertex, Vertex>> used_edges;
    for (EdgeId pe = 0; pe < pattern.edge_count(); ++pe) {
        const auto& path = w.paths[pe];
        if (path.size() < 2) return false;
        Vertex a = w.branch[pattern.edge(pe).u], b = w.branch[pattern.edge(pe).v];
        if (!((path.front() == a && path.back() == b) || (path.front() == b && path.back() == a))) return false;
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            if (!host.has_edge(path[i], path[i + 1])) return false;
            auto key = std::minmax(path[i], path[i + 1]);
            if (!used_edges.insert(key).second) return false;
        }
        for (size_t i = 1; i + 1 < path.size(); ++i) {
            if (owner[path[i]] != -1) return false;
            owner[path[i]] = pe;
        }
    }
    return true;
}

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;

// Boyer-Myrvold; `apex` adds a vertex joined to every other one.
bool boost_planar(const Graph& g, bool apex) {
    const int n = g.vertex_count();
    BoostGraph bg(n + (apex ? 1 : 0));
    for (const Edge& e : g.edges()) boost::add_edge(e.u, e.v, bg);
    if (apex)
        for (Vertex v = 0; v < n; ++v) boost::add_edge(v, n, bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace

bool is_planar(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 4) return true;
    if (g.edge_count() > 3 * n - 6) return false;
    return boost_planar(g, false);
}

// Outerplanar iff adding a universal vertex keeps the graph planar.
bool is_outerplanar(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 3) return true;
    if (g.edge_count() > 2 * n - 3) return false;
    return boost_planar(g, true);
}

Graph subdivide_edge(const Graph& g, EdgeId e, int k) {
    if (e < 0 || e >= g.edge_count()) fail(ErrorCode::MissingEdge, "edge id " + std::to_string(e));
    if (k < 0) fail(ErrorCode::InvalidArgument, "negative subdivision count");
    const int n = g.vertex_count();
    Graph out(n + k);
    for (EdgeId f = 0; f < g.edge_count(); ++f)
        if (f != e) out.add_edge(g.edge(f).u, g.edge(f).v);
    Vertex prev = g.edge(e).u;
    for (int i = 0; i < k; ++i) {
        out.add_edge(prev, n + i);
        prev = n + i;
    }
    out.add_edge(prev, g.edge(e).v);
    return out;
}

SuppressResult suppress_degree2(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> alive(n, 1);
    // Current edges keyed by endpoints, value = original vertex path.
    std::map<std::pair<Vertex, Vertex>, std::vector<Vertex>> paths;
    std::vector<std::set<Vertex>> adj(n);
    for (const Edge& e : g.edges()) {
        paths[{e.u, e.v}] = {e.u, e.v};
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
    }
    auto oriented = [&](Vertex a, Vertex b) {
        auto p = paths.at(std::minmax(a, b));
        if (p.front() != a) std::reverse(p.begin(), p.end());
        return p;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex z = 0; z < n; ++z) {
            if (!alive[z] || adj[z].size() != 2) continue;
            Vertex a = *adj[z].begin(), b = *adj[z].rbegin();
            if (adj[a].count(b)) continue;
            auto left = oriented(a, z), right = oriented(z, b);
            left.insert(left.end(), right.begin() + 1, right.end());
            paths.erase(std::minmax(a, z));
            paths.erase(std::minmax(z, b));
            if (a > b) std::reverse(left.begin(), left.end());
            paths[std::minmax(a, b)] = left;
            adj[a].erase(z);
            adj[b].erase(z);
            adj[a].insert(b);
            adj[b].insert(a);
            adj[z].clear();
            alive[z] = 0;
            changed = true;
        }
    }
    SuppressResult r;
    std::vector<int> local(n, -1);
    for (Vertex v = 0; v < n; ++v)
        if (alive[v]) {
            local[v] = static_cast<int>(r.to_host.size());
            r.to_host.push_back(v);
        }
    r.graph = Graph(static_cast<int>(r.to_host.size()));
    for (const auto& [key, path] : paths) {
        r.graph.add_edge(local[key.first], local[key.second]);
        r.edge_paths.push_back(path);
    }
    return r;
}

ContractResult contract_edge(const Graph& g, EdgeId e) {
    if (e < 0 || e >= g.edge_count()) fail(ErrorCode::MissingEdge, "edge id " + std::to_string(e));
    const Vertex keep = g.edge(e).u, gone = g.edge(e).v;  // keep < gone
    ContractResult r;
    r.vertex_map.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        r.vertex_map[v] = v == gone ? keep : (v > gone ? v - 1 : v);
    r.graph = Graph(g.vertex_count() - 1);
    r.edge_map.assign(g.edge_count(), -1);
    for (EdgeId f = 0; f < g.edge_count(); ++f) {
        if (f == e) continue;
        Vertex a = r.vertex_map[g.edge(f).u], b = r.vertex_map[g.edge(f).v];
        EdgeId existing = r.graph.edge_id(a, b);
        r.edge_map[f] = existing >= 0 ? existing : r.graph.add_edge(a, b);
    }
    return r;
}

std::vector<std::vector<Vertex>> suspended_paths(const Graph& g) {
    for (const auto& comp : connected_components(g)) {
        bool all2 = comp.size() >= 3;
        for (Vertex v : comp) all2 = all2 && g.degree(v) == 2;
        if (all2) fail(ErrorCode::CycleComponent, "component containing vertex " + std::to_string(comp[0]) + " is a cycle");
    }
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (g.degree(s) == 2) continue;
        for (Vertex first : g.neighbors(s)) {
            if (g.degree(first) != 2) continue;
            std::vector<Vertex> path{s, first};
            while (g.degree(path.back()) == 2) {
                Vertex cur = path.back(), prev = path[path.size() - 2];
                const auto& nb = g.neighbors(cur);
                path.push_back(nb[0] == prev ? nb[1] : nb[0]);
            }
            if (path.back() > s) out.push_back(std::move(path));
        }
    }
    return out;
}

namespace {

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.vertex_count()) {}

    std::vector<Edge> run() {
        placed_.assign(n_, 0);
        perm_.clear();
        cur_.clear();
        search();
        std::vector<Edge> out;
        for (Vertex i = 0; i < n_; ++i)
            for (Vertex j = i + 1; j < n_; ++j)
                if (g_.has_edge(best_perm_[i], best_perm_[j])) out.push_back({i, j});
        return out;
    }

private:
    const Graph& g_;
    int n_;
    std::vector<char> placed_;
    std::vector<Vertex> perm_, best_perm_;
    std::vector<char> cur_, best_;  // adjacency bits in column order
    bool have_best_ = false;
    bool beating_ = false;  // current prefix already exceeds best

    void search() {
        const int k = static_cast<int>(perm_.size());
        if (k == n_) {
            if (!have_best_ || cur_ > best_) {
                best_ = cur_;
                best_perm_ = perm_;
                have_best_ = true;
            }
            return;
        }
        int max_deg = -1;
        for (Vertex v = 0; v < n_; ++v)
            if (!placed_[v]) max_deg = std::max(max_deg, g_.degree(v));
        for (Vertex v = 0; v < n_; ++v) {
            if (placed_[v] || g_.degree(v) != max_deg) continue;
            size_t mark = cur_.size();
            for (int i = 0; i < k; ++i) cur_.push_back(g_.has_edge(perm_[i], v) ? 1 : 0);
            bool saved = beating_;
            bool prune = false;
            if (have_best_ && !beating_) {
                for (size_t i = mark; i < cur_.size(); ++i) {
                    if (cur_[i] != best_[i]) {
                        if (cur_[i] < best_[i]) prune = true;
                        else beating_ = true;
                        break;
                    }
                }
            }
            if (!prune) {
                placed_[v] = 1;
                perm_.push_back(v);
                search();
                perm_.pop_back();
                placed_[v] = 0;
            }
            beating_ = saved;
            cur_.resize(mark);
        }
    }
};

}  // namespace

std::vector<Edge> canonical_form(const Graph& g) { return CanonicalSearch(g).run(); }

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (Vertex v = 0; v < a.vertex_count(); ++v) da.push_back(a.degree(v));
    for (Vertex v = 0; v < b.vertex_count(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace geomet
