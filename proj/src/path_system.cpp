#include "geomet/path_system.hpp"

#include "geomet/error.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

namespace geomet {

int pair_index(Vertex u, Vertex v, int n) {
    if (u > v) std::swap(u, v);
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

std::pair<Vertex, Vertex> pair_at(int index, int n) {
    Vertex u = 0;
    while (index >= n - 1 - u) {
        index -= n - 1 - u;
        ++u;
    }
    return {u, u + 1 + index};
}

std::vector<EdgeId> path_edges(const Graph& g, const Path& p) {
    std::vector<EdgeId> out;
    out.reserve(p.size());
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        EdgeId e = g.edge_id(p[i], p[i + 1]);
        if (e < 0)
            fail(ErrorCode::InvalidPath, "no edge " + std::to_string(p[i]) + " " + std::to_string(p[i + 1]));
        out.push_back(e);
    }
    return out;
}

bool is_simple_path(const Graph& g, const Path& p) {
    if (p.empty()) return false;
    std::set<Vertex> seen;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0 || p[i] >= g.vertex_count() || !seen.insert(p[i]).second) return false;
        if (i + 1 < p.size() && !g.has_edge(p[i], p[i + 1])) return false;
    }
    return true;
}

Rational path_weight(const Graph& g, const std::vector<Rational>& w, const Path& p) {
    Rational total = 0;
    for (EdgeId e : path_edges(g, p)) total += w.at(e);
    return total;
}

PathSystem::PathSystem(Graph g, std::vector<Path> paths) : g_(std::move(g)), paths_(std::move(paths)) {
    const int n = g_.vertex_count();
    if (static_cast<int>(paths_.size()) != pair_count(n))
        fail(ErrorCode::InvalidPath, "expected " + std::to_string(pair_count(n)) + " paths");
    for (int i = 0; i < static_cast<int>(paths_.size()); ++i) {
        auto [u, v] = pair_at(i, n);
        Path& p = paths_[i];
        if (!p.empty() && p.front() == v) std::reverse(p.begin(), p.end());
        if (p.size() < 2 || p.front() != u || p.back() != v || !is_simple_path(g_, p))
            fail(ErrorCode::InvalidPath,
                 "path for pair " + std::to_string(u) + " " + std::to_string(v) + " is not a simple path between them");
    }
}

const Path& PathSystem::path(Vertex u, Vertex v) const {
    if (u == v || u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        fail(ErrorCode::InvalidArgument, "bad pair " + std::to_string(u) + " " + std::to_string(v));
    return paths_[pair_index(u, v, vertex_count())];
}

Path PathSystem::oriented(Vertex from, Vertex to) const {
    Path p = path(from, to);
    if (p.front() != from) std::reverse(p.begin(), p.end());
    return p;
}

namespace {

bool same_unoriented(const Path& a, const Path& b) {
    if (a.size() != b.size()) return false;
    return std::equal(a.begin(), a.end(), b.begin()) || std::equal(a.begin(), a.end(), b.rbegin());
}

}  // namespace

std::optional<ConsistencyViolation> find_inconsistency(const PathSystem& ps) {
    for (const Path& p : ps.paths()) {
        for (size_t i = 0; i < p.size(); ++i)
            for (size_t j = i + 1; j < p.size(); ++j) {
                if (i == 0 && j == p.size() - 1) continue;
                Path sub(p.begin() + i, p.begin() + j + 1);
                if (!same_unoriented(sub, ps.path(p[i], p[j]))) return ConsistencyViolation{p, p[i], p[j]};
            }
    }
    return std::nullopt;
}

bool is_neighborly(const PathSystem& ps) {
    for (const Edge& e : ps.graph().edges())
        if (ps.path(e.u, e.v).size() != 2) return false;
    return true;
}

std::vector<EdgeId> unused_edges(const PathSystem& ps) {
    std::vector<char> used(ps.graph().edge_count(), 0);
    for (const Path& p : ps.paths())
        for (EdgeId e : path_edges(ps.graph(), p)) used[e] = 1;
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < ps.graph().edge_count(); ++e)
        if (!used[e]) out.push_back(e);
    return out;
}

TreeSystem to_tree_system(const PathSystem& ps) {
    const int n = ps.vertex_count();
    TreeSystem ts{ps.graph(), std::vector<std::vector<Vertex>>(n, std::vector<Vertex>(n, -1))};
    for (Vertex r = 0; r < n; ++r) {
        auto& par = ts.parent[r];
        for (Vertex v = 0; v < n; ++v)
            if (v != r) par[v] = ps.oriented(v, r)[1];
        for (Vertex x = 0; x < n; ++x) {
            if (x == r) continue;
            Path p = ps.oriented(x, r);
            for (size_t i = 0; i + 1 < p.size(); ++i)
                if (par[p[i]] != p[i + 1])
                    fail(ErrorCode::InconsistentInput, "paths from root " + std::to_string(r) + " do not form a tree");
        }
    }
    return ts;
}

namespace {

Path tree_path(const TreeSystem& ts, Vertex r, Vertex v) {
    const int n = ts.graph.vertex_count();
    Path p{v};
    while (p.back() != r) {
        Vertex next = ts.parent[r].at(p.back());
        if (next < 0 || static_cast<int>(p.size()) > n || !ts.graph.has_edge(p.back(), next))
            fail(ErrorCode::InconsistentInput, "tree rooted at " + std::to_string(r) + " is malformed");
        p.push_back(next);
    }
    std::reverse(p.begin(), p.end());
    return p;  // r .. v
}

}  // namespace

std::vector<EdgeId> tree_edges(const TreeSystem& ts, Vertex r) {
    std::vector<EdgeId> out;
    for (Vertex v = 0; v < ts.graph.vertex_count(); ++v)
        if (v != r) out.push_back(ts.graph.edge_id(v, ts.parent[r][v]));
    std::sort(out.begin(), out.end());
    return out;
}

PathSystem to_path_system(const TreeSystem& ts) {
    const int n = ts.graph.vertex_count();
    if (static_cast<int>(ts.parent.size()) != n) fail(ErrorCode::InconsistentInput, "need one tree per vertex");
    std::vector<Path> paths(pair_count(n));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            Path a = tree_path(ts, u, v);
            Path b = tree_path(ts, v, u);
            std::reverse(b.begin(), b.end());
            if (a != b)
                fail(ErrorCode::InconsistentInput,
                     "trees of " + std::to_string(u) + " and " + std::to_string(v) + " disagree");
            paths[pair_index(u, v, n)] = a;
        }
    PathSystem ps(ts.graph, std::move(paths));
    if (!is_consistent(ps)) fail(ErrorCode::InconsistentInput, "tree system is not consistent");
    return ps;
}

std::vector<EdgeId> persistent_edges(const PathSystem& ps) {
    const int n = ps.vertex_count();
    const int m = ps.graph().edge_count();
    TreeSystem ts = to_tree_system(ps);
    std::vector<int> in_trees(m, 0);
    for (Vertex r = 0; r < n; ++r)
        for (EdgeId e : tree_edges(ts, r)) ++in_trees[e];
    // Second definition: every root reaches some v whose path uses e.
    std::vector<int> covered(m, 0);
    for (Vertex u = 0; u < n; ++u) {
        std::vector<char> hit(m, 0);
        for (Vertex v = 0; v < n; ++v)
            if (v != u)
                for (EdgeId e : path_edges(ps.graph(), ps.path(u, v))) hit[e] = 1;
        for (EdgeId e = 0; e < m; ++e) covered[e] += hit[e];
    }
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < m; ++e) {
        bool a = in_trees[e] == n, b = covered[e] == n;
        if (a != b) fail(ErrorCode::InconsistentInput, "persistent edge definitions disagree");
        if (a) out.push_back(e);
    }
    return out;
}

bool is_trivial_system(const PathSystem& ps) {
    if (ps.vertex_count() <= 1) return true;
    TreeSystem ts = to_tree_system(ps);
    auto first = tree_edges(ts, 0);
    for (Vertex r = 1; r < ps.vertex_count(); ++r)
        if (tree_edges(ts, r) != first) return false;
    return true;
}

Quotient quotient_by_edge(const PathSystem& ps, EdgeId e) {
    auto persistent = persistent_edges(ps);
    if (!std::binary_search(persistent.begin(), persistent.end(), e))
        fail(ErrorCode::NonPersistentEdge, "edge " + std::to_string(e) + " is not persistent");
    ContractResult cr = contract_edge(ps.graph(), e);
    const int n = ps.vertex_count(), nq = cr.graph.vertex_count();
    std::vector<Vertex> rep(nq, -1);
    for (Vertex v = n - 1; v >= 0; --v) rep[cr.vertex_map[v]] = v;
    std::vector<Path> paths(pair_count(nq));
    for (Vertex a = 0; a < nq; ++a)
        for (Vertex b = a + 1; b < nq; ++b) {
            Path q;
            for (Vertex x : ps.oriented(rep[a], rep[b])) {
                Vertex y = cr.vertex_map[x];
                if (q.empty() || q.back() != y) q.push_back(y);
            }
            if (!is_simple_path(cr.graph, q)) fail(ErrorCode::InconsistentInput, "quotient path is not simple");
            paths[pair_index(a, b, nq)] = std::move(q);
        }
    return Quotient{PathSystem(cr.graph, std::move(paths)), cr.vertex_map, cr.edge_map};
}

Quotient quotient(const PathSystem& ps, std::vector<EdgeId> edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    auto persistent = persistent_edges(ps);
    for (EdgeId e : edges)
        if (!std::binary_search(persistent.begin(), persistent.end(), e))
            fail(ErrorCode::NonPersistentEdge, "edge " + std::to_string(e) + " is not persistent");
    Quotient acc{ps, {}, {}};
    for (Vertex v = 0; v < ps.vertex_count(); ++v) acc.vertex_map.push_back(v);
    for (EdgeId e = 0; e < ps.graph().edge_count(); ++e) acc.edge_map.push_back(e);
    for (EdgeId e : edges) {
        EdgeId cur = acc.edge_map[e];
        Quotient step = quotient_by_edge(acc.system, cur);
        for (Vertex& v : acc.vertex_map) v = step.vertex_map[v];
        for (EdgeId& f : acc.edge_map) f = f < 0 ? -1 : step.edge_map[f];
        acc.system = std::move(step.system);
    }
    return acc;
}

PathSystem induce_from_weights(const Graph& g, const std::vector<Rational>& w) {
    const int n = g.vertex_count(), m = g.edge_count();
    if (static_cast<int>(w.size()) != m) fail(ErrorCode::InvalidArgument, "one weight per edge required");
    for (const Rational& x : w)
        if (sgn(x) <= 0) fail(ErrorCode::InvalidArgument, "weights must be positive");
    if (!is_connected(g)) fail(ErrorCode::DisconnectedInput, "graph is not connected");
    // Key (length, -bonus) with bonus(e) = 2^(m-1-e): comparing bonus sums of
    // two edge sets decides by the smallest id in their symmetric difference.
    std::vector<mpz_class> bonus(m);
    for (EdgeId e = 0; e < m; ++e) mpz_ui_pow_ui(bonus[e].get_mpz_t(), 2, static_cast<unsigned long>(m - 1 - e));
    struct Key {
        Rational len;
        mpz_class bonus;
        bool operator<(const Key& o) const { return len != o.len ? len < o.len : bonus > o.bonus; }
    };
    std::vector<Path> paths(pair_count(n));
    for (Vertex s = 0; s < n; ++s) {
        std::vector<Key> key(n);
        std::vector<char> reached(n, 0), done(n, 0);
        std::vector<Vertex> prev(n, -1);
        reached[s] = 1;
        for (int it = 0; it < n; ++it) {
            Vertex best = -1;
            for (Vertex v = 0; v < n; ++v)
                if (reached[v] && !done[v] && (best < 0 || key[v] < key[best])) best = v;
            if (best < 0) break;
            done[best] = 1;
            for (Vertex x : g.neighbors(best)) {
                if (done[x]) continue;
                EdgeId e = g.edge_id(best, x);
                Key cand{key[best].len + w[e], key[best].bonus + bonus[e]};
                if (!reached[x] || cand < key[x]) {
                    key[x] = cand;
                    prev[x] = best;
                    reached[x] = 1;
                }
            }
        }
        for (Vertex t = s + 1; t < n; ++t) {
            Path p{t};
            while (p.back() != s) p.push_back(prev[p.back()]);
            std::reverse(p.begin(), p.end());
            paths[pair_index(s, t, n)] = std::move(p);
        }
    }
    return PathSystem(g, std::move(paths));
}

bool is_consistent_partial(const PartialPathSystem& pps) {
    const Graph& g = pps.graph;
    for (const auto& [key, p] : pps.paths) {
        if (!is_simple_path(g, p)) return false;
        if (!((p.front() == key.first && p.back() == key.second) || (p.front() == key.second && p.back() == key.first)))
            return false;
    }
    // Any two stored paths must agree between any two vertices they share.
    for (const auto& [k1, p] : pps.paths) {
        std::vector<int> pos(g.vertex_count(), -1);
        for (size_t i = 0; i < p.size(); ++i) pos[p[i]] = static_cast<int>(i);
        for (const auto& [k2, q] : pps.paths) {
            for (size_t i = 0; i < q.size(); ++i)
                for (size_t j = i + 1; j < q.size(); ++j) {
                    int a = pos[q[i]], b = pos[q[j]];
                    if (a < 0 || b < 0) continue;
                    Path sub_q(q.begin() + i, q.begin() + j + 1);
                    Path sub_p = a < b ? Path(p.begin() + a, p.begin() + b + 1) : Path(p.begin() + b, p.begin() + a + 1);
                    if (!same_unoriented(sub_p, sub_q)) return false;
                }
            (void)k2;
        }
        (void)k1;
    }
    return true;
}

PathSystem extend_neighborly(const Graph& g, const std::vector<Vertex>& sub, const PathSystem& ps_sub) {
    if (sub.empty()) fail(ErrorCode::InvalidArgument, "empty subgraph");
    if (!is_connected(g)) fail(ErrorCode::DisconnectedInput, "host graph is not connected");
    for (Vertex v : sub)
        if (v < 0 || v >= g.vertex_count()) fail(ErrorCode::NotInducedSubgraph, "vertex out of range");
    Subgraph ind = induced_subgraph(g, sub);
    if (!ind.graph.same_as(ps_sub.graph())) fail(ErrorCode::NotInducedSubgraph, "system graph is not g[sub]");
    if (!is_neighborly(ps_sub)) fail(ErrorCode::NotNeighborly, "sub system is not neighborly");
    if (!is_consistent(ps_sub)) fail(ErrorCode::InconsistentInput, "sub system is not consistent");

    const int n = g.vertex_count();
    std::map<std::pair<Vertex, Vertex>, Path> paths;
    auto put = [&](Path p) {
        if (p.front() > p.back()) std::reverse(p.begin(), p.end());
        paths[{p.front(), p.back()}] = std::move(p);
    };
    auto get = [&](Vertex a, Vertex b) {
        Path p = paths.at(std::minmax(a, b));
        if (p.front() != a) std::reverse(p.begin(), p.end());
        return p;
    };
    for (const Path& p : ps_sub.paths()) {
        Path host;
        for (Vertex x : p) host.push_back(sub[x]);
        put(host);
    }
    std::vector<char> in(n, 0);
    for (Vertex v : sub) in[v] = 1;
    std::vector<Vertex> current(sub);
    for (int added = static_cast<int>(sub.size()); added < n; ++added) {
        Vertex v = -1;
        for (Vertex c = 0; c < n && v < 0; ++c)
            if (!in[c])
                for (Vertex w : g.neighbors(c))
                    if (in[w]) {
                        v = c;
                        break;
                    }
        std::vector<char> nb(n, 0);
        Vertex u0 = -1;
        for (Vertex w : g.neighbors(v))
            if (in[w]) {
                nb[w] = 1;
                if (u0 < 0) u0 = w;
            }
        for (Vertex x : current) {
            if (nb[x]) {
                put({v, x});
                continue;
            }
            // Hop to v as early as possible along the path toward u0.
            Path p = get(x, u0);
            size_t k = 0;
            while (!nb[p[k]]) ++k;
            p.resize(k + 1);
            p.push_back(v);
            put(std::move(p));
        }
        in[v] = 1;
        current.push_back(v);
    }
    std::vector<Path> out(pair_count(n));
    for (auto& [key, p] : paths) out[pair_index(key.first, key.second, n)] = std::move(p);
    return PathSystem(g, std::move(out));
}

bool is_cycle_graph(const Graph& g) {
    if (g.vertex_count() < 3 || g.edge_count() != g.vertex_count() || !is_connected(g)) return false;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

std::vector<Vertex> cycle_order(const Graph& g) {
    if (!is_cycle_graph(g)) fail(ErrorCode::NotACycle, "graph is not a cycle");
    std::vector<Vertex> order{0, g.neighbors(0)[0]};
    while (static_cast<int>(order.size()) < g.vertex_count()) {
        Vertex cur = order.back(), prev = order[order.size() - 2];
        const auto& nb = g.neighbors(cur);
        order.push_back(nb[0] == prev ? nb[1] : nb[0]);
    }
    return order;
}

namespace {

// The two arcs of C - f(x) starting at x: vertex sets (x excluded) and edge sets.
struct Arcs {
    std::vector<int> vertex_side;  // 0 or 1 for y != x, -1 for x
    std::vector<int> edge_side;    // 0 or 1, -1 for f(x)
};

Arcs arcs_from(const Graph& cycle, const std::vector<Vertex>& order, Vertex x, EdgeId fx) {
    const int n = cycle.vertex_count();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    Arcs a{std::vector<int>(n, -1), std::vector<int>(cycle.edge_count(), -1)};
    for (int dir = 0; dir < 2; ++dir) {
        int step = dir == 0 ? 1 : n - 1;
        Vertex cur = x;
        while (true) {
            Vertex nxt = order[(pos[cur] + step) % n];
            EdgeId e = cycle.edge_id(cur, nxt);
            if (e == fx) break;
            a.edge_side[e] = dir;
            a.vertex_side[nxt] = dir;
            cur = nxt;
        }
    }
    return a;
}

}  // namespace

bool satisfies_crossing_condition(const Graph& cycle, const CrossingFunction& cf, std::pair<Vertex, Vertex>* witness) {
    auto order = cycle_order(cycle);
    const int n = cycle.vertex_count();
    if (cf.cycle_length != n || static_cast<int>(cf.f.size()) != n)
        fail(ErrorCode::InvalidArgument, "crossing function size does not match the cycle");
    for (EdgeId e : cf.f)
        if (e < 0 || e >= cycle.edge_count()) fail(ErrorCode::InvalidArgument, "crossing value is not an edge");
    for (Vertex x = 0; x < n; ++x) {
        Arcs a = arcs_from(cycle, order, x, cf.f[x]);
        for (Vertex y = 0; y < n; ++y) {
            if (y == x || cf.f[y] == cf.f[x]) continue;
            if (a.edge_side[cf.f[y]] != 1 - a.vertex_side[y]) {
                if (witness) *witness = {x, y};
                return false;
            }
        }
    }
    return true;
}

CrossingFunction crossing_function_of(const PathSystem& ps) {
    const Graph& g = ps.graph();
    if (!is_cycle_graph(g)) fail(ErrorCode::NotACycle, "graph is not a cycle");
    if (!is_consistent(ps)) fail(ErrorCode::InconsistentInput, "system is not consistent");
    TreeSystem ts = to_tree_system(ps);
    CrossingFunction cf{g.vertex_count(), {}};
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto te = tree_edges(ts, v);
        EdgeId missing = -1;
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (!std::binary_search(te.begin(), te.end(), e)) missing = e;
        cf.f.push_back(missing);
    }
    return cf;
}

PathSystem system_of_crossing(const Graph& cycle, const CrossingFunction& cf) {
    std::pair<Vertex, Vertex> w;
    if (!satisfies_crossing_condition(cycle, cf, &w))
        fail(ErrorCode::CrossingViolation,
             "x=" + std::to_string(w.first) + " and f(x) do not separate y=" + std::to_string(w.second) + " from f(y)");
    auto order = cycle_order(cycle);
    const int n = cycle.vertex_count();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<Path> paths(pair_count(n));
    for (Vertex x = 0; x < n; ++x) {
        Arcs a = arcs_from(cycle, order, x, cf.f[x]);
        for (Vertex y = x + 1; y < n; ++y) {
            int step = a.vertex_side[y] == 0 ? 1 : n - 1;
            Path p{x};
            while (p.back() != y) p.push_back(order[(pos[p.back()] + step) % n]);
            paths[pair_index(x, y, n)] = std::move(p);
        }
    }
    return PathSystem(cycle, std::move(paths));
}

PathSystem system_of_crossing(const CrossingFunction& cf) {
    return system_of_crossing(cycle_graph(cf.cycle_length), cf);
}

bool is_shorter_arc_system(const PathSystem& ps) {
    const Graph& g = ps.graph();
    if (!is_cycle_graph(g) || g.vertex_count() % 2 == 0) return false;
    const int half = (g.vertex_count() - 1) / 2;
    for (const Path& p : ps.paths())
        if (static_cast<int>(p.size()) - 1 > half) return false;
    return true;
}

CycleClass classify_cycle_system(const PathSystem& ps) {
    if (!is_cycle_graph(ps.graph())) fail(ErrorCode::NotACycle, "graph is not a cycle");
    if (!is_consistent(ps)) fail(ErrorCode::InconsistentInput, "system is not consistent");
    CycleClass c;
    c.quotient = quotient(ps, persistent_edges(ps));
    c.trivial = is_trivial_system(ps);
    if (c.trivial) return c;
    c.m = c.quotient.system.vertex_count();
    if (!is_shorter_arc_system(c.quotient.system))
        fail(ErrorCode::InconsistentInput, "reduced cycle system is not the shorter-arc system");
    return c;
}

PathSystem canonical_odd_system(int n) {
    if (n < 3) fail(ErrorCode::InvalidArgument, "need n >= 3");
    if (n % 2 == 0) fail(ErrorCode::EvenLength, "n must be odd");
    Graph g = cycle_graph(n);
    std::vector<Path> paths(pair_count(n));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            int step = (v - u) <= n / 2 ? 1 : n - 1;
            Path p{u};
            while (p.back() != v) p.push_back((p.back() + step) % n);
            paths[pair_index(u, v, n)] = std::move(p);
        }
    return PathSystem(g, std::move(paths));
}

std::optional<PathSystem> restricts_to(const PathSystem& ps, const Subgraph& h) {
    const Graph& g = ps.graph();
    std::vector<int> local(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(h.to_host.size()); ++i) local[h.to_host[i]] = i;
    std::vector<char> edge_in(g.edge_count(), 0);
    for (EdgeId e : h.host_edges) edge_in[e] = 1;
    const int k = h.graph.vertex_count();
    std::vector<Path> paths(pair_count(k));
    for (Vertex a = 0; a < k; ++a)
        for (Vertex b = a + 1; b < k; ++b) {
            Path hp = ps.oriented(h.to_host[a], h.to_host[b]);
            for (EdgeId e : path_edges(g, hp))
                if (!edge_in[e]) return std::nullopt;
            Path lp;
            for (Vertex x : hp) lp.push_back(local[x]);
            paths[pair_index(a, b, k)] = std::move(lp);
        }
    return PathSystem(h.graph, std::move(paths));
}

namespace {

bool content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        return true;
    }
    return false;
}

// "u v : v0 v1 ... vk"
std::pair<std::pair<Vertex, Vertex>, Path> parse_pair_line(const std::string& line) {
    auto colon = line.find(':');
    if (colon == std::string::npos) fail(ErrorCode::ParseError, "missing ':' in '" + line + "'");
    std::istringstream head(line.substr(0, colon)), body(line.substr(colon + 1));
    long u, v;
    std::string extra;
    if (!(head >> u >> v) || (head >> extra)) fail(ErrorCode::ParseError, "bad pair in '" + line + "'");
    Path p;
    long x;
    while (body >> x) p.push_back(static_cast<Vertex>(x));
    if (!body.eof()) fail(ErrorCode::ParseError, "bad path in '" + line + "'");
    if (p.size() < 2 || p.front() != u || p.back() != v)
        fail(ErrorCode::ParseError, "path must run from u to v in '" + line + "'");
    return {{static_cast<Vertex>(u), static_cast<Vertex>(v)}, p};
}

}  // namespace

PathSystem read_path_system(std::istream& in, const Graph& g) {
    std::string line;
    if (!content_line(in, line)) fail(ErrorCode::ParseError, "empty path system input");
    std::istringstream head(line);
    std::string tag, extra;
    long n;
    if (!(head >> tag >> n) || tag != "pathsystem" || (head >> extra))
        fail(ErrorCode::ParseError, "bad header '" + line + "'");
    if (n != g.vertex_count()) fail(ErrorCode::ParseError, "vertex count does not match graph");
    std::vector<Path> paths(pair_count(g.vertex_count()));
    std::vector<char> seen(paths.size(), 0);
    for (size_t i = 0; i < paths.size(); ++i) {
        if (!content_line(in, line)) fail(ErrorCode::ParseError, "missing path lines");
        auto [key, p] = parse_pair_line(line);
        if (key.first >= key.second || key.second >= g.vertex_count() || key.first < 0)
            fail(ErrorCode::ParseError, "bad pair in '" + line + "'");
        int idx = pair_index(key.first, key.second, g.vertex_count());
        if (seen[idx]) fail(ErrorCode::ParseError, "duplicate pair in '" + line + "'");
        seen[idx] = 1;
        paths[idx] = std::move(p);
    }
    if (content_line(in, line)) fail(ErrorCode::ParseError, "trailing content '" + line + "'");
    try {
        return PathSystem(g, std::move(paths));
    } catch (const Error& e) {
        fail(ErrorCode::ParseError, e.what());
    }
}

PathSystem parse_path_system(const std::string& text, const Graph& g) {
    std::istringstream in(text);
    return read_path_system(in, g);
}

std::string format_path_system(const PathSystem& ps) {
    std::ostringstream out;
    const int n = ps.vertex_count();
    out << "pathsystem " << n << '\n';
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            out << u << ' ' << v << " :";
            for (Vertex x : ps.path(u, v)) out << ' ' << x;
            out << '\n';
        }
    return out.str();
}

PartialPathSystem read_partial(std::istream& in, const Graph& g) {
    std::string line;
    if (!content_line(in, line)) fail(ErrorCode::ParseError, "empty partial system input");
    std::istringstream head(line);
    std::string tag;
    long n;
    if (!(head >> tag >> n) || tag != "partial") fail(ErrorCode::ParseError, "bad header '" + line + "'");
    if (n != g.vertex_count()) fail(ErrorCode::ParseError, "vertex count does not match graph");
    PartialPathSystem pps;
    pps.graph = g;
    while (content_line(in, line)) {
        auto [key, p] = parse_pair_line(line);
        if (key.first > key.second) {
            std::swap(key.first, key.second);
            std::reverse(p.begin(), p.end());
        }
        if (!is_simple_path(g, p)) fail(ErrorCode::ParseError, "not a simple path in '" + line + "'");
        pps.paths[key] = p;
    }
    return pps;
}

}  // namespace geomet
