#include "geomet/metrize.hpp"

#include "geomet/error.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace geomet {

namespace {

Rational total(const Weights& w) {
    Rational s = 0;
    for (const Rational& x : w) s += x;
    return s;
}

void self_check(const PathSystem& ps, const Weights& w, bool strict, const char* who) {
    if (!verify_weights(ps, w, strict)) throw std::logic_error(std::string(who) + " produced non-inducing weights");
}

PathSystem restrict_or_fail(const PathSystem& ps, const Subgraph& sub, const char* what) {
    auto r = restricts_to(ps, sub);
    if (!r) fail(ErrorCode::PreconditionViolated, std::string("system does not restrict to ") + what);
    return *r;
}

// Walk y .. x along Q, cut into the fibers of the crossing function of P|C.
struct Fibers {
    PathSystem ps_h, ps_c;
    std::vector<Vertex> walk;  // host vertices, walk[0] = y, walk.back() = x
    std::vector<int> block;    // fiber index per walk position
    int m = 0;                 // number of fibers; U is fiber mid
    int mid = -1;
    int a_pos = -1, b_pos = -1;  // alpha = walk[a_pos], beta = walk[b_pos]
    bool empty() const { return mid < 0; }
};

Fibers fibers_of(const PathSystem& ps, const SuspendedSetup& s) {
    const Graph& g = ps.graph();
    auto unused = unused_edges(ps);
    for (EdgeId e : s.c.host_edges)
        if (std::binary_search(unused.begin(), unused.end(), e))
            fail(ErrorCode::PreconditionViolated, "system does not use every edge of the cycle Q+xy");
    Fibers fb{restrict_or_fail(ps, s.h, "H"), restrict_or_fail(ps, s.c, "C"), {}, {}, 0, -1, -1, -1};
    CrossingFunction cf = crossing_function_of(fb.ps_c);
    std::vector<Vertex> local(g.vertex_count(), -1);
    for (Vertex i = 0; i < static_cast<Vertex>(s.c.to_host.size()); ++i) local[s.c.to_host[i]] = i;
    fb.walk.assign(s.q.rbegin(), s.q.rend());
    // Without a fiber over xy, x and y may share a fiber that wraps around.
    bool hit = false;
    for (Vertex v : fb.walk) hit = hit || s.c.host_edges[cf.f[local[v]]] == s.xy;
    if (!hit) return fb;
    std::vector<EdgeId> seen;
    for (Vertex v : fb.walk) {
        EdgeId fe = s.c.host_edges[cf.f[local[v]]];
        if (seen.empty() || seen.back() != fe) {
            if (std::find(seen.begin(), seen.end(), fe) != seen.end())
                fail(ErrorCode::PreconditionViolated, "fibers of the crossing function are not contiguous");
            seen.push_back(fe);
        }
        fb.block.push_back(static_cast<int>(seen.size()) - 1);
    }
    fb.m = static_cast<int>(seen.size());
    auto it = std::find(seen.begin(), seen.end(), s.xy);
    fb.mid = static_cast<int>(it - seen.begin());
    if (fb.m % 2 == 0 || fb.mid != fb.m / 2)
        fail(ErrorCode::PreconditionViolated, "fiber of xy is not the middle fiber");
    for (int i = 0; i < static_cast<int>(fb.walk.size()); ++i)
        if (fb.block[i] == fb.mid) {
            if (fb.a_pos < 0) fb.a_pos = i;
            fb.b_pos = i;
        }
    return fb;
}

// Returns the path p with every traversal of edge {a, b} replaced by `detour`
// (which runs a .. b).
Path replace_edge(const Path& p, Vertex a, Vertex b, const Path& detour) {
    Path out;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i + 1 < p.size() && p[i] == a && p[i + 1] == b) {
            out.insert(out.end(), detour.begin(), detour.end() - 1);
        } else if (i + 1 < p.size() && p[i] == b && p[i + 1] == a) {
            out.insert(out.end(), detour.rbegin(), detour.rend() - 1);
        } else {
            out.push_back(p[i]);
        }
    }
    return out;
}

Path segment(const PathSystem& ps, Vertex a, Vertex b) { return a == b ? Path{a} : ps.oriented(a, b); }

DerivedSystem derive(const PathSystem& ps, const SuspendedSetup& s, const Fibers& fb) {
    const Graph& g = ps.graph();
    const int n = g.vertex_count();
    const Vertex x = s.q.front(), y = s.q.back();
    const Vertex alpha = fb.walk[fb.a_pos], beta = fb.walk[fb.b_pos];
    std::vector<char> in_u(n, 0), keep(n, 1);
    for (size_t i = 1; i + 1 < s.q.size(); ++i) keep[s.q[i]] = 0;
    for (int i = fb.a_pos; i <= fb.b_pos; ++i) keep[fb.walk[i]] = in_u[fb.walk[i]] = 1;

    DerivedSystem d;
    std::vector<Vertex> local(n, -1);
    for (Vertex v = 0; v < n; ++v)
        if (keep[v]) {
            local[v] = static_cast<Vertex>(d.to_host.size());
            d.to_host.push_back(v);
        }
    d.graph = Graph(static_cast<int>(d.to_host.size()));
    std::set<EdgeId> q_edges;
    for (EdgeId e : path_edges(g, s.q)) q_edges.insert(e);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (e == s.xy || !keep[ed.u] || !keep[ed.v]) continue;
        if (q_edges.count(e) && !(in_u[ed.u] && in_u[ed.v])) continue;
        d.graph.add_edge(local[ed.u], local[ed.v]);
        d.host_edge.push_back(e);
    }
    d.new_y_alpha = d.graph.add_edge(local[y], local[alpha]);
    d.host_edge.push_back(-1);
    d.new_beta_x = d.graph.add_edge(local[beta], local[x]);
    d.host_edge.push_back(-1);

    // Q' = y alpha .. beta x
    Path q_prime{y};
    for (int i = fb.a_pos; i <= fb.b_pos; ++i) q_prime.push_back(fb.walk[i]);
    q_prime.push_back(x);

    const int n2 = d.graph.vertex_count();
    std::vector<Path> paths(pair_count(n2));
    for (Vertex a = 0; a < n2; ++a)
        for (Vertex b = a + 1; b < n2; ++b) {
            Vertex ha = d.to_host[a], hb = d.to_host[b];
            Path p;
            if (!in_u[ha] && !in_u[hb]) {
                p = replace_edge(ps.oriented(ha, hb), y, x, q_prime);
            } else if (in_u[ha] && in_u[hb]) {
                p = ps.oriented(ha, hb);
            } else {
                Vertex u = in_u[ha] ? ha : hb, v = in_u[ha] ? hb : ha;
                Path orig = ps.oriented(u, v);
                bool via_x = std::find(orig.begin(), orig.end(), x) != orig.end();
                Vertex end = via_x ? beta : alpha, gate = via_x ? x : y;
                p = segment(ps, u, end);
                Path tail = segment(ps, gate, v);
                p.insert(p.end(), tail.begin(), tail.end());
                if (u != ha) std::reverse(p.begin(), p.end());
            }
            for (Vertex& v : p) v = local[v];
            paths[pair_index(a, b, n2)] = std::move(p);
        }
    try {
        d.system = PathSystem(d.graph, std::move(paths));
    } catch (const Error& e) {
        fail(ErrorCode::PreconditionViolated, std::string("derived system is malformed: ") + e.what());
    }
    if (!is_consistent(d.system)) fail(ErrorCode::PreconditionViolated, "derived system is not consistent");
    return d;
}

}  // namespace

Weights metrize_cycle(const PathSystem& ps) {
    const Graph& g = ps.graph();
    if (!is_cycle_graph(g)) fail(ErrorCode::NotACycle, "graph is not a cycle");
    if (!is_consistent(ps)) fail(ErrorCode::InconsistentInput, "system is not consistent");
    const int n = g.vertex_count();
    if (is_trivial_system(ps)) {
        Weights w(g.edge_count(), Rational(1));
        for (EdgeId e : unused_edges(ps)) w[e] = n;
        self_check(ps, w, true, "metrize_cycle");
        return w;
    }
    // Contract persistent edges one at a time, remembering each stage.
    std::vector<PathSystem> stage{ps};
    std::vector<EdgeId> contracted;
    std::vector<EdgeId> pending = persistent_edges(ps);
    while (!pending.empty()) {
        Quotient q = quotient_by_edge(stage.back(), pending.front());
        contracted.push_back(pending.front());
        std::vector<EdgeId> rest;
        for (size_t i = 1; i < pending.size(); ++i) rest.push_back(q.edge_map[pending[i]]);
        pending = std::move(rest);
        stage.push_back(std::move(q.system));
    }
    Weights w(stage.back().graph().edge_count(), Rational(1));
    for (size_t i = contracted.size(); i-- > 0;) w = lift_quotient_weights(stage[i], contracted[i], w);
    self_check(ps, w, true, "metrize_cycle");
    return w;
}

Weights lift_quotient_weights(const PathSystem& ps, EdgeId e, const Weights& w_quotient) {
    Quotient q = quotient_by_edge(ps, e);
    if (!verify_weights(q.system, w_quotient, true))
        fail(ErrorCode::QuotientNotStrict, "weights do not strictly induce the quotient system");
    const Graph& g = ps.graph();
    Rational margin = strict_margin(q.system, w_quotient).value_or(Rational(1));
    Rational delta = margin / (4 * g.vertex_count());
    Rational heavy = 1 + total(w_quotient);
    auto unused = unused_edges(ps);
    Weights w(g.edge_count());
    for (EdgeId f = 0; f < g.edge_count(); ++f) {
        if (f == e) w[f] = delta;
        else if (std::binary_search(unused.begin(), unused.end(), f)) w[f] = heavy;
        else w[f] = w_quotient[q.edge_map[f]];
    }
    self_check(ps, w, true, "lift_quotient_weights");
    return w;
}

SuspendedSetup suspended_setup(const Graph& g, const Path& q) {
    if (q.size() < 3 || !is_simple_path(g, q))
        fail(ErrorCode::PreconditionViolated, "suspended path must be a simple path with an internal vertex");
    for (size_t i = 1; i + 1 < q.size(); ++i)
        if (g.degree(q[i]) != 2) fail(ErrorCode::PreconditionViolated, "internal vertex of degree != 2");
    SuspendedSetup s;
    s.q = q;
    s.xy = g.edge_id(q.front(), q.back());
    if (s.xy < 0) fail(ErrorCode::PreconditionViolated, "endpoints of the suspended path are not adjacent");
    std::vector<char> internal(g.vertex_count(), 0);
    for (size_t i = 1; i + 1 < q.size(); ++i) internal[q[i]] = 1;
    std::vector<Vertex> hv;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!internal[v]) hv.push_back(v);
    s.h = induced_subgraph(g, hv);
    auto ce = path_edges(g, q);
    ce.push_back(s.xy);
    std::sort(ce.begin(), ce.end());
    s.c = edge_subgraph(g, ce);
    return s;
}

DerivedSystem build_derived_system(const PathSystem& ps, const Path& q) {
    SuspendedSetup s = suspended_setup(ps.graph(), q);
    Fibers fb = fibers_of(ps, s);
    if (fb.empty()) fail(ErrorCode::EmptyFiber, "no vertex of C has crossing edge xy");
    return derive(ps, s, fb);
}

Weights lift_suspended_path(const PathSystem& ps, const Path& q, const Weights& w_h, const Weights& w_c,
                            const Weights& w_prime) {
    const Graph& g = ps.graph();
    SuspendedSetup s = suspended_setup(g, q);
    Fibers fb = fibers_of(ps, s);
    if (!verify_weights(fb.ps_h, w_h, false)) fail(ErrorCode::PreconditionViolated, "w_H does not induce P|H");
    if (!verify_weights(fb.ps_c, w_c, false)) fail(ErrorCode::PreconditionViolated, "w_C does not induce P|C");
    bool strict = verify_weights(fb.ps_h, w_h, true) && verify_weights(fb.ps_c, w_c, true);

    std::vector<EdgeId> h_local(g.edge_count(), -1), c_local(g.edge_count(), -1);
    for (EdgeId e = 0; e < static_cast<EdgeId>(s.h.host_edges.size()); ++e) h_local[s.h.host_edges[e]] = e;
    for (EdgeId e = 0; e < static_cast<EdgeId>(s.c.host_edges.size()); ++e) c_local[s.c.host_edges[e]] = e;

    if (fb.empty()) {
        Rational scale = w_h[h_local[s.xy]] / w_c[c_local[s.xy]];
        Weights w(g.edge_count());
        for (EdgeId e = 0; e < g.edge_count(); ++e) w[e] = h_local[e] >= 0 ? w_h[h_local[e]] : w_c[c_local[e]] * scale;
        self_check(ps, w, strict, "lift_suspended_path");
        return w;
    }

    DerivedSystem d = derive(ps, s, fb);
    if (!verify_weights(d.system, w_prime, false))
        fail(ErrorCode::PreconditionViolated, "w' does not induce the derived system");
    strict = strict && verify_weights(d.system, w_prime, true);
    std::vector<EdgeId> to_prime(g.edge_count(), -1);
    for (EdgeId e = 0; e < static_cast<EdgeId>(d.host_edge.size()); ++e)
        if (d.host_edge[e] >= 0) to_prime[d.host_edge[e]] = e;

    const Rational& w_ya = w_prime[d.new_y_alpha];
    const Rational& w_bx = w_prime[d.new_beta_x];
    Rational k = w_ya + w_bx;
    for (int i = fb.a_pos; i < fb.b_pos; ++i) k += w_prime[to_prime[g.edge_id(fb.walk[i], fb.walk[i + 1])]];
    Rational r = (w_ya < w_bx ? w_ya : w_bx) / 2;

    // w2 of the construction, with the perturbation terms kept apart.
    Weights w2(g.edge_count());
    std::vector<EdgeId> fiber_edges;  // inside fibers other than U, weight 0 in w2
    EdgeId e1 = -1, e_last = -1;
    int n1 = 0, n2 = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (h_local[e] >= 0 && e != s.xy) w2[e] = w_prime[to_prime[e]];
    w2[s.xy] = k;
    for (size_t i = 0; i + 1 < fb.walk.size(); ++i) {
        EdgeId e = g.edge_id(fb.walk[i], fb.walk[i + 1]);
        int bi = fb.block[i], bj = fb.block[i + 1];
        if (bi == bj && bi == fb.mid) {
            w2[e] = w_prime[to_prime[e]];
        } else if (bi == bj) {
            w2[e] = 0;
            fiber_edges.push_back(e);
            (bi < fb.mid ? n1 : n2)++;
        } else if (bj == fb.mid) {
            e_last = e;
            w2[e] = w_ya + r;
        } else if (bi == fb.mid) {
            e1 = e;
            w2[e] = w_bx + r;
        } else {
            w2[e] = k / 2 + r;
        }
    }
    if (fiber_edges.empty()) {
        self_check(ps, w2, strict, "lift_suspended_path");
        return w2;
    }
    // Perturbation budget: whole-system radius when w2 is strict there, else
    // the radius on C alone (enough for the non-strict statement).
    auto margin = strict_margin(ps, w2);
    Rational eps;
    if (margin && sgn(*margin) > 0) {
        eps = *margin / (2 * g.vertex_count());
    } else {
        Weights w2c(s.c.host_edges.size());
        for (EdgeId e = 0; e < static_cast<EdgeId>(w2c.size()); ++e) w2c[e] = w2[s.c.host_edges[e]];
        auto mc = strict_margin(fb.ps_c, w2c);
        if (!mc || sgn(*mc) <= 0) throw std::logic_error("lift_suspended_path: w2 does not strictly induce P|C");
        eps = *mc / (2 * s.c.graph.vertex_count());
    }
    Rational delta = eps / (n1 + n2 + 1);
    Weights w = w2;
    for (EdgeId e : fiber_edges) w[e] = delta;
    w[e1] += n1 * delta;
    w[e_last] += n2 * delta;
    self_check(ps, w, strict, "lift_suspended_path");
    return w;
}

namespace {

// Edge xy plus a suspended x..y path in g - xy, or nothing.
std::optional<Path> find_ear(const Graph& g) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        Vertex x = g.edge(e).u, y = g.edge(e).v;
        for (Vertex z : g.neighbors(x)) {
            if (z == y || g.degree(z) != 2) continue;
            Path q{x, z};
            while (q.back() != y && g.degree(q.back()) == 2 && q.back() != x) {
                auto nb = g.neighbors(q.back());
                q.push_back(nb[0] == q[q.size() - 2] ? nb[1] : nb[0]);
            }
            if (q.back() == y) return q;
        }
    }
    return std::nullopt;
}

Weights outerplanar_rec(const PathSystem& ps) {
    const Graph& g = ps.graph();
    const int m = g.edge_count();
    if (m == g.vertex_count() - 1) return Weights(m, Rational(1));

    auto unused = unused_edges(ps);
    if (!unused.empty()) {
        std::vector<EdgeId> used;
        for (EdgeId e = 0; e < m; ++e)
            if (!std::binary_search(unused.begin(), unused.end(), e)) used.push_back(e);
        Subgraph sub = edge_subgraph(g, used);
        Weights ws = outerplanar_rec(restrict_or_fail(ps, sub, "its used edges"));
        Weights w(m);
        for (EdgeId e = 0; e < static_cast<EdgeId>(ws.size()); ++e) w[sub.host_edges[e]] = ws[e];
        Rational heavy = 1 + total(ws);
        for (EdgeId e : unused) w[e] = heavy;
        return w;
    }
    if (!is_biconnected(g)) {
        Weights w(m);
        for (const Subgraph& block : biconnected_components(g)) {
            Weights wb = outerplanar_rec(restrict_or_fail(ps, block, "a block"));
            for (EdgeId e = 0; e < static_cast<EdgeId>(wb.size()); ++e) w[block.host_edges[e]] = wb[e];
        }
        return w;
    }
    if (is_cycle_graph(g)) return metrize_cycle(ps);

    auto q = find_ear(g);
    if (!q) fail(ErrorCode::NotOuterplanar, "no edge with a suspended path between its ends");
    SuspendedSetup s = suspended_setup(g, *q);
    Fibers fb = fibers_of(ps, s);
    Weights w_h = outerplanar_rec(fb.ps_h);
    Weights w_c = metrize_cycle(fb.ps_c);
    Weights w_prime;
    if (!fb.empty()) w_prime = outerplanar_rec(derive(ps, s, fb).system);
    return lift_suspended_path(ps, *q, w_h, w_c, w_prime);
}

}  // namespace

Weights metrize_outerplanar(const PathSystem& ps, bool strict) {
    const Graph& g = ps.graph();
    if (!is_consistent(ps)) fail(ErrorCode::InconsistentInput, "system is not consistent");
    if (!is_outerplanar(g)) fail(ErrorCode::NotOuterplanar, "graph is not outerplanar");
    Weights w = outerplanar_rec(ps);
    self_check(ps, w, strict, "metrize_outerplanar");
    return w;
}

}  // namespace geomet
