#pragma once

// Brute-force reference implementations used only by the tests. They share
// nothing with the library beyond the Graph/PathSystem containers.

#include "geomet/catalog.hpp"
#include "geomet/metrize.hpp"
#include "geomet/path_system.hpp"

#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using namespace geomet;

inline std::vector<Path> simple_paths(const Graph& g, Vertex s, Vertex t) {
    std::vector<Path> out;
    Path cur{s};
    std::vector<char> on(g.vertex_count(), 0);
    on[s] = 1;
    std::function<void()> dfs = [&] {
        Vertex x = cur.back();
        if (x == t) {
            out.push_back(cur);
            return;
        }
        for (Vertex y : g.neighbors(x))
            if (!on[y]) {
                on[y] = 1;
                cur.push_back(y);
                dfs();
                cur.pop_back();
                on[y] = 0;
            }
    };
    dfs();
    return out;
}

inline Path reversed(Path p) { return Path(p.rbegin(), p.rend()); }

// Chosen path from u to v.
inline Path chosen(const std::vector<Path>& paths, int n, Vertex u, Vertex v) {
    int a = std::min(u, v), b = std::max(u, v);
    int idx = a * n - a * (a + 1) / 2 + (b - a - 1);
    Path p = paths[idx];
    if (p.front() != u) p = reversed(p);
    return p;
}

inline bool consistent(const std::vector<Path>& paths, int n) {
    for (const Path& p : paths)
        for (size_t i = 0; i < p.size(); ++i)
            for (size_t j = i + 1; j < p.size(); ++j) {
                Path sub(p.begin() + i, p.begin() + j + 1);
                if (chosen(paths, n, p[i], p[j]) != sub) return false;
            }
    return true;
}

inline bool consistent(const PathSystem& ps) { return consistent(ps.paths(), ps.vertex_count()); }

inline Rational weight(const Graph& g, const Weights& w, const Path& p) {
    Rational s = 0;
    for (size_t i = 0; i + 1 < p.size(); ++i) s += w[g.edge_id(p[i], p[i + 1])];
    return s;
}

// Every chosen path is a (the unique, when strict) lightest simple path.
inline bool induces(const PathSystem& ps, const Weights& w, bool strict) {
    const Graph& g = ps.graph();
    for (const Rational& x : w)
        if (sgn(x) <= 0) return false;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
            Path p = chosen(ps.paths(), g.vertex_count(), u, v);
            Rational wp = weight(g, w, p);
            for (const Path& q : simple_paths(g, u, v)) {
                if (q == p) continue;
                Rational wq = weight(g, w, q);
                if (wq < wp || (strict && wq == wp)) return false;
            }
        }
    return true;
}

// Sum of lambda (chi_P - chi_Q) over the terms.
inline std::vector<Rational> coefficients(const Graph& g, const Certificate& c) {
    std::vector<Rational> out(g.edge_count(), 0);
    for (const auto& t : c.terms) {
        for (size_t i = 0; i + 1 < t.chosen.size(); ++i) out[g.edge_id(t.chosen[i], t.chosen[i + 1])] += t.multiplier;
        for (size_t i = 0; i + 1 < t.competitor.size(); ++i)
            out[g.edge_id(t.competitor[i], t.competitor[i + 1])] -= t.multiplier;
    }
    return out;
}

// A certificate is sound when its terms are system-vs-competitor pairs with
// positive multipliers and the combination proves infeasibility.
inline bool certificate_sound(const PathSystem& ps, const Certificate& c) {
    const Graph& g = ps.graph();
    if (c.terms.empty()) return false;
    Rational total = 0;
    for (const auto& t : c.terms) {
        if (sgn(t.multiplier) <= 0 || t.chosen.size() < 2) return false;
        if (chosen(ps.paths(), g.vertex_count(), t.chosen.front(), t.chosen.back()) != t.chosen) return false;
        if (t.competitor.front() != t.chosen.front() || t.competitor.back() != t.chosen.back()) return false;
        if (t.competitor == t.chosen) return false;
        std::set<Vertex> seen(t.competitor.begin(), t.competitor.end());
        if (seen.size() != t.competitor.size()) return false;
        for (size_t i = 0; i + 1 < t.competitor.size(); ++i)
            if (!g.has_edge(t.competitor[i], t.competitor[i + 1])) return false;
        total += t.multiplier;
    }
    auto coef = coefficients(g, c);
    bool positive = false;
    for (const Rational& x : coef) {
        if (sgn(x) < 0) return false;
        if (sgn(x) > 0) positive = true;
    }
    return positive || (c.strict && sgn(total) > 0);
}

// Choose one simple path per pair and keep the consistent combinations.
inline std::uint64_t count_systems(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<Path>> options;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) options.push_back(simple_paths(g, u, v));
    std::vector<Path> pick(options.size());
    std::uint64_t count = 0;
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == options.size()) {
            if (consistent(pick, n)) ++count;
            return;
        }
        for (const Path& p : options[i]) {
            pick[i] = p;
            rec(i + 1);
        }
    };
    if (n <= 1 || !options.empty()) rec(0);
    return count;
}

// Crossing functions on the cycle 0..n-1 with edge i = {i, i+1}: for x, y with
// f(x) != f(y), the chord from x to the midpoint of f(x) separates y from f(y).
inline bool separates(int n, int x, int fx, int y, int fy) {
    const int m = 2 * n;
    int a = 2 * x, b = 2 * fx + 1;
    auto inside = [&](int p) { return ((p - a + m) % m) < ((b - a + m) % m); };
    return inside(2 * y) != inside(2 * fy + 1);
}

inline std::vector<std::vector<int>> crossing_functions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> f(n);
    std::function<void(int)> rec = [&](int x) {
        if (x == n) {
            out.push_back(f);
            return;
        }
        for (int e = 0; e < n; ++e) {
            f[x] = e;
            bool ok = true;
            for (int y = 0; y < x && ok; ++y)
                if (f[y] != e) ok = separates(n, x, e, y, f[y]) && separates(n, y, f[y], x, e);
            if (ok) rec(x + 1);
        }
    };
    rec(0);
    return out;
}

inline bool connected_without(const Graph& g, const std::vector<char>& removed) {
    int n = g.vertex_count(), start = -1, alive = 0;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) {
            ++alive;
            if (start < 0) start = v;
        }
    if (alive <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (Vertex y : g.neighbors(x))
            if (!removed[y] && !seen[y]) {
                seen[y] = 1;
                ++reached;
                stack.push_back(y);
            }
    }
    return reached == alive;
}

// Smallest vertex set whose removal disconnects g (n-1 for complete graphs).
inline int connectivity(const Graph& g) {
    const int n = g.vertex_count();
    for (int k = 0; k < n - 1; ++k) {
        std::vector<char> removed(n, 0);
        std::fill(removed.end() - k, removed.end(), 1);
        do {
            if (!connected_without(g, removed)) return k;
        } while (std::next_permutation(removed.begin(), removed.end()));
    }
    return n - 1;
}

inline Graph random_connected_graph(std::mt19937_64& rng, int n, double p) {
    for (;;) {
        Graph g(n);
        std::bernoulli_distribution coin(p);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (coin(rng)) g.add_edge(a, b);
        std::vector<char> none(n, 0);
        if (connected_without(g, none)) return g;
    }
}

inline Weights random_weights(std::mt19937_64& rng, const Graph& g, int max_num = 20) {
    std::uniform_int_distribution<int> num(1, max_num), den(1, 4);
    Weights w;
    for (int e = 0; e < g.edge_count(); ++e) w.push_back(ratio(num(rng), den(rng)));
    return w;
}

}  // namespace oracle
