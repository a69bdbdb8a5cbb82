#include "geomet/metrize.hpp"

#include "geomet/error.hpp"
#include "geomet/simplex.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace geomet {

std::optional<RoutedPath> shortest_path(const Graph& g, const Weights& w, Vertex s, Vertex t,
                                        const std::vector<char>& banned_vertex, EdgeId banned_edge) {
    const int n = g.vertex_count();
    auto banned = [&](Vertex v) { return !banned_vertex.empty() && banned_vertex[v]; };
    if (banned(s) || banned(t)) return std::nullopt;
    std::vector<Rational> dist(n);
    std::vector<char> reached(n, 0), done(n, 0);
    std::vector<Vertex> prev(n, -1);
    reached[s] = 1;
    while (true) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v)
            if (reached[v] && !done[v] && (best < 0 || dist[v] < dist[best])) best = v;
        if (best < 0 || best == t) break;
        done[best] = 1;
        for (Vertex x : g.neighbors(best)) {
            if (done[x] || banned(x)) continue;
            EdgeId e = g.edge_id(best, x);
            if (e == banned_edge) continue;
            Rational cand = dist[best] + w[e];
            if (!reached[x] || cand < dist[x]) {
                dist[x] = cand;
                prev[x] = best;
                reached[x] = 1;
            }
        }
    }
    if (!reached[t]) return std::nullopt;
    RoutedPath r{dist[t], {t}};
    while (r.path.back() != s) r.path.push_back(prev[r.path.back()]);
    std::reverse(r.path.begin(), r.path.end());
    return r;
}

std::optional<RoutedPath> best_competitor(const Graph& g, const Weights& w, const Path& path) {
    // Every other path leaves `path` for the first time at some vertex p_i.
    std::optional<RoutedPath> best;
    std::vector<char> banned(g.vertex_count(), 0);
    Rational root = 0;
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        EdgeId skip = g.edge_id(path[i], path[i + 1]);
        auto spur = shortest_path(g, w, path[i], path.back(), banned, skip);
        if (spur) {
            Rational total = root + spur->length;
            if (!best || total < best->length) {
                Path full(path.begin(), path.begin() + i);
                full.insert(full.end(), spur->path.begin(), spur->path.end());
                best = RoutedPath{total, std::move(full)};
            }
        }
        banned[path[i]] = 1;
        root += w[skip];
    }
    return best;
}

namespace {

bool positive_weights(const Graph& g, const Weights& w) {
    if (static_cast<int>(w.size()) != g.edge_count()) return false;
    for (const Rational& x : w)
        if (sgn(x) <= 0) return false;
    return true;
}

}  // namespace

bool verify_weights(const PathSystem& ps, const Weights& w, bool strict) {
    const Graph& g = ps.graph();
    if (!positive_weights(g, w)) return false;
    const int n = g.vertex_count();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            const Path& p = ps.path(u, v);
            Rational wp = path_weight(g, w, p);
            auto sp = shortest_path(g, w, u, v);
            if (!sp || sp->length != wp) return false;
            if (strict) {
                auto comp = best_competitor(g, w, p);
                if (comp && comp->length <= wp) return false;
            }
        }
    return true;
}

OracleResult separation_oracle(const PathSystem& ps, const Weights& w, bool strict) {
    const Graph& g = ps.graph();
    if (static_cast<int>(w.size()) != g.edge_count()) fail(ErrorCode::InvalidArgument, "one weight per edge required");
    for (const Rational& x : w)
        if (sgn(x) < 0) fail(ErrorCode::InvalidArgument, "weights must be nonnegative");
    OracleResult out;
    const int n = g.vertex_count();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            const Path& p = ps.path(u, v);
            Rational wp = path_weight(g, w, p);
            std::optional<RoutedPath> q = strict ? best_competitor(g, w, p) : shortest_path(g, w, u, v);
            if (!q) continue;
            Rational viol = wp - q->length + (strict ? 1 : 0);
            if (sgn(viol) > 0 && (out.ok || viol > out.violation)) {
                out.ok = false;
                out.chosen = p;
                out.competitor = q->path;
                out.violation = viol;
            }
        }
    return out;
}

namespace {

struct Cut {
    Path chosen, competitor;
    std::vector<int> coeff;  // chi_P - chi_Q
};

Cut make_cut(const Graph& g, Path p, Path q) {
    Cut c{std::move(p), std::move(q), std::vector<int>(g.edge_count(), 0)};
    for (EdgeId e : path_edges(g, c.chosen)) ++c.coeff[e];
    for (EdgeId e : path_edges(g, c.competitor)) --c.coeff[e];
    return c;
}

Certificate extract_certificate(const std::vector<Cut>& cuts, const std::vector<Rational>& lambda, bool strict) {
    mpz_class lcm = 1, gcd = 0;
    for (const Rational& l : lambda)
        if (sgn(l) > 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), l.get_den_mpz_t());
    std::vector<Rational> scaled(lambda.size());
    for (size_t i = 0; i < lambda.size(); ++i) {
        if (sgn(lambda[i]) <= 0) continue;
        scaled[i] = lambda[i] * Rational(lcm);
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), scaled[i].get_num_mpz_t());
    }
    Certificate cert{strict, {}};
    for (size_t i = 0; i < lambda.size(); ++i)
        if (sgn(lambda[i]) > 0) cert.terms.push_back({cuts[i].chosen, cuts[i].competitor, scaled[i] / Rational(gcd)});
    return cert;
}

}  // namespace

Verdict decide_metrizable(const PathSystem& ps, bool strict) {
    if (!is_consistent(ps)) fail(ErrorCode::InconsistentInput, "system is not consistent");
    const Graph& g = ps.graph();
    const int m = g.edge_count(), n = g.vertex_count();
    // Dual of: max t s.t. a_i.x + t <= 0, x >= 1, t <= 1. Its variables are the
    // cut multipliers; rows are one per edge plus sum(lambda) <= 1.
    std::vector<Rational> rhs(m + 1, Rational(0));
    rhs[m] = 1;
    ColumnSimplex lp(rhs);
    std::vector<Cut> cuts;
    Verdict verdict;
    while (true) {
        ++verdict.rounds;
        lp.solve();
        Rational t = 1 - lp.objective();
        auto y = lp.duals();
        verdict.slack = t;
        verdict.cuts = static_cast<int>(cuts.size());
        if (strict ? sgn(t) <= 0 : sgn(t) < 0) {
            verdict.certificate = extract_certificate(cuts, lp.primal(), strict);
            break;
        }
        Weights x(m);
        for (EdgeId e = 0; e < m; ++e) x[e] = 1 + y[e];
        std::vector<Cut> fresh;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) {
                const Path& p = ps.path(u, v);
                Rational wp = path_weight(g, x, p);
                if (strict) {
                    auto q = best_competitor(g, x, p);
                    if (q && q->length <= wp) fresh.push_back(make_cut(g, p, q->path));
                } else {
                    auto q = shortest_path(g, x, u, v);
                    if (q->length < wp) fresh.push_back(make_cut(g, p, q->path));
                }
            }
        if (fresh.empty()) {
            verdict.weights = std::move(x);
            break;
        }
        for (Cut& c : fresh) {
            std::vector<Rational> col(m + 1);
            int gsum = 1;
            for (EdgeId e = 0; e < m; ++e) {
                col[e] = -c.coeff[e];
                gsum += c.coeff[e];
            }
            col[m] = 1;
            lp.add_column(col, Rational(gsum));
            cuts.push_back(std::move(c));
        }
    }
    // Soundness self-check; cheap next to the LP itself.
    if (verdict.weights && !verify_weights(ps, *verdict.weights, strict))
        throw std::logic_error("decide_metrizable produced weights that do not induce the system");
    if (verdict.certificate && !verify_certificate(ps, *verdict.certificate))
        throw std::logic_error("decide_metrizable produced an invalid certificate");
    return verdict;
}

std::vector<Rational> certificate_coefficients(const PathSystem& ps, const Certificate& cert) {
    const Graph& g = ps.graph();
    std::vector<Rational> c(g.edge_count(), Rational(0));
    for (const auto& term : cert.terms) {
        for (EdgeId e : path_edges(g, term.chosen)) c[e] += term.multiplier;
        for (EdgeId e : path_edges(g, term.competitor)) c[e] -= term.multiplier;
    }
    return c;
}

bool verify_certificate(const PathSystem& ps, const Certificate& cert) {
    const Graph& g = ps.graph();
    if (cert.terms.empty()) return false;
    Rational total = 0;
    for (const auto& term : cert.terms) {
        const Path& p = term.chosen;
        const Path& q = term.competitor;
        if (sgn(term.multiplier) <= 0) return false;
        if (!is_simple_path(g, p) || !is_simple_path(g, q) || p.size() < 2) return false;
        if (p.front() != q.front() || p.back() != q.back() || p == q) return false;
        if (ps.oriented(p.front(), p.back()) != p) return false;
        total += term.multiplier;
    }
    auto c = certificate_coefficients(ps, cert);
    bool nonzero = false;
    for (const Rational& x : c) {
        if (sgn(x) < 0) return false;
        if (sgn(x) > 0) nonzero = true;
    }
    return nonzero || (cert.strict && sgn(total) > 0);
}

std::vector<EdgeId> forced_edges(const PathSystem& ps, const Certificate& cert) {
    auto c = certificate_coefficients(ps, cert);
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < static_cast<EdgeId>(c.size()); ++e)
        if (sgn(c[e]) > 0) out.push_back(e);
    return out;
}

std::optional<Rational> strict_margin(const PathSystem& ps, const Weights& w) {
    const Graph& g = ps.graph();
    std::optional<Rational> margin;
    for (const Path& p : ps.paths()) {
        auto comp = best_competitor(g, w, p);
        if (!comp) continue;
        Rational gap = comp->length - path_weight(g, w, p);
        if (!margin || gap < *margin) margin = gap;
    }
    return margin;
}

Rational perturbation_radius(const PathSystem& ps, const Weights& w) {
    if (!verify_weights(ps, w, true)) fail(ErrorCode::NotStrictlyInducing, "weights do not strictly induce the system");
    auto margin = strict_margin(ps, w);
    if (!margin) return Rational(1);
    Rational eps = *margin / (2 * ps.vertex_count());
    return eps < 1 ? eps : Rational(1);
}

// ---------------------------------------------------------------------------
// Text formats

namespace {

std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

bool content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        return true;
    }
    return false;
}

Path parse_labeled_path(const std::string& part, char label) {
    std::string s = trim(part);
    if (s.empty() || s[0] != label) fail(ErrorCode::ParseError, std::string("expected '") + label + ":' in '" + part + "'");
    s = trim(s.substr(1));
    if (s.empty() || s[0] != ':') fail(ErrorCode::ParseError, std::string("expected '") + label + ":' in '" + part + "'");
    std::istringstream in(s.substr(1));
    Path p;
    long v;
    while (in >> v) p.push_back(static_cast<Vertex>(v));
    if (!in.eof() || p.size() < 2) fail(ErrorCode::ParseError, "bad path in '" + part + "'");
    return p;
}

std::string path_text(const Path& p) {
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + std::to_string(p[i]);
    return s;
}

}  // namespace

std::string format_certificate(const Certificate& cert) {
    std::ostringstream out;
    out << "certificate strict=" << (cert.strict ? 1 : 0) << '\n';
    for (const auto& t : cert.terms)
        out << "lambda " << to_text(t.multiplier) << " | P: " << path_text(t.chosen) << " | Q: " << path_text(t.competitor)
            << '\n';
    return out.str();
}

Certificate read_certificate(std::istream& in) {
    std::string line;
    if (!content_line(in, line)) fail(ErrorCode::ParseError, "empty certificate input");
    std::istringstream head(line);
    std::string tag, flag, extra;
    if (!(head >> tag) || tag != "certificate") fail(ErrorCode::ParseError, "bad header '" + line + "'");
    std::getline(head, flag);
    flag.erase(std::remove_if(flag.begin(), flag.end(), [](char c) { return c == ' ' || c == '\t'; }), flag.end());
    Certificate cert;
    if (flag == "strict=0") cert.strict = false;
    else if (flag == "strict=1") cert.strict = true;
    else fail(ErrorCode::ParseError, "bad header '" + line + "'");
    while (content_line(in, line)) {
        auto bar1 = line.find('|');
        auto bar2 = bar1 == std::string::npos ? bar1 : line.find('|', bar1 + 1);
        if (bar2 == std::string::npos || line.find('|', bar2 + 1) != std::string::npos)
            fail(ErrorCode::ParseError, "expected three '|'-separated fields in '" + line + "'");
        std::istringstream lam(line.substr(0, bar1));
        std::string word, value;
        if (!(lam >> word >> value) || word != "lambda" || (lam >> extra))
            fail(ErrorCode::ParseError, "bad multiplier in '" + line + "'");
        cert.terms.push_back({parse_labeled_path(line.substr(bar1 + 1, bar2 - bar1 - 1), 'P'),
                              parse_labeled_path(line.substr(bar2 + 1), 'Q'), parse_rational(value)});
    }
    return cert;
}

Certificate parse_certificate(const std::string& text) {
    std::istringstream in(text);
    return read_certificate(in);
}

std::string format_weights(const Graph& g, const Weights& w) {
    std::ostringstream out;
    for (EdgeId e = 0; e < g.edge_count(); ++e) out << g.edge(e).u << ' ' << g.edge(e).v << ' ' << to_text(w.at(e)) << '\n';
    return out.str();
}

Weights read_weights(std::istream& in, const Graph& g) {
    Weights w(g.edge_count());
    std::vector<char> seen(g.edge_count(), 0);
    std::string line, extra;
    while (content_line(in, line)) {
        std::istringstream ls(line);
        long u, v;
        std::string value;
        if (!(ls >> u >> v >> value) || (ls >> extra)) fail(ErrorCode::ParseError, "bad weight line '" + line + "'");
        EdgeId e = g.edge_id(static_cast<Vertex>(u), static_cast<Vertex>(v));
        if (e < 0) fail(ErrorCode::ParseError, "not an edge: '" + line + "'");
        if (seen[e]) fail(ErrorCode::ParseError, "duplicate edge: '" + line + "'");
        seen[e] = 1;
        w[e] = parse_rational(value);
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (!seen[e]) fail(ErrorCode::ParseError, "missing weight for edge " + std::to_string(g.edge(e).u) + " " +
                                                     std::to_string(g.edge(e).v));
    return w;
}

Weights parse_weights(const std::string& text, const Graph& g) {
    std::istringstream in(text);
    return read_weights(in, g);
}

}  // namespace geomet
