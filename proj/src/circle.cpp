#include "geomet/circle.hpp"

#include "geomet/error.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <numbers>
#include <sstream>

namespace geomet {

namespace {

constexpr double kSame = 1e-12;

double wrap(double x) {
    double r = x - std::floor(x);
    return r >= 1.0 ? 0.0 : r;
}

void require_match(const SampledCircleMap& t, const SampledDensity& mu) {
    if (t.resolution() != mu.resolution())
        fail(ErrorCode::ResolutionMismatch, "map has " + std::to_string(t.resolution()) + " samples, density has " +
                                                std::to_string(mu.resolution()));
    if (t.resolution() == 0) fail(ErrorCode::ResolutionTooLow, "empty sample array");
}

// Exact integral of the piecewise-linear periodic interpolant of the density.
class Cumulative {
public:
    explicit Cumulative(const std::vector<double>& f) : f_(f), n_(static_cast<int>(f.size())), prefix_(n_ + 1, 0.0) {
        for (int i = 0; i < n_; ++i) prefix_[i + 1] = prefix_[i] + (f_[i] + f_[(i + 1) % n_]) / (2.0 * n_);
    }
    double total() const { return prefix_[n_]; }
    double at(double x) const {
        double s = wrap(x) * n_;
        int j = std::min(static_cast<int>(s), n_ - 1);
        double tau = s - j;
        double a = f_[j], b = f_[(j + 1) % n_];
        return prefix_[j] + (a * tau + (b - a) * tau * tau / 2.0) / n_;
    }
    // Measure of the arc running forward from x to y.
    double arc(double x, double y) const {
        double d = at(y) - at(x);
        if (d < 0) d += total();
        return d;
    }

private:
    const std::vector<double>& f_;
    int n_;
    std::vector<double> prefix_;
};

std::vector<double> derivative(const SampledCircleMap& t) {
    const int n = t.resolution();
    std::vector<double> d(n);
    for (int k = 0; k < n; ++k) {
        double ahead = t.values[(k + 1) % n], behind = t.values[(k + n - 1) % n];
        d[k] = circle_diff(ahead, behind) * n / 2.0;
    }
    return d;
}

}  // namespace

SampledCircleMap make_circle_map(std::vector<double> values) {
    for (double& v : values) {
        if (v == 1.0) v = 0.0;
        if (!(v >= 0.0 && v < 1.0)) fail(ErrorCode::InvalidArgument, "map value " + std::to_string(v) + " is outside [0,1)");
    }
    return SampledCircleMap{std::move(values)};
}

SampledDensity make_density(std::vector<double> values, double tol) {
    for (double v : values)
        if (!(v >= 0.0)) fail(ErrorCode::InvalidArgument, "density value " + std::to_string(v) + " is negative");
    SampledDensity mu{std::move(values), tol};
    if (std::abs(mu.total() - 1.0) > tol)
        fail(ErrorCode::InvalidArgument, "density total " + std::to_string(mu.total()) + " is not 1");
    return mu;
}

double circle_diff(double a, double b) {
    double d = wrap(a - b);
    return d >= 0.5 ? d - 1.0 : d;
}

double circle_distance(double a, double b) { return std::abs(circle_diff(a, b)); }

double SampledCircleMap::operator()(double x) const {
    const int n = resolution();
    if (n == 0) fail(ErrorCode::ResolutionTooLow, "empty sample array");
    double s = wrap(x) * n;
    int j = std::min(static_cast<int>(s), n - 1);
    double tau = s - j;
    double a = values[j];
    return wrap(a + tau * circle_diff(values[(j + 1) % n], a));
}

double SampledDensity::total() const {
    double s = 0;
    for (double v : values) s += v;
    return values.empty() ? 0.0 : s / static_cast<double>(values.size());
}

CrossingCheck is_crossing(const SampledCircleMap& t) {
    const int n = t.resolution();
    if (n < 4) fail(ErrorCode::ResolutionTooLow, "crossing test needs at least 4 samples");
    CrossingCheck out;
    for (int i = 0; i < n; ++i) {
        const double x = static_cast<double>(i) / n;
        const double b = wrap(t.values[i] - x);
        if (b < kSame || b > 1.0 - kSame) continue;  // degenerate chord
        for (int j = i + 1; j < n; ++j) {
            const double y = static_cast<double>(j) / n;
            const double ty = t.values[j];
            if (circle_distance(ty, y) < kSame) continue;
            // Positions relative to x: the chord from x splits the circle at 0 and b.
            double p = wrap(y - x), q = wrap(ty - x);
            auto side = [&](double s) {
                if (s < kSame || s > 1.0 - kSame || std::abs(s - b) < kSame) return 0;  // shared endpoint
                return s < b ? 1 : 2;
            };
            int sp = side(p), sq = side(q);
            if (sp != 0 && sp == sq) {
                out.ok = false;
                out.witness = std::make_pair(i, j);
                return out;
            }
        }
    }
    return out;
}

bool check_involution(const SampledCircleMap& t, double tol) {
    const int n = t.resolution();
    if (n == 0) return true;
    for (int k = 0; k < n; ++k)
        if (circle_distance(t(t.values[k]), static_cast<double>(k) / n) > tol) return false;
    return true;
}

SampledDensity compatible_density_from_derivative(const SampledCircleMap& t, double involution_tol) {
    auto cross = is_crossing(t);
    if (!cross.ok)
        fail(ErrorCode::PreconditionViolated, "map is not crossing at samples " + std::to_string(cross.witness->first) +
                                                  ", " + std::to_string(cross.witness->second));
    if (!check_involution(t, involution_tol)) fail(ErrorCode::PreconditionViolated, "map is not an involution");
    auto d = derivative(t);
    SampledDensity mu;
    mu.values.resize(d.size());
    for (size_t k = 0; k < d.size(); ++k) {
        if (!(d[k] > 0))
            fail(ErrorCode::NonPositiveDerivative, "finite-difference derivative " + std::to_string(d[k]) + " at sample " +
                                                       std::to_string(k));
        mu.values[k] = std::sqrt(d[k]);
    }
    double total = mu.total();
    for (double& v : mu.values) v /= total;
    return mu;
}

std::vector<double> sampled_derivative(const SampledCircleMap& t) {
    if (t.resolution() < 3) fail(ErrorCode::ResolutionTooLow, "central differences need 3 samples");
    return derivative(t);
}

bool verify_compatibility(const SampledCircleMap& t, const SampledDensity& mu, double tol) {
    require_match(t, mu);
    Cumulative F(mu.values);
    const int n = t.resolution();
    const double total = F.total();
    for (int k = 0; k < n; ++k) {
        double x = static_cast<double>(k) / n;
        double a = F.arc(x, t.values[k]);
        if (std::abs(a - 0.5) > tol || std::abs(total - a - 0.5) > tol) return false;
    }
    return true;
}

bool verify_invariance(const SampledCircleMap& t, const SampledDensity& mu, double tol) {
    require_match(t, mu);
    Cumulative F(mu.values);
    const int n = t.resolution();
    if (std::abs(F.total() - 1.0) > tol) return false;
    // T is an involution, so the preimage of [x_i, x_j] is the arc [T x_i, T x_j].
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            double a = F.arc(static_cast<double>(i) / n, static_cast<double>(j) / n);
            double b = F.arc(t.values[i], t.values[j]);
            if (std::abs(a - b) > tol) return false;
        }
    return true;
}

SampledCircleMap shift_map(int n, double s) {
    SampledCircleMap t;
    for (int k = 0; k < n; ++k) t.values.push_back(wrap(static_cast<double>(k) / n + s));
    return t;
}

SampledCircleMap antipodal_map(int n) { return shift_map(n, 0.5); }

SampledCircleMap reflection_map(int n) {
    SampledCircleMap t;
    for (int k = 0; k < n; ++k) t.values.push_back(wrap(1.0 - static_cast<double>(k) / n));
    return t;
}

namespace {

// Disc automorphism z -> (z - a)/(1 - a z) acting on the angle x in [0,1).
double mobius(double x, double a) {
    const double th = 2 * std::numbers::pi * x;
    const double c = std::cos(th), s = std::sin(th);
    // (c + i s - a) * conj(1 - a c - i a s)
    const double re = (c - a) * (1 - a * c) - s * a * s;
    const double im = s * (1 - a * c) + (c - a) * a * s;
    return wrap(std::atan2(im, re) / (2 * std::numbers::pi));
}

}  // namespace

SampledCircleMap conjugated_antipodal(int n, double a) {
    if (!(std::abs(a) < 1)) fail(ErrorCode::InvalidArgument, "Mobius parameter must satisfy |a| < 1");
    SampledCircleMap t;
    for (int k = 0; k < n; ++k) t.values.push_back(mobius(wrap(mobius(static_cast<double>(k) / n, a) + 0.5), -a));
    return t;
}

SampledDensity mobius_density(int n, double a) {
    if (!(std::abs(a) < 1)) fail(ErrorCode::InvalidArgument, "Mobius parameter must satisfy |a| < 1");
    SampledDensity mu;
    for (int k = 0; k < n; ++k) {
        // |h'| on the unit circle is (1 - a^2)/|1 - a z|^2.
        double th = 2 * std::numbers::pi * k / n;
        double den = 1 - 2 * a * std::cos(th) + a * a;
        mu.values.push_back((1 - a * a) / den);
    }
    return mu;
}

SampledDensity uniform_density(int n) {
    SampledDensity mu;
    mu.values.assign(n, 1.0);
    return mu;
}

SampledCircleMap step_map_from_crossing(const Graph& cycle, const CrossingFunction& cf) {
    if (!is_cycle_graph(cycle)) fail(ErrorCode::NotACycle, "graph is not a cycle");
    const int n = cycle.vertex_count();
    if (cf.cycle_length != n || static_cast<int>(cf.f.size()) != n)
        fail(ErrorCode::InvalidArgument, "crossing function size does not match the cycle");
    auto order = cycle_order(cycle);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    SampledCircleMap t;
    t.values.resize(n);
    for (int i = 0; i < n; ++i) {
        EdgeId e = cf.f[order[i]];
        if (e < 0 || e >= cycle.edge_count()) fail(ErrorCode::InvalidArgument, "crossing value is not an edge");
        int a = pos[cycle.edge(e).u], b = pos[cycle.edge(e).v];
        // Consecutive positions; the wrapping edge sits between n-1 and 0.
        int lo = (std::abs(a - b) == 1) ? std::min(a, b) : n - 1;
        t.values[i] = (lo + 0.5) / n;
    }
    return t;
}

std::string format_circle(const std::vector<double>& values) {
    std::ostringstream out;
    out << "circle " << values.size() << '\n' << std::setprecision(17);
    for (double v : values) out << v << '\n';
    return out.str();
}

std::vector<double> read_circle(std::istream& in) {
    std::string tag;
    long long n = -1;
    if (!(in >> tag) || tag != "circle") fail(ErrorCode::ParseError, "expected 'circle N' header");
    if (!(in >> n) || n < 0) fail(ErrorCode::ParseError, "bad sample count");
    std::vector<double> values;
    values.reserve(static_cast<size_t>(n));
    for (long long k = 0; k < n; ++k) {
        double v;
        if (!(in >> v) || !std::isfinite(v)) fail(ErrorCode::ParseError, "expected " + std::to_string(n) + " values");
        values.push_back(v);
    }
    std::string extra;
    if (in >> extra) fail(ErrorCode::ParseError, "trailing data after samples");
    return values;
}

std::vector<double> parse_circle(const std::string& text) {
    std::istringstream in(text);
    return read_circle(in);
}

}  // namespace geomet
