#include "geomet/circle.hpp"
#include "geomet/enumerate.hpp"
#include "geomet/error.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace geomet;

namespace {

// Independent chord test: map points to the unit circle and intersect segments.
bool chords_meet(double x1, double y1, double x2, double y2) {
    auto pt = [](double t) { return std::pair{std::cos(2 * std::numbers::pi * t), std::sin(2 * std::numbers::pi * t)}; };
    auto [ax, ay] = pt(x1);
    auto [bx, by] = pt(y1);
    auto [cx, cy] = pt(x2);
    auto [dx, dy] = pt(y2);
    auto cross = [](double ux, double uy, double vx, double vy) { return ux * vy - uy * vx; };
    double d1 = cross(bx - ax, by - ay, cx - ax, cy - ay);
    double d2 = cross(bx - ax, by - ay, dx - ax, dy - ay);
    double d3 = cross(dx - cx, dy - cy, ax - cx, ay - cy);
    double d4 = cross(dx - cx, dy - cy, bx - cx, by - cy);
    const double eps = 1e-12;
    return d1 * d2 <= eps && d3 * d4 <= eps;
}

bool brute_crossing(const SampledCircleMap& t) {
    const int n = t.resolution();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double xi = double(i) / n, xj = double(j) / n;
            if (std::abs(circle_diff(t.values[i], xi)) < 1e-12 || std::abs(circle_diff(t.values[j], xj)) < 1e-12) continue;
            if (!chords_meet(xi, t.values[i], xj, t.values[j])) return false;
        }
    return true;
}

}  // namespace

TEST_SUITE("circle_maps") {

TEST_CASE("crossing test") {
    CHECK(is_crossing(antipodal_map(64)).ok);
    CHECK(is_crossing(shift_map(64, 0)).ok);
    auto q = is_crossing(shift_map(64, 0.25));
    CHECK_FALSE(q.ok);
    REQUIRE(q.witness.has_value());
    auto [i, j] = *q.witness;
    auto t = shift_map(64, 0.25);
    CHECK_FALSE(chords_meet(i / 64.0, t.values[i], j / 64.0, t.values[j]));
    CHECK_FALSE(brute_crossing(t));
    CHECK_FALSE(is_crossing(reflection_map(64)).ok);
    CHECK(is_crossing(conjugated_antipodal(128, 0.4)).ok);
    CHECK(brute_crossing(conjugated_antipodal(128, 0.4)));
    CHECK_THROWS_AS(is_crossing(antipodal_map(3)), Error);
}

TEST_CASE("involutions") {
    CHECK(check_involution(antipodal_map(256), 1e-9));
    CHECK(check_involution(reflection_map(256), 1e-9));
    CHECK_FALSE(check_involution(shift_map(256, 0.3), 1e-3));
    CHECK(check_involution(conjugated_antipodal(1024, 0.3), 1e-4));
}

TEST_CASE("derivative density") {
    SampledDensity u = compatible_density_from_derivative(antipodal_map(128));
    for (double v : u.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));

    const int n = 1024;
    auto t = conjugated_antipodal(n, 0.3);
    SampledDensity d = compatible_density_from_derivative(t);
    CHECK(d.total() == doctest::Approx(1.0));
    CHECK(verify_compatibility(t, d, 1e-3));
    CHECK(verify_invariance(t, d, 1e-3));

    // Chain rule T'(x) T'(T(x)) = 1 for an involution.
    auto der = sampled_derivative(t);
    double worst = 0;
    for (int k = 0; k < n; ++k) {
        double s = t.values[k] * n;
        int j = static_cast<int>(s) % n;
        double tau = s - std::floor(s);
        double at_image = der[j] * (1 - tau) + der[(j + 1) % n] * tau;
        worst = std::max(worst, std::abs(der[k] * at_image - 1));
    }
    CHECK(worst <= 10.0 / n);

    // A shift by 0.3 is not an involution; a map with a backward jump has T' <= 0.
    CHECK_THROWS_AS(compatible_density_from_derivative(shift_map(64, 0.3)), Error);
    SampledCircleMap kink = antipodal_map(64);
    std::swap(kink.values[10], kink.values[11]);
    CHECK_THROWS(compatible_density_from_derivative(kink));
}

TEST_CASE("compatibility and invariance") {
    const int n = 1024;
    auto a = antipodal_map(n);
    auto u = uniform_density(n);
    CHECK(verify_compatibility(a, u, 1e-6));
    CHECK(verify_invariance(a, u, 1e-6));

    SampledDensity half = uniform_density(n);
    for (int k = 0; k < n; ++k) half.values[k] = k < n / 2 ? 2.0 : 0.0;
    CHECK_FALSE(verify_compatibility(a, half, 1e-2));
    CHECK_FALSE(verify_invariance(a, half, 1e-2));

    for (double p : {0.1, 0.3, 0.6}) {
        auto t = conjugated_antipodal(n, p);
        for (const SampledDensity& mu : {compatible_density_from_derivative(t), mobius_density(n, p)}) {
            CHECK(verify_compatibility(t, mu, 1e-2) == verify_invariance(t, mu, 1e-2));
            CHECK(verify_compatibility(t, mu, 1e-2));
            SampledDensity bumped = mu;
            for (int k = 0; k < n; ++k) bumped.values[k] *= 1 + 0.3 * std::sin(2 * std::numbers::pi * k / n);
            CHECK_FALSE(verify_compatibility(t, bumped, 1e-2));
            CHECK_FALSE(verify_invariance(t, bumped, 1e-2));
        }
    }
    CHECK_THROWS_AS(verify_compatibility(a, uniform_density(512), 1e-2), Error);
    CHECK_THROWS_AS(verify_invariance(a, uniform_density(512), 1e-2), Error);
}

TEST_CASE("cycle crossing functions embed as step maps") {
    for (int n = 4; n <= 8; ++n) {
        Graph c = cycle_graph(n);
        for (const PathSystem& ps : all_consistent_systems(c)) {
            SampledCircleMap t = step_map_from_crossing(c, crossing_function_of(ps));
            CHECK(t.resolution() == n);
            CHECK(is_crossing(t).ok);
            CHECK(brute_crossing(t));
        }
    }
}

TEST_CASE("circle file format") {
    auto t = conjugated_antipodal(16, 0.2);
    auto back = parse_circle(format_circle(t.values));
    REQUIRE(back.size() == 16);
    for (int k = 0; k < 16; ++k) CHECK(back[k] == t.values[k]);
    CHECK_THROWS_AS(parse_circle("circle 2\n0.1\n"), Error);
    CHECK_THROWS_AS(parse_circle("circle 1\n0.1\n0.2\n"), Error);
    CHECK_THROWS_AS(parse_circle("line 1\n0.1\n"), Error);
    CHECK_THROWS_AS(make_circle_map({0.5, 1.5}), Error);
    CHECK_THROWS_AS(make_density({1.0, -1.0, 3.0}), Error);
    CHECK_THROWS_AS(make_density({1.0, 2.0}), Error);
    CHECK(make_density({0.5, 1.5}).total() == doctest::Approx(1.0));
}

}  // TEST_SUITE
