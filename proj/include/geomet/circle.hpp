#pragma once

#include "geomet/path_system.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace geomet {

// T(k/N) for k = 0..N-1, values in [0, 1).
struct SampledCircleMap {
    std::vector<double> values;
    int resolution() const { return static_cast<int>(values.size()); }
    // Linear interpolation along the shorter way between neighboring samples.
    double operator()(double x) const;
};

// f(k/N); Riemann/trapezoid total sum(f)/N should be 1 within `tolerance`.
struct SampledDensity {
    std::vector<double> values;
    double tolerance = 1e-9;
    int resolution() const { return static_cast<int>(values.size()); }
    double total() const;
};

// Validating constructors: values in [0,1) (after reducing 1.0 to 0), and a
// nonnegative density whose total is 1 within tol.
SampledCircleMap make_circle_map(std::vector<double> values);
SampledDensity make_density(std::vector<double> values, double tol = 1e-6);

// Signed representative of a - b in [-1/2, 1/2).
double circle_diff(double a, double b);
double circle_distance(double a, double b);

struct CrossingCheck {
    bool ok = true;
    std::optional<std::pair<int, int>> witness;  // sample indices whose chords miss
};
CrossingCheck is_crossing(const SampledCircleMap& t);
bool check_involution(const SampledCircleMap& t, double tol);

// Density proportional to sqrt(T'), central differences.
SampledDensity compatible_density_from_derivative(const SampledCircleMap& t, double involution_tol = 1e-3);
// Central-difference T' at the samples.
std::vector<double> sampled_derivative(const SampledCircleMap& t);
bool verify_compatibility(const SampledCircleMap& t, const SampledDensity& mu, double tol);
bool verify_invariance(const SampledCircleMap& t, const SampledDensity& mu, double tol);

// Sample maps.
SampledCircleMap antipodal_map(int n);
SampledCircleMap shift_map(int n, double s);
SampledCircleMap reflection_map(int n);  // x -> 1 - x
// h^-1 o (x + 1/2) o h with h the disc automorphism z -> (z - a)/(1 - a z), |a| < 1.
SampledCircleMap conjugated_antipodal(int n, double a);
// Density of h' for the same h, the pullback of the uniform measure.
SampledDensity mobius_density(int n, double a);
SampledDensity uniform_density(int n);

// Vertex i of the cycle at position i/n, f(i) sent to the midpoint of its edge.
SampledCircleMap step_map_from_crossing(const Graph& cycle, const CrossingFunction& cf);

// "circle N" then N decimal values.
std::string format_circle(const std::vector<double>& values);
std::vector<double> read_circle(std::istream& in);
std::vector<double> parse_circle(const std::string& text);

}  // namespace geomet
