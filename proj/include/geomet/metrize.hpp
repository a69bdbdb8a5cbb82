#pragma once

#include "geomet/path_system.hpp"
#include "geomet/rational.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace geomet {

// Weight per edge id.
using Weights = std::vector<Rational>;

struct CertificateTerm {
    Path chosen;      // the system path
    Path competitor;  // another path with the same endpoints, same orientation
    Rational multiplier;
};

// sum_i lambda_i (w(P_i) - w(Q_i)) <= 0 is implied by the inequalities; the
// left side is c . w with c >= 0, which forces every edge in supp(c) to 0
// (or yields 0 < 0 in the strict case).
struct Certificate {
    bool strict = false;
    std::vector<CertificateTerm> terms;
};

struct Verdict {
    std::optional<Weights> weights;
    std::optional<Certificate> certificate;
    Rational slack;  // optimal t of the last LP
    int cuts = 0;    // constraints in the final working set
    int rounds = 0;
    bool metrizable() const { return weights.has_value(); }
};

// Shortest path between s and t avoiding banned vertices and one banned edge
// (-1 for none); weights must be nonnegative.
struct RoutedPath {
    Rational length;
    Path path;
};
std::optional<RoutedPath> shortest_path(const Graph& g, const Weights& w, Vertex s, Vertex t,
                                        const std::vector<char>& banned_vertex = {}, EdgeId banned_edge = -1);
// Cheapest s-t path different from `path` (which runs from s to t).
std::optional<RoutedPath> best_competitor(const Graph& g, const Weights& w, const Path& path);

bool verify_weights(const PathSystem& ps, const Weights& w, bool strict);

struct OracleResult {
    bool ok = true;
    Path chosen;
    Path competitor;
    Rational violation;  // amount by which the inequality fails
};
// Checks w(P) <= w(Q) (strict: w(P) - w(Q) <= -1) for all pairs and returns a
// most violated inequality.
OracleResult separation_oracle(const PathSystem& ps, const Weights& w, bool strict);

Verdict decide_metrizable(const PathSystem& ps, bool strict);

std::vector<Rational> certificate_coefficients(const PathSystem& ps, const Certificate& cert);
bool verify_certificate(const PathSystem& ps, const Certificate& cert);
// Edges whose coefficient is positive.
std::vector<EdgeId> forced_edges(const PathSystem& ps, const Certificate& cert);

// Minimum of w(Q) - w(P) over all pairs and competitors; nullopt when no pair
// has a competitor.
std::optional<Rational> strict_margin(const PathSystem& ps, const Weights& w);
Rational perturbation_radius(const PathSystem& ps, const Weights& w);

// Constructive metrizers.
Weights metrize_cycle(const PathSystem& ps);
Weights lift_quotient_weights(const PathSystem& ps, EdgeId e, const Weights& w_quotient);

struct SuspendedSetup {
    Path q;              // suspended path x .. y (x = q.front(), y = q.back())
    EdgeId xy = -1;      // the edge closing C = Q + xy
    Subgraph h;          // H = G - internal(Q)
    Subgraph c;          // C = Q + xy
};
SuspendedSetup suspended_setup(const Graph& g, const Path& q);

struct DerivedSystem {
    Graph graph;                    // G'
    PathSystem system;              // P'
    std::vector<Vertex> to_host;    // G' vertex -> G vertex
    std::vector<EdgeId> host_edge;  // G' edge -> G edge, -1 for the two new edges
    EdgeId new_y_alpha = -1;        // G' ids of the edges y-alpha and beta-x
    EdgeId new_beta_x = -1;
};
DerivedSystem build_derived_system(const PathSystem& ps, const Path& q);

// w_h on H, w_c on C (local edge ids of the subgraphs), w_prime on G'.
Weights lift_suspended_path(const PathSystem& ps, const Path& q, const Weights& w_h, const Weights& w_c,
                            const Weights& w_prime);

Weights metrize_outerplanar(const PathSystem& ps, bool strict = true);

// Text formats.
std::string format_certificate(const Certificate& cert);
Certificate parse_certificate(const std::string& text);
Certificate read_certificate(std::istream& in);
std::string format_weights(const Graph& g, const Weights& w);
Weights parse_weights(const std::string& text, const Graph& g);
Weights read_weights(std::istream& in, const Graph& g);

}  // namespace geomet
