#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "midpoint/exact_poly.hpp"
#include "midpoint/expected.hpp"
#include "midpoint/spectral.hpp"

// Mechanical checks of the centroid-colinearity phenomenon for iterated
// midpoint polygons.
namespace midpoint::verify {

using exact::PlanePoint;
using exact::Polygon;

struct ColinearityCheck {
    bool colinear = true;
    // First index that breaks colinearity.
    std::optional<std::size_t> witness;
};

// Exact cross-product test. The line is anchored at points[0] and directed
// towards the first point that differs from it. Sequences of length <= 2 and
// sequences of coincident points are colinear.
ColinearityCheck exact_colinear(std::span<const PlanePoint> points);

// Element n is centroid(M^n p), or nullopt when that iterate has zero area.
std::vector<std::optional<PlanePoint>> centroid_sequence(const Polygon& p, std::size_t steps);

struct ColinearityReport {
    std::vector<std::optional<PlanePoint>> centroids;  // G_0 .. G_N
    PlanePoint line_anchor;
    // Absent when every defined centroid G_n (n >= 1) coincides.
    std::optional<PlanePoint> line_direction;
    bool all_colinear = false;
    std::optional<std::size_t> first_violation;
    // Absent when G_0 is undefined.
    std::optional<bool> g0_on_line;
    PlanePoint limit_point;  // vertex centroid of the input
    bool limit_on_line = false;
    std::size_t undefined_count = 0;
};

// True when q lies on the line (anchor, direction); with no direction, when
// q equals the anchor.
bool on_line(const PlanePoint& anchor, const std::optional<PlanePoint>& direction, const PlanePoint& q);

// Checks that the defined centroids G_1..G_N all lie on one line, exactly.
// Errors: wrong_size (m != 6), invalid_argument (N < 3), insufficient_data
// (fewer than two defined centroids among G_1..G_N).
Expected<ColinearityReport> verify_hexagon_theorem(const Polygon& p, std::size_t steps);

// Projects out modes 0 and 3, then checks Z(Mv) == 3/8 Z(v) exactly.
// Errors: wrong_size.
Expected<bool> verify_z_scaling(const Polygon& p);

// m = 3: G_n == vertex centroid for all n in 0..N. m = 4: G_n constant for
// n in 1..N. Errors: wrong_size, area_zero (an iterate the check needs has
// zero area).
Expected<bool> verify_small_m_invariance(const Polygon& p, std::size_t steps);

// The m-gon i e^(1) - e^(2) + e^(3), for m = 5 or 7 <= m <= 64.
// Errors: unsupported_m.
Expected<spectral::ModeVector> counterexample_modes(std::size_t m);
Expected<spectral::FloatPolygon> build_counterexample(std::size_t m);

// 2 cos(2 pi / m) - 1.
double expected_slope_ratio(std::size_t m);

struct CounterexampleReport {
    std::size_t m = 0;
    std::vector<double> slopes;  // Im Z / Re Z of M^n v_*, n = 0..N
    std::vector<double> ratios;  // slopes[n+1] / slopes[n]
    double measured_ratio = 0.0;
    double expected_ratio = 0.0;
    bool ratio_matches = false;
    bool lines_pairwise_distinct = false;
    // Float centroids of the iterated polygon; a sanity overlay only.
    std::vector<std::optional<spectral::Complex>> centroids;
    bool centroids_on_slope_lines = false;
    bool passed = false;
};

// Errors: unsupported_m, invalid_argument (N < 3).
Expected<CounterexampleReport> verify_proposition(std::size_t m, std::size_t steps,
                                                  double tolerance = spectral::kCubicRelativeTolerance);

struct MonotonicityReport {
    std::vector<std::size_t> indices;  // n of each defined centroid, n >= 1
    std::vector<double> projections;   // (G_n - limit) . direction / |direction|
    std::optional<std::size_t> stable_from;
    std::size_t sign_changes = 0;
};

struct ConvergenceReport {
    MonotonicityReport monotonicity;
    // |G_{n+1} - limit| / |G_n - limit| for consecutive defined n >= 1.
    std::vector<std::size_t> ratio_indices;
    std::vector<double> distance_ratios;
    spectral::OrientationImbalance imbalance;  // of M p, translated to the origin
    // |primary| relative to sum_{j != 0} |xi_j|^2 of M p.
    double normalized_primary = 0.0;
};

// Errors: wrong_size, insufficient_data (fewer than three defined centroids
// off the limit point among G_1..G_N).
Expected<ConvergenceReport> convergence_diagnostics(const Polygon& p, std::size_t steps);

struct FuzzConfig {
    std::uint64_t seed = 42;
    std::size_t trials = 1000;
    std::int64_t coordinate_bound = 9;
    std::size_t steps = 12;
};

// Errors: invalid_argument with the reason.
Expected<FuzzConfig> validate(const FuzzConfig& cfg);

struct FuzzFailure {
    std::size_t trial = 0;
    Polygon hexagon;
    std::string reason;

    friend bool operator==(const FuzzFailure&, const FuzzFailure&) = default;
};

struct FuzzSummary {
    std::size_t trials = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t insufficient_data = 0;
    std::size_t colinear_passed = 0;
    std::size_t limit_on_line_passed = 0;
    std::size_t z_scaling_passed = 0;
    std::size_t undefined_centroids = 0;
    std::size_t g0_on_line = 0;
    std::size_t g0_off_line = 0;
    std::optional<FuzzFailure> first_failure;
    // First trial whose G_0 is defined but off the centroid line.
    std::optional<std::size_t> first_g0_off_line_trial;

    friend bool operator==(const FuzzSummary&, const FuzzSummary&) = default;
};

// Deterministic hexagon for (seed, trial); integer coordinates uniform on
// [-bound, bound].
Polygon random_hexagon(std::uint64_t seed, std::size_t trial, std::int64_t bound);

// Runs the theorem and Z-scaling checks over the given hexagons.
FuzzSummary summarize_trials(std::span<const Polygon> hexagons, std::size_t steps);

// Draws cfg.trials hexagons with random_hexagon and summarizes them.
// Throws BadExpectedAccess when validate(cfg) fails.
FuzzSummary fuzz_hexagons(const FuzzConfig& cfg);

}  // namespace midpoint::verify
