#include "midpoint/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace midpoint::verify {

namespace {

constexpr std::size_t kMaxSpectralSize = 64;

Error wrong_size(std::size_t expected, std::size_t got) {
    return make_error(Errc::wrong_size,
                      "expected " + std::to_string(expected) + " vertices, got " + std::to_string(got));
}

// Analysis shared by verify_hexagon_theorem and the fuzz harness.
Expected<ColinearityReport> analyze_centroids(std::vector<std::optional<PlanePoint>> centroids,
                                              PlanePoint limit) {
    ColinearityReport report;
    report.limit_point = std::move(limit);
    report.undefined_count = static_cast<std::size_t>(
        std::count_if(centroids.begin(), centroids.end(), [](const auto& g) { return !g.has_value(); }));

    std::vector<PlanePoint> defined;
    std::vector<std::size_t> defined_index;
    for (std::size_t n = 1; n < centroids.size(); ++n) {
        if (!centroids[n]) continue;
        defined.push_back(*centroids[n]);
        defined_index.push_back(n);
    }
    if (defined.size() < 2) {
        report.centroids = std::move(centroids);
        return make_error(Errc::insufficient_data,
                          "only " + std::to_string(defined.size()) + " defined centroid(s) among G_1..G_N");
    }

    report.line_anchor = defined.front();
    for (const auto& g : defined) {
        if (g != report.line_anchor) {
            report.line_direction = g - report.line_anchor;
            break;
        }
    }

    const ColinearityCheck check = exact_colinear(defined);
    report.all_colinear = check.colinear;
    if (check.witness) report.first_violation = defined_index[*check.witness];

    if (centroids[0]) report.g0_on_line = on_line(report.line_anchor, report.line_direction, *centroids[0]);
    report.limit_on_line = on_line(report.line_anchor, report.line_direction, report.limit_point);
    report.centroids = std::move(centroids);
    return report;
}

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Uniform on [lo, hi] by rejection; std::uniform_int_distribution is not
// reproducible across standard library implementations.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
}

}  // namespace

bool on_line(const PlanePoint& anchor, const std::optional<PlanePoint>& direction, const PlanePoint& q) {
    if (!direction) return q == anchor;
    return cross(*direction, q - anchor).is_zero();
}

ColinearityCheck exact_colinear(std::span<const PlanePoint> points) {
    ColinearityCheck out;
    if (points.size() <= 2) return out;
    const PlanePoint& anchor = points.front();
    std::size_t b = 1;
    while (b < points.size() && points[b] == anchor) ++b;
    if (b == points.size()) return out;
    const PlanePoint direction = points[b] - anchor;
    for (std::size_t i = b + 1; i < points.size(); ++i) {
        if (!cross(direction, points[i] - anchor).is_zero()) {
            out.colinear = false;
            out.witness = i;
            return out;
        }
    }
    return out;
}

std::vector<std::optional<PlanePoint>> centroid_sequence(const Polygon& p, std::size_t steps) {
    std::vector<std::optional<PlanePoint>> out;
    out.reserve(steps + 1);
    Polygon current = p;
    for (std::size_t n = 0; n <= steps; ++n) {
        if (n > 0) current = exact::midpoint_map(current);
        auto g = exact::centroid(current);
        out.push_back(g ? std::optional<PlanePoint>(*std::move(g)) : std::nullopt);
    }
    return out;
}

Expected<ColinearityReport> verify_hexagon_theorem(const Polygon& p, std::size_t steps) {
    if (p.size() != 6) return wrong_size(6, p.size());
    if (steps < 3) return make_error(Errc::invalid_argument, "need at least 3 steps");
    return analyze_centroids(centroid_sequence(p, steps), exact::vertex_centroid(p));
}

Expected<bool> verify_z_scaling(const Polygon& p) {
    auto projected = exact::project_out_modes_0_3(p);
    if (!projected) return projected.error();
    const PlanePoint z = exact::z_moment(*projected);
    const PlanePoint z_next = exact::z_moment(exact::midpoint_map(*projected));
    return z_next == z * Rational(3, 8);
}

Expected<bool> verify_small_m_invariance(const Polygon& p, std::size_t steps) {
    if (p.size() != 3 && p.size() != 4) {
        return make_error(Errc::wrong_size, "small-m invariance applies to triangles and quadrilaterals");
    }
    const auto centroids = centroid_sequence(p, steps);
    const std::size_t first = p.size() == 3 ? 0 : 1;
    for (std::size_t n = first; n <= steps; ++n) {
        if (!centroids[n]) return make_error(Errc::area_zero, "iterate " + std::to_string(n) + " has zero area");
    }
    const PlanePoint reference = p.size() == 3 ? exact::vertex_centroid(p) : *centroids[first];
    for (std::size_t n = first; n <= steps; ++n) {
        if (*centroids[n] != reference) return false;
    }
    return true;
}

Expected<spectral::ModeVector> counterexample_modes(std::size_t m) {
    if (m != 5 && (m < 7 || m > kMaxSpectralSize)) {
        return make_error(Errc::unsupported_m,
                          "counterexample defined for m = 5 and 7 <= m <= 64, got m=" + std::to_string(m));
    }
    spectral::ModeVector modes;
    modes.coefficients.assign(m, spectral::Complex{});
    modes[1] = {0.0, 1.0};
    modes[2] = {-1.0, 0.0};
    modes[3] = {1.0, 0.0};
    return modes;
}

Expected<spectral::FloatPolygon> build_counterexample(std::size_t m) {
    if (auto modes = counterexample_modes(m); !modes) return modes.error();
    spectral::FloatPolygon out;
    out.vertices.reserve(m);
    const spectral::Complex i{0.0, 1.0};
    for (std::size_t k = 0; k < m; ++k) {
        const auto kk = static_cast<long long>(k);
        out.vertices.push_back(i * spectral::root_of_unity(m, kk) - spectral::root_of_unity(m, 2 * kk) +
                               spectral::root_of_unity(m, 3 * kk));
    }
    return out;
}

double expected_slope_ratio(std::size_t m) {
    return 2.0 * std::cos(2.0 * std::numbers::pi / static_cast<double>(m)) - 1.0;
}

Expected<CounterexampleReport> verify_proposition(std::size_t m, std::size_t steps, double tolerance) {
    auto modes = counterexample_modes(m);
    if (!modes) return modes.error();
    if (steps < 3) return make_error(Errc::invalid_argument, "need at least 3 steps");

    CounterexampleReport report;
    report.m = m;
    report.expected_ratio = expected_slope_ratio(m);
    for (std::size_t n = 0; n <= steps; ++n) {
        const spectral::Complex z = spectral::z_after_iterations(*modes, static_cast<unsigned>(n));
        report.slopes.push_back(z.imag() / z.real());
    }

    report.ratio_matches = true;
    for (std::size_t n = 0; n + 1 < report.slopes.size(); ++n) {
        const double ratio = report.slopes[n + 1] / report.slopes[n];
        report.ratios.push_back(ratio);
        if (!std::isfinite(ratio) || !spectral::close_relative(ratio, report.expected_ratio, tolerance, 0.0)) {
            report.ratio_matches = false;
        }
    }
    report.measured_ratio = report.ratios.back();

    report.lines_pairwise_distinct = true;
    for (std::size_t a = 0; a < report.slopes.size(); ++a) {
        const double sa = report.slopes[a];
        if (!std::isfinite(sa) || sa == 0.0) report.lines_pairwise_distinct = false;
        for (std::size_t b = a + 1; b < report.slopes.size(); ++b) {
            const double sb = report.slopes[b];
            if (std::abs(sa - sb) <= tolerance * std::max(std::abs(sa), std::abs(sb))) {
                report.lines_pairwise_distinct = false;
            }
        }
    }

    // Float overlay: actual centroids of the iterated m-gon.
    constexpr double kOverlayTolerance = 1e-6;
    report.centroids_on_slope_lines = true;
    spectral::FloatPolygon current = *build_counterexample(m);
    for (std::size_t n = 0; n <= steps; ++n) {
        if (n > 0) current = spectral::midpoint_map(current);
        auto g = spectral::centroid(current);
        if (!g) {
            report.centroids.push_back(std::nullopt);
            report.centroids_on_slope_lines = false;
            continue;
        }
        report.centroids.push_back(*g);
        const double slope = g->imag() / g->real();
        if (!spectral::close_relative(slope, report.slopes[n], kOverlayTolerance, 0.0)) {
            report.centroids_on_slope_lines = false;
        }
    }

    report.passed = report.ratio_matches && report.lines_pairwise_distinct;
    return report;
}

Expected<ConvergenceReport> convergence_diagnostics(const Polygon& p, std::size_t steps) {
    if (p.size() != 6) return wrong_size(6, p.size());
    const auto centroids = centroid_sequence(p, steps);
    const PlanePoint limit = exact::vertex_centroid(p);

    std::vector<std::size_t> indices;
    std::vector<PlanePoint> offsets;
    for (std::size_t n = 1; n <= steps; ++n) {
        if (!centroids[n] || *centroids[n] == limit) continue;
        indices.push_back(n);
        offsets.push_back(*centroids[n] - limit);
    }
    if (indices.size() < 3) {
        return make_error(Errc::insufficient_data, "fewer than three centroids off the limit point");
    }

    ConvergenceReport out;
    MonotonicityReport& mono = out.monotonicity;
    mono.indices = indices;

    const PlanePoint& direction = offsets.front();
    const double direction_norm = std::sqrt(dot(direction, direction).to_double());
    std::vector<Rational> exact_projection;
    exact_projection.reserve(offsets.size());
    for (const auto& d : offsets) {
        exact_projection.push_back(dot(d, direction));
        mono.projections.push_back(exact_projection.back().to_double() / direction_norm);
    }

    int previous_sign = 0;
    for (const auto& proj : exact_projection) {
        const int s = proj.sign();
        if (s == 0) continue;
        if (previous_sign != 0 && s != previous_sign) ++mono.sign_changes;
        previous_sign = s;
    }

    std::vector<int> diff_sign;
    for (std::size_t i = 0; i + 1 < exact_projection.size(); ++i) {
        diff_sign.push_back((exact_projection[i + 1] - exact_projection[i]).sign());
    }
    std::size_t start = diff_sign.size();
    if (diff_sign.back() != 0) {
        while (start > 0 && diff_sign[start - 1] == diff_sign.back()) --start;
        mono.stable_from = indices[start];
    }

    for (std::size_t i = 0; i + 1 < indices.size(); ++i) {
        if (indices[i + 1] != indices[i] + 1) continue;
        const Rational squared_ratio = dot(offsets[i + 1], offsets[i + 1]) / dot(offsets[i], offsets[i]);
        out.ratio_indices.push_back(indices[i]);
        out.distance_ratios.push_back(std::sqrt(squared_ratio.to_double()));
    }

    const auto first_iterate = exact::translate(exact::midpoint_map(p), PlanePoint() - limit);
    const auto modes = spectral::decompose(spectral::to_float(first_iterate));
    out.imbalance = spectral::orientation_imbalance(modes);
    double energy = 0.0;
    for (std::size_t j = 1; j < 6; ++j) energy += std::norm(modes[j]);
    out.normalized_primary = energy > 0.0 ? std::abs(out.imbalance.primary) / energy : 0.0;
    return out;
}

Expected<FuzzConfig> validate(const FuzzConfig& cfg) {
    if (cfg.trials < 1) return make_error(Errc::invalid_argument, "trials must be at least 1");
    if (cfg.coordinate_bound < 1) return make_error(Errc::invalid_argument, "coordinate bound must be at least 1");
    if (cfg.coordinate_bound > (std::int64_t{1} << 40)) {
        return make_error(Errc::invalid_argument, "coordinate bound too large");
    }
    if (cfg.steps < 3) return make_error(Errc::invalid_argument, "steps must be at least 3");
    return cfg;
}

Polygon random_hexagon(std::uint64_t seed, std::size_t trial, std::int64_t bound) {
    std::uint64_t state = seed;
    const std::uint64_t stream = splitmix64(state) ^ (0xD1B54A32D192ED03ull * (static_cast<std::uint64_t>(trial) + 1));
    std::uint64_t stream_state = stream;
    std::mt19937_64 rng(splitmix64(stream_state));
    std::vector<PlanePoint> vertices;
    vertices.reserve(6);
    for (int k = 0; k < 6; ++k) {
        const std::int64_t x = draw(rng, -bound, bound);
        const std::int64_t y = draw(rng, -bound, bound);
        vertices.emplace_back(Rational(x), Rational(y));
    }
    return Polygon(std::move(vertices));
}

FuzzSummary summarize_trials(std::span<const Polygon> hexagons, std::size_t steps) {
    FuzzSummary summary;
    summary.trials = hexagons.size();
    auto record_failure = [&summary](std::size_t trial, const Polygon& h, std::string reason) {
        ++summary.failed;
        if (!summary.first_failure) summary.first_failure = FuzzFailure{trial, h, std::move(reason)};
    };

    for (std::size_t trial = 0; trial < hexagons.size(); ++trial) {
        const Polygon& h = hexagons[trial];
        if (h.size() != 6) {
            record_failure(trial, h, "not a hexagon");
            continue;
        }
        const bool z_ok = verify_z_scaling(h).value();
        if (z_ok) ++summary.z_scaling_passed;

        auto centroids = centroid_sequence(h, steps);
        summary.undefined_centroids += static_cast<std::size_t>(
            std::count_if(centroids.begin(), centroids.end(), [](const auto& g) { return !g.has_value(); }));
        auto report = analyze_centroids(std::move(centroids), exact::vertex_centroid(h));
        if (!report) {
            // insufficient_data is the only error analyze_centroids reports.
            if (!z_ok) {
                record_failure(trial, h, "Z(Mv) != 3/8 Z(v)");
            } else {
                ++summary.insufficient_data;
            }
            continue;
        }
        if (report->all_colinear) ++summary.colinear_passed;
        if (report->limit_on_line) ++summary.limit_on_line_passed;
        if (report->g0_on_line) {
            if (*report->g0_on_line) {
                ++summary.g0_on_line;
            } else {
                ++summary.g0_off_line;
                if (!summary.first_g0_off_line_trial) summary.first_g0_off_line_trial = trial;
            }
        }

        if (!report->all_colinear) {
            record_failure(trial, h, "centroid G_" + std::to_string(*report->first_violation) + " off the line");
        } else if (!report->limit_on_line) {
            record_failure(trial, h, "vertex centroid off the centroid line");
        } else if (!z_ok) {
            record_failure(trial, h, "Z(Mv) != 3/8 Z(v)");
        } else {
            ++summary.passed;
        }
    }
    return summary;
}

FuzzSummary fuzz_hexagons(const FuzzConfig& cfg) {
    const FuzzConfig valid = validate(cfg).value();
    std::vector<Polygon> hexagons;
    hexagons.reserve(valid.trials);
    for (std::size_t t = 0; t < valid.trials; ++t) {
        hexagons.push_back(random_hexagon(valid.seed, t, valid.coordinate_bound));
    }
    return summarize_trials(hexagons, valid.steps);
}

}  // namespace midpoint::verify
