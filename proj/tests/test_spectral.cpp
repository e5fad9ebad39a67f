#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "midpoint/exact_poly.hpp"
#include "midpoint/spectral.hpp"
#include "test_support.hpp"

using namespace midpoint;
using namespace midpoint::spectral;

namespace {

const double kSqrt3 = std::sqrt(3.0);

double max_distance(const FloatPolygon& a, const FloatPolygon& b) {
    double worst = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
    return worst;
}

FloatPolygon random_float_polygon(std::mt19937_64& rng, std::size_t m, double bound = 10.0) {
    std::uniform_real_distribution<double> coord(-bound, bound);
    FloatPolygon p;
    for (std::size_t k = 0; k < m; ++k) p.vertices.emplace_back(coord(rng), coord(rng));
    return p;
}

ModeVector hexagon_modes(std::initializer_list<std::pair<std::size_t, Complex>> entries) {
    ModeVector mv{std::vector<Complex>(6)};
    for (const auto& [j, value] : entries) mv[j] = value;
    return mv;
}

ModeVector random_projected_modes(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coord(-3.0, 3.0);
    ModeVector mv{std::vector<Complex>(6)};
    for (std::size_t j : {1, 2, 4, 5}) mv[j] = Complex(coord(rng), coord(rng));
    return mv;
}

}  // namespace

// ---------------------------------------------------------------------------
// roots and eigenvalues

TEST(RootOfUnity, HexagonValues) {
    EXPECT_EQ(root_of_unity(6, 0), Complex(1.0, 0.0));
    EXPECT_EQ(root_of_unity(6, 3), Complex(-1.0, 0.0));
    const Complex w = root_of_unity(6, 1);
    EXPECT_NEAR(w.real(), 0.5, 1e-15);
    EXPECT_NEAR(w.imag(), 0.8660254037844386, 1e-15);
}

TEST(RootOfUnity, IndexIsReducedModuloM) {
    EXPECT_EQ(root_of_unity(6, 7), root_of_unity(6, 1));
    EXPECT_EQ(root_of_unity(6, -1), root_of_unity(6, 5));
    EXPECT_EQ(root_of_unity(4, 1), Complex(0.0, 1.0));
}

TEST(RootOfUnity, UnitModulus) {
    for (std::size_t m = 1; m <= 64; ++m) {
        for (long long j = 0; j < static_cast<long long>(m); ++j) {
            EXPECT_NEAR(std::abs(root_of_unity(m, j)), 1.0, 1e-15) << m << " " << j;
        }
    }
}

TEST(Eigenvalue, HexagonModuli) {
    EXPECT_EQ(eigenvalue(6, 0), Complex(1.0, 0.0));
    EXPECT_EQ(eigenvalue(6, 3), Complex(0.0, 0.0));
    EXPECT_NEAR(std::abs(eigenvalue(6, 1)), kSqrt3 / 2, 1e-15);
    EXPECT_NEAR(std::abs(eigenvalue(6, 5)), kSqrt3 / 2, 1e-15);
    EXPECT_NEAR(std::abs(eigenvalue(6, 2)), 0.5, 1e-15);
    EXPECT_NEAR(std::abs(eigenvalue(6, 4)), 0.5, 1e-15);
}

// ---------------------------------------------------------------------------
// modes

TEST(ModeBasis, Examples) {
    for (const Complex& z : mode_basis(6, 0).vertices) EXPECT_EQ(z, Complex(1.0, 0.0));
    const FloatPolygon alt = mode_basis(6, 3);
    for (std::size_t k = 0; k < 6; ++k) EXPECT_EQ(alt[k], Complex(k % 2 == 0 ? 1.0 : -1.0, 0.0));
    const FloatPolygon quarter = mode_basis(4, 1);
    EXPECT_EQ(quarter[0], Complex(1, 0));
    EXPECT_EQ(quarter[1], Complex(0, 1));
    EXPECT_EQ(quarter[2], Complex(-1, 0));
    EXPECT_EQ(quarter[3], Complex(0, -1));
}

TEST(Decompose, PureModeAndConstant) {
    const ModeVector mv = decompose(mode_basis(6, 1));
    for (std::size_t j = 0; j < 6; ++j) {
        EXPECT_LE(std::abs(mv[j] - Complex(j == 1 ? 1.0 : 0.0, 0.0)), kLinearTolerance) << j;
    }
    const Complex c(2.5, -1.25);
    const ModeVector constant = decompose(FloatPolygon{std::vector<Complex>(6, c)});
    EXPECT_LE(std::abs(constant[0] - c), kLinearTolerance);
    for (std::size_t j = 1; j < 6; ++j) EXPECT_LE(std::abs(constant[j]), kLinearTolerance);
}

TEST(Reconstruct, Examples) {
    const Complex c(-3.0, 4.0);
    ModeVector constant{std::vector<Complex>(6)};
    constant[0] = c;
    for (const Complex& z : reconstruct(constant).vertices) EXPECT_LE(std::abs(z - c), kLinearTolerance);

    const FloatPolygon regular = reconstruct(hexagon_modes({{1, 1.0}}));
    for (std::size_t k = 0; k < 6; ++k) EXPECT_LE(std::abs(regular[k] - root_of_unity(6, k)), kLinearTolerance);
}

TEST(Decompose, RoundTripsForAllSizes) {
    std::mt19937_64 rng(21);
    for (std::size_t m = 1; m <= 64; ++m) {
        const FloatPolygon p = random_float_polygon(rng, m);
        EXPECT_LE(max_distance(reconstruct(decompose(p)), p), kLinearTolerance) << "m=" << m;

        ModeVector mv{std::vector<Complex>(m)};
        std::uniform_real_distribution<double> coord(-10.0, 10.0);
        for (auto& xi : mv.coefficients) xi = Complex(coord(rng), coord(rng));
        const ModeVector back = decompose(reconstruct(mv));
        for (std::size_t j = 0; j < m; ++j) EXPECT_LE(std::abs(back[j] - mv[j]), kLinearTolerance);
    }
}

TEST(AdvanceModes, Examples) {
    std::mt19937_64 rng(22);
    const FloatPolygon p = random_float_polygon(rng, 6);
    const ModeVector mv = decompose(p);
    EXPECT_EQ(advance_modes(mv, 0).coefficients, mv.coefficients);
    EXPECT_EQ(advance_modes(mv, 1)[3], Complex(0.0, 0.0));
    EXPECT_LE(max_distance(reconstruct(advance_modes(mv, 1)), midpoint_map(p)), kLinearTolerance);

    FloatPolygon q = p;
    for (int n = 0; n < 7; ++n) q = midpoint_map(q);
    EXPECT_LE(max_distance(reconstruct(advance_modes(mv, 7)), q), kLinearTolerance);
}

TEST(EigenRelation, HoldsForEveryModeUpToSixtyFour) {
    for (std::size_t m = 1; m <= 64; ++m) {
        for (long long j = 0; j < static_cast<long long>(m); ++j) {
            const FloatPolygon e = mode_basis(m, j);
            const FloatPolygon image = midpoint_map(e);
            const Complex lambda = eigenvalue(m, j);
            double worst = 0.0;
            for (std::size_t k = 0; k < m; ++k) worst = std::max(worst, std::abs(image[k] - lambda * e[k]));
            EXPECT_LE(worst, kLinearTolerance) << "m=" << m << " j=" << j;
        }
    }
}

// ---------------------------------------------------------------------------
// Z and area from modes

TEST(ZFromModes, Examples) {
    EXPECT_EQ(z_from_modes(ModeVector{std::vector<Complex>(6)}), Complex(0.0, 0.0));
    const ModeVector mv = hexagon_modes({{1, 1.0}, {2, 1.0}});
    const Complex z = z_from_modes(mv);
    EXPECT_TRUE(close_relative(z, Complex(10.392304845413264, 0.0)));
    // Cross-check against the shoelace sum on the reconstructed vertices.
    EXPECT_TRUE(close_relative(z, z_moment(reconstruct(mv))));
}

// Only (p, q) in {(1,2), (2,1), (4,5), (5,4)} survive; Im(w^p + w^q) is
// +sqrt(3) for the first two and -sqrt(3) for the last two.
TEST(ZFromModes, MatchesFourTermHexagonFormula) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const ModeVector mv = random_projected_modes(rng);
        const Complex four_term = 6.0 * kSqrt3 *
                                  (mv[1] * std::conj(mv[2]) * mv[1] - mv[5] * std::conj(mv[4]) * mv[5] -
                                   mv[4] * std::conj(mv[5]) * mv[1] + mv[2] * std::conj(mv[1]) * mv[5]);
        EXPECT_TRUE(close_relative(z_from_modes(mv), four_term));
        EXPECT_TRUE(close_relative(z_moment(reconstruct(mv)), four_term));
    }
}

TEST(AreaFromModes, Examples) {
    EXPECT_TRUE(close_relative(area_from_modes(hexagon_modes({{1, 1.0}})), 2.598076211353316));
    EXPECT_TRUE(close_relative(signed_area(mode_basis(6, 1)), 2.598076211353316));
    EXPECT_LE(std::abs(area_from_modes(hexagon_modes({{1, 1.0}, {5, 1.0}}))), kLinearTolerance);
}

TEST(AreaFromModes, HexagonSpecialisation) {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 50; ++trial) {
        const ModeVector mv = decompose(random_float_polygon(rng, 6));
        const double expected = 1.5 * kSqrt3 *
                                (std::norm(mv[1]) - std::norm(mv[5]) + std::norm(mv[2]) - std::norm(mv[4]));
        EXPECT_TRUE(close_relative(area_from_modes(mv), expected));
    }
}

TEST(OracleEquivalence, ModesAgreeWithExactShoelace) {
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = 3 + trial % 14;
        const exact::Polygon p = fixtures::random_rational_polygon(rng, m);
        const ModeVector mv = decompose(to_float(p));
        EXPECT_TRUE(close_relative(z_from_modes(mv), to_complex(exact::z_moment(p)))) << "m=" << m;
        EXPECT_TRUE(close_relative(area_from_modes(mv), exact::signed_area(p).to_double())) << "m=" << m;
    }
}

TEST(OracleEquivalence, ZAfterIterationsMatchesExactIterates) {
    std::mt19937_64 rng(26);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t m = 5 + trial % 6;
        const exact::Polygon p = fixtures::random_integer_polygon(rng, m, 9);
        const ModeVector mv = decompose(to_float(p));
        const auto seq = exact::iterate(p, 6);
        for (unsigned n = 0; n <= 6; ++n) {
            const Complex direct = to_complex(exact::z_moment(seq[n]));
            const double scale = std::abs(to_complex(exact::z_moment(p)));
            EXPECT_TRUE(close_relative(z_after_iterations(mv, n), direct, kCubicRelativeTolerance,
                                       kCubicRelativeTolerance * scale))
                << "m=" << m << " n=" << n;
        }
    }
}

// ---------------------------------------------------------------------------
// triple products

TEST(TripleProduct, ThreeEighthsCases) {
    for (auto [p, q] : {std::pair{1, 2}, {5, 4}, {4, 5}, {2, 1}}) {
        EXPECT_NEAR(triple_product(6, p, q), 0.375, 1e-15) << p << "," << q;
    }
}

TEST(TripleProduct, MatchesComplexProductOracle) {
    for (std::size_t m = 1; m <= 24; ++m) {
        const long long mm = static_cast<long long>(m);
        for (long long p = 0; p < mm; ++p) {
            for (long long q = 0; q < mm; ++q) {
                const Complex product = eigenvalue(m, p) * std::conj(eigenvalue(m, q)) * eigenvalue(m, q - p);
                EXPECT_NEAR(product.real(), triple_product(m, p, q), 1e-14);
                EXPECT_NEAR(product.imag(), 0.0, 1e-14);
            }
        }
    }
}

TEST(TripleProduct, DiagonalIsSquaredModulus) {
    for (std::size_t m = 1; m <= 16; ++m) {
        for (long long p = 0; p < static_cast<long long>(m); ++p) {
            const double expected = (1.0 + std::cos(2.0 * std::numbers::pi * p / m)) / 2.0;
            EXPECT_NEAR(triple_product(m, p, p), expected, 1e-15);
        }
    }
}

TEST(ZScalingInModes, ProjectedHexagonsScaleByThreeEighths) {
    std::mt19937_64 rng(27);
    for (int trial = 0; trial < 200; ++trial) {
        const ModeVector mv = random_projected_modes(rng);
        const Complex z = z_from_modes(mv);
        EXPECT_TRUE(close_relative(z_from_modes(advance_modes(mv, 1)), 0.375 * z, kLinearTolerance, 0.0));
    }
}

// ---------------------------------------------------------------------------
// closed form

TEST(ClosedForm, Examples) {
    const ModeVector mv = hexagon_modes({{1, 1.0}, {2, 1.0}});
    const Complex g0 = *closed_form_centroid(mv, 0);
    EXPECT_NEAR(g0.real(), 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(g0.imag(), 0.0, 1e-15);
    const Complex g1 = *closed_form_centroid(mv, 1);
    EXPECT_NEAR(g1.real(), 0.25, 1e-15);
    EXPECT_NEAR(g1.imag(), 0.0, 1e-15);

    // Cross-checks on the reconstructed and iterated polygon.
    const FloatPolygon v = reconstruct(mv);
    EXPECT_TRUE(close_relative(*centroid(v), g0));
    EXPECT_TRUE(close_relative(*centroid(midpoint_map(v)), g1));
}

TEST(ClosedForm, Errors) {
    ModeVector seven{std::vector<Complex>(7)};
    seven[1] = 1.0;
    EXPECT_EQ(closed_form_centroid(seven, 0).error().code, Errc::wrong_size);

    EXPECT_EQ(closed_form_centroid(hexagon_modes({{0, 1.0}, {1, 1.0}}), 0).error().code, Errc::modes_not_projected);
    EXPECT_EQ(closed_form_centroid(hexagon_modes({{3, 1e-6}, {1, 1.0}}), 0).error().code,
              Errc::modes_not_projected);

    // d1 = 0 and d2 = 0: every iterate has zero area.
    EXPECT_EQ(closed_form_centroid(hexagon_modes({{1, 1.0}, {5, 1.0}}), 2).error().code,
              Errc::degenerate_denominator);
    // d1 = -1, d2 = 3: the bracket vanishes exactly at n = 1.
    const ModeVector vanishing = hexagon_modes({{5, 1.0}, {2, kSqrt3}});
    EXPECT_EQ(closed_form_centroid(vanishing, 1).error().code, Errc::degenerate_denominator);
    EXPECT_TRUE(closed_form_centroid(vanishing, 0).has_value());
    EXPECT_TRUE(closed_form_centroid(vanishing, 2).has_value());
}

TEST(ClosedForm, IsARealMultipleOfZ) {
    std::mt19937_64 rng(28);
    for (int trial = 0; trial < 100; ++trial) {
        const ModeVector mv = random_projected_modes(rng);
        const Complex z = z_from_modes(mv);
        for (unsigned n = 0; n <= 20; ++n) {
            const auto g = closed_form_centroid(mv, n);
            if (!g) continue;
            const Complex ratio = *g / z;
            EXPECT_LE(std::abs(ratio.imag()), 1e-12 * std::max(1.0, std::abs(ratio.real())));
        }
    }
}

TEST(ClosedForm, MatchesExactIterates) {
    std::mt19937_64 rng(29);
    int compared = 0;
    int ill_conditioned = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const exact::Polygon raw = fixtures::random_integer_polygon(rng, 6, 9);
        const exact::Polygon p = *exact::project_out_modes_0_3(raw);
        const ModeVector mv = decompose(to_float(p));
        const auto seq = exact::iterate(p, 15);
        const auto d = orientation_imbalance(mv);
        const double energy = std::norm(mv[1]) + std::norm(mv[2]) + std::norm(mv[4]) + std::norm(mv[5]);
        for (unsigned n = 0; n <= 15; ++n) {
            const auto closed = closed_form_centroid(mv, n);
            const auto direct = exact::centroid(seq[n]);
            if (!closed || !direct) continue;
            // Rounding in d1 and d2 is of order 1e-16 * energy; below this
            // bracket size it alone exceeds the comparison tolerance.
            if (std::abs(d.primary + std::pow(3.0, -double(n)) * d.secondary) < 1e-6 * energy) {
                ++ill_conditioned;
                continue;
            }
            EXPECT_TRUE(close_relative(*closed, to_complex(*direct))) << "trial " << trial << " n=" << n;
            ++compared;
        }
    }
    EXPECT_GT(compared, 800);
    EXPECT_LT(ill_conditioned, 20);
}

// |xi_1| = |xi_5| exactly: only the 3^-n term is left in the bracket, so the
// centroids run away from the limit by a factor 3/2 per step.
TEST(ClosedForm, BalancedPrimaryModesDiverge) {
    // xi_1 = 1, xi_5 = i, xi_2 = 1/2: projected, d1 = 0, d2 = 1/4.
    const ModeVector mv = hexagon_modes({{1, 1.0}, {5, Complex(0.0, 1.0)}, {2, 0.5}});
    const auto d = orientation_imbalance(mv);
    EXPECT_NEAR(d.primary, 0.0, 1e-15);
    for (unsigned n = 1; n <= 10; ++n) {
        const Complex ratio = *closed_form_centroid(mv, n + 1) / *closed_form_centroid(mv, n);
        EXPECT_NEAR(ratio.real(), 1.5, 1e-9);
        EXPECT_NEAR(ratio.imag(), 0.0, 1e-9);
    }
    FloatPolygon v = reconstruct(mv);
    for (int n = 0; n < 3; ++n) v = midpoint_map(v);
    EXPECT_TRUE(close_relative(*centroid(v), *closed_form_centroid(mv, 3), 1e-9, 1e-12));
}

// ---------------------------------------------------------------------------
// float mirrors

TEST(FloatMirrors, AgreeWithExactPath) {
    std::mt19937_64 rng(30);
    for (int trial = 0; trial < 50; ++trial) {
        const exact::Polygon p = fixtures::random_rational_polygon(rng, 3 + trial % 8);
        const FloatPolygon f = to_float(p);
        EXPECT_TRUE(close_relative(signed_area(f), exact::signed_area(p).to_double()));
        EXPECT_TRUE(close_relative(z_moment(f), to_complex(exact::z_moment(p))));
        EXPECT_TRUE(close_relative(vertex_centroid(f), to_complex(exact::vertex_centroid(p)), kLinearTolerance));
        EXPECT_LE(max_distance(midpoint_map(f), to_float(exact::midpoint_map(p))), kLinearTolerance);
    }
}

TEST(FloatMirrors, ZeroAreaCentroidIsAnError) {
    const FloatPolygon flat{std::vector<Complex>(6, Complex(1.0, 2.0))};
    EXPECT_EQ(centroid(flat).error().code, Errc::area_zero);
}
