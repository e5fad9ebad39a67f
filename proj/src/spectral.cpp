#include "midpoint/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace midpoint::spectral {

namespace {

std::size_t reduce(long long j, std::size_t m) {
    const auto mm = static_cast<long long>(m);
    return static_cast<std::size_t>(((j % mm) + mm) % mm);
}

Complex power(Complex base, unsigned n) {
    Complex out{1.0, 0.0};
    while (n > 0) {
        if (n & 1u) out *= base;
        base *= base;
        n >>= 1u;
    }
    return out;
}

double power(double base, unsigned n) {
    double out = 1.0;
    while (n > 0) {
        if (n & 1u) out *= base;
        base *= base;
        n >>= 1u;
    }
    return out;
}

void require_nonempty(std::size_t m) {
    if (m == 0) throw std::invalid_argument("polygon size must be at least 1");
}

}  // namespace

bool close_relative(double a, double b, double rel, double abs_floor) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= std::max(abs_floor, rel * scale);
}

bool close_relative(Complex a, Complex b, double rel, double abs_floor) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= std::max(abs_floor, rel * scale);
}

Complex to_complex(const exact::PlanePoint& p) { return {p.x.to_double(), p.y.to_double()}; }

FloatPolygon to_float(const exact::Polygon& p) {
    FloatPolygon out;
    out.vertices.reserve(p.size());
    for (const auto& v : p.vertices()) out.vertices.push_back(to_complex(v));
    return out;
}

Complex root_of_unity(std::size_t m, long long j) {
    require_nonempty(m);
    const std::size_t r = reduce(j, m);
    // Exact values on the axes.
    if (r == 0) return {1.0, 0.0};
    if (4 * r == m) return {0.0, 1.0};
    if (2 * r == m) return {-1.0, 0.0};
    if (4 * r == 3 * m) return {0.0, -1.0};
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(m);
    return {std::cos(angle), std::sin(angle)};
}

Complex eigenvalue(std::size_t m, long long j) { return (1.0 + root_of_unity(m, j)) / 2.0; }

FloatPolygon mode_basis(std::size_t m, long long j) {
    require_nonempty(m);
    FloatPolygon out;
    out.vertices.reserve(m);
    const std::size_t jr = reduce(j, m);
    for (std::size_t k = 0; k < m; ++k) out.vertices.push_back(root_of_unity(m, static_cast<long long>((jr * k) % m)));
    return out;
}

ModeVector decompose(const FloatPolygon& p) {
    const std::size_t m = p.size();
    require_nonempty(m);
    ModeVector out;
    out.coefficients.assign(m, Complex{});
    for (std::size_t j = 0; j < m; ++j) {
        Complex sum{};
        for (std::size_t k = 0; k < m; ++k) {
            sum += p.vertices[k] * root_of_unity(m, -static_cast<long long>((j * k) % m));
        }
        out.coefficients[j] = sum / static_cast<double>(m);
    }
    return out;
}

FloatPolygon reconstruct(const ModeVector& modes) {
    const std::size_t m = modes.size();
    require_nonempty(m);
    FloatPolygon out;
    out.vertices.assign(m, Complex{});
    for (std::size_t k = 0; k < m; ++k) {
        Complex sum{};
        for (std::size_t j = 0; j < m; ++j) {
            sum += modes.coefficients[j] * root_of_unity(m, static_cast<long long>((j * k) % m));
        }
        out.vertices[k] = sum;
    }
    return out;
}

ModeVector advance_modes(const ModeVector& modes, unsigned n) {
    const std::size_t m = modes.size();
    ModeVector out = modes;
    for (std::size_t j = 0; j < m; ++j) {
        out.coefficients[j] *= power(eigenvalue(m, static_cast<long long>(j)), n);
    }
    return out;
}

namespace {

template <typename TermScale>
Complex z_double_sum(const ModeVector& modes, TermScale&& term_scale) {
    const std::size_t m = modes.size();
    require_nonempty(m);
    Complex sum{};
    for (std::size_t p = 0; p < m; ++p) {
        if (modes.coefficients[p] == Complex{}) continue;
        for (std::size_t q = 0; q < m; ++q) {
            const Complex& xq = modes.coefficients[q];
            const Complex& xqp = modes.coefficients[reduce(static_cast<long long>(q) - static_cast<long long>(p), m)];
            if (xq == Complex{} || xqp == Complex{}) continue;
            const double weight = (root_of_unity(m, static_cast<long long>(p)) + root_of_unity(m, static_cast<long long>(q))).imag();
            if (weight == 0.0) continue;
            sum += modes.coefficients[p] * std::conj(xq) * xqp * (weight * term_scale(p, q));
        }
    }
    return static_cast<double>(m) * sum;
}

}  // namespace

Complex z_from_modes(const ModeVector& modes) {
    return z_double_sum(modes, [](std::size_t, std::size_t) { return 1.0; });
}

Complex z_after_iterations(const ModeVector& modes, unsigned n) {
    const std::size_t m = modes.size();
    return z_double_sum(modes, [m, n](std::size_t p, std::size_t q) {
        return power(triple_product(m, static_cast<long long>(p), static_cast<long long>(q)), n);
    });
}

double area_from_modes(const ModeVector& modes) {
    const std::size_t m = modes.size();
    require_nonempty(m);
    double sum = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        sum += std::norm(modes.coefficients[j]) * root_of_unity(m, static_cast<long long>(j)).imag();
    }
    return 0.5 * static_cast<double>(m) * sum;
}

double triple_product(std::size_t m, long long p, long long q) {
    require_nonempty(m);
    const Complex s = 1.0 + root_of_unity(m, p) + root_of_unity(m, q) + root_of_unity(m, q - p);
    return 0.25 * s.real();
}

OrientationImbalance orientation_imbalance(const ModeVector& hexagon_modes) {
    if (hexagon_modes.size() != 6) throw std::invalid_argument("orientation_imbalance: hexagon modes required");
    const auto& xi = hexagon_modes.coefficients;
    return {std::norm(xi[1]) - std::norm(xi[5]), std::norm(xi[2]) - std::norm(xi[4])};
}

Expected<Complex> closed_form_centroid(const ModeVector& modes, unsigned n) {
    if (modes.size() != 6) {
        return make_error(Errc::wrong_size, "closed form needs hexagon modes, got m=" + std::to_string(modes.size()));
    }
    if (std::abs(modes[0]) > kLinearTolerance || std::abs(modes[3]) > kLinearTolerance) {
        return make_error(Errc::modes_not_projected, "closed form requires xi_0 = xi_3 = 0");
    }
    const auto [primary, secondary] = orientation_imbalance(modes);
    const double decay = power(1.0 / 3.0, n);
    const double bracket = primary + decay * secondary;
    const double bracket_scale = std::max(std::abs(primary), decay * std::abs(secondary));
    if (bracket_scale == 0.0 || std::abs(bracket) <= kLinearTolerance * bracket_scale) {
        return make_error(Errc::degenerate_denominator, "iterate " + std::to_string(n) + " has zero area");
    }
    const double prefactor = power(0.5, n) / (9.0 * std::numbers::sqrt3 * bracket);
    return prefactor * z_from_modes(modes);
}

FloatPolygon midpoint_map(const FloatPolygon& p) {
    require_nonempty(p.size());
    FloatPolygon out;
    out.vertices.reserve(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) out.vertices.push_back(0.5 * (p[k] + p[k + 1]));
    return out;
}

double signed_area(const FloatPolygon& p) {
    double twice = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) twice += (std::conj(p[k]) * p[k + 1]).imag();
    return 0.5 * twice;
}

Complex z_moment(const FloatPolygon& p) {
    Complex z{};
    for (std::size_t k = 0; k < p.size(); ++k) z += (p[k] + p[k + 1]) * (std::conj(p[k]) * p[k + 1]).imag();
    return z;
}

Expected<Complex> centroid(const FloatPolygon& p) {
    const double area = signed_area(p);
    if (area == 0.0) return make_error(Errc::area_zero, "centroid undefined: signed area is zero");
    return z_moment(p) / (6.0 * area);
}

Complex vertex_centroid(const FloatPolygon& p) {
    require_nonempty(p.size());
    Complex sum{};
    for (const auto& v : p.vertices) sum += v;
    return sum / static_cast<double>(p.size());
}

}  // namespace midpoint::spectral
