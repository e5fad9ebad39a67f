#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "midpoint/exact_poly.hpp"
#include "midpoint/expected.hpp"

// Floating-point discrete Fourier analysis of polygons.
//
// A polygon v in C^m decomposes as v = sum_j xi_j e^(j) with e^(j)_k = w^(jk),
// w = exp(2 pi i / m). Each e^(j) is an eigenvector of the midpoint map with
// eigenvalue (1 + w^j) / 2, so iterating the map scales xi_j geometrically.
namespace midpoint::spectral {

using Complex = std::complex<double>;

// Absolute tolerance for round-trips and eigen-relations.
inline constexpr double kLinearTolerance = 1e-12;
// Relative tolerance for the cubic quantities Z and G.
inline constexpr double kCubicRelativeTolerance = 1e-9;

// |a - b| <= max(abs_floor, rel * max(|a|, |b|)).
bool close_relative(double a, double b, double rel = kCubicRelativeTolerance, double abs_floor = kLinearTolerance);
bool close_relative(Complex a, Complex b, double rel = kCubicRelativeTolerance, double abs_floor = kLinearTolerance);

struct FloatPolygon {
    std::vector<Complex> vertices;

    std::size_t size() const noexcept { return vertices.size(); }
    const Complex& operator[](std::size_t k) const { return vertices[k % vertices.size()]; }
};

// Fourier coefficients xi_0 .. xi_{m-1}.
struct ModeVector {
    std::vector<Complex> coefficients;

    std::size_t size() const noexcept { return coefficients.size(); }
    const Complex& operator[](std::size_t j) const { return coefficients[j % coefficients.size()]; }
    Complex& operator[](std::size_t j) { return coefficients[j % coefficients.size()]; }
};

// Explicit, one-way.
FloatPolygon to_float(const exact::Polygon& p);
Complex to_complex(const exact::PlanePoint& p);

// exp(2 pi i j / m), j reduced mod m. Quarter turns are returned exactly.
Complex root_of_unity(std::size_t m, long long j);

// (1 + w^j) / 2.
Complex eigenvalue(std::size_t m, long long j);

// Vertex k is w^(jk).
FloatPolygon mode_basis(std::size_t m, long long j);

// xi_j = (1/m) sum_k v_k w^(-jk). Direct O(m^2) summation.
ModeVector decompose(const FloatPolygon& p);

// Vertex k is sum_j xi_j w^(jk).
FloatPolygon reconstruct(const ModeVector& modes);

// xi_j -> lambda_j^n xi_j.
ModeVector advance_modes(const ModeVector& modes, unsigned n);

// Z(v) = m sum_{p,q} xi_p conj(xi_q) xi_{q-p} Im(w^p + w^q).
Complex z_from_modes(const ModeVector& modes);

// Z(M^n v) evaluated from the modes of v: each (p, q) term of z_from_modes
// is scaled by triple_product(m, p, q)^n, which is real.
Complex z_after_iterations(const ModeVector& modes, unsigned n);

// A(v) = (m/2) sum_j |xi_j|^2 Im(w^j).
double area_from_modes(const ModeVector& modes);

// lambda_p conj(lambda_q) lambda_{q-p}, evaluated as
// (1/4) Re(1 + w^p + w^q + w^(q-p)), which is real by construction.
double triple_product(std::size_t m, long long p, long long q);

// Hexagon orientation imbalances: primary = |xi_1|^2 - |xi_5|^2 and
// secondary = |xi_2|^2 - |xi_4|^2.
struct OrientationImbalance {
    double primary = 0.0;
    double secondary = 0.0;
};
OrientationImbalance orientation_imbalance(const ModeVector& hexagon_modes);

// Centroid of M^n v for a hexagon with xi_0 = xi_3 = 0:
//   G(M^n v) = 2^-n * Z(v) / (9 sqrt(3) (primary + 3^-n secondary)).
// Errors: wrong_size (m != 6), modes_not_projected (|xi_0| or |xi_3| above
// 1e-12), degenerate_denominator (the bracketed factor vanishes, i.e. the n-th
// iterate has zero area).
Expected<Complex> closed_form_centroid(const ModeVector& modes, unsigned n);

// Float mirrors of the exact shoelace quantities.
FloatPolygon midpoint_map(const FloatPolygon& p);
double signed_area(const FloatPolygon& p);
Complex z_moment(const FloatPolygon& p);
Expected<Complex> centroid(const FloatPolygon& p);
Complex vertex_centroid(const FloatPolygon& p);

}  // namespace midpoint::spectral
