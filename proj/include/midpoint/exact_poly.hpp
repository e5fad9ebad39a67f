#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "midpoint/expected.hpp"
#include "midpoint/rational.hpp"

// Exact rational polygons, the midpoint map, and the shoelace quantities.
namespace midpoint::exact {

// Encodes the complex number x + iy.
struct PlanePoint {
    Rational x;
    Rational y;

    PlanePoint() = default;
    PlanePoint(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {}

    PlanePoint& operator+=(const PlanePoint& rhs);
    PlanePoint& operator-=(const PlanePoint& rhs);
    PlanePoint& operator*=(const Rational& s);
    PlanePoint& operator/=(const Rational& s);

    friend PlanePoint operator+(PlanePoint a, const PlanePoint& b) { return a += b; }
    friend PlanePoint operator-(PlanePoint a, const PlanePoint& b) { return a -= b; }
    friend PlanePoint operator*(PlanePoint a, const Rational& s) { return a *= s; }
    friend PlanePoint operator*(const Rational& s, PlanePoint a) { return a *= s; }
    friend PlanePoint operator/(PlanePoint a, const Rational& s) { return a /= s; }
    friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

// a.x * b.y - a.y * b.x, i.e. Im(conj(a) * b).
Rational cross(const PlanePoint& a, const PlanePoint& b);
Rational dot(const PlanePoint& a, const PlanePoint& b);

// Ordered vertex list with m >= 1. Vertex indices wrap modulo m. No
// simplicity or convexity requirement.
class Polygon {
public:
    // Throws std::invalid_argument when vertices is empty.
    explicit Polygon(std::vector<PlanePoint> vertices);
    Polygon(std::initializer_list<PlanePoint> vertices);

    std::size_t size() const noexcept { return vertices_.size(); }
    const PlanePoint& operator[](std::size_t k) const { return vertices_[k % vertices_.size()]; }
    const std::vector<PlanePoint>& vertices() const noexcept { return vertices_; }

    friend bool operator==(const Polygon&, const Polygon&) = default;

private:
    std::vector<PlanePoint> vertices_;
};

// Convenience for integer inputs: {{x0, y0}, {x1, y1}, ...}.
Polygon make_polygon(std::initializer_list<std::pair<std::int64_t, std::int64_t>> coords);

Polygon translate(const Polygon& p, const PlanePoint& offset);
Polygon scale(const Polygon& p, const Rational& factor);
Polygon reversed(const Polygon& p);
// Component-wise a*u + b*v; sizes must match.
Polygon linear_combination(const Rational& a, const Polygon& u, const Rational& b, const Polygon& v);

// Vertex k of the result is (v_k + v_{k+1}) / 2.
Polygon midpoint_map(const Polygon& p);

// [p, Mp, ..., M^n p].
std::vector<Polygon> iterate(const Polygon& p, std::size_t n);

// 1/2 * sum_k (x_k y_{k+1} - x_{k+1} y_k). Identically zero for m <= 2.
Rational signed_area(const Polygon& p);

// sum_k (v_k + v_{k+1}) * Im(conj(v_k) v_{k+1}).
PlanePoint z_moment(const Polygon& p);

// Z / (6A). Errc::area_zero when the signed area vanishes.
Expected<PlanePoint> centroid(const Polygon& p);

// Arithmetic mean of the vertices; invariant under midpoint_map.
PlanePoint vertex_centroid(const Polygon& p);

// Removes the constant mode and the alternating mode (1,-1,1,-1,1,-1) from
// a hexagon. The result has zero vertex mean and zero alternating sum.
// Errc::wrong_size unless p has 6 vertices.
Expected<Polygon> project_out_modes_0_3(const Polygon& p);

}  // namespace midpoint::exact
