#include "midpoint/exact_poly.hpp"

#include <stdexcept>
#include <string>

namespace midpoint::exact {

PlanePoint& PlanePoint::operator+=(const PlanePoint& rhs) {
    x += rhs.x;
    y += rhs.y;
    return *this;
}

PlanePoint& PlanePoint::operator-=(const PlanePoint& rhs) {
    x -= rhs.x;
    y -= rhs.y;
    return *this;
}

PlanePoint& PlanePoint::operator*=(const Rational& s) {
    x *= s;
    y *= s;
    return *this;
}

PlanePoint& PlanePoint::operator/=(const Rational& s) {
    x /= s;
    y /= s;
    return *this;
}

Rational cross(const PlanePoint& a, const PlanePoint& b) { return a.x * b.y - a.y * b.x; }

Rational dot(const PlanePoint& a, const PlanePoint& b) { return a.x * b.x + a.y * b.y; }

Polygon::Polygon(std::vector<PlanePoint> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw std::invalid_argument("Polygon: needs at least one vertex");
}

Polygon::Polygon(std::initializer_list<PlanePoint> vertices) : Polygon(std::vector<PlanePoint>(vertices)) {}

Polygon make_polygon(std::initializer_list<std::pair<std::int64_t, std::int64_t>> coords) {
    std::vector<PlanePoint> pts;
    pts.reserve(coords.size());
    for (const auto& [x, y] : coords) pts.emplace_back(Rational(x), Rational(y));
    return Polygon(std::move(pts));
}

Polygon translate(const Polygon& p, const PlanePoint& offset) {
    std::vector<PlanePoint> out(p.vertices());
    for (auto& v : out) v += offset;
    return Polygon(std::move(out));
}

Polygon scale(const Polygon& p, const Rational& factor) {
    std::vector<PlanePoint> out(p.vertices());
    for (auto& v : out) v *= factor;
    return Polygon(std::move(out));
}

Polygon reversed(const Polygon& p) {
    return Polygon(std::vector<PlanePoint>(p.vertices().rbegin(), p.vertices().rend()));
}

Polygon linear_combination(const Rational& a, const Polygon& u, const Rational& b, const Polygon& v) {
    if (u.size() != v.size()) throw std::invalid_argument("linear_combination: size mismatch");
    std::vector<PlanePoint> out;
    out.reserve(u.size());
    for (std::size_t k = 0; k < u.size(); ++k) out.push_back(a * u[k] + b * v[k]);
    return Polygon(std::move(out));
}

Polygon midpoint_map(const Polygon& p) {
    const Rational half(1, 2);
    std::vector<PlanePoint> out;
    out.reserve(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) out.push_back((p[k] + p[k + 1]) * half);
    return Polygon(std::move(out));
}

std::vector<Polygon> iterate(const Polygon& p, std::size_t n) {
    std::vector<Polygon> out;
    out.reserve(n + 1);
    out.push_back(p);
    for (std::size_t i = 0; i < n; ++i) out.push_back(midpoint_map(out.back()));
    return out;
}

Rational signed_area(const Polygon& p) {
    Rational twice;
    for (std::size_t k = 0; k < p.size(); ++k) twice += cross(p[k], p[k + 1]);
    return twice / Rational(2);
}

PlanePoint z_moment(const Polygon& p) {
    PlanePoint z;
    for (std::size_t k = 0; k < p.size(); ++k) {
        const Rational w = cross(p[k], p[k + 1]);
        if (w.is_zero()) continue;
        z += (p[k] + p[k + 1]) * w;
    }
    return z;
}

Expected<PlanePoint> centroid(const Polygon& p) {
    const Rational area = signed_area(p);
    if (area.is_zero()) return make_error(Errc::area_zero, "centroid undefined: signed area is zero");
    return z_moment(p) / (Rational(6) * area);
}

PlanePoint vertex_centroid(const Polygon& p) {
    PlanePoint sum;
    for (const auto& v : p.vertices()) sum += v;
    return sum / Rational(static_cast<std::int64_t>(p.size()));
}

Expected<Polygon> project_out_modes_0_3(const Polygon& p) {
    if (p.size() != 6) {
        return make_error(Errc::wrong_size, "expected a hexagon, got " + std::to_string(p.size()) + " vertices");
    }
    const PlanePoint mean = vertex_centroid(p);
    PlanePoint alternating;
    for (std::size_t k = 0; k < 6; ++k) {
        if (k % 2 == 0) alternating += p[k];
        else alternating -= p[k];
    }
    alternating /= Rational(6);

    std::vector<PlanePoint> out;
    out.reserve(6);
    for (std::size_t k = 0; k < 6; ++k) {
        PlanePoint v = p[k] - mean;
        if (k % 2 == 0) v -= alternating;
        else v += alternating;
        out.push_back(std::move(v));
    }
    return Polygon(std::move(out));
}

}  // namespace midpoint::exact
