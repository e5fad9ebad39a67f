#include "midpoint/figure.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

namespace midpoint::cli {

namespace {

using spectral::Complex;

std::string fixed(double value, int precision = 3) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, precision);
    std::string out(buf, res.ptr);
    if (out == "-0.000") out = "0.000";
    return out;
}

struct Viewport {
    double min_x, min_y, max_x, max_y;
    double scale;
    int height;

    double px(const Complex& z) const { return (z.real() - min_x) * scale; }
    // SVG y grows downwards.
    double py(const Complex& z) const { return height - (z.imag() - min_y) * scale; }
};

Viewport fit_viewport(const FigureScene& scene, const FigureSpec& spec) {
    double min_x = std::numeric_limits<double>::infinity();
    double min_y = min_x;
    double max_x = -min_x;
    double max_y = -min_x;
    for (const auto& poly : scene.iterates) {
        for (const auto& v : poly.vertices) {
            min_x = std::min(min_x, v.real());
            max_x = std::max(max_x, v.real());
            min_y = std::min(min_y, v.imag());
            max_y = std::max(max_y, v.imag());
        }
    }
    // Pad by 5% of the larger side; a point-like scene gets a unit extent.
    double extent = std::max(max_x - min_x, max_y - min_y);
    if (!(extent > 0.0)) extent = 1.0;
    const double pad = 0.05 * extent;
    const double half_w = 0.5 * (max_x - min_x) + pad;
    const double half_h = 0.5 * (max_y - min_y) + pad;
    const double cx = 0.5 * (min_x + max_x);
    const double cy = 0.5 * (min_y + max_y);

    Viewport vp{};
    vp.height = spec.height;
    vp.scale = std::min(spec.width / (2.0 * half_w), spec.height / (2.0 * half_h));
    // The world window covers the whole canvas, centred on the box.
    const double world_w = spec.width / vp.scale;
    const double world_h = spec.height / vp.scale;
    vp.min_x = cx - 0.5 * world_w;
    vp.max_x = cx + 0.5 * world_w;
    vp.min_y = cy - 0.5 * world_h;
    vp.max_y = cy + 0.5 * world_h;
    return vp;
}

// Clips the infinite line point + t * direction to the viewport.
std::optional<std::pair<Complex, Complex>> clip_line(const Complex& point, const Complex& direction,
                                                     const Viewport& vp) {
    double t0 = -std::numeric_limits<double>::infinity();
    double t1 = std::numeric_limits<double>::infinity();
    const auto slab = [&](double p, double d, double lo, double hi) {
        if (d == 0.0) return lo <= p && p <= hi;
        double a = (lo - p) / d;
        double b = (hi - p) / d;
        if (a > b) std::swap(a, b);
        t0 = std::max(t0, a);
        t1 = std::min(t1, b);
        return t0 <= t1;
    };
    if (!slab(point.real(), direction.real(), vp.min_x, vp.max_x)) return std::nullopt;
    if (!slab(point.imag(), direction.imag(), vp.min_y, vp.max_y)) return std::nullopt;
    if (!(t0 < t1)) return std::nullopt;
    return std::pair{point + t0 * direction, point + t1 * direction};
}

Error not_a_hexagon(std::size_t m) {
    return make_error(Errc::wrong_size, "figure needs a hexagon, got " + std::to_string(m) + " vertices");
}

}  // namespace

Expected<FigureSpec> validate(const FigureSpec& spec) {
    if (spec.steps < 1) return make_error(Errc::invalid_argument, "figure steps must be at least 1");
    const auto in_unit = [](double x) { return x >= 0.0 && x <= 1.0; };
    if (!in_unit(spec.opacity_start) || !in_unit(spec.opacity_end)) {
        return make_error(Errc::invalid_argument, "opacities must lie in [0, 1]");
    }
    if (spec.width <= 0 || spec.height <= 0) return make_error(Errc::invalid_argument, "canvas must be positive");
    return spec;
}

Expected<FigureScene> build_scene(const exact::Polygon& p, const FigureSpec& spec) {
    if (p.size() != 6) return not_a_hexagon(p.size());
    if (auto v = validate(spec); !v) return v.error();

    FigureScene scene;
    const auto iterates = exact::iterate(p, spec.steps);
    std::optional<exact::PlanePoint> line_point;
    for (std::size_t n = 0; n < iterates.size(); ++n) {
        scene.iterates.push_back(spectral::to_float(iterates[n]));
        auto g = exact::centroid(iterates[n]);
        if (!g) continue;
        scene.centroids.push_back(spectral::to_complex(*g));
        if (n >= 1 && !line_point) line_point = *g;
    }
    const exact::PlanePoint limit = exact::vertex_centroid(p);
    if (line_point && *line_point != limit) {
        scene.line = std::pair{spectral::to_complex(limit), spectral::to_complex(*line_point - limit)};
    }
    return scene;
}

Expected<FigureScene> build_scene(const spectral::FloatPolygon& p, const FigureSpec& spec) {
    if (p.size() != 6) return not_a_hexagon(p.size());
    if (auto v = validate(spec); !v) return v.error();

    FigureScene scene;
    std::optional<Complex> line_point;
    spectral::FloatPolygon current = p;
    for (std::size_t n = 0; n <= spec.steps; ++n) {
        if (n > 0) current = spectral::midpoint_map(current);
        scene.iterates.push_back(current);
        auto g = spectral::centroid(current);
        if (!g) continue;
        scene.centroids.push_back(*g);
        if (n >= 1 && !line_point) line_point = *g;
    }
    const Complex limit = spectral::vertex_centroid(p);
    if (line_point && *line_point != limit) scene.line = std::pair{limit, *line_point - limit};
    return scene;
}

std::string render_svg(const FigureScene& scene, const FigureSpec& spec) {
    const Viewport vp = fit_viewport(scene, spec);
    const std::string w = std::to_string(spec.width);
    const std::string h = std::to_string(spec.height);

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + w + "\" height=\"" + h +
           "\" viewBox=\"0 0 " + w + " " + h + "\">\n";
    svg += "  <rect x=\"0\" y=\"0\" width=\"" + w + "\" height=\"" + h + "\" fill=\"white\"/>\n";

    svg += "  <g fill=\"none\" stroke=\"gray\" stroke-width=\"1.5\" stroke-linejoin=\"round\">\n";
    const std::size_t last = scene.iterates.empty() ? 0 : scene.iterates.size() - 1;
    for (std::size_t n = 0; n < scene.iterates.size(); ++n) {
        const double t = last == 0 ? 0.0 : static_cast<double>(n) / static_cast<double>(last);
        const double opacity = spec.opacity_start + (spec.opacity_end - spec.opacity_start) * t;
        svg += "    <polygon stroke-opacity=\"" + fixed(opacity) + "\" points=\"";
        for (std::size_t k = 0; k < scene.iterates[n].size(); ++k) {
            const auto& v = scene.iterates[n].vertices[k];
            if (k > 0) svg += ' ';
            svg += fixed(vp.px(v)) + "," + fixed(vp.py(v));
        }
        svg += "\"/>\n";
    }
    svg += "  </g>\n";

    if (spec.show_centroids && !scene.centroids.empty()) {
        svg += "  <g fill=\"black\">\n";
        for (const auto& g : scene.centroids) {
            svg += "    <circle cx=\"" + fixed(vp.px(g)) + "\" cy=\"" + fixed(vp.py(g)) + "\" r=\"2.500\"/>\n";
        }
        svg += "  </g>\n";
    }

    if (spec.show_line && scene.line) {
        if (auto seg = clip_line(scene.line->first, scene.line->second, vp)) {
            svg += "  <line x1=\"" + fixed(vp.px(seg->first)) + "\" y1=\"" + fixed(vp.py(seg->first)) + "\" x2=\"" +
                   fixed(vp.px(seg->second)) + "\" y2=\"" + fixed(vp.py(seg->second)) +
                   "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
        }
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace midpoint::cli
