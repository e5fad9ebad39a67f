#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "midpoint/exact_poly.hpp"
#include "midpoint/expected.hpp"
#include "midpoint/spectral.hpp"

// SVG rendering of an iterated hexagon, its centroids and the centroid line.
namespace midpoint::cli {

struct FigureSpec {
    std::size_t steps = 13;
    bool show_line = true;
    bool show_centroids = true;
    double opacity_start = 1.0;
    double opacity_end = 0.1;
    int width = 800;
    int height = 800;
};

// Errors: invalid_argument (steps == 0, opacity outside [0, 1], non-positive
// canvas).
Expected<FigureSpec> validate(const FigureSpec& spec);

// Everything the renderer draws, already in float world coordinates.
struct FigureScene {
    std::vector<spectral::FloatPolygon> iterates;
    std::vector<spectral::Complex> centroids;
    // A point on the centroid line and its direction.
    std::optional<std::pair<spectral::Complex, spectral::Complex>> line;
};

// Iterates and centroids are computed exactly and converted for drawing.
// The line runs through G_1 (or the first defined G_n, n >= 1) and the
// vertex centroid. Errors: wrong_size (m != 6), invalid_argument.
Expected<FigureScene> build_scene(const exact::Polygon& p, const FigureSpec& spec);
Expected<FigureScene> build_scene(const spectral::FloatPolygon& p, const FigureSpec& spec);

// SVG 1.1 document; byte-deterministic for a given scene and spec.
std::string render_svg(const FigureScene& scene, const FigureSpec& spec);

}  // namespace midpoint::cli
