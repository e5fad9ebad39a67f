#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "midpoint/exact_poly.hpp"
#include "midpoint/expected.hpp"
#include "midpoint/spectral.hpp"

// Polygon documents: JSON text of the form
//
//   { "vertices": [ ["0", "0"], ["22/7", "-1"], ["1.25", "3"] ] }
//
// Each coordinate is an integer, an exact fraction, or a decimal. JSON
// integers are accepted in place of strings. Decimals are only usable in
// float mode.
namespace midpoint::cli {

enum class NumberMode { exact, floating };

enum class CoordinateForm { integer, fraction, decimal };

struct PolygonDocument {
    std::vector<std::array<std::string, 2>> vertices;

    friend bool operator==(const PolygonDocument&, const PolygonDocument&) = default;
};

// Classifies a coordinate string; parse_error for anything malformed,
// including zero denominators and non-finite decimals.
Expected<CoordinateForm> classify_coordinate(std::string_view text);

// Errors: parse_error.
Expected<PolygonDocument> parse_document(std::string_view text);

// Canonical form: fractions reduced, decimals in shortest round-trip form,
// fixed layout. serialize(parse(serialize(d))) == serialize(d).
std::string serialize_document(const PolygonDocument& doc);

// Errors: mode_error when a coordinate is a decimal.
Expected<exact::Polygon> to_exact_polygon(const PolygonDocument& doc);
Expected<spectral::FloatPolygon> to_float_polygon(const PolygonDocument& doc);

PolygonDocument document_from(const exact::Polygon& p);
// Decimals with 17 significant digits.
PolygonDocument document_from(const spectral::FloatPolygon& p);

// Locale-independent "%.17g".
std::string format_decimal(double value);

}  // namespace midpoint::cli
