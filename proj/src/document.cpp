#include "midpoint/document.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

#include <json.hpp>

namespace midpoint::cli {

namespace {

using json = nlohmann::json;

std::string_view trim(std::string_view s) {
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

std::optional<double> parse_decimal(std::string_view text) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    if (text.empty()) return std::nullopt;
    for (char c : text) {
        const bool ok = (c >= '0' && c <= '9') || c == '.' || c == '-' || c == '+' || c == 'e' || c == 'E';
        if (!ok) return std::nullopt;
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) return std::nullopt;
    return value;
}

std::string shortest_decimal(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    std::string out(buf, res.ptr);
    if (out.find_first_of(".e") == std::string::npos) out += ".0";
    return out;
}

std::string normalize_coordinate(const std::string& text) {
    if (auto r = Rational::parse(text)) return r->to_string();
    if (auto d = parse_decimal(text)) return shortest_decimal(*d);
    return text;
}

Error coordinate_error(std::size_t vertex, std::string_view detail) {
    return make_error(Errc::parse_error, "vertex " + std::to_string(vertex) + ": " + std::string(detail));
}

}  // namespace

std::string format_decimal(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

Expected<CoordinateForm> classify_coordinate(std::string_view text) {
    if (auto r = Rational::parse(text)) {
        return text.find('/') == std::string_view::npos ? CoordinateForm::integer : CoordinateForm::fraction;
    }
    if (text.find('/') != std::string_view::npos) {
        return make_error(Errc::parse_error, "malformed fraction '" + std::string(text) + "'");
    }
    if (parse_decimal(text)) return CoordinateForm::decimal;
    return make_error(Errc::parse_error, "malformed number '" + std::string(text) + "'");
}

Expected<PolygonDocument> parse_document(std::string_view text) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        return make_error(Errc::parse_error, e.what());
    }
    if (!root.is_object() || !root.contains("vertices") || !root["vertices"].is_array()) {
        return make_error(Errc::parse_error, "expected an object with a \"vertices\" array");
    }
    const json& vertices = root["vertices"];
    if (vertices.empty()) return make_error(Errc::parse_error, "polygon needs at least one vertex");

    PolygonDocument doc;
    doc.vertices.reserve(vertices.size());
    for (std::size_t k = 0; k < vertices.size(); ++k) {
        const json& pair = vertices[k];
        if (!pair.is_array() || pair.size() != 2) return coordinate_error(k, "expected a pair [x, y]");
        std::array<std::string, 2> coords;
        for (std::size_t c = 0; c < 2; ++c) {
            const json& item = pair[c];
            if (item.is_string()) {
                coords[c] = std::string(trim(item.get<std::string>()));
            } else if (item.is_number_integer()) {
                coords[c] = item.dump();
            } else {
                return coordinate_error(k, "coordinates must be strings or integers");
            }
            if (auto form = classify_coordinate(coords[c]); !form) return coordinate_error(k, form.error().message);
        }
        doc.vertices.push_back(std::move(coords));
    }
    return doc;
}

std::string serialize_document(const PolygonDocument& doc) {
    // Normalized coordinates contain only [0-9+-./eE], so no JSON escaping is
    // needed.
    std::string out = "{\n  \"vertices\": [\n";
    for (std::size_t k = 0; k < doc.vertices.size(); ++k) {
        out += "    [\"" + normalize_coordinate(doc.vertices[k][0]) + "\", \"" +
               normalize_coordinate(doc.vertices[k][1]) + "\"]";
        out += k + 1 < doc.vertices.size() ? ",\n" : "\n";
    }
    out += "  ]\n}\n";
    return out;
}

Expected<exact::Polygon> to_exact_polygon(const PolygonDocument& doc) {
    std::vector<exact::PlanePoint> pts;
    pts.reserve(doc.vertices.size());
    for (std::size_t k = 0; k < doc.vertices.size(); ++k) {
        std::array<Rational, 2> xy;
        for (std::size_t c = 0; c < 2; ++c) {
            auto r = Rational::parse(doc.vertices[k][c]);
            if (!r) {
                if (parse_decimal(doc.vertices[k][c])) {
                    return make_error(Errc::mode_error, "vertex " + std::to_string(k) + ": decimal '" +
                                                            doc.vertices[k][c] + "' is not allowed in exact mode");
                }
                return coordinate_error(k, "malformed number '" + doc.vertices[k][c] + "'");
            }
            xy[c] = std::move(*r);
        }
        pts.emplace_back(std::move(xy[0]), std::move(xy[1]));
    }
    if (pts.empty()) return make_error(Errc::parse_error, "polygon needs at least one vertex");
    return exact::Polygon(std::move(pts));
}

Expected<spectral::FloatPolygon> to_float_polygon(const PolygonDocument& doc) {
    spectral::FloatPolygon out;
    out.vertices.reserve(doc.vertices.size());
    for (std::size_t k = 0; k < doc.vertices.size(); ++k) {
        std::array<double, 2> xy{};
        for (std::size_t c = 0; c < 2; ++c) {
            if (auto r = Rational::parse(doc.vertices[k][c])) {
                xy[c] = r->to_double();
            } else if (auto d = parse_decimal(doc.vertices[k][c])) {
                xy[c] = *d;
            } else {
                return coordinate_error(k, "malformed number '" + doc.vertices[k][c] + "'");
            }
        }
        out.vertices.emplace_back(xy[0], xy[1]);
    }
    if (out.vertices.empty()) return make_error(Errc::parse_error, "polygon needs at least one vertex");
    return out;
}

PolygonDocument document_from(const exact::Polygon& p) {
    PolygonDocument doc;
    doc.vertices.reserve(p.size());
    for (const auto& v : p.vertices()) doc.vertices.push_back({v.x.to_string(), v.y.to_string()});
    return doc;
}

PolygonDocument document_from(const spectral::FloatPolygon& p) {
    PolygonDocument doc;
    doc.vertices.reserve(p.size());
    for (const auto& v : p.vertices) doc.vertices.push_back({format_decimal(v.real()), format_decimal(v.imag())});
    return doc;
}

}  // namespace midpoint::cli
