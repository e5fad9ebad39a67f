#include "midpoint/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

namespace midpoint::cli {

namespace {

using json = nlohmann::ordered_json;
using exact::PlanePoint;

json header(std::string_view command) {
    json j;
    j["schema"] = kSchemaVersion;
    j["command"] = command;
    return j;
}

json to_json(const PlanePoint& p) { return json::array({p.x.to_string(), p.y.to_string()}); }

json to_json(const spectral::Complex& z) { return json::array({z.real(), z.imag()}); }

template <typename T>
json to_json(const std::optional<T>& value) {
    if (!value) return nullptr;
    if constexpr (std::is_same_v<T, PlanePoint> || std::is_same_v<T, spectral::Complex>) {
        return to_json(*value);
    } else {
        return json(*value);
    }
}

json vertices_json(const PolygonDocument& doc) {
    json out = json::array();
    for (const auto& [x, y] : doc.vertices) out.push_back(json::array({x, y}));
    return out;
}

json to_json(const verify::ColinearityReport& r) {
    json j;
    json centroids = json::array();
    for (const auto& g : r.centroids) centroids.push_back(to_json(g));
    j["centroids"] = std::move(centroids);
    j["line_anchor"] = to_json(r.line_anchor);
    j["line_direction"] = to_json(r.line_direction);
    j["all_colinear"] = r.all_colinear;
    j["first_violation"] = to_json(r.first_violation);
    j["g0_on_line"] = to_json(r.g0_on_line);
    j["limit_point"] = to_json(r.limit_point);
    j["limit_on_line"] = r.limit_on_line;
    j["undefined_centroids"] = r.undefined_count;
    return j;
}

json to_json(const verify::ConvergenceReport& r) {
    json j;
    j["indices"] = r.monotonicity.indices;
    j["projections"] = r.monotonicity.projections;
    j["stable_from"] = to_json(r.monotonicity.stable_from);
    j["sign_changes"] = r.monotonicity.sign_changes;
    j["ratio_indices"] = r.ratio_indices;
    j["distance_ratios"] = r.distance_ratios;
    j["orientation_imbalance"] = {{"primary", r.imbalance.primary}, {"secondary", r.imbalance.secondary}};
    j["normalized_primary"] = r.normalized_primary;
    return j;
}

json to_json(const verify::FuzzSummary& s) {
    json j;
    j["trials"] = s.trials;
    j["passed"] = s.passed;
    j["failed"] = s.failed;
    j["insufficient_data"] = s.insufficient_data;
    j["colinear_passed"] = s.colinear_passed;
    j["limit_on_line_passed"] = s.limit_on_line_passed;
    j["z_scaling_passed"] = s.z_scaling_passed;
    j["undefined_centroids"] = s.undefined_centroids;
    j["g0_on_line"] = s.g0_on_line;
    j["g0_off_line"] = s.g0_off_line;
    j["first_g0_off_line_trial"] = to_json(s.first_g0_off_line_trial);
    if (s.first_failure) {
        j["first_failure"] = {{"trial", s.first_failure->trial},
                              {"vertices", vertices_json(document_from(s.first_failure->hexagon))},
                              {"reason", s.first_failure->reason}};
    } else {
        j["first_failure"] = nullptr;
    }
    return j;
}

json to_json(const verify::CounterexampleReport& r) {
    json j;
    j["m"] = r.m;
    j["slopes"] = r.slopes;
    j["ratios"] = r.ratios;
    j["measured_ratio"] = r.measured_ratio;
    j["expected_ratio"] = r.expected_ratio;
    j["ratio_matches"] = r.ratio_matches;
    j["lines_pairwise_distinct"] = r.lines_pairwise_distinct;
    json centroids = json::array();
    for (const auto& g : r.centroids) centroids.push_back(to_json(g));
    j["centroids"] = std::move(centroids);
    j["centroids_on_slope_lines"] = r.centroids_on_slope_lines;
    j["passed"] = r.passed;
    return j;
}

// Like dump(2), but arrays of scalars stay on one line so coordinate pairs
// and numeric series read naturally.
void write_pretty(const json& j, int indent, std::string& out) {
    const auto pad = [&out](int n) { out.append(static_cast<std::size_t>(n), ' '); };
    if (j.is_object()) {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        std::size_t i = 0;
        for (const auto& [key, value] : j.items()) {
            pad(indent + 2);
            out += json(key).dump() + ": ";
            write_pretty(value, indent + 2, out);
            out += ++i < j.size() ? ",\n" : "\n";
        }
        pad(indent);
        out += "}";
    } else if (j.is_array()) {
        const bool flat = std::none_of(j.begin(), j.end(), [](const json& e) { return e.is_structured(); });
        if (flat) {
            out += j.dump(-1, ' ', false);
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            pad(indent + 2);
            write_pretty(j[i], indent + 2, out);
            out += i + 1 < j.size() ? ",\n" : "\n";
        }
        pad(indent);
        out += "]";
    } else {
        out += j.dump();
    }
}

std::string dump(const json& j) {
    std::string out;
    write_pretty(j, 0, out);
    out += "\n";
    return out;
}

CommandResult failure(int status, const Error& error) {
    return {status, {}, std::string(to_string(error.code)) + ": " + error.message + "\n"};
}

}  // namespace

CommandResult cmd_iterate(const PolygonDocument& input, std::size_t steps, NumberMode mode) {
    json j = header("iterate");
    j["mode"] = mode == NumberMode::exact ? "exact" : "float";
    j["steps"] = steps;
    json iterates = json::array();

    if (mode == NumberMode::exact) {
        auto polygon = to_exact_polygon(input);
        if (!polygon) return failure(kExitUsage, polygon.error());
        const auto seq = exact::iterate(*polygon, steps);
        for (std::size_t n = 0; n < seq.size(); ++n) {
            iterates.push_back({{"n", n}, {"vertices", vertices_json(document_from(seq[n]))}});
        }
    } else {
        auto polygon = to_float_polygon(input);
        if (!polygon) return failure(kExitUsage, polygon.error());
        spectral::FloatPolygon current = *polygon;
        for (std::size_t n = 0; n <= steps; ++n) {
            if (n > 0) current = spectral::midpoint_map(current);
            iterates.push_back({{"n", n}, {"vertices", vertices_json(document_from(current))}});
        }
    }
    j["iterates"] = std::move(iterates);
    return {kExitPass, dump(j), {}};
}

CommandResult cmd_verify(const PolygonDocument& input, std::size_t steps) {
    auto polygon = to_exact_polygon(input);
    if (!polygon) return failure(kExitUsage, polygon.error());
    auto report = verify::verify_hexagon_theorem(*polygon, steps);
    if (!report) {
        if (report.error().code != Errc::insufficient_data) return failure(kExitUsage, report.error());
        json j = header("verify");
        j["status"] = "insufficient_data";
        j["message"] = report.error().message;
        return {kExitInsufficientData, dump(j), failure(kExitInsufficientData, report.error()).diagnostics};
    }

    json j = header("verify");
    const bool pass = report->all_colinear && report->limit_on_line;
    j["status"] = pass ? "pass" : "violation";
    j["steps"] = steps;
    j["colinearity"] = to_json(*report);
    j["z_scaling"] = verify::verify_z_scaling(*polygon).value();
    auto convergence = verify::convergence_diagnostics(*polygon, steps);
    j["monotonicity"] = convergence ? to_json(*convergence) : json(nullptr);
    return {pass ? kExitPass : kExitViolation, dump(j), {}};
}

CommandResult cmd_fuzz(const verify::FuzzConfig& cfg) {
    auto valid = verify::validate(cfg);
    if (!valid) return failure(kExitUsage, valid.error());
    const verify::FuzzSummary summary = verify::fuzz_hexagons(*valid);
    json j = header("fuzz");
    j["status"] = summary.failed == 0 ? "pass" : "violation";
    j["config"] = {{"seed", valid->seed},
                   {"trials", valid->trials},
                   {"bound", valid->coordinate_bound},
                   {"steps", valid->steps}};
    j["summary"] = to_json(summary);
    return {summary.failed == 0 ? kExitPass : kExitViolation, dump(j), {}};
}

CommandResult cmd_proposition(std::size_t m, std::size_t steps, double tolerance) {
    if (!(tolerance > 0.0)) return failure(kExitUsage, make_error(Errc::invalid_argument, "tolerance must be positive"));
    auto report = verify::verify_proposition(m, steps, tolerance);
    if (!report) return failure(kExitUsage, report.error());
    json j = header("proposition");
    j["status"] = report->passed ? "pass" : "violation";
    j["steps"] = steps;
    j["tolerance"] = tolerance;
    j["report"] = to_json(*report);
    return {report->passed ? kExitPass : kExitViolation, dump(j), {}};
}

CommandResult cmd_figure(const PolygonDocument& input, const FigureSpec& spec, NumberMode mode,
                         const std::filesystem::path& output) {
    Expected<FigureScene> scene = make_error(Errc::invalid_argument, "unreachable");
    if (mode == NumberMode::exact) {
        auto polygon = to_exact_polygon(input);
        if (!polygon) return failure(kExitUsage, polygon.error());
        scene = build_scene(*polygon, spec);
    } else {
        auto polygon = to_float_polygon(input);
        if (!polygon) return failure(kExitUsage, polygon.error());
        scene = build_scene(*polygon, spec);
    }
    if (!scene) return failure(kExitUsage, scene.error());

    const std::string svg = render_svg(*scene, spec);
    std::ofstream file(output, std::ios::binary);
    if (!file || !(file << svg) || !file.flush()) {
        return failure(kExitUsage, make_error(Errc::io_error, "cannot write " + output.string()));
    }
    json j = header("figure");
    j["output"] = output.string();
    j["polygons"] = scene->iterates.size();
    j["centroids"] = spec.show_centroids ? scene->centroids.size() : 0;
    j["line"] = spec.show_line && scene->line.has_value();
    return {kExitPass, dump(j), {}};
}

namespace {

Expected<PolygonDocument> load_document(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) return make_error(Errc::io_error, "cannot read " + path);
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    return parse_document(text);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Midpoint iteration of polygons: exact centroid checks and spectral analysis", "midpoint"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string mode_name = "exact";
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> steps;
    std::string output_path;
    double tolerance = spectral::kCubicRelativeTolerance;
    app.add_option("--mode", mode_name, "Number mode")->check(CLI::IsMember({"exact", "float"}));
    app.add_option("--seed", seed, "Random seed (fuzz)");
    app.add_option("--steps", steps, "Number of midpoint iterations");
    app.add_option("--output", output_path, "Output file (report, or SVG for figure)");
    app.add_option("--tolerance", tolerance, "Relative tolerance for float checks");

    std::string input_path;
    auto* iterate_cmd = app.add_subcommand("iterate", "Print every iterate of a polygon");
    iterate_cmd->add_option("input", input_path, "Polygon document ('-' for stdin)")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Check exact colinearity of the centroids of a hexagon");
    verify_cmd->add_option("input", input_path, "Polygon document ('-' for stdin)")->required();

    verify::FuzzConfig fuzz_cfg;
    auto* fuzz_cmd = app.add_subcommand("fuzz", "Randomized exact campaign over integer hexagons");
    fuzz_cmd->add_option("--trials", fuzz_cfg.trials, "Number of hexagons")->capture_default_str();
    fuzz_cmd->add_option("--bound", fuzz_cfg.coordinate_bound, "Coordinates drawn from [-B, B]")->capture_default_str();

    std::size_t m = 7;
    auto* prop_cmd = app.add_subcommand("proposition", "Non-colinear centroid families for m = 5 and m >= 7");
    prop_cmd->add_option("-m,--m", m, "Polygon size")->capture_default_str();

    FigureSpec figure_spec;
    bool no_line = false;
    bool no_centroids = false;
    auto* figure_cmd = app.add_subcommand("figure", "Render the iterated hexagon and its centroid line as SVG");
    figure_cmd->add_option("input", input_path, "Polygon document ('-' for stdin)")->required();
    figure_cmd->add_flag("--no-line", no_line, "Omit the centroid line");
    figure_cmd->add_flag("--no-centroids", no_centroids, "Omit the centroid dots");
    figure_cmd->add_option("--width", figure_spec.width)->capture_default_str();
    figure_cmd->add_option("--height", figure_spec.height)->capture_default_str();
    figure_cmd->add_option("--opacity-start", figure_spec.opacity_start)->capture_default_str();
    figure_cmd->add_option("--opacity-end", figure_spec.opacity_end)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    const NumberMode mode = mode_name == "float" ? NumberMode::floating : NumberMode::exact;
    CommandResult result;
    if (*fuzz_cmd) {
        fuzz_cfg.seed = seed.value_or(fuzz_cfg.seed);
        fuzz_cfg.steps = steps.value_or(fuzz_cfg.steps);
        result = cmd_fuzz(fuzz_cfg);
    } else if (*prop_cmd) {
        result = cmd_proposition(m, steps.value_or(10), tolerance);
    } else {
        auto doc = load_document(input_path);
        if (!doc) {
            err << to_string(doc.error().code) << ": " << doc.error().message << "\n";
            return kExitUsage;
        }
        if (*iterate_cmd) {
            result = cmd_iterate(*doc, steps.value_or(1), mode);
        } else if (*verify_cmd) {
            result = cmd_verify(*doc, steps.value_or(12));
        } else {
            if (output_path.empty()) {
                err << "figure: --output is required\n";
                return kExitUsage;
            }
            figure_spec.steps = steps.value_or(figure_spec.steps);
            figure_spec.show_line = !no_line;
            figure_spec.show_centroids = !no_centroids;
            result = cmd_figure(*doc, figure_spec, mode, output_path);
            output_path.clear();  // the SVG went there; the summary goes to stdout
        }
    }

    err << result.diagnostics;
    if (!output_path.empty() && !result.output.empty()) {
        std::ofstream file(output_path, std::ios::binary);
        if (!file || !(file << result.output)) {
            err << "IOError: cannot write " << output_path << "\n";
            return kExitUsage;
        }
    } else {
        out << result.output;
    }
    return result.exit_status;
}

}  // namespace midpoint::cli
