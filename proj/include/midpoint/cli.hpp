#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "midpoint/document.hpp"
#include "midpoint/figure.hpp"
#include "midpoint/verify.hpp"

namespace midpoint::cli {

// Process exit statuses. Stable.
enum ExitStatus : int {
    kExitPass = 0,
    kExitViolation = 1,  // a check failed
    kExitUsage = 2,      // usage, parse, or I/O error
    kExitInsufficientData = 3,
};

// Report schema tag written into every JSON output.
inline constexpr const char* kSchemaVersion = "midpoint-report/1";

struct CommandResult {
    int exit_status = kExitPass;
    std::string output;       // report text for stdout (or --output)
    std::string diagnostics;  // for stderr
};

// Each command returns its structured report; run() handles argv and files.
CommandResult cmd_iterate(const PolygonDocument& input, std::size_t steps, NumberMode mode);
CommandResult cmd_verify(const PolygonDocument& input, std::size_t steps);
CommandResult cmd_fuzz(const verify::FuzzConfig& cfg);
CommandResult cmd_proposition(std::size_t m, std::size_t steps, double tolerance);
// Writes the SVG to `output`; the returned output is a short JSON summary.
CommandResult cmd_figure(const PolygonDocument& input, const FigureSpec& spec, NumberMode mode,
                         const std::filesystem::path& output);

// Full command line: midpoint <iterate|verify|fuzz|proposition|figure> ...
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace midpoint::cli
