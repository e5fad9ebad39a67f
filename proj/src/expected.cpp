#include "midpoint/expected.hpp"

namespace midpoint {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::area_zero: return "AreaZero";
        case Errc::wrong_size: return "WrongSize";
        case Errc::insufficient_data: return "InsufficientData";
        case Errc::degenerate_denominator: return "DegenerateDenominator";
        case Errc::unsupported_m: return "UnsupportedM";
        case Errc::modes_not_projected: return "ModesNotProjected";
        case Errc::invalid_argument: return "InvalidArgument";
        case Errc::parse_error: return "ParseError";
        case Errc::mode_error: return "ModeError";
        case Errc::io_error: return "IOError";
    }
    return "Unknown";
}

}  // namespace midpoint
