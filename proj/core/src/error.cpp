#include "rift/error.hpp"

namespace rift {

const char* to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::precondition: return "precondition violation";
    case Errc::instance_too_large: return "instance too large";
    case Errc::box_too_large: return "box too large";
    case Errc::point_outside_region: return "point outside region";
    case Errc::unreachable_crystal: return "unreachable crystal";
    case Errc::disconnected_required_set: return "disconnected required set";
    case Errc::too_many_bonds: return "too many bonds";
    case Errc::syntax: return "syntax error";
    case Errc::invariant: return "invariant violation";
    case Errc::internal: return "internal error";
    }
    return "unknown error";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code)
{
}

}  // namespace rift
