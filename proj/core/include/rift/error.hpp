#pragma once

#include <stdexcept>
#include <string>

namespace rift {

enum class Errc {
    precondition,
    instance_too_large,
    box_too_large,
    point_outside_region,
    unreachable_crystal,
    disconnected_required_set,
    too_many_bonds,
    syntax,
    invariant,
    internal,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message);

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace rift
