#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kg/exec.hpp"

namespace kg {

// Result of sweeping an exact identity over an index range. Sweeps enumerate
// indices in a fixed order; a parallel run reports the same first_failure as
// the serial one (the smallest failing tuple in enumeration order).
struct IdentityReport {
    std::string name;
    std::string range;
    bool all_passed = true;
    std::optional<std::vector<long long>> first_failure;
};

}  // namespace kg
