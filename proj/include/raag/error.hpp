#pragma once

#include <stdexcept>
#include <string>

namespace raag {

// Single exception type for all domain errors (bad input, violated
// preconditions, size limits).  The CLI maps it to exit code 2.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace raag
