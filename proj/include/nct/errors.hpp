#pragma once

#include <stdexcept>
#include <string>

namespace nct {

// Raised when a computed object fails one of the library's built-in
// consistency assertions (as opposed to bad user input).
struct verification_error : std::runtime_error {
    explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

// Bad arguments, malformed files, dimension mismatches.
struct usage_error : std::invalid_argument {
    explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace nct
