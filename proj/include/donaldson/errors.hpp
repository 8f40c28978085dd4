#pragma once

#include <stdexcept>
#include <string>

namespace donaldson {

// Malformed or out-of-contract input (CLI exit code 2).
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input parsed fine but a mathematical invariant or residual failed (CLI exit code 3).
struct inconsistency_error : std::runtime_error {
    explicit inconsistency_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace donaldson
