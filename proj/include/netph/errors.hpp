#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace netph {

// Input that could not be parsed (edge lists, CSV artifacts). Carries the
// 1-based line number when one is known.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line(line) {}
    std::size_t line;
};

// A structural contract was broken (non-monotone filtration, missing face,
// mismatched weight table, ...).
struct InvariantViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Generator parameter calibration did not converge.
struct CalibrationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace netph
