#pragma once

#include <stdexcept>
#include <string>

namespace fqmzv {

// Value-dependent failure of a computation: divergent series, exhausted
// precision, exceeded cost budget, unverifiable runtime precondition.
// Callers that drive evaluations (CLI, scans) map this to a "math error"
// outcome; std::invalid_argument is reserved for malformed input / misuse.
class math_error : public std::runtime_error {
public:
    explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace fqmzv
