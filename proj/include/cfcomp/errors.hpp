#pragma once

#include <stdexcept>
#include <string>

namespace cfc {

// Thrown when a ball divisor cannot be certified away from zero.
struct DivisorStraddlesZero : std::runtime_error {
    explicit DivisorStraddlesZero(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by certification / linear-solve steps that need more working bits.
// The caller owning the precision schedule decides how to restart.
struct PrecisionExhausted : std::runtime_error {
    explicit PrecisionExhausted(const std::string& what) : std::runtime_error(what) {}
};

struct LengthMismatch : std::runtime_error {
    explicit LengthMismatch(const std::string& what) : std::runtime_error(what) {}
};

// Leading-coefficient evaluation with a collapsing denominator factor.
struct SingularDenominator : std::runtime_error {
    explicit SingularDenominator(const std::string& what) : std::runtime_error(what) {}
};

// Forging was asked for on a pair whose prefixes are not close enough.
struct HypothesisViolated : std::runtime_error {
    explicit HypothesisViolated(const std::string& what) : std::runtime_error(what) {}
};

// The exact classifier met a configuration it refuses to label.
struct OracleInapplicable : std::runtime_error {
    explicit OracleInapplicable(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cfc
