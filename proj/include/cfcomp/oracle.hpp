#pragma once

#include "cfcomp/cfinite.hpp"

#include <utility>
#include <vector>

namespace cfc {

enum class CompareLabel { GE, NotGE, Equal };

const char* to_string(CompareLabel l);

// Spectral decomposition with exact coefficients: for each distinct root, the
// dense coefficient list of its attached polynomial (degree < multiplicity).
struct ExactModes {
    std::vector<std::pair<QQi, std::vector<QQi>>> modes;
};

ExactModes exact_modes(const ExactProblem& p);

// Ground truth for "f - g eventually >= 0" on the restricted class, by
// classifying the dominant surviving mode of the difference. Throws
// OracleInapplicable when the classification rules cannot call it (ties the
// dominant-mode analysis does not resolve).
CompareLabel oracle_eventual_compare(const ExactProblem& p, const ExactProblem& q);

} // namespace cfc
