#pragma once

#include "cfcomp/forge.hpp"

#include <vector>

namespace cfc {

// Deterministic labeled corpus covering the halting routes: one-sided real
// dominance of either sign and side, complex-dominant oscillation, repeated
// dominant real roots, order-0 right sides, and sign-opposed shared
// dominance. Labels come from the construction and are re-checked against
// the oracle. margin records the perturbation scale separating the instance
// from its nearest boundary.
std::vector<LabeledInstance> make_soundness_corpus();

// Robust instance at distance ~2^-k from the shared-dominant boundary:
// f = e^t + e^{-t} against g = e^{(1 - 2^-k)t}.
LabeledInstance make_scaling_instance(long k);

struct ForgeCase {
    ExactProblem p, q;
    Rat eps;
};

// 100 near-equal forgeable pairs: a base problem against a root-jittered
// restatement of the same function, jitter fine enough to keep the measured
// prefix disagreement well under 1, mixed orders.
std::vector<ForgeCase> make_forge_corpus();

struct EqualityCase {
    ExactProblem p, q;
    bool equal;
};

// 100 pairs for the equality tester: re-encodings of the same function,
// generic unequal pairs, and pairs whose difference first shows at the very
// last prefix index n+m-1.
std::vector<EqualityCase> make_equality_corpus();

} // namespace cfc
