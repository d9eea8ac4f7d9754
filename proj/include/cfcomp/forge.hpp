#pragma once

#include "cfcomp/cfinite.hpp"
#include "cfcomp/oracle.hpp"

#include <string>
#include <vector>

namespace cfc {

// Everything the bound-adherence checks need about one forge run. The root
// part of the q-side move is bounded by eta by construction; p's roots never
// move, so the value bounds below complete the spectral-distance budget.
struct PerturbationBudget {
    Rat eps;
    Dyadic eta_lb, eta_ub; // enclosure of eps^(1/(4*nbar-2))
    Rat value_bound_p;     // claimed bound for max_j |u_j - u~_j|
    Rat value_bound_q;     // claimed bound for max_j |v_j - v~_j|
};

struct ForgeResult {
    ExactProblem p_out, q_out;
    PerturbationBudget budget;
    long padded = 0;  // roots appended to the lower-order side before forging
    long matched = 0; // matched root pairs (the order of the common factor)
};

// Produce an exactly-equal pair within a controlled perturbation of (p, q):
// match the spectra at threshold eta, keep the matched part with p's root
// values as the common factor e, and re-extend both initial value vectors
// from u's prefix by e's recurrence. Requires the recurrence prefixes to
// agree within eps on indices min(n,m)..n+m (HypothesisViolated otherwise).
// Unequal orders are padded with the larger side's leading roots first; the
// outputs keep the padded order.
ForgeResult forge_equal(const ExactProblem& p, const ExactProblem& q, const Rat& eps);

struct SimplerPerturbation {
    ExactProblem out;
    Rat envelope; // claimed bound for max_j |u_j - u~_j|
};

// Single-sided move: replace the factor carried by the chosen root indices
// with new roots and re-extend the initial values from their own prefix by
// the new factor's recurrence. The output solves the lower-order problem
// (new_roots, prefix) exactly. Hypothesis checks at tolerance eps:
// each root moves by at most eps, and the prefix defect under the old factor
// stays below eps; HypothesisViolated otherwise.
SimplerPerturbation perturb_to_simpler(const ExactProblem& p,
                                       const std::vector<int>& factor_idx,
                                       const std::vector<QQi>& new_roots,
                                       const Rat& eps);

// Squared defects |u_j + sum_k e_k u_{j-l+k}|^2 for j = l..|seq|-1, exact.
std::vector<Rat> recurrence_defect_sq(const std::vector<QQi>& coeffs,
                                      const std::vector<QQi>& seq);

struct LabeledInstance {
    ExactProblem p, q;
    CompareLabel label = CompareLabel::Equal;
    Rat margin{0};      // perturbation scale separating it from its boundary
    std::string family;
};

enum class BoundaryKind {
    SharedDominantCoefficient,
    IdenticallyEqual,
    ZeroComplexCoefficient,
};

// A certified boundary instance plus two opposite-label perturbations of
// size ~2^-k, labels oracle-verified at construction.
struct BoundaryFamily {
    ExactProblem p, q;
    LabeledInstance up, down;
    long k = 0;
};

BoundaryFamily make_boundary_family(BoundaryKind kind, long k);

} // namespace cfc
