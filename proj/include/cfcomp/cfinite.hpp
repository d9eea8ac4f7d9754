#pragma once

#include "cfcomp/charpoly.hpp"
#include "cfcomp/name.hpp"

#include <optional>
#include <vector>

namespace cfc {

// A Cauchy problem: f^(n) = -c_{n-1} f^(n-1) - ... - c_0 f with initial
// derivatives u. Order 0 is the constant zero function. Coefficients and
// initial values arrive as names; `real` records that every imaginary part
// is the literal zero name (construction-time knowledge, not decided).
struct CauchyProblem {
    std::vector<ComplexName> c;
    std::vector<ComplexName> u;
    bool real = true;

    long order() const { return static_cast<long>(c.size()); }

    static CauchyProblem from_exact(const std::vector<QQi>& coeffs,
                                    const std::vector<QQi>& init);
};

// The restricted instance class with exactly known spectrum: roots listed
// with multiplicity (conjugate-closed when the problem is real) plus exact
// initial values. Ground truth (oracle, forging, corpus construction) lives
// here; the engine itself never peeks at it.
struct ExactProblem {
    std::vector<QQi> roots;
    std::vector<QQi> u;

    long order() const { return static_cast<long>(roots.size()); }
    std::vector<QQi> coeffs() const { return coeffs_from_roots(roots); }
    bool is_real() const;
    CauchyProblem to_cauchy() const;
    // First `count` terms of the associated recurrence sequence
    // (u extended by the characteristic recurrence).
    std::vector<QQi> prefix(long count) const;
};

// u_{j} = -c_{n-1} u_{j-1} - ... - c_0 u_{j-n}; returns the seed extended to
// `count` terms, in whichever scalar arithmetic.
template <class S>
std::vector<S> extend_sequence(const std::vector<S>& coeffs, std::vector<S> vals,
                               long count) {
    long n = static_cast<long>(coeffs.size());
    while (static_cast<long>(vals.size()) < count) {
        if (n == 0) {
            vals.push_back(S(0));
            continue;
        }
        S acc(0);
        size_t j = vals.size();
        for (long k = 0; k < n; ++k) acc = acc - coeffs[k] * vals[j - n + k];
        vals.push_back(acc);
    }
    vals.resize(static_cast<size_t>(count));
    return vals;
}

// Spec-shaped prefix: terms u_0..u_K as balls, names queried at precision
// prec. K >= order required.
std::vector<ComplexBall> extend_recurrence(const CauchyProblem& p, long K, long prec);

// Coefficient / initial-value balls at the given query precision.
std::vector<ComplexBall> coefficient_balls(const CauchyProblem& p, long prec);
std::vector<ComplexBall> initial_balls(const CauchyProblem& p, long prec);

} // namespace cfc
