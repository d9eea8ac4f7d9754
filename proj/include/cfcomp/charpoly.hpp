#pragma once

#include "cfcomp/ball.hpp"
#include "cfcomp/name.hpp"

#include <vector>

namespace cfc {

// Monic polynomial z^n + c[n-1] z^(n-1) + ... + c[0]; the scalar is either an
// exact Gaussian rational or a complex ball.
template <class S>
struct Poly {
    std::vector<S> c; // low to high, size = degree
    long degree() const { return static_cast<long>(c.size()); }
};

using CharPoly = Poly<ComplexBall>;
using ExactPoly = Poly<QQi>;

// Coefficients of prod (z - r_j), monic, exact in the scalar's arithmetic.
template <class S>
std::vector<S> coeffs_from_roots(const std::vector<S>& roots) {
    std::vector<S> c; // running monic polynomial, lead coefficient implied
    for (const S& r : roots) {
        size_t m = c.size();
        std::vector<S> next(m + 1, S(0));
        for (size_t k = 0; k <= m; ++k) {
            S v = (k >= 1) ? c[k - 1] : S(0);       // from z * P
            S w = (k < m) ? c[k] : S(1);            // coefficient hit by -r
            next[k] = v - r * w;
        }
        c = std::move(next);
    }
    return c;
}

// Evaluate the monic polynomial at z by Horner.
template <class S>
S poly_eval_monic(const std::vector<S>& c, const S& z) {
    S acc(1);
    for (size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
    return acc;
}

// Derivative coefficients of the monic polynomial (result not monic:
// returns full coefficient list low..high of length n).
template <class S>
std::vector<S> poly_derivative_monic(const std::vector<S>& c) {
    long n = static_cast<long>(c.size());
    std::vector<S> d(static_cast<size_t>(n), S(0));
    for (long k = 1; k < n; ++k) d[static_cast<size_t>(k - 1)] = S(k) * c[static_cast<size_t>(k)];
    if (n >= 1) d[static_cast<size_t>(n - 1)] = S(n);
    return d;
}

template <class S>
S poly_eval_full(const std::vector<S>& c, const S& z) {
    S acc(0);
    for (size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
    return acc;
}

// Sup norm of the coefficient vector, exact scalar case.
Rat exact_poly_sup_norm(const std::vector<QQi>& c);

} // namespace cfc
