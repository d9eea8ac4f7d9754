#pragma once

#include "cfcomp/scalar.hpp"

#include <vector>

namespace cfc {

// Q_{n,m,i}(X_1..X_n) = sum over k_1+...+k_n = m of
//   binom(k_1+i, i) * X_n^{k_n} * ... * X_1^{k_1},
// the entry family of the reduced Vandermonde minors. Conventions:
// Q_{n,m,i} = 0 for m < 0, Q_{n,0,i} = 1. Evaluated by the tableau
// recursion Q_{l+1,m,i} = sum_k X_{l+1}^k Q_{l,m-k,i}, one new variable at a
// time, so the cost is polynomial (no composition enumeration).
template <class S>
S q_eval(long nvars, long m, long i, const std::vector<S>& pts) {
    if (m < 0) return S(0);
    if (m == 0) return S(1);
    if (nvars < 1 || static_cast<long>(pts.size()) < nvars)
        throw std::invalid_argument("q_eval: bad variable count");
    // row[d] = Q_{1,d,i}(X_1) = binom(d+i, i) X_1^d
    std::vector<S> row(static_cast<size_t>(m + 1), S(0));
    std::vector<S> x1pow(static_cast<size_t>(m + 1), S(1));
    for (long d = 1; d <= m; ++d) x1pow[d] = x1pow[d - 1] * pts[0];
    for (long d = 0; d <= m; ++d)
        row[d] = ScalarTraits<S>::from_int(binom_int(d + i, i)) * x1pow[d];
    for (long v = 1; v < nvars; ++v) {
        std::vector<S> xp(static_cast<size_t>(m + 1), S(1));
        for (long d = 1; d <= m; ++d) xp[d] = xp[d - 1] * pts[v];
        std::vector<S> next(static_cast<size_t>(m + 1), S(0));
        for (long d = 0; d <= m; ++d) {
            S acc(0);
            for (long k = 0; k <= d; ++k) acc = acc + xp[k] * row[d - k];
            next[d] = acc;
        }
        row = std::move(next);
    }
    return row[static_cast<size_t>(m)];
}

// Definition-faithful enumeration over compositions; exponential, used as an
// independent cross-check of the tableau.
template <class S>
S q_eval_by_definition(long nvars, long m, long i, const std::vector<S>& pts) {
    if (m < 0) return S(0);
    std::vector<long> k(static_cast<size_t>(nvars), 0);
    S total(0);
    // Enumerate k_1 + ... + k_n = m.
    auto rec = [&](auto&& self, long pos, long left) -> void {
        if (pos == nvars - 1) {
            k[pos] = left;
            S term = ScalarTraits<S>::from_int(binom_int(k[0] + i, i));
            for (long v = 0; v < nvars; ++v) term = term * pow_s(pts[v], k[v]);
            total = total + term;
            return;
        }
        for (long take = 0; take <= left; ++take) {
            k[pos] = take;
            self(self, pos + 1, left - take);
        }
    };
    rec(rec, 0, m);
    return total;
}

} // namespace cfc
