#pragma once

#include "cfcomp/errors.hpp"
#include "cfcomp/qtableau.hpp"

#include <vector>

namespace cfc {

// Multiplicity signature (m_1, ..., m_N) of a confluent Vandermonde system;
// block j contributes m_j columns for the functions t^k e^{lambda_j t},
// k < m_j.
struct Signature {
    std::vector<long> m;
    long total() const {
        long s = 0;
        for (long v : m) s += v;
        return s;
    }
};

// Row p (1-based), block j, local column q: the (p-1)-th derivative at 0 of
// t^(q-1) e^(lambda_j t) divided by (q-1)! -- or times nothing when
// `modified` is set, which multiplies the column by (q-1)! and is the matrix
// the initial-value system actually uses.
template <class S>
std::vector<std::vector<S>> build_vandermonde(const Signature& sig,
                                              const std::vector<S>& pts, bool modified) {
    long n = sig.total();
    if (pts.size() != sig.m.size())
        throw LengthMismatch("one point per signature block required");
    std::vector<std::vector<S>> mat(static_cast<size_t>(n),
                                    std::vector<S>(static_cast<size_t>(n), S(0)));
    long col = 0;
    for (size_t j = 0; j < sig.m.size(); ++j) {
        for (long q = 1; q <= sig.m[j]; ++q, ++col) {
            for (long p = 1; p <= n; ++p) {
                if (p < q) continue; // binom(p-1, q-1) = 0
                Int f = binom_int(p - 1, q - 1);
                if (modified) f *= factorial_int(q - 1);
                mat[p - 1][col] =
                    ScalarTraits<S>::from_int(f) * pow_s(pts[j], p - q);
            }
        }
    }
    return mat;
}

// Division-free determinant: Laplace expansion memoized over column subsets,
// O(2^n n) scalar operations. Safe on balls (no pivoting decisions).
template <class S>
S det_dp(const std::vector<std::vector<S>>& mat) {
    size_t n = mat.size();
    if (n == 0) return S(1);
    size_t full = size_t(1) << n;
    std::vector<S> dp(full, S(0));
    dp[0] = S(1);
    std::vector<int> popcount(full, 0);
    for (size_t s = 1; s < full; ++s) popcount[s] = popcount[s >> 1] + (s & 1);
    for (size_t s = 1; s < full; ++s) {
        size_t row = static_cast<size_t>(popcount[s]) - 1;
        S acc(0);
        // Cofactor expansion along the last row of the column subset; the
        // leading sign is (-1)^row, then alternating over present columns.
        int sign = (row % 2 == 0) ? 1 : -1;
        for (size_t c = 0; c < n; ++c) {
            if (!(s & (size_t(1) << c))) continue;
            S term = mat[row][c] * dp[s & ~(size_t(1) << c)];
            acc = (sign > 0) ? acc + term : acc - term;
            sign = -sign;
        }
        dp[s] = acc;
    }
    return dp[full - 1];
}

// Gaussian elimination with certified pivots. For balls a pivot must exclude
// zero (largest center modulus first); otherwise PrecisionExhausted, since
// more working precision may still resolve it. Exact scalars take any
// nonzero pivot.
template <class S>
std::vector<S> solve_linear(std::vector<std::vector<S>> a, std::vector<S> b) {
    size_t n = a.size();
    if (b.size() != n) throw LengthMismatch("solve_linear: shape mismatch");
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = i;
    for (size_t col = 0; col < n; ++col) {
        size_t best = col;
        double best_score = -1.0;
        for (size_t r = col; r < n; ++r) {
            double sc = ScalarTraits<S>::pivot_score(a[r][col]);
            if (sc > best_score) {
                best_score = sc;
                best = r;
            }
        }
        std::swap(a[col], a[best]);
        std::swap(b[col], b[best]);
        if (!ScalarTraits<S>::usable_pivot(a[col][col]))
            throw PrecisionExhausted("solve_linear: pivot not certified nonzero");
        for (size_t r = col + 1; r < n; ++r) {
            S f = a[r][col] / a[col][col];
            for (size_t c = col; c < n; ++c) a[r][c] = a[r][c] - f * a[col][c];
            b[r] = b[r] - f * b[col];
        }
    }
    std::vector<S> x(n, S(0));
    for (size_t i = n; i-- > 0;) {
        S acc = b[i];
        for (size_t c = i + 1; c < n; ++c) acc = acc - a[i][c] * x[c];
        x[i] = acc / a[i][i];
    }
    return x;
}

// Reduced minor A_{n,m1,j} for the signature (m1, 1, ..., 1): determinant of
// the echelon-reduced n x (n-1) matrix with row j deleted. pts holds the
// distinct argument list (lambda_1, lambda_{m1+1}, ..., lambda_n), length
// n - m1 + 1.
template <class S>
S a_minor(long n, long m1, long j, const std::vector<S>& pts) {
    if (m1 < 1 || m1 > n || j < 1 || j > n)
        throw std::invalid_argument("a_minor: bad indices");
    if (static_cast<long>(pts.size()) != n - m1 + 1)
        throw LengthMismatch("a_minor: need n - m1 + 1 argument points");
    // Reduced matrix, n rows, n-1 columns.
    std::vector<std::vector<S>> w(static_cast<size_t>(n),
                                  std::vector<S>(static_cast<size_t>(n - 1), S(0)));
    long col = 0;
    if (m1 >= 2) {
        for (long q = 1; q <= m1 - 1; ++q, ++col)
            for (long p = q; p <= n; ++p)
                w[p - 1][col] = ScalarTraits<S>::from_int(binom_int(p - 1, q - 1)) *
                                pow_s(pts[0], p - q);
        for (long q = m1 + 1; q <= n; ++q, ++col) {
            long vars = q - m1 + 1;
            std::vector<S> prefix(pts.begin(), pts.begin() + vars);
            for (long p = 1; p <= n; ++p)
                w[p - 1][col] = q_eval(vars, p - q + 1, m1 - 2, prefix);
        }
    } else {
        for (long q = 2; q <= n; ++q, ++col) {
            long vars = q - 1;
            std::vector<S> prefix(pts.begin() + 1, pts.begin() + 1 + vars);
            for (long p = 1; p <= n; ++p)
                w[p - 1][col] = q_eval(vars, p + 1 - q, 0, prefix);
        }
    }
    std::vector<std::vector<S>> sub;
    sub.reserve(static_cast<size_t>(n - 1));
    for (long p = 1; p <= n; ++p)
        if (p != j) sub.push_back(w[p - 1]);
    return det_dp(sub);
}

// det V_{m1,1,...,1}(lambda_1, trailing points) in closed form:
// prod_t (pts_t - pts_0)^{m1} * prod_{t<s} (pts_s - pts_t) over the trailing
// list; only the first-block multiplicity matters, the trailing count is
// pts.size() - 1.
template <class S>
S det_vandermonde_closed(long m1, const std::vector<S>& pts) {
    S acc(1);
    long trailing = static_cast<long>(pts.size()) - 1;
    for (long t = 1; t <= trailing; ++t)
        acc = acc * pow_s(pts[t] - pts[0], m1);
    for (long t = 1; t <= trailing; ++t)
        for (long s = t + 1; s <= trailing; ++s) acc = acc * (pts[s] - pts[t]);
    return acc;
}

// Minor of the modified system: row j and column m1 deleted, signature
// (m1,1,...,1). Echelon route: factorials times the closed-form
// sub-Vandermonde determinant times the reduced minor.
template <class S>
S minor_det(long n, long m1, long j, const std::vector<S>& pts) {
    S acc = a_minor(n, m1, j, pts);
    Int f(1);
    for (long k = 0; k <= m1 - 2; ++k) f *= factorial_int(k);
    acc = acc * ScalarTraits<S>::from_int(f);
    return acc * det_vandermonde_closed(m1 - 1, pts);
}

// G_{m1,n}(lambda_1, lambda_{m1+1..n}, u) = sum_j (-1)^{j+m1} A_{n,m1,j}
// u_{j-1}: the division-free core of the dominant coefficient. pts as in
// a_minor; u has length n.
template <class S>
S g_value(long n, long m1, const std::vector<S>& pts, const std::vector<S>& u) {
    if (static_cast<long>(u.size()) != n)
        throw LengthMismatch("g_value: need n initial values");
    S acc(0);
    for (long j = 1; j <= n; ++j) {
        S term = a_minor(n, m1, j, pts) * u[j - 1];
        acc = ((j + m1) % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// Leading coefficient a_{1, m1-1} of the solution: collapse the general
// signature to (m1, 1, ..., 1) at repeated points, then
// F = G / ((m1-1)! prod_{j > m1} (lambda_j - lambda_1)). Division by a factor
// that cannot be certified nonzero raises SingularDenominator.
template <class S>
S f_value(const Signature& sig, const std::vector<S>& pts, const std::vector<S>& u) {
    if (sig.m.empty()) throw std::invalid_argument("f_value: empty signature");
    long n = sig.total();
    long m1 = sig.m[0];
    // Split representation: lambda_1, then each later block point repeated.
    std::vector<S> split;
    split.push_back(pts[0]);
    for (size_t j = 1; j < sig.m.size(); ++j)
        for (long r = 0; r < sig.m[j]; ++r) split.push_back(pts[j]);
    S g = g_value(n, m1, split, u);
    S den = ScalarTraits<S>::from_int(factorial_int(m1 - 1));
    for (size_t t = 1; t < split.size(); ++t) den = den * (split[t] - split[0]);
    try {
        return g / den;
    } catch (const DivisorStraddlesZero&) {
        throw SingularDenominator("f_value: collapsing denominator factor");
    } catch (const std::domain_error&) {
        throw SingularDenominator("f_value: exactly singular denominator");
    }
}

// Both defining recursions of the Q family at a sample point, exactly:
//  (1) Q_{n,m,0}(X,Y) - Q_{n,m,0}(X,Z) = (Y - Z) Q_{n+1,m-1,0}(X,Y,Z)
//  (2) Q_{n+1,m,i}(X1..Xn+1) - Q_{n,m,i+1}(X1..Xn)
//        = (X_{n+1} - X_1) Q_{n+1,m-1,i+1}(X1..Xn+1)
bool check_q_recursions(long n, long m, long i, const std::vector<QQi>& xs,
                        const QQi& y, const QQi& z);

// Proposition-style compatibility: when u satisfies the order-n2 system with
// points (lambda_1 x m, lambda_{m+1}, ..., lambda_{n2}), the order-n1 G
// collapses to the order-n2 one times the extra linear factors.
bool check_prop3_identity(long m, long n1, long n2, const std::vector<QQi>& lam,
                          const std::vector<QQi>& u);

} // namespace cfc
