#pragma once

#include "cfcomp/ball.hpp"
#include "cfcomp/rational.hpp"

namespace cfc {

// Uniform scalar access so the certified ball path and the exact rational
// oracle path share one implementation of the algebra.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<QQi> {
    static QQi from_int(const Int& v) { return QQi(Rat(v)); }
    static bool usable_pivot(const QQi& x) { return !x.is_zero(); }
    static double pivot_score(const QQi& x) {
        return x.is_zero() ? 0.0 : 1.0;
    }
};

template <>
struct ScalarTraits<ComplexBall> {
    static ComplexBall from_int(const Int& v) {
        return ComplexBall::exact_point(Dyadic(v, 0));
    }
    static bool usable_pivot(const ComplexBall& x) { return x.excludes_zero(); }
    static double pivot_score(const ComplexBall& x) {
        return x.center_abs_ub().to_double();
    }
};

Int factorial_int(long n);
// binom(n, k) with the convention: zero when n < 0 or k < 0 or k > n.
Int binom_int(long n, long k);

template <class S>
S pow_s(const S& x, long e) {
    S acc(1);
    for (long i = 0; i < e; ++i) acc = acc * x;
    return acc;
}

} // namespace cfc
