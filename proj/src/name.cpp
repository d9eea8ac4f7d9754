#include "cfcomp/name.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace cfc {

namespace mp = boost::multiprecision;

RealName RealName::of_rational(const Rat& x) {
    RealName n;
    n.exact = x;
    n.query = [x](long p) { return Dyadic::from_rational(x, p, Round::Nearest); };
    return n;
}

RealName RealName::of_dyadic(const Dyadic& x) {
    RealName n;
    n.exact = x.to_rational();
    n.query = [x](long) { return x; };
    return n;
}

RealName RealName::adversarial(const Rat& x) {
    RealName n;
    n.query = [x](long p) {
        // Offset by (-1)^p * (2^-p - 2^-(p+3)); still within the 2^-p contract.
        Dyadic base = Dyadic::from_rational(x, p + 3, Round::Nearest);
        Dyadic off = Dyadic::pow2(-p) - Dyadic::pow2(-p - 3) - Dyadic::pow2(-p - 3);
        return (p % 2 == 0) ? base + off : base - off;
    };
    return n;
}

namespace {

// Partial sum of atan(1/x) = sum (-1)^k / ((2k+1) x^(2k+1)) with the
// alternating-series tail below 2^-bits; exact rational out.
Rat atan_inv(long x, long bits) {
    Rat sum(0);
    Rat term(1, x);
    Rat x2(Int(x) * Int(x));
    long k = 0;
    for (;;) {
        Rat contrib = term / Rat(2 * k + 1);
        sum += (k % 2 == 0) ? contrib : -contrib;
        term /= x2;
        ++k;
        Rat next = term / Rat(2 * k + 1);
        if (next < Rat(Int(1), Int(1) << static_cast<unsigned long>(bits))) break;
    }
    return sum;
}

Dyadic query_pi(long p) {
    // Machin: pi = 16 atan(1/5) - 4 atan(1/239). Tails: 16 t5 + 4 t239 plus
    // the final rounding all fit under 2^-p with 8 guard bits.
    long bits = p + 8;
    Rat approx = Rat(16) * atan_inv(5, bits) - Rat(4) * atan_inv(239, bits);
    return Dyadic::from_rational(approx, p + 3, Round::Nearest);
}

Dyadic query_e(long p) {
    long bits = p + 6;
    Rat sum(0), term(1);
    Rat eps(Int(1), Int(1) << static_cast<unsigned long>(bits));
    for (long k = 1; term >= eps; ++k) {
        sum += term;
        term /= Rat(k);
    }
    // Tail below 2*eps by the factorial ratio.
    return Dyadic::from_rational(sum, p + 3, Round::Nearest);
}

Dyadic query_sqrt(long radicand, long p) {
    // floor(sqrt(radicand * 4^(p+4))) * 2^-(p+4); off by at most 2^-(p+4).
    unsigned long s = static_cast<unsigned long>(p + 4);
    Int t = mp::sqrt(Int(Int(radicand) << (2 * s)));
    return Dyadic(t, -static_cast<long>(s));
}

} // namespace

RealName RealName::of_constant(const std::string& which) {
    RealName n;
    if (which == "pi") {
        n.query = [](long p) { return query_pi(p); };
    } else if (which == "e") {
        n.query = [](long p) { return query_e(p); };
    } else if (which == "sqrt2") {
        n.query = [](long p) { return query_sqrt(2, p); };
    } else if (which == "sqrt3") {
        n.query = [](long p) { return query_sqrt(3, p); };
    } else if (which == "sqrt5") {
        n.query = [](long p) { return query_sqrt(5, p); };
    } else {
        throw std::invalid_argument("unknown named constant: " + which);
    }
    return n;
}

ComplexBall name_to_ball(const RealName& x, long p) {
    ComplexBall out;
    out.re = x.query(p);
    out.im = Dyadic();
    out.rad = Dyadic::pow2(-p);
    return out;
}

ComplexBall name_to_ball(const ComplexName& x, long p) {
    ComplexBall out;
    out.re = x.re.query(p + 1);
    out.im = x.exactly_real ? Dyadic() : x.im.query(p + 1);
    out.rad = Dyadic::pow2(-p);
    return out;
}

} // namespace cfc
