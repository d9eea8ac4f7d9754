#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace cfc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Rounding directions. Down/Up are toward -inf / +inf.
enum class Round { Down, Nearest, Up };

// Binary rational mant * 2^exp. Canonical form: mant is odd or zero, and a
// zero value has exp = 0, so representations are unique and equality is
// structural. Addition, subtraction and multiplication are exact; division
// and square roots only exist as directed roundings.
class Dyadic {
  public:
    Dyadic() : mant_(0), exp_(0) {}
    Dyadic(long v) : mant_(v), exp_(0) { normalize(); }
    Dyadic(Int mant, long exp) : mant_(std::move(mant)), exp_(exp) { normalize(); }

    static Dyadic pow2(long e) { return Dyadic(Int(1), e); }

    const Int& mant() const { return mant_; }
    long exp() const { return exp_; }

    bool is_zero() const { return mant_.is_zero(); }
    int sign() const { return mant_.sign(); }

    // Number of bits in |mant|; 0 for zero.
    long bit_length() const;
    // e such that 2^e <= |x| < 2^(e+1). Requires nonzero.
    long floor_log2_abs() const;

    Dyadic operator-() const { return Dyadic(-mant_, exp_); }
    Dyadic abs() const { return mant_ < 0 ? -*this : *this; }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
    Dyadic& operator+=(const Dyadic& b) { return *this = *this + b; }
    Dyadic& operator-=(const Dyadic& b) { return *this = *this - b; }
    Dyadic& operator*=(const Dyadic& b) { return *this = *this * b; }

    // Negative: this < other, etc. Exact comparison.
    int compare(const Dyadic& other) const;
    bool operator==(const Dyadic& o) const { return mant_ == o.mant_ && exp_ == o.exp_; }
    bool operator!=(const Dyadic& o) const { return !(*this == o); }
    bool operator<(const Dyadic& o) const { return compare(o) < 0; }
    bool operator<=(const Dyadic& o) const { return compare(o) <= 0; }
    bool operator>(const Dyadic& o) const { return compare(o) > 0; }
    bool operator>=(const Dyadic& o) const { return compare(o) >= 0; }

    // Round to at most prec mantissa bits. Error < 2^(floor_log2|x|+1-prec),
    // and for Nearest at most half of that. Exact values pass through.
    Dyadic round(long prec, Round dir) const;

    Rat to_rational() const;
    // |result - q| < 2^-prec (strict), with the stated direction respected.
    static Dyadic from_rational(const Rat& q, long prec, Round dir);

    // Best-effort conversion for display and heuristics only.
    double to_double() const;
    std::string to_string() const;

  private:
    void normalize();
    Int mant_;
    long exp_;
};

inline Dyadic mul_pow2(const Dyadic& x, long k) {
    return x.is_zero() ? Dyadic() : Dyadic(x.mant(), x.exp() + k);
}

// Directed-rounding quotient with prec significant bits. b must be nonzero.
Dyadic div_dir(const Dyadic& a, const Dyadic& b, long prec, Round dir);

// Directed square-root bounds for s >= 0, about `prec` significant bits.
Dyadic sqrt_lb(const Dyadic& s, long prec);
Dyadic sqrt_ub(const Dyadic& s, long prec);

} // namespace cfc
