#include "cfcomp/dyadic.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cfc {

namespace mp = boost::multiprecision;

void Dyadic::normalize() {
    if (mant_.is_zero()) {
        exp_ = 0;
        return;
    }
    unsigned long tz = mp::lsb(mant_ < 0 ? Int(-mant_) : mant_);
    if (tz > 0) {
        mant_ >>= tz;
        exp_ += static_cast<long>(tz);
    }
}

long Dyadic::bit_length() const {
    if (mant_.is_zero()) return 0;
    return static_cast<long>(mp::msb(mant_ < 0 ? Int(-mant_) : mant_)) + 1;
}

long Dyadic::floor_log2_abs() const {
    if (mant_.is_zero()) throw std::domain_error("floor_log2_abs of zero");
    return exp_ + bit_length() - 1;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.exp_ == b.exp_) return Dyadic(a.mant_ + b.mant_, a.exp_);
    if (a.exp_ > b.exp_) {
        Int shifted = a.mant_ << static_cast<unsigned long>(a.exp_ - b.exp_);
        return Dyadic(shifted + b.mant_, b.exp_);
    }
    Int shifted = b.mant_ << static_cast<unsigned long>(b.exp_ - a.exp_);
    return Dyadic(a.mant_ + shifted, a.exp_);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    if (a.is_zero() || b.is_zero()) return Dyadic();
    return Dyadic(a.mant_ * b.mant_, a.exp_ + b.exp_);
}

int Dyadic::compare(const Dyadic& other) const {
    Dyadic d = *this - other;
    return d.sign();
}

Dyadic Dyadic::round(long prec, Round dir) const {
    if (prec < 1) prec = 1;
    long len = bit_length();
    if (len <= prec) return *this;
    unsigned long shift = static_cast<unsigned long>(len - prec);
    bool neg = mant_ < 0;
    Int a = neg ? Int(-mant_) : mant_;
    Int q = a >> shift;
    Int r = a - (q << shift);
    if (!r.is_zero()) {
        switch (dir) {
            case Round::Nearest:
                if ((r << 1) >= (Int(1) << shift)) ++q;
                break;
            case Round::Up:
                if (!neg) ++q;
                break;
            case Round::Down:
                if (neg) ++q;
                break;
        }
    }
    return Dyadic(neg ? Int(-q) : q, exp_ + static_cast<long>(shift));
}

Rat Dyadic::to_rational() const {
    if (exp_ >= 0) return Rat(mant_ << static_cast<unsigned long>(exp_));
    return Rat(mant_, Int(1) << static_cast<unsigned long>(-exp_));
}

Dyadic Dyadic::from_rational(const Rat& q, long prec, Round dir) {
    if (q.is_zero()) return Dyadic();
    Int num = mp::numerator(q);
    Int den = mp::denominator(q); // positive by cpp_rational invariant
    bool neg = num < 0;
    if (neg) num = -num;
    // value = sgn * num/den; produce m * 2^-(prec+1) with m = rounding of
    // num*2^(prec+1)/den, so the error is at most 2^-(prec+1) < 2^-prec.
    unsigned long s = static_cast<unsigned long>(prec + 1);
    Int scaled = num << s;
    Int m = scaled / den;
    Int r = scaled - m * den;
    if (!r.is_zero()) {
        switch (dir) {
            case Round::Nearest:
                if ((r << 1) >= den) ++m;
                break;
            case Round::Up:
                if (!neg) ++m;
                break;
            case Round::Down:
                if (neg) ++m;
                break;
        }
    }
    return Dyadic(neg ? Int(-m) : m, -static_cast<long>(s));
}

double Dyadic::to_double() const {
    if (is_zero()) return 0.0;
    long len = bit_length();
    long drop = len > 53 ? len - 53 : 0;
    Int top = mant_ >> static_cast<unsigned long>(drop);
    double d = top.convert_to<double>();
    long e = exp_ + drop;
    if (e > 2000) return mant_ < 0 ? -std::numeric_limits<double>::infinity()
                                   : std::numeric_limits<double>::infinity();
    if (e < -2000) return mant_ < 0 ? -0.0 : 0.0;
    return std::ldexp(d, static_cast<int>(e));
}

std::string Dyadic::to_string() const {
    return mant_.str() + "*2^" + std::to_string(exp_);
}

Dyadic div_dir(const Dyadic& a, const Dyadic& b, long prec, Round dir) {
    if (b.is_zero()) throw std::domain_error("div_dir by zero");
    if (a.is_zero()) return Dyadic();
    bool neg = (a.sign() < 0) != (b.sign() < 0);
    Int na = a.mant() < 0 ? Int(-a.mant()) : a.mant();
    Int nb = b.mant() < 0 ? Int(-b.mant()) : b.mant();
    // Scale so the integer quotient has at least prec+2 bits.
    long la = static_cast<long>(mp::msb(na)) + 1;
    long lb = static_cast<long>(mp::msb(nb)) + 1;
    long t = prec + 2 + (lb - la > 0 ? lb - la : 0) + 2;
    Int q = (na << static_cast<unsigned long>(t)) / nb;
    Int r = (na << static_cast<unsigned long>(t)) - q * nb;
    if (!r.is_zero()) {
        switch (dir) {
            case Round::Nearest:
                if ((r << 1) >= nb) ++q;
                break;
            case Round::Up:
                if (!neg) ++q;
                break;
            case Round::Down:
                if (neg) ++q;
                break;
        }
    }
    Dyadic out(neg ? Int(-q) : q, a.exp() - b.exp() - t);
    // A second directed rounding in the same direction stays valid.
    return out.round(prec, dir);
}

namespace {

// floor sqrt for s = m * 2^e (e even after adjustment), about prec extra bits.
Dyadic sqrt_floor_scaled(const Dyadic& s, long prec, bool ceil_mode) {
    if (s.sign() < 0) throw std::domain_error("sqrt of negative");
    if (s.is_zero()) return Dyadic();
    Int m = s.mant();
    long e = s.exp();
    if (e % 2 != 0) {
        m <<= 1;
        e -= 1;
    }
    unsigned long k = static_cast<unsigned long>(prec + 2);
    Int t = mp::sqrt(Int(m << (2 * k)));
    // t^2 <= m*4^k < (t+1)^2
    if (ceil_mode) ++t;
    return Dyadic(t, e / 2 - static_cast<long>(k));
}

} // namespace

Dyadic sqrt_lb(const Dyadic& s, long prec) {
    return sqrt_floor_scaled(s, prec, false).round(prec + 8, Round::Down);
}

Dyadic sqrt_ub(const Dyadic& s, long prec) {
    return sqrt_floor_scaled(s, prec, true).round(prec + 8, Round::Up);
}

} // namespace cfc
