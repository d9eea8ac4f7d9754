#include "cfcomp/ball.hpp"

namespace cfc {

namespace {

thread_local long g_prec = 64;

constexpr long kRadBits = 16;
constexpr long kAbsBits = 24;

Dyadic round_up_rad(const Dyadic& r) { return r.round(kRadBits, Round::Up); }

// Round a center component and return the exact rounding error magnitude,
// itself rounded up to a short mantissa.
Dyadic fl(const Dyadic& v, long prec, Dyadic& err_out) {
    Dyadic r = v.round(prec, Round::Nearest);
    err_out = (v - r).abs().round(8, Round::Up);
    return r;
}

// Upper bound on the error of div_dir(a, b, prec, Nearest): one ulp from the
// integer rounding plus one from the final rounding.
Dyadic div_err_bound(const Dyadic& res, long prec) {
    if (res.is_zero()) return Dyadic();
    return Dyadic::pow2(res.floor_log2_abs() + 2 - prec);
}

} // namespace

ScopedPrec::ScopedPrec(long bits) : saved_(g_prec) { g_prec = bits < 8 ? 8 : bits; }
ScopedPrec::~ScopedPrec() { g_prec = saved_; }
long ScopedPrec::current() { return g_prec; }

ComplexBall ComplexBall::from_rational(const Rat& re_, const Rat& im_, long prec) {
    ComplexBall out;
    out.re = Dyadic::from_rational(re_, prec + 2, Round::Nearest);
    out.im = Dyadic::from_rational(im_, prec + 2, Round::Nearest);
    out.rad = Dyadic::pow2(-prec);
    return out;
}

Dyadic ComplexBall::center_abs_ub() const {
    return sqrt_ub(re * re + im * im, kAbsBits);
}

Dyadic ComplexBall::center_abs_lb() const {
    return sqrt_lb(re * re + im * im, kAbsBits);
}

Dyadic ComplexBall::abs_ub() const { return round_up_rad(center_abs_ub() + rad); }

Dyadic ComplexBall::abs_lb() const {
    Dyadic d = center_abs_lb() - rad;
    return d.sign() < 0 ? Dyadic() : d;
}

bool ComplexBall::contains_zero() const { return center_abs_ub() <= rad; }

bool ComplexBall::excludes_zero() const { return center_abs_lb() > rad; }

bool ComplexBall::surely_contains(const QQi& w) const {
    Rat dr = w.re - re.to_rational();
    Rat di = w.im - im.to_rational();
    Rat r = rad.to_rational();
    return dr * dr + di * di <= r * r;
}

std::string ComplexBall::to_string() const {
    std::string s = "(" + std::to_string(re.to_double());
    double i = im.to_double();
    if (i != 0.0) s += (i < 0 ? "-" : "+") + std::to_string(i < 0 ? -i : i) + "i";
    s += " +/- " + std::to_string(rad.to_double()) + ")";
    return s;
}

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
    long prec = ScopedPrec::current();
    ComplexBall out;
    Dyadic er, ei;
    out.re = fl(a.re + b.re, prec, er);
    out.im = fl(a.im + b.im, prec, ei);
    out.rad = round_up_rad(a.rad + b.rad + er + ei);
    return out;
}

ComplexBall operator-(const ComplexBall& a) {
    return ComplexBall(-a.re, -a.im, a.rad);
}

ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) { return a + (-b); }

ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
    long prec = ScopedPrec::current();
    ComplexBall out;
    Dyadic er, ei;
    out.re = fl(a.re * b.re - a.im * b.im, prec, er);
    out.im = fl(a.re * b.im + a.im * b.re, prec, ei);
    // |z*w - c*d| <= |c| rb + |d| ra + ra rb for z in a, w in b.
    Dyadic cross = a.center_abs_ub() * b.rad + b.center_abs_ub() * a.rad + a.rad * b.rad;
    out.rad = round_up_rad(cross + er + ei);
    return out;
}

ComplexBall conj(const ComplexBall& a) { return ComplexBall(a.re, -a.im, a.rad); }

ComplexBall operator/(const ComplexBall& a, const ComplexBall& b) {
    long prec = ScopedPrec::current();
    Dyadic lb = b.center_abs_lb();
    if (!(lb > b.rad))
        throw DivisorStraddlesZero("ball divisor not certified away from zero");
    // Invert b first. For |w - c| <= r: |1/w - 1/c| <= r / (|c| (|c| - r)).
    Dyadic m2 = b.re * b.re + b.im * b.im;
    ComplexBall inv;
    inv.re = div_dir(b.re, m2, prec, Round::Nearest);
    inv.im = div_dir(-b.im, m2, prec, Round::Nearest);
    Dyadic den = lb * (lb - b.rad);
    Dyadic drift = b.rad.is_zero() ? Dyadic() : div_dir(b.rad, den, kRadBits, Round::Up);
    inv.rad = round_up_rad(drift + div_err_bound(inv.re, prec) + div_err_bound(inv.im, prec));
    return a * inv;
}

ComplexBall ball_union(const ComplexBall& a, const ComplexBall& b) {
    long prec = ScopedPrec::current();
    Dyadic er, ei;
    ComplexBall out;
    out.re = fl(mul_pow2(a.re + b.re, -1), prec, er);
    out.im = fl(mul_pow2(a.im + b.im, -1), prec, ei);
    Dyadic slack = er + ei;
    ComplexBall half_diff(mul_pow2(a.re - b.re, -1), mul_pow2(a.im - b.im, -1), Dyadic());
    Dyadic spread = half_diff.center_abs_ub();
    Dyadic r = a.rad > b.rad ? a.rad : b.rad;
    out.rad = round_up_rad(spread + r + slack);
    return out;
}

BallSign sign_or_unknown(const ComplexBall& x) {
    if ((x.re - x.rad).sign() > 0) return BallSign::Positive;
    if ((x.re + x.rad).sign() < 0) return BallSign::Negative;
    return BallSign::Unknown;
}

ComplexBall flatten_to_real(const ComplexBall& x) {
    return ComplexBall(x.re, Dyadic(), round_up_rad(x.rad + x.im.abs()));
}

bool balls_overlap(const ComplexBall& a, const ComplexBall& b) {
    Dyadic dr = a.re - b.re, di = a.im - b.im;
    Dyadic d2 = dr * dr + di * di;
    Dyadic s = a.rad + b.rad;
    return d2 <= s * s;
}

} // namespace cfc
