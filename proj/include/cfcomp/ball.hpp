#pragma once

#include "cfcomp/dyadic.hpp"
#include "cfcomp/errors.hpp"
#include "cfcomp/kleenean.hpp"
#include "cfcomp/rational.hpp"

#include <string>

namespace cfc {

// Ambient working precision for ball arithmetic, in mantissa bits. Scoped so
// generic code (shared between exact rationals and balls) stays free of
// precision plumbing. Thread-local, hence thread-safe.
class ScopedPrec {
  public:
    explicit ScopedPrec(long bits);
    ~ScopedPrec();
    ScopedPrec(const ScopedPrec&) = delete;
    ScopedPrec& operator=(const ScopedPrec&) = delete;
    static long current();

  private:
    long saved_;
};

// Closed disk {z : |z - (re + i*im)| <= rad} with dyadic data. All operations
// round centers to the ambient precision and absorb every rounding error into
// the radius, so inclusion is preserved: if x in X and y in Y then
// x op y in (X op Y).
struct ComplexBall {
    Dyadic re, im, rad;

    ComplexBall() = default;
    ComplexBall(long v) : re(v) {}
    ComplexBall(Dyadic re_, Dyadic im_, Dyadic rad_)
        : re(std::move(re_)), im(std::move(im_)), rad(std::move(rad_)) {}

    static ComplexBall exact_point(Dyadic re_, Dyadic im_ = Dyadic()) {
        return ComplexBall(std::move(re_), std::move(im_), Dyadic());
    }
    // Center rounded to prec+2 bits of scale, radius 2^-prec; contains re+i*im.
    static ComplexBall from_rational(const Rat& re_, const Rat& im_, long prec);
    static ComplexBall from_exact(const QQi& z, long prec) {
        return from_rational(z.re, z.im, prec);
    }

    bool is_point() const { return rad.is_zero(); }

    // Upper / lower bounds for |center|.
    Dyadic center_abs_ub() const;
    Dyadic center_abs_lb() const;
    // Bounds for |z| over the whole disk (lower clamped at 0).
    Dyadic abs_ub() const;
    Dyadic abs_lb() const;

    bool contains_zero() const;
    bool excludes_zero() const;
    // True if w is certainly inside the disk (|w - c| <= rad certified).
    bool surely_contains(const QQi& w) const;

    std::string to_string() const;
};

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b);
ComplexBall operator-(const ComplexBall& a, const ComplexBall& b);
ComplexBall operator-(const ComplexBall& a);
ComplexBall operator*(const ComplexBall& a, const ComplexBall& b);
// Throws DivisorStraddlesZero unless b excludes zero.
ComplexBall operator/(const ComplexBall& a, const ComplexBall& b);

ComplexBall conj(const ComplexBall& a);

// Widen so the result certainly contains both disks.
ComplexBall ball_union(const ComplexBall& a, const ComplexBall& b);

enum class BallSign { Negative, Positive, Unknown };

// Sign of the real part over the whole disk; callers either know the ball is
// real or explicitly ask about the real part. Positive/Negative are strict.
BallSign sign_or_unknown(const ComplexBall& x);

inline Kleenean ge_threshold(const ComplexBall& x, const Dyadic& thr) {
    // Whole real range >= thr -> True; whole range < thr -> False.
    if ((x.re - x.rad).compare(thr) >= 0) return Kleenean::True;
    if ((x.re + x.rad).compare(thr) < 0) return Kleenean::False;
    return Kleenean::Unknown;
}

// For a ball known to enclose a real value: flatten the imaginary slack into
// the radius of a real ball.
ComplexBall flatten_to_real(const ComplexBall& x);

bool balls_overlap(const ComplexBall& a, const ComplexBall& b);

} // namespace cfc
