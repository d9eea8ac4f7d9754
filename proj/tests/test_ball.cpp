#include "doctest.h"

#include "cfcomp/ball.hpp"

#include <random>

using namespace cfc;

namespace {

std::mt19937_64 rng(733100);

Rat random_rat(long num_mag = 1 << 12, long den_mag = 1 << 6) {
    std::uniform_int_distribution<long> num(-num_mag, num_mag);
    std::uniform_int_distribution<long> den(1, den_mag);
    return Rat(num(rng), den(rng));
}

QQi random_point() { return QQi(random_rat(), random_rat()); }

// Exact membership test: |w - center|^2 <= rad^2.
bool contains(const ComplexBall& b, const QQi& w) {
    Rat dre = w.re - b.re.to_rational();
    Rat dim = w.im - b.im.to_rational();
    Rat r = b.rad.to_rational();
    return dre * dre + dim * dim <= r * r;
}

ComplexBall ball_of(const QQi& z, long prec = 40) {
    return ComplexBall::from_rational(z.re, z.im, prec);
}

} // namespace

TEST_CASE("exact integer addition stays exact") {
    ComplexBall a = ComplexBall::exact_point(Dyadic(1));
    ComplexBall b = ComplexBall::exact_point(Dyadic(2));
    ComplexBall c = a + b;
    CHECK(c.re == Dyadic(3));
    CHECK(c.im.is_zero());
    CHECK(c.rad.is_zero());
}

TEST_CASE("product radius covers the interval hull") {
    // [0.5, 1.5] x [-0.5, 0.5] reaches 0.75 away from the center product.
    ComplexBall a(Dyadic(1), Dyadic(), Dyadic(Int(1), -1));
    ComplexBall b(Dyadic(0), Dyadic(), Dyadic(Int(1), -1));
    ComplexBall c = a * b;
    CHECK(c.rad >= Dyadic(Int(3), -2));
    CHECK(contains(c, QQi(Rat(3, 4))));
    CHECK(contains(c, QQi(Rat(-3, 4))));
}

TEST_CASE("division by a straddling ball throws") {
    ComplexBall one = ComplexBall::exact_point(Dyadic(1));
    ComplexBall straddle(Dyadic(0), Dyadic(), Dyadic(1));
    CHECK_THROWS_AS(one / straddle, DivisorStraddlesZero);
    ComplexBall near(Dyadic(Int(1), -4), Dyadic(), Dyadic(Int(1), -3));
    CHECK_THROWS_AS(one / near, DivisorStraddlesZero);
}

TEST_CASE("inclusion soundness over random rational operands") {
    ScopedPrec amb(48);
    for (int t = 0; t < 2500; ++t) {
        QQi x = random_point(), y = random_point();
        ComplexBall bx = ball_of(x), by = ball_of(y);
        CHECK(contains(bx, x));
        CHECK(contains(by, y));
        CHECK(contains(bx + by, x + y));
        CHECK(contains(bx - by, x - y));
        CHECK(contains(bx * by, x * y));
        if (by.excludes_zero()) CHECK(contains(bx / by, x / y));
    }
}

TEST_CASE("inclusion survives off-center members") {
    ScopedPrec amb(48);
    for (int t = 0; t < 400; ++t) {
        QQi x = random_point(), y = random_point();
        ComplexBall bx = ball_of(x), by = ball_of(y);
        // Widen and pick members away from the centers.
        bx.rad = bx.rad + Dyadic(Int(1), -8);
        by.rad = by.rad + Dyadic(Int(1), -8);
        QQi mx = QQi(bx.re.to_rational() + Rat(1, 1000), bx.im.to_rational());
        QQi my = QQi(by.re.to_rational(), by.im.to_rational() - Rat(1, 1000));
        REQUIRE(contains(bx, mx));
        REQUIRE(contains(by, my));
        CHECK(contains(bx + by, mx + my));
        CHECK(contains(bx * by, mx * my));
    }
}

TEST_CASE("widening inputs never shrinks results") {
    ScopedPrec amb(48);
    for (int t = 0; t < 300; ++t) {
        ComplexBall a = ball_of(random_point()), b = ball_of(random_point());
        ComplexBall wa = a, wb = b;
        wa.rad = wa.rad + Dyadic(Int(1), -6);
        wb.rad = wb.rad + Dyadic(Int(1), -6);
        CHECK((wa + wb).rad >= (a + b).rad);
        CHECK((wa - wb).rad >= (a - b).rad);
        CHECK((wa * wb).rad >= (a * b).rad);
    }
}

TEST_CASE("sign classification") {
    CHECK(sign_or_unknown(ComplexBall(Dyadic(5), Dyadic(), Dyadic(1))) == BallSign::Positive);
    CHECK(sign_or_unknown(ComplexBall(Dyadic(-3), Dyadic(), Dyadic(1))) == BallSign::Negative);
    ComplexBall straddle(Dyadic(Int(1), -3), Dyadic(), Dyadic(Int(1), -2));
    CHECK(sign_or_unknown(straddle) == BallSign::Unknown);
}

TEST_CASE("threshold comparison is certified") {
    Dyadic thr = Dyadic::pow2(-3);
    CHECK(ge_threshold(ComplexBall(Dyadic(1), Dyadic(), Dyadic(Int(1), -2)), thr) ==
          Kleenean::True);
    CHECK(ge_threshold(ComplexBall(Dyadic(0), Dyadic(), Dyadic(Int(1), -5)), thr) ==
          Kleenean::False);
    CHECK(ge_threshold(ComplexBall(Dyadic(Int(1), -3), Dyadic(), Dyadic(Int(1), -4)), thr) ==
          Kleenean::Unknown);
}

TEST_CASE("absolute value bounds") {
    ScopedPrec amb(48);
    for (int t = 0; t < 300; ++t) {
        QQi z = random_point();
        ComplexBall b = ball_of(z);
        Rat lo = b.abs_lb().to_rational(), hi = b.abs_ub().to_rational();
        CHECK(lo >= 0);
        CHECK(lo * lo <= z.norm_sq());
        CHECK(hi * hi >= z.norm_sq());
    }
}

TEST_CASE("zero containment flags") {
    CHECK(ComplexBall(Dyadic(0), Dyadic(), Dyadic(Int(1), -4)).contains_zero());
    CHECK(ComplexBall(Dyadic(1), Dyadic(), Dyadic(Int(1), -4)).excludes_zero());
    ComplexBall origin = ComplexBall::exact_point(Dyadic());
    CHECK(origin.contains_zero());
    CHECK(!origin.excludes_zero());
}

TEST_CASE("union contains both arguments") {
    ScopedPrec amb(48);
    for (int t = 0; t < 200; ++t) {
        QQi x = random_point(), y = random_point();
        ComplexBall u = ball_union(ball_of(x), ball_of(y));
        CHECK(contains(u, x));
        CHECK(contains(u, y));
    }
}

TEST_CASE("flatten_to_real moves imaginary slack into the radius") {
    ScopedPrec amb(48);
    ComplexBall b(Dyadic(2), Dyadic(Int(1), -6), Dyadic(Int(1), -8));
    ComplexBall f = flatten_to_real(b);
    CHECK(f.im.is_zero());
    // The true real value 2 must stay inside.
    CHECK(contains(f, QQi(2)));
}

TEST_CASE("overlap test") {
    ComplexBall a(Dyadic(0), Dyadic(), Dyadic(1));
    ComplexBall b(Dyadic(Int(3), -1), Dyadic(), Dyadic(1));
    ComplexBall c(Dyadic(8), Dyadic(), Dyadic(1));
    CHECK(balls_overlap(a, b));
    CHECK(!balls_overlap(a, c));
}
