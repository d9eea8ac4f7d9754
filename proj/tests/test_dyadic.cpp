#include "doctest.h"

#include "cfcomp/dyadic.hpp"

#include <random>

using namespace cfc;

namespace {

std::mt19937_64 rng(20240611);

Rat random_rat(long num_mag = 1 << 20, long den_mag = 1 << 10) {
    std::uniform_int_distribution<long> num(-num_mag, num_mag);
    std::uniform_int_distribution<long> den(1, den_mag);
    return Rat(num(rng), den(rng));
}

Dyadic random_dyadic() {
    std::uniform_int_distribution<long> mant(-(1L << 24), 1L << 24);
    std::uniform_int_distribution<long> exp(-20, 20);
    return Dyadic(Int(mant(rng)), exp(rng));
}

} // namespace

TEST_CASE("canonical form") {
    Dyadic x(Int(12), 0);
    CHECK(x.mant() == 3);
    CHECK(x.exp() == 2);
    Dyadic z(Int(0), 17);
    CHECK(z.is_zero());
    CHECK(z.exp() == 0);
    CHECK(Dyadic(5) == Dyadic(Int(5), 0));
    CHECK(Dyadic(-8).mant() == -1);
    CHECK(Dyadic(-8).exp() == 3);
}

TEST_CASE("exact ring operations against rationals") {
    for (int t = 0; t < 500; ++t) {
        Dyadic a = random_dyadic(), b = random_dyadic();
        Rat ra = a.to_rational(), rb = b.to_rational();
        CHECK((a + b).to_rational() == ra + rb);
        CHECK((a - b).to_rational() == ra - rb);
        CHECK((a * b).to_rational() == ra * rb);
        CHECK((-a).to_rational() == -ra);
        CHECK(a.abs().to_rational() == (ra < 0 ? Rat(-ra) : ra));
    }
}

TEST_CASE("comparisons match rational order") {
    for (int t = 0; t < 300; ++t) {
        Dyadic a = random_dyadic(), b = random_dyadic();
        Rat ra = a.to_rational(), rb = b.to_rational();
        CHECK((a < b) == (ra < rb));
        CHECK((a == b) == (ra == rb));
        CHECK((a >= b) == (ra >= rb));
    }
}

TEST_CASE("bit length and floor log2") {
    CHECK(Dyadic(0).bit_length() == 0);
    CHECK(Dyadic(1).bit_length() == 1);
    CHECK(Dyadic(Int(7), 0).bit_length() == 3);
    CHECK(Dyadic(1).floor_log2_abs() == 0);
    CHECK(Dyadic(Int(5), 0).floor_log2_abs() == 2);      // 4 <= 5 < 8
    CHECK(Dyadic(Int(1), -3).floor_log2_abs() == -3);    // 1/8
    CHECK(Dyadic(Int(-3), -2).floor_log2_abs() == -1);   // |x| = 3/4
}

TEST_CASE("rounding directions and error bound") {
    for (int t = 0; t < 300; ++t) {
        Dyadic x = random_dyadic();
        long prec = 8 + static_cast<long>(t % 16);
        Dyadic lo = x.round(prec, Round::Down);
        Dyadic hi = x.round(prec, Round::Up);
        Dyadic nr = x.round(prec, Round::Nearest);
        CHECK(lo <= x);
        CHECK(x <= hi);
        if (!x.is_zero()) {
            Dyadic ulp = Dyadic::pow2(x.floor_log2_abs() + 1 - prec);
            CHECK((x - lo) < ulp);
            CHECK((hi - x) < ulp);
            CHECK((nr - x).abs() * Dyadic(2) <= ulp);
        }
    }
    // Exact values pass through untouched.
    Dyadic small(Int(5), -3);
    CHECK(small.round(10, Round::Down) == small);
    CHECK(small.round(10, Round::Up) == small);
}

TEST_CASE("from_rational respects direction and accuracy") {
    for (int t = 0; t < 400; ++t) {
        Rat q = random_rat();
        long prec = 4 + static_cast<long>(t % 40);
        Dyadic lo = Dyadic::from_rational(q, prec, Round::Down);
        Dyadic hi = Dyadic::from_rational(q, prec, Round::Up);
        Dyadic nr = Dyadic::from_rational(q, prec, Round::Nearest);
        Rat tol(Int(1), Int(1) << static_cast<unsigned long>(prec));
        CHECK(lo.to_rational() <= q);
        CHECK(hi.to_rational() >= q);
        CHECK(q - lo.to_rational() < tol);
        CHECK(hi.to_rational() - q < tol);
        Rat err = nr.to_rational() - q;
        if (err < 0) err = -err;
        CHECK(err < tol);
    }
}

TEST_CASE("directed quotient brackets the exact value") {
    for (int t = 0; t < 300; ++t) {
        Dyadic a = random_dyadic();
        Dyadic b = random_dyadic();
        if (b.is_zero()) b = Dyadic(3);
        long prec = 16 + static_cast<long>(t % 32);
        Dyadic lo = div_dir(a, b, prec, Round::Down);
        Dyadic hi = div_dir(a, b, prec, Round::Up);
        Rat exact = a.to_rational() / b.to_rational();
        CHECK(lo.to_rational() <= exact);
        CHECK(hi.to_rational() >= exact);
    }
}

TEST_CASE("square root bounds") {
    for (int t = 0; t < 200; ++t) {
        Dyadic s = random_dyadic().abs();
        long prec = 16 + static_cast<long>(t % 24);
        Dyadic lo = sqrt_lb(s, prec);
        Dyadic hi = sqrt_ub(s, prec);
        CHECK(lo.sign() >= 0);
        CHECK(lo <= hi);
        CHECK((lo * lo).to_rational() <= s.to_rational());
        CHECK((hi * hi).to_rational() >= s.to_rational());
    }
    CHECK(sqrt_lb(Dyadic(4), 32) == Dyadic(2));
    // ub always ceils the scaled integer root, so it sits just above 2.
    CHECK(sqrt_ub(Dyadic(4), 32) >= Dyadic(2));
    CHECK(sqrt_ub(Dyadic(4), 32) - Dyadic(2) <= Dyadic::pow2(-32));
    CHECK(sqrt_lb(Dyadic(0), 32).is_zero());
}

TEST_CASE("mul_pow2 shifts the exponent") {
    Dyadic x(Int(3), 2);
    CHECK(mul_pow2(x, 5) == Dyadic(Int(3), 7));
    CHECK(mul_pow2(x, -4) == Dyadic(Int(3), -2));
    CHECK(mul_pow2(Dyadic(), 9).is_zero());
}

TEST_CASE("string and double conversions") {
    CHECK(Dyadic(Int(3), -1).to_double() == doctest::Approx(1.5));
    CHECK(Dyadic(-7).to_double() == doctest::Approx(-7.0));
    CHECK(!Dyadic(Int(1), -2).to_string().empty());
}
