#include "doctest.h"

#include "cfcomp/name.hpp"

using namespace cfc;

namespace {

bool contains_rat(const ComplexBall& b, const Rat& x) {
    Rat dre = x - b.re.to_rational();
    Rat dim = b.im.to_rational();
    Rat r = b.rad.to_rational();
    return dre * dre + dim * dim <= r * r;
}

Rat pow2_rat(long k) {
    if (k >= 0) return Rat(Int(1) << k);
    return Rat(Int(1), Int(1) << (-k));
}

} // namespace

TEST_CASE("rational name meets the accuracy contract") {
    RealName third = RealName::of_rational(Rat(1, 3));
    for (long p : {1L, 4L, 10L, 30L, 77L}) {
        Dyadic q = third.query(p);
        Rat err = q.to_rational() - Rat(1, 3);
        if (err < 0) err = -err;
        CHECK(err < pow2_rat(-p));
    }
    ComplexBall b = name_to_ball(third, 4);
    CHECK(b.rad <= Dyadic::pow2(-4));
    CHECK(contains_rat(b, Rat(1, 3)));
}

TEST_CASE("zero name stays around zero") {
    RealName z = RealName::of_rational(Rat(0));
    for (long p : {1L, 8L, 40L}) {
        ComplexBall b = name_to_ball(z, p);
        CHECK(b.rad <= Dyadic::pow2(-p));
        CHECK(contains_rat(b, Rat(0)));
    }
}

TEST_CASE("adversarial names keep their value inside the ball") {
    for (const Rat& x : {Rat(0), Rat(3, 7), Rat(-5, 2)}) {
        RealName adv = RealName::adversarial(x);
        for (long p = 1; p <= 24; ++p) {
            Dyadic q = adv.query(p);
            Rat err = q.to_rational() - x;
            if (err < 0) err = -err;
            CHECK(err < pow2_rat(-p));
            CHECK(contains_rat(name_to_ball(adv, p), x));
        }
        // The answers really wobble: consecutive precisions move in
        // opposite directions around x.
        Dyadic a = adv.query(10), b = adv.query(11);
        CHECK((a.to_rational() - x).sign() != (b.to_rational() - x).sign());
    }
}

TEST_CASE("name coherence across precisions") {
    RealName x = RealName::of_rational(Rat(22, 7));
    for (long p : {3L, 9L, 20L}) {
        for (long q : {5L, 15L, 33L}) {
            Dyadic a = x.query(p), b = x.query(q);
            Rat gap = a.to_rational() - b.to_rational();
            if (gap < 0) gap = -gap;
            CHECK(gap < pow2_rat(-p) + pow2_rat(-q));
        }
    }
}

TEST_CASE("named constants land in tight known intervals") {
    ComplexBall pi = name_to_ball(RealName::of_constant("pi"), 60);
    CHECK(pi.re.to_rational() - pi.rad.to_rational() > Rat(314159265358979, 100000000000000));
    CHECK(pi.re.to_rational() + pi.rad.to_rational() < Rat(314159265358980, 100000000000000));

    ComplexBall e = name_to_ball(RealName::of_constant("e"), 60);
    CHECK(e.re.to_rational() - e.rad.to_rational() > Rat(271828182845904, 100000000000000));
    CHECK(e.re.to_rational() + e.rad.to_rational() < Rat(271828182845905, 100000000000000));
}

TEST_CASE("square root constants square back to their radicand") {
    ScopedPrec amb(96);
    struct { const char* name; long v; } cases[] = {{"sqrt2", 2}, {"sqrt3", 3}, {"sqrt5", 5}};
    for (const auto& c : cases) {
        ComplexBall b = name_to_ball(RealName::of_constant(c.name), 70);
        ComplexBall sq = b * b;
        CHECK(contains_rat(sq, Rat(c.v)));
        CHECK(sq.rad < Dyadic::pow2(-50));
    }
}

TEST_CASE("unknown constant is rejected") {
    CHECK_THROWS_AS(RealName::of_constant("tau"), std::invalid_argument);
}

TEST_CASE("dyadic-backed names answer exactly") {
    Dyadic x(Int(5), -3);
    RealName n = RealName::of_dyadic(x);
    CHECK(n.query(2) == x);
    CHECK(n.query(90) == x);
    REQUIRE(n.exact.has_value());
    CHECK(*n.exact == x.to_rational());
}

TEST_CASE("complex names track realness") {
    ComplexName r = ComplexName::of_real(RealName::of_rational(Rat(1, 2)));
    CHECK(r.exactly_real);
    ComplexBall b = name_to_ball(r, 20);
    CHECK(b.im.is_zero());
    CHECK(contains_rat(b, Rat(1, 2)));

    ComplexName z = ComplexName::of_exact(QQi(Rat(1), Rat(-2)));
    CHECK(!z.exactly_real);
    ComplexBall bz = name_to_ball(z, 20);
    Rat dre = Rat(1) - bz.re.to_rational();
    Rat dim = Rat(-2) - bz.im.to_rational();
    Rat rr = bz.rad.to_rational();
    CHECK(dre * dre + dim * dim <= rr * rr);

    CHECK(ComplexName::of_exact(QQi(Rat(3), Rat(0))).exactly_real);
}
