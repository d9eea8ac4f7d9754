#include "doctest.h"

#include "cfcomp/cfinite.hpp"
#include "cfcomp/expsol.hpp"

#include <random>

using namespace cfc;

namespace {

std::mt19937_64 rng(150800);

RootList roots_of(const std::vector<QQi>& coeffs, long M) {
    CharPoly p;
    for (const auto& c : coeffs) p.c.push_back(ComplexBall::from_exact(c, 200));
    return find_roots(p, M);
}

std::vector<ComplexBall> exact_balls(const std::vector<QQi>& v) {
    std::vector<ComplexBall> out;
    for (const auto& x : v) out.push_back(ComplexBall::from_exact(x, 200));
    return out;
}

} // namespace

TEST_CASE("recurrence extension on pencil-and-paper sequences") {
    // Doubling: chi = z - 2.
    std::vector<QQi> dbl = extend_sequence<QQi>({QQi(-2)}, {QQi(1)}, 5);
    CHECK(dbl == std::vector<QQi>{QQi(1), QQi(2), QQi(4), QQi(8), QQi(16)});
    // Fibonacci: chi = z^2 - z - 1.
    std::vector<QQi> fib = extend_sequence<QQi>({QQi(-1), QQi(-1)}, {QQi(0), QQi(1)}, 7);
    CHECK(fib == std::vector<QQi>{QQi(0), QQi(1), QQi(1), QQi(2), QQi(3), QQi(5), QQi(8)});
    // Order zero: the zero sequence.
    std::vector<QQi> zero = extend_sequence<QQi>({}, {}, 4);
    CHECK(zero == std::vector<QQi>(4, QQi(0)));
    // Truncation when the seed is already longer than requested.
    std::vector<QQi> cut = extend_sequence<QQi>({QQi(-2)}, {QQi(1), QQi(2), QQi(4)}, 2);
    CHECK(cut == std::vector<QQi>{QQi(1), QQi(2)});
}

TEST_CASE("characteristic coefficients from a root multiset") {
    CHECK(coeffs_from_roots<QQi>({QQi(1), QQi(2)}) == std::vector<QQi>{QQi(2), QQi(-3)});
    CHECK(coeffs_from_roots<QQi>({}).empty());
    CHECK(coeffs_from_roots<QQi>({QQi(Rat(0), Rat(1)), QQi(Rat(0), Rat(-1))}) ==
          std::vector<QQi>{QQi(1), QQi(0)});
}

TEST_CASE("exact problem plumbing") {
    ExactProblem p{{QQi(1), QQi(2)}, {QQi(1), QQi(1)}};
    CHECK(p.order() == 2);
    CHECK(p.is_real());
    CHECK(p.coeffs() == std::vector<QQi>{QQi(2), QQi(-3)});
    CHECK(p.prefix(4) == extend_sequence(p.coeffs(), p.u, 4));
    // u_j = 3 u_{j-1} - 2 u_{j-2} keeps the all-ones seed at 1.
    CHECK(p.prefix(4) == std::vector<QQi>{QQi(1), QQi(1), QQi(1), QQi(1)});

    ExactProblem mixed{{QQi(Rat(0), Rat(2))}, {QQi(1)}};
    CHECK(!mixed.is_real());
    ExactProblem pair{{QQi(Rat(0), Rat(2)), QQi(Rat(0), Rat(-2))}, {QQi(1), QQi(0)}};
    CHECK(pair.is_real());

    CauchyProblem cp = p.to_cauchy();
    CHECK(cp.order() == 2);
    CHECK(cp.real);
}

TEST_CASE("ball prefix encloses the exact prefix") {
    std::uniform_int_distribution<long> coef(-6, 6);
    for (int trial = 0; trial < 20; ++trial) {
        long n = 1 + (trial % 4);
        std::vector<QQi> roots, u;
        for (long k = 0; k < n; ++k) {
            roots.push_back(QQi(coef(rng)));
            u.push_back(QQi(coef(rng)));
        }
        ExactProblem p{roots, u};
        CauchyProblem cp = p.to_cauchy();
        long K = n + 6;
        std::vector<ComplexBall> got = extend_recurrence(cp, K, 160);
        std::vector<QQi> want = p.prefix(K + 1);
        REQUIRE(got.size() == want.size());
        for (size_t k = 0; k < got.size(); ++k) CHECK(got[k].surely_contains(want[k]));
    }
}

TEST_CASE("coefficient and initial value balls") {
    CauchyProblem cp = CauchyProblem::from_exact({QQi(Rat(1, 3)), QQi(-2)}, {QQi(0), QQi(7)});
    std::vector<ComplexBall> c = coefficient_balls(cp, 50);
    std::vector<ComplexBall> u = initial_balls(cp, 50);
    REQUIRE(c.size() == 2);
    REQUIRE(u.size() == 2);
    CHECK(c[0].surely_contains(QQi(Rat(1, 3))));
    CHECK(c[1].surely_contains(QQi(-2)));
    CHECK(u[0].surely_contains(QQi(0)));
    CHECK(u[1].surely_contains(QQi(7)));
    for (const auto& b : c) CHECK(b.rad <= Dyadic::pow2(-49));
}

TEST_CASE("interpolation recovers textbook solutions") {
    ScopedPrec amb(240);

    // f'' = f, f(0) = 2, f'(0) = 0 -> e^t + e^{-t}.
    RootList r1 = roots_of({QQi(-1), QQi(0)}, 40);
    ExponentialPolynomial s1 = solve_exponential(exact_balls({QQi(2), QQi(0)}), r1);
    REQUIRE(s1.terms.size() == 2);
    for (const auto& t : s1.terms) {
        CHECK(t.mult == 1);
        REQUIRE(t.a.size() == 1);
        CHECK(t.a[0].surely_contains(QQi(1)));
    }

    // (z - 1)^2, u = (1, 3) -> (1 + 2t) e^t.
    RootList r2 = roots_of({QQi(1), QQi(-2)}, 40);
    ExponentialPolynomial s2 = solve_exponential(exact_balls({QQi(1), QQi(3)}), r2);
    REQUIRE(s2.terms.size() == 1);
    CHECK(s2.terms[0].mult == 2);
    REQUIRE(s2.terms[0].a.size() == 2);
    CHECK(s2.terms[0].a[0].surely_contains(QQi(1)));
    CHECK(s2.terms[0].a[1].surely_contains(QQi(2)));
    CHECK(s2.terms[0].lambda.surely_contains(QQi(1)));

    // Order 1: 5 e^{3t}.
    RootList r3 = roots_of({QQi(-3)}, 40);
    ExponentialPolynomial s3 = solve_exponential(exact_balls({QQi(5)}), r3);
    REQUIRE(s3.terms.size() == 1);
    CHECK(s3.terms[0].a[0].surely_contains(QQi(5)));
}

TEST_CASE("interpolation residuals straddle zero") {
    ScopedPrec amb(240);
    std::uniform_int_distribution<long> coef(-4, 4);
    for (int trial = 0; trial < 12; ++trial) {
        long n = 1 + (trial % 3);
        std::vector<QQi> roots;
        while (static_cast<long>(roots.size()) < n) {
            QQi cand(coef(rng));
            bool dup = false;
            for (const auto& r : roots) dup = dup || r == cand;
            if (!dup) roots.push_back(cand);
        }
        std::vector<QQi> u;
        for (long k = 0; k < n; ++k) u.push_back(QQi(coef(rng)));
        ExactProblem p{roots, u};
        RootList rl = roots_of(p.coeffs(), 40);
        std::vector<ComplexBall> ub = exact_balls(u);
        ExponentialPolynomial sol = solve_exponential(ub, rl);
        for (const auto& res : solution_residual(sol, ub)) CHECK(res.contains_zero());
    }
}

TEST_CASE("pointwise evaluation of solved systems") {
    ScopedPrec amb(240);

    // Constant 2 (order 1, root 0).
    RootList rz = roots_of({QQi(0)}, 40);
    ExponentialPolynomial cz = solve_exponential(exact_balls({QQi(2)}), rz);
    ComplexBall at0 = eval_solution(cz, Dyadic(0));
    CHECK(at0.surely_contains(QQi(2)));
    ComplexBall at5 = eval_solution(cz, Dyadic(5));
    CHECK(at5.surely_contains(QQi(2)));

    // (1 + 2t) e^t at t = 1 equals 3e.
    RootList r2 = roots_of({QQi(1), QQi(-2)}, 40);
    ExponentialPolynomial s2 = solve_exponential(exact_balls({QQi(1), QQi(3)}), r2);
    ComplexBall v = eval_solution(s2, Dyadic(1));
    ComplexBall three_e = ComplexBall(3) * ball_exp_real(ComplexBall(1));
    CHECK(balls_overlap(v, three_e));
    CHECK(v.rad <= Dyadic::pow2(-20));

    // Evaluation at 0 reproduces the initial value.
    ComplexBall v0 = eval_solution(s2, Dyadic(0));
    CHECK(v0.surely_contains(QQi(1)));
}

TEST_CASE("elementary enclosures") {
    ScopedPrec amb(160);
    ComplexBall one = ball_exp_real(ComplexBall(0));
    CHECK(one.surely_contains(QQi(1)));

    ComplexBall e1 = ball_exp_real(ComplexBall(1));
    ComplexBall e_named = name_to_ball(RealName::of_constant("e"), 60);
    CHECK(balls_overlap(e1, e_named));
    CHECK(e1.rad <= Dyadic::pow2(-40));

    ComplexBall c, s;
    ball_cos_sin(ComplexBall(0), c, s);
    CHECK(c.surely_contains(QQi(1)));
    CHECK(s.surely_contains(QQi(0)));

    // cos^2 + sin^2 = 1 along random real points.
    std::uniform_int_distribution<long> num(-12, 12);
    for (int trial = 0; trial < 10; ++trial) {
        ComplexBall x = ComplexBall::from_rational(Rat(num(rng), 4), Rat(0), 100);
        ball_cos_sin(x, c, s);
        CHECK((c * c + s * s).surely_contains(QQi(1)));
    }

    // Complex exponential: e^{i pi} + 1 straddles zero.
    ComplexBall ipi(Dyadic(), name_to_ball(RealName::of_constant("pi"), 80).re,
                    Dyadic::pow2(-80));
    ComplexBall euler = ball_exp(ipi) + ComplexBall(1);
    CHECK(euler.contains_zero());
    CHECK(euler.abs_ub() <= Dyadic::pow2(-40));
}
