#include "doctest.h"

#include "cfcomp/qtableau.hpp"
#include "cfcomp/ball.hpp"

#include <random>

using namespace cfc;

namespace {

std::mt19937_64 rng(660901);

QQi rand_pt() {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    return QQi(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)));
}

} // namespace

TEST_CASE("hand-evaluated tableau entries") {
    // One variable: Q_{1,m,i}(x) = binom(m+i, i) x^m.
    CHECK(q_eval<QQi>(1, 2, 1, {QQi(3)}) == QQi(27));
    CHECK(q_eval<QQi>(1, 3, 2, {QQi(2)}) == QQi(80)); // binom(5,2) = 10, 2^3 = 8
    // Two variables, weight 1, i = 0: X1 + X2.
    CHECK(q_eval<QQi>(2, 1, 0, {QQi(2), QQi(5)}) == QQi(7));
    // i shifts only the first variable's binomial weight.
    CHECK(q_eval<QQi>(2, 1, 1, {QQi(2), QQi(5)}) == QQi(9)); // 2*X1 + X2
}

TEST_CASE("degenerate weights") {
    std::vector<QQi> pts = {QQi(4), QQi(-1), QQi(7)};
    for (long n = 1; n <= 3; ++n)
        for (long i = 0; i <= 3; ++i) {
            CHECK(q_eval<QQi>(n, 0, i, pts) == QQi(1));
            CHECK(q_eval<QQi>(n, -1, i, pts) == QQi(0));
            CHECK(q_eval<QQi>(n, -5, i, pts) == QQi(0));
        }
}

TEST_CASE("tableau agrees with the defining enumeration") {
    for (int trial = 0; trial < 120; ++trial) {
        std::uniform_int_distribution<long> nd(1, 4), md(0, 5), id(0, 3);
        long n = nd(rng), m = md(rng), i = id(rng);
        std::vector<QQi> pts;
        for (long v = 0; v < n; ++v) pts.push_back(rand_pt());
        CHECK(q_eval(n, m, i, pts) == q_eval_by_definition(n, m, i, pts));
    }
}

TEST_CASE("ball evaluation encloses the exact value") {
    ScopedPrec amb(120);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<long> nd(1, 3), md(0, 4), id(0, 2);
        long n = nd(rng), m = md(rng), i = id(rng);
        std::vector<QQi> pts;
        std::vector<ComplexBall> balls;
        for (long v = 0; v < n; ++v) {
            pts.push_back(rand_pt());
            balls.push_back(ComplexBall::from_exact(pts.back(), 80));
        }
        QQi exact = q_eval(n, m, i, pts);
        ComplexBall got = q_eval(n, m, i, balls);
        CHECK(got.surely_contains(exact));
    }
}
