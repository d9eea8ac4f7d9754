#include "doctest.h"

#include "cfcomp/errors.hpp"
#include "cfcomp/expsol.hpp"
#include "cfcomp/oracle.hpp"

#include <cstring>

using namespace cfc;

namespace {

const std::vector<QQi>& mode_poly(const ExactModes& m, const QQi& root) {
    for (const auto& [r, poly] : m.modes)
        if (r == root) return poly;
    static const std::vector<QQi> empty;
    return empty;
}

} // namespace

TEST_CASE("mode decomposition of small problems") {
    // e^t + e^{2t}: both coefficients 1.
    ExactModes m1 = exact_modes(ExactProblem{{QQi(1), QQi(2)}, {QQi(2), QQi(3)}});
    REQUIRE(m1.modes.size() == 2);
    CHECK(mode_poly(m1, QQi(1)) == std::vector<QQi>{QQi(1)});
    CHECK(mode_poly(m1, QQi(2)) == std::vector<QQi>{QQi(1)});

    // (1 + 2t) e^t from the double root.
    ExactModes m2 = exact_modes(ExactProblem{{QQi(1), QQi(1)}, {QQi(1), QQi(3)}});
    REQUIRE(m2.modes.size() == 1);
    CHECK(mode_poly(m2, QQi(1)) == std::vector<QQi>{QQi(1), QQi(2)});

    // cos t: coefficient 1/2 on each of +-i.
    ExactModes m3 = exact_modes(
        ExactProblem{{QQi(Rat(0), Rat(1)), QQi(Rat(0), Rat(-1))}, {QQi(1), QQi(0)}});
    REQUIRE(m3.modes.size() == 2);
    CHECK(mode_poly(m3, QQi(Rat(0), Rat(1))) == std::vector<QQi>{QQi(Rat(1, 2))});
    CHECK(mode_poly(m3, QQi(Rat(0), Rat(-1))) == std::vector<QQi>{QQi(Rat(1, 2))});

    CHECK(exact_modes(ExactProblem{}).modes.empty());
}

TEST_CASE("dominance labels on the worked pairs") {
    // e^t + e^{-t} against 5 e^{t/2}: the positive e^t mode wins.
    ExactProblem cosh{{QQi(1), QQi(-1)}, {QQi(2), QQi(0)}};
    ExactProblem half{{QQi(Rat(1, 2))}, {QQi(5)}};
    CHECK(oracle_eventual_compare(cosh, half) == CompareLabel::GE);
    CHECK(oracle_eventual_compare(half, cosh) == CompareLabel::NotGE);

    // cos t against 0: oscillation with no real part.
    ExactProblem cosine{{QQi(Rat(0), Rat(1)), QQi(Rat(0), Rat(-1))}, {QQi(1), QQi(0)}};
    ExactProblem zero{};
    CHECK(oracle_eventual_compare(cosine, zero) == CompareLabel::NotGE);

    // Same function through different presentations.
    ExactProblem et2{{QQi(1), QQi(2)}, {QQi(1), QQi(1)}};
    ExactProblem et1{{QQi(1)}, {QQi(1)}};
    CHECK(oracle_eventual_compare(et2, et1) == CompareLabel::Equal);
    CHECK(oracle_eventual_compare(et1, et2) == CompareLabel::Equal);
    CHECK(oracle_eventual_compare(zero, zero) == CompareLabel::Equal);
}

TEST_CASE("amplitude rule at a degree tie") {
    // 3 + cos t >= 0 eventually (a = 3 beats amplitude 1)...
    ExactProblem damped{
        {QQi(0), QQi(Rat(0), Rat(1)), QQi(Rat(0), Rat(-1))}, {QQi(4), QQi(0), QQi(-1)}};
    CHECK(oracle_eventual_compare(damped, ExactProblem{}) == CompareLabel::GE);
    // ... 1/2 + cos t is not.
    ExactProblem weak{
        {QQi(0), QQi(Rat(0), Rat(1)), QQi(Rat(0), Rat(-1))},
        {QQi(Rat(3, 2)), QQi(0), QQi(-1)}};
    CHECK(oracle_eventual_compare(weak, ExactProblem{}) == CompareLabel::NotGE);
    // Negative real lead loses regardless of amplitude.
    ExactProblem neg{
        {QQi(0), QQi(Rat(0), Rat(1)), QQi(Rat(0), Rat(-1))}, {QQi(-2), QQi(0), QQi(-1)}};
    CHECK(oracle_eventual_compare(neg, ExactProblem{}) == CompareLabel::NotGE);
}

TEST_CASE("ties the mode analysis cannot call") {
    // 2 + 2cos t: amplitude exactly cancels the real lead.
    ExactProblem knife{
        {QQi(0), QQi(Rat(0), Rat(1)), QQi(Rat(0), Rat(-1))}, {QQi(4), QQi(0), QQi(-2)}};
    CHECK_THROWS_AS(oracle_eventual_compare(knife, ExactProblem{}), OracleInapplicable);

    // Bare oscillation with no real lead is decidedly not >= 0.
    ExactProblem twopairs{{QQi(Rat(0), Rat(1)), QQi(Rat(0), Rat(-1)), QQi(Rat(0), Rat(2)),
                           QQi(Rat(0), Rat(-2))},
                          {QQi(2), QQi(0), QQi(-5), QQi(0)}};
    CHECK(oracle_eventual_compare(twopairs, ExactProblem{}) == CompareLabel::NotGE);

    // With a real mode tying the degree, two distinct pairs block the
    // amplitude rule: 2 + cos t + cos 2t.
    ExactProblem crowded{{QQi(0), QQi(Rat(0), Rat(1)), QQi(Rat(0), Rat(-1)),
                          QQi(Rat(0), Rat(2)), QQi(Rat(0), Rat(-2))},
                         {QQi(4), QQi(0), QQi(-5), QQi(0), QQi(17)}};
    CHECK_THROWS_AS(oracle_eventual_compare(crowded, ExactProblem{}), OracleInapplicable);
}

TEST_CASE("labels stay consistent with late pointwise evaluation") {
    ScopedPrec amb(260);
    // GE case with margin: evaluate f - g far out and expect strict positivity.
    ExactProblem f{{QQi(1), QQi(-1)}, {QQi(2), QQi(0)}};
    ExactProblem g{{QQi(Rat(1, 2))}, {QQi(5)}};
    REQUIRE(oracle_eventual_compare(f, g) == CompareLabel::GE);

    auto build = [](const ExactProblem& p) {
        CharPoly cp;
        for (const auto& c : p.coeffs()) cp.c.push_back(ComplexBall::from_exact(c, 220));
        RootList rl = find_roots(cp, 60);
        std::vector<ComplexBall> u;
        for (const auto& x : p.u) u.push_back(ComplexBall::from_exact(x, 220));
        return solve_exponential(u, rl);
    };
    ComplexBall diff =
        eval_solution(build(f), Dyadic(16)) - eval_solution(build(g), Dyadic(16));
    CHECK(sign_or_unknown(flatten_to_real(diff)) == BallSign::Positive);
}
