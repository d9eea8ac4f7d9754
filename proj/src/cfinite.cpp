#include "cfcomp/cfinite.hpp"

#include "cfcomp/errors.hpp"

namespace cfc {

CauchyProblem CauchyProblem::from_exact(const std::vector<QQi>& coeffs,
                                        const std::vector<QQi>& init) {
    CauchyProblem p;
    p.real = true;
    for (const QQi& z : coeffs) {
        p.c.push_back(ComplexName::of_exact(z));
        if (z.im != 0) p.real = false;
    }
    for (const QQi& z : init) {
        p.u.push_back(ComplexName::of_exact(z));
        if (z.im != 0) p.real = false;
    }
    return p;
}

bool ExactProblem::is_real() const {
    for (const QQi& z : coeffs())
        if (z.im != 0) return false;
    for (const QQi& z : u)
        if (z.im != 0) return false;
    return true;
}

CauchyProblem ExactProblem::to_cauchy() const {
    return CauchyProblem::from_exact(coeffs(), u);
}

std::vector<QQi> ExactProblem::prefix(long count) const {
    return extend_sequence(coeffs(), u, count);
}

std::vector<ComplexBall> coefficient_balls(const CauchyProblem& p, long prec) {
    std::vector<ComplexBall> out;
    out.reserve(p.c.size());
    for (const ComplexName& nm : p.c) out.push_back(name_to_ball(nm, prec));
    return out;
}

std::vector<ComplexBall> initial_balls(const CauchyProblem& p, long prec) {
    std::vector<ComplexBall> out;
    out.reserve(p.u.size());
    for (const ComplexName& nm : p.u) out.push_back(name_to_ball(nm, prec));
    return out;
}

std::vector<ComplexBall> extend_recurrence(const CauchyProblem& p, long K, long prec) {
    if (K + 1 < p.order()) throw LengthMismatch("extend_recurrence: K below order");
    return extend_sequence(coefficient_balls(p, prec), initial_balls(p, prec), K + 1);
}

} // namespace cfc
