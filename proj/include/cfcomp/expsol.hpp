#pragma once

#include "cfcomp/roots.hpp"
#include "cfcomp/vandermonde.hpp"

#include <vector>

namespace cfc {

// One spectral cluster of a solution: coefficient polynomial
// a_0 + a_1 t + ... + a_{mult-1} t^{mult-1} attached to e^{lambda t}.
struct ExpTerm {
    ComplexBall lambda;
    long mult = 1;
    std::vector<ComplexBall> a;
};

struct ExponentialPolynomial {
    std::vector<ExpTerm> terms;
};

// Solve the confluent interpolation system for the initial derivatives u:
// clusters follow the root list's overlap components (each cluster uses the
// union ball as its node). Throws PrecisionExhausted when a pivot cannot be
// certified at the ambient precision.
ExponentialPolynomial solve_exponential(const std::vector<ComplexBall>& u,
                                        const RootList& roots);

// Row-wise residual of the system the solver just solved (diagnostic).
std::vector<ComplexBall> solution_residual(const ExponentialPolynomial& sol,
                                           const std::vector<ComplexBall>& u);

// Rigorous elementary enclosures at the ambient precision.
ComplexBall ball_exp_real(const ComplexBall& x);           // e^x for real ball x
void ball_cos_sin(const ComplexBall& x, ComplexBall& c, ComplexBall& s);
ComplexBall ball_exp(const ComplexBall& z);                // e^z, complex

// Evaluate the exponential polynomial at a real point.
ComplexBall eval_solution(const ExponentialPolynomial& sol, const Dyadic& t);

} // namespace cfc
