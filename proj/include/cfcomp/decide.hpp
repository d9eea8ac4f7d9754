#pragma once

#include "cfcomp/cfinite.hpp"
#include "cfcomp/kleenean.hpp"
#include "cfcomp/roots.hpp"

#include <string>
#include <vector>

namespace cfc {

enum class Outcome { True, False, Exhausted };

const char* to_string(Outcome o);

// One outer iteration of the inequality engine, replayable: every set is
// recomputable from the recorded balls and (N, M).
struct IterationRecord {
    long N = 0;
    long M = 0;   // separation exponent: ordering/realness thresholds are 2^-M
    std::vector<ComplexBall> lam;   // root balls, first n from p then m from q
    std::vector<int> m1_set, m2_set;
    std::vector<int> r_set, mr1_set, mr2_set, c_set;
    Kleenean c_pos = Kleenean::Unknown;
    Kleenean d_pos = Kleenean::Unknown;
    std::vector<ComplexBall> sign_list;   // the list L (real balls, signed)
    std::vector<ComplexBall> defect;      // |w_j - w'_j| when the C-test ran
    std::string fired;                    // halting rule id, empty if none
};

struct Verdict {
    Outcome outcome = Outcome::Exhausted;
    long fuel_used = 0;
    long final_precision = 0;
    std::string fired;
    std::vector<IterationRecord> trace;
};

struct EngineOptions {
    long max_precision = 1L << 20;
    bool keep_trace = true;
};

// Base precision plus a linear ramp in N; B is the instance magnitude bound
// and the ramp covers the radius growth of the G / recurrence evaluations so
// thresholds 2^-N stay resolvable.
long precision_schedule(long N, long B, long n, long m);

// Smallest B >= 1 with coefficients, initial values and the Cauchy root bound
// all below 2^B - 1, read off coarse balls.
long magnitude_bound(const CauchyProblem& p, const CauchyProblem& q);

// Halts True only when some prefix difference ball excludes zero, which
// certifies the functions differ. Equality itself is the boundary and runs
// the fuel out.
Verdict decide_equality(const CauchyProblem& p, const CauchyProblem& q, long fuel,
                        const EngineOptions& opt = {});

// The main engine: certifies "f(t) >= g(t) for all large t" or its negation
// for real problems, or reports Exhausted. Throws std::invalid_argument on
// problems not marked real.
Verdict decide_ultimate_inequality(const CauchyProblem& p, const CauchyProblem& q,
                                   long fuel, const EngineOptions& opt = {});

} // namespace cfc
