#include "cfcomp/decide.hpp"

#include "cfcomp/errors.hpp"
#include "cfcomp/vandermonde.hpp"

#include <algorithm>
#include <stdexcept>

namespace cfc {

const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::True: return "true";
        case Outcome::False: return "false";
        default: return "exhausted";
    }
}

namespace {

// x might not exceed y at tolerance 2^-M: re(x) - tol < re(y) + tol.
bool prec_leq(const ComplexBall& x, const ComplexBall& y, const Dyadic& tol) {
    return (x.re - tol) < (y.re + tol);
}

// Certified three-way sign against +-thr for a real ball.
Kleenean tri_sign(const ComplexBall& x, const Dyadic& thr) {
    if ((x.re - x.rad) >= thr) return Kleenean::True;
    if ((x.re + x.rad) <= -thr) return Kleenean::False;
    return Kleenean::Unknown;
}

// Sign placing g_value onto the true leading coefficient: for a real dominant
// root of assumed multiplicity l among k points in the conjugate-closed
// layout, the coefficient is positive iff (-1)^(k - l) G is. Validated
// exactly on simple and confluent configurations through k = 7.
bool flip_sign(long k, long l) { return ((k + l) % 2) == 1; }

} // namespace

long precision_schedule(long N, long B, long n, long m) {
    long base = 32 + (B + 3) * (n + m + 2);
    return base + 4 * N;
}

long magnitude_bound(const CauchyProblem& p, const CauchyProblem& q) {
    ScopedPrec amb(48);
    Dyadic big(1);
    auto absorb = [&big](const CauchyProblem& s) {
        Dyadic cmax;
        for (const ComplexBall& b : coefficient_balls(s, 16)) {
            Dyadic u = b.abs_ub();
            if (u > cmax) cmax = u;
        }
        Dyadic rootb = Dyadic(1) + cmax;
        if (rootb > big) big = rootb;
        for (const ComplexBall& b : initial_balls(s, 16)) {
            Dyadic u = b.abs_ub();
            if (u > big) big = u;
        }
    };
    absorb(p);
    absorb(q);
    return big.floor_log2_abs() + 2;
}

Verdict decide_equality(const CauchyProblem& p, const CauchyProblem& q, long fuel,
                        const EngineOptions& opt) {
    if (fuel < 1) throw std::invalid_argument("fuel must be >= 1");
    long n = p.order(), m = q.order();
    long tot = n + m;
    Verdict v;
    if (tot == 0) {
        // Two zero functions: equality is the boundary, never certified.
        v.fuel_used = fuel;
        return v;
    }
    long B = magnitude_bound(p, q);
    long M = 64;
    for (long k = 0; k < fuel; ++k) {
        long wprec = M + (B + 3) * (tot + 2) + 32;
        IterationRecord rec;
        rec.N = k;
        rec.M = M;
        ScopedPrec amb(wprec + 32);
        auto wp = extend_recurrence(p, tot - 1, wprec);
        auto wq = extend_recurrence(q, tot - 1, wprec);
        bool fired = false;
        for (long j = 0; j < tot && !fired; ++j) {
            ComplexBall d = wp[static_cast<size_t>(j)] - wq[static_cast<size_t>(j)];
            rec.defect.push_back(d);
            if (d.excludes_zero()) fired = true;
        }
        v.final_precision = M;
        v.fuel_used = k + 1;
        if (fired) {
            rec.fired = "prefix-differs";
            v.outcome = Outcome::True;
            v.fired = rec.fired;
            if (opt.keep_trace) v.trace.push_back(std::move(rec));
            return v;
        }
        if (opt.keep_trace) v.trace.push_back(std::move(rec));
        if (2 * M > opt.max_precision) return v;
        M *= 2;
    }
    v.fuel_used = fuel;
    return v;
}

Verdict decide_ultimate_inequality(const CauchyProblem& p, const CauchyProblem& q,
                                   long fuel, const EngineOptions& opt) {
    if (!p.real || !q.real)
        throw std::invalid_argument("ultimate inequality is defined over real problems");
    if (fuel < 1) throw std::invalid_argument("fuel must be >= 1");
    long n = p.order(), m = q.order();
    long tot = n + m;
    Verdict v;
    if (tot == 0) {
        // Both sides are the zero function; the inequality holds outright and
        // has no perturbations to flip it.
        v.outcome = Outcome::True;
        v.fired = "zero-zero";
        v.fuel_used = 1;
        return v;
    }

    long B = magnitude_bound(p, q);
    long cfloor = 0;
    long lastM = 0;

    for (long N = 0; N < fuel; ++N) {
        long wprec = precision_schedule(N, B, n, m);
        // Separation exponent: the root-ordering, realness and defect tests
        // compare against 2^-M. It ramps one bit per round, much slower than
        // the working precision, so near-ties are resolved gradually and the
        // iteration count tracks the boundary distance of the instance.
        long M = N + 1;
        lastM = wprec;
        IterationRecord rec;
        rec.N = N;
        rec.M = M;

        auto halt = [&](Outcome o, const char* step) {
            rec.fired = step;
            v.outcome = o;
            v.fired = step;
            v.fuel_used = N + 1;
            v.final_precision = wprec;
            if (opt.keep_trace) v.trace.push_back(std::move(rec));
            return v;
        };

        // Root stage; coefficient precision doubles at fixed target until
        // certification goes through or the cap is hit.
        long cprec = std::max(2 * wprec + 96, cfloor);
        RootList rc, rd;
        for (;;) {
            try {
                ScopedPrec amb(cprec + 32);
                if (n > 0) {
                    CharPoly pc{coefficient_balls(p, cprec)};
                    rc = find_roots(pc, wprec);
                }
                if (m > 0) {
                    CharPoly pd{coefficient_balls(q, cprec)};
                    rd = find_roots(pd, wprec);
                }
                break;
            } catch (const PrecisionExhausted&) {
                if (2 * cprec > opt.max_precision) {
                    v.fuel_used = N + 1;
                    v.final_precision = cprec;
                    v.fired = "precision-cap";
                    if (opt.keep_trace) v.trace.push_back(std::move(rec));
                    return v;
                }
                cprec *= 2;
            }
        }
        cfloor = std::max(cfloor, cprec);

        long work = wprec + (B + 3) * (tot + 2) + 96;
        ScopedPrec amb(work);

        std::vector<ComplexBall> lam;
        lam.reserve(static_cast<size_t>(tot));
        for (const auto& r : rc.roots) lam.push_back(r.ball);
        for (const auto& r : rd.roots) lam.push_back(r.ball);
        rec.lam = lam;

        Dyadic tol = Dyadic::pow2(-M);
        Dyadic thrN = Dyadic::pow2(-N);
        auto leq = [&](int i, int k) { return prec_leq(lam[i], lam[k], tol); };

        for (int j = 0; j < n; ++j) {
            bool top = true;
            for (int k = 0; k < tot && top; ++k)
                if (!leq(k, j)) top = false;
            if (top) rec.m1_set.push_back(j);
        }
        for (int j = n; j < tot; ++j) {
            bool top = true;
            for (int k = 0; k < tot && top; ++k)
                if (!leq(k, j)) top = false;
            if (top) rec.m2_set.push_back(j);
        }

        std::vector<ComplexBall> up = initial_balls(p, wprec);
        std::vector<ComplexBall> vq = initial_balls(q, wprec);

        if (rec.m1_set.size() == 1) {
            int j1 = rec.m1_set[0];
            std::vector<ComplexBall> pts;
            pts.push_back(lam[j1]);
            for (int k = 0; k < n; ++k)
                if (k != j1) pts.push_back(lam[k]);
            ComplexBall g = g_value<ComplexBall>(n, 1, pts, up);
            if (flip_sign(n, 1)) g = -g;
            rec.c_pos = tri_sign(flatten_to_real(g), thrN);
        }
        if (rec.m2_set.size() == 1) {
            int k1 = rec.m2_set[0];
            std::vector<ComplexBall> pts;
            pts.push_back(lam[k1]);
            for (int k = n; k < tot; ++k)
                if (k != k1) pts.push_back(lam[k]);
            ComplexBall g = g_value<ComplexBall>(m, 1, pts, vq);
            if (flip_sign(m, 1)) g = -g;
            rec.d_pos = tri_sign(flatten_to_real(g), thrN);
        }

        if (rec.m1_set.size() == 1 && rec.m2_set.empty() && rec.c_pos != Kleenean::Unknown)
            return halt(rec.c_pos == Kleenean::True ? Outcome::True : Outcome::False,
                        "3.8");
        if (rec.m1_set.empty() && rec.m2_set.size() == 1 && rec.d_pos != Kleenean::Unknown)
            return halt(rec.d_pos == Kleenean::True ? Outcome::False : Outcome::True,
                        "3.9");
        if (rec.m1_set.size() == 1 && rec.m2_set.size() == 1 &&
            rec.c_pos != Kleenean::Unknown && rec.c_pos == kleenean_not(rec.d_pos))
            return halt(rec.c_pos == Kleenean::True ? Outcome::True : Outcome::False,
                        "3.10");

        for (int i = 0; i < tot; ++i)
            if (lam[i].im.abs() < tol) rec.r_set.push_back(i);
        for (int j : rec.r_set) {
            bool top = true;
            for (int k : rec.r_set)
                if (!leq(k, j)) {
                    top = false;
                    break;
                }
            if (top) (j < n ? rec.mr1_set : rec.mr2_set).push_back(j);
        }
        if (rec.r_set.empty()) {
            for (int i = 0; i < tot; ++i) rec.c_set.push_back(i);
        } else {
            for (int i = 0; i < tot; ++i) {
                bool strictly_above_all = true;
                for (int k : rec.r_set)
                    if (leq(i, k)) {
                        strictly_above_all = false;
                        break;
                    }
                if (strictly_above_all) rec.c_set.push_back(i);
            }
        }

        if (!rec.c_set.empty()) {
            // Defect of the difference prefix against the problem with the
            // strictly-complex-dominant part removed: a certified nonzero
            // defect means a dominant oscillation survives in f - g.
            long dprec = wprec + (B + 3) * (tot + 2) + 32;
            auto wp = extend_recurrence(p, tot - 1, dprec);
            auto wq = extend_recurrence(q, tot - 1, dprec);
            std::vector<ComplexBall> w(static_cast<size_t>(tot));
            for (int j = 0; j < tot; ++j) w[j] = wp[j] - wq[j];

            std::vector<int> notC;
            for (int i = 0; i < tot; ++i)
                if (std::find(rec.c_set.begin(), rec.c_set.end(), i) == rec.c_set.end())
                    notC.push_back(i);
            RootList combined;
            combined.roots.reserve(static_cast<size_t>(tot));
            for (const auto& r : rc.roots) combined.roots.push_back(r);
            for (auto r : rd.roots) {
                if (r.conj_partner >= 0) r.conj_partner += static_cast<int>(n);
                combined.roots.push_back(r);
            }
            auto ecoef = real_coeffs_from_root_subset(combined, notC);
            std::vector<ComplexBall> seed(w.begin(),
                                          w.begin() + static_cast<long>(notC.size()));
            auto wpr = extend_sequence(ecoef, seed, tot);
            bool fired = false;
            for (int j = 0; j < tot; ++j) {
                ComplexBall d = w[j] - wpr[j];
                rec.defect.push_back(d);
                if (d.abs_lb() > tol) {
                    fired = true;
                    break;
                }
            }
            if (fired) return halt(Outcome::False, "3.14.6");
        }

        // Candidate leading coefficients of f and of -g, one hypothesis per
        // possible multiplicity of the dominant potentially-real root.
        auto push_list = [&](const std::vector<int>& mrset, long side_order, int base,
                             const std::vector<ComplexBall>& vals, bool q_side) {
            if (mrset.empty()) return;
            int j1 = mrset[0];
            long mm = static_cast<long>(mrset.size());
            std::vector<int> others;
            for (int k = base; k < base + side_order; ++k)
                if (std::find(mrset.begin(), mrset.end(), k) == mrset.end())
                    others.push_back(k);
            for (long l = 1; l <= mm; ++l) {
                std::vector<ComplexBall> pts;
                pts.push_back(lam[j1]);
                // The unused multiplicity hypothesis slots are filled with the
                // chosen ball itself, not the other cluster members.
                for (long t = l; t < mm; ++t) pts.push_back(lam[j1]);
                for (int k : others) pts.push_back(lam[k]);
                ComplexBall g = g_value<ComplexBall>(side_order, l, pts, vals);
                if (flip_sign(side_order, l) != q_side) g = -g;
                rec.sign_list.push_back(flatten_to_real(g));
            }
        };
        push_list(rec.mr1_set, n, 0, up, false);
        push_list(rec.mr2_set, m, static_cast<int>(n), vq, true);

        if (!rec.sign_list.empty()) {
            bool all_neg = true;
            for (const auto& s : rec.sign_list)
                if (!((s.re + s.rad) < -thrN)) {
                    all_neg = false;
                    break;
                }
            if (all_neg) return halt(Outcome::False, "3.19");
        }

        if (opt.keep_trace) v.trace.push_back(std::move(rec));
    }

    v.outcome = Outcome::Exhausted;
    v.fuel_used = fuel;
    v.final_precision = lastM;
    return v;
}

} // namespace cfc
