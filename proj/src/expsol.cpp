#include "cfcomp/expsol.hpp"

#include "cfcomp/errors.hpp"
#include "cfcomp/scalar.hpp"

namespace cfc {

namespace {

ComplexBall int_ball(const Int& k) { return ComplexBall::exact_point(Dyadic(k, 0)); }

// e^x for a dyadic point, via 2^-k argument scaling and the Taylor series on
// |y| <= 1/8, then repeated squaring. Series tail bounded by 2^(-3(T+1)+1).
ComplexBall point_exp(const Dyadic& x) {
    long prec = ScopedPrec::current();
    long k = 0;
    if (!x.is_zero()) {
        long fl = x.floor_log2_abs();
        if (fl >= -4) k = fl + 4;
    }
    Dyadic y = mul_pow2(x, -k);
    long T = prec / 3 + 4;
    ComplexBall yb = ComplexBall::exact_point(y.round(prec + 8, Round::Nearest));
    yb.rad = yb.rad + Dyadic::pow2(-prec - 7);
    ComplexBall sum = ComplexBall(1);
    ComplexBall pw = ComplexBall(1);
    Int fact(1);
    for (long j = 1; j <= T; ++j) {
        pw = pw * yb;
        fact *= j;
        sum = sum + pw / int_ball(fact);
    }
    sum.rad = sum.rad + Dyadic::pow2(-3 * (T + 1) + 1);
    for (long j = 0; j < k; ++j) sum = sum * sum;
    return sum;
}

// cos y, sin y for a dyadic point: scale by 2^-k to |y| <= 1/8, series with
// rigorous tails, then k double-angle steps.
void point_cos_sin(const Dyadic& x, ComplexBall& c, ComplexBall& s) {
    long prec = ScopedPrec::current();
    long k = 0;
    if (!x.is_zero()) {
        long fl = x.floor_log2_abs();
        if (fl >= -4) k = fl + 4;
    }
    Dyadic y = mul_pow2(x, -k);
    long T = prec / 6 + 4;
    ComplexBall yb = ComplexBall::exact_point(y.round(prec + 8, Round::Nearest));
    yb.rad = yb.rad + Dyadic::pow2(-prec - 7);
    ComplexBall y2 = yb * yb;
    ComplexBall cs = ComplexBall(1);
    ComplexBall ss = yb;
    ComplexBall cpw = ComplexBall(1);
    ComplexBall spw = yb;
    Int cf(1), sf(1);
    for (long j = 1; j <= T; ++j) {
        cpw = cpw * y2;
        cf *= (2 * j - 1);
        cf *= (2 * j);
        ComplexBall ct = cpw / int_ball(cf);
        spw = spw * y2;
        sf *= (2 * j);
        sf *= (2 * j + 1);
        ComplexBall st = spw / int_ball(sf);
        if (j % 2 == 1) {
            cs = cs - ct;
            ss = ss - st;
        } else {
            cs = cs + ct;
            ss = ss + st;
        }
    }
    Dyadic tail = Dyadic::pow2(-6 * (T + 1) + 1);
    cs.rad = cs.rad + tail;
    ss.rad = ss.rad + tail;
    ComplexBall two(2);
    for (long j = 0; j < k; ++j) {
        ComplexBall nc = two * cs * cs - ComplexBall(1);
        ComplexBall ns = two * ss * cs;
        cs = nc;
        ss = ns;
    }
    c = cs;
    s = ss;
}

} // namespace

ComplexBall ball_exp_real(const ComplexBall& x) {
    Dyadic lo = x.re - x.rad;
    Dyadic hi = x.re + x.rad;
    ComplexBall elo = point_exp(lo);
    ComplexBall ehi = point_exp(hi);
    Dyadic lb = elo.re - elo.rad;
    Dyadic ub = ehi.re + ehi.rad;
    ComplexBall out;
    out.re = mul_pow2(lb + ub, -1);
    out.im = Dyadic(0);
    out.rad = mul_pow2(ub - lb, -1).round(16, Round::Up);
    return out;
}

void ball_cos_sin(const ComplexBall& x, ComplexBall& c, ComplexBall& s) {
    point_cos_sin(x.re, c, s);
    // cos and sin are 1-Lipschitz, so the input radius passes through.
    c.rad = (c.rad + x.rad).round(16, Round::Up);
    s.rad = (s.rad + x.rad).round(16, Round::Up);
}

ComplexBall ball_exp(const ComplexBall& z) {
    ComplexBall re_part{z.re, Dyadic(0), z.rad};
    ComplexBall im_part{z.im, Dyadic(0), z.rad};
    ComplexBall mag = ball_exp_real(re_part);
    ComplexBall c, s;
    ball_cos_sin(im_part, c, s);
    ComplexBall phase{c.re, s.re, (c.rad + s.rad).round(16, Round::Up)};
    return mag * phase;
}

ExponentialPolynomial solve_exponential(const std::vector<ComplexBall>& u,
                                        const RootList& roots) {
    long n = static_cast<long>(roots.roots.size());
    if (static_cast<long>(u.size()) != n)
        throw LengthMismatch("solve_exponential: |u| != deg");
    ExponentialPolynomial sol;
    if (n == 0) return sol;

    Signature sig;
    std::vector<ComplexBall> pts;
    for (const auto& comp : roots.components) {
        ComplexBall node = roots.roots[comp[0]].ball;
        for (size_t i = 1; i < comp.size(); ++i)
            node = ball_union(node, roots.roots[comp[i]].ball);
        sig.m.push_back(static_cast<long>(comp.size()));
        pts.push_back(node);
    }
    auto V = build_vandermonde<ComplexBall>(sig, pts, true);
    auto a = solve_linear<ComplexBall>(V, u);

    size_t pos = 0;
    for (size_t j = 0; j < pts.size(); ++j) {
        ExpTerm t;
        t.lambda = pts[j];
        t.mult = sig.m[j];
        for (long q = 0; q < t.mult; ++q) t.a.push_back(a[pos++]);
        sol.terms.push_back(std::move(t));
    }
    return sol;
}

std::vector<ComplexBall> solution_residual(const ExponentialPolynomial& sol,
                                           const std::vector<ComplexBall>& u) {
    long n = static_cast<long>(u.size());
    std::vector<ComplexBall> res;
    for (long p = 0; p < n; ++p) {
        ComplexBall acc(0);
        for (const ExpTerm& t : sol.terms) {
            ComplexBall lam_pow = ComplexBall(1);
            std::vector<ComplexBall> pows(static_cast<size_t>(p) + 1);
            for (long e = 0; e <= p; ++e) {
                pows[static_cast<size_t>(e)] = lam_pow;
                lam_pow = lam_pow * t.lambda;
            }
            for (long q = 0; q < t.mult && q <= p; ++q) {
                Int w = factorial_int(q) * binom_int(p, q);
                acc = acc + int_ball(w) * t.a[static_cast<size_t>(q)] *
                                pows[static_cast<size_t>(p - q)];
            }
        }
        res.push_back(acc - u[static_cast<size_t>(p)]);
    }
    return res;
}

ComplexBall eval_solution(const ExponentialPolynomial& sol, const Dyadic& t) {
    ComplexBall acc(0);
    ComplexBall tb = ComplexBall::exact_point(t);
    for (const ExpTerm& term : sol.terms) {
        ComplexBall poly(0);
        ComplexBall tpow = ComplexBall(1);
        for (long q = 0; q < term.mult; ++q) {
            poly = poly + term.a[static_cast<size_t>(q)] * tpow;
            tpow = tpow * tb;
        }
        acc = acc + poly * ball_exp(term.lambda * tb);
    }
    return acc;
}

} // namespace cfc
