#include "cfcomp/forge.hpp"

#include "cfcomp/errors.hpp"
#include "cfcomp/spectral.hpp"

#include <algorithm>
#include <stdexcept>

namespace cfc {

namespace {

Rat rat_pow(const Rat& x, long e) {
    Rat acc(1);
    for (long i = 0; i < e; ++i) acc *= x;
    return acc;
}

Rat pow2_rat(long k) {
    if (k >= 0) return Rat(Int(1) << k);
    return Rat(Int(1), Int(1) << (-k));
}

// |z| <= |re| + |im|, a rational upper bound on the modulus.
Rat mod_ub(const QQi& z) { return rat_abs(z.re) + rat_abs(z.im); }

Rat coeff_sup_ub(const std::vector<QQi>& c) {
    Rat m(0);
    for (const QQi& x : c) m = std::max(m, mod_ub(x));
    return m;
}

// Envelope recursion for re-extension: values below index l are untouched;
// from l on, each step may add the measured defect plus the recurrence echo
// of earlier changes plus the coefficient-change term.
Rat reextension_envelope(long l, long n, const Rat& defect_ub, const Rat& coeff_norm,
                         const Rat& coeff_change, const Rat& val_norm) {
    std::vector<Rat> eps_j(static_cast<size_t>(n), Rat(0));
    Rat worst(0);
    for (long j = l; j < n; ++j) {
        Rat prev(0);
        for (long i = std::max<long>(0, j - l); i < j; ++i)
            prev = std::max(prev, eps_j[static_cast<size_t>(i)]);
        Rat e = defect_ub + Rat(l) * coeff_norm * prev + Rat(l) * val_norm * coeff_change;
        eps_j[static_cast<size_t>(j)] = e;
        worst = std::max(worst, e);
    }
    return worst;
}

} // namespace

std::vector<Rat> recurrence_defect_sq(const std::vector<QQi>& coeffs,
                                      const std::vector<QQi>& seq) {
    long l = static_cast<long>(coeffs.size());
    std::vector<Rat> out;
    for (long j = l; j < static_cast<long>(seq.size()); ++j) {
        QQi d = seq[static_cast<size_t>(j)];
        for (long k = 0; k < l; ++k)
            d = d + coeffs[static_cast<size_t>(k)] * seq[static_cast<size_t>(j - l + k)];
        out.push_back(d.norm_sq());
    }
    return out;
}

SimplerPerturbation perturb_to_simpler(const ExactProblem& p,
                                       const std::vector<int>& factor_idx,
                                       const std::vector<QQi>& new_roots,
                                       const Rat& eps) {
    long n = p.order();
    long l = static_cast<long>(factor_idx.size());
    if (l != static_cast<long>(new_roots.size()))
        throw LengthMismatch("perturb_to_simpler: factor and replacement sizes differ");
    std::vector<bool> used(static_cast<size_t>(n), false);
    for (int i : factor_idx) {
        if (i < 0 || i >= n || used[static_cast<size_t>(i)])
            throw std::invalid_argument("perturb_to_simpler: bad factor index");
        used[static_cast<size_t>(i)] = true;
    }

    std::vector<QQi> old_factor, rest;
    for (int i : factor_idx) old_factor.push_back(p.roots[static_cast<size_t>(i)]);
    for (long i = 0; i < n; ++i)
        if (!used[static_cast<size_t>(i)]) rest.push_back(p.roots[static_cast<size_t>(i)]);

    Rat eps2 = eps * eps;
    for (long i = 0; i < l; ++i)
        if ((old_factor[static_cast<size_t>(i)] - new_roots[static_cast<size_t>(i)]).norm_sq() > eps2)
            throw HypothesisViolated("perturb_to_simpler: root moves farther than eps");
    std::vector<QQi> old_coeffs = coeffs_from_roots(old_factor);
    for (const Rat& d2 : recurrence_defect_sq(old_coeffs, p.u))
        if (d2 >= eps2)
            throw HypothesisViolated("perturb_to_simpler: prefix defect reaches eps");

    std::vector<QQi> new_coeffs = coeffs_from_roots(new_roots);
    std::vector<QQi> seed(p.u.begin(), p.u.begin() + l);
    std::vector<QQi> u_new = extend_sequence(new_coeffs, seed, n);

    SimplerPerturbation out;
    out.out.roots = new_roots;
    out.out.roots.insert(out.out.roots.end(), rest.begin(), rest.end());
    out.out.u = u_new;

    // Measured defect of u under the new factor, then the growth envelope.
    Rat defect_ub(0);
    {
        std::vector<QQi> cs = new_coeffs;
        long ll = l;
        for (long j = ll; j < n; ++j) {
            QQi d = p.u[static_cast<size_t>(j)];
            for (long k = 0; k < ll; ++k)
                d = d + cs[static_cast<size_t>(k)] * p.u[static_cast<size_t>(j - ll + k)];
            defect_ub = std::max(defect_ub, mod_ub(d));
        }
    }
    Rat vnorm(0);
    for (const QQi& x : p.u) vnorm = std::max(vnorm, mod_ub(x));
    for (const QQi& x : u_new) vnorm = std::max(vnorm, mod_ub(x));
    Rat cchange(0);
    for (size_t k = 0; k < new_coeffs.size(); ++k)
        cchange = std::max(cchange, mod_ub(new_coeffs[k] - old_coeffs[k]));
    out.envelope = reextension_envelope(l, n, defect_ub, coeff_sup_ub(new_coeffs),
                                        Rat(0), Rat(0));
    // The defect above is against the new factor already, so the
    // coefficient-change echo is folded in; keep the explicit term too when
    // callers report against the old-factor defect.
    out.envelope = std::max(out.envelope,
                            reextension_envelope(l, n, eps + Rat(l) * vnorm * cchange,
                                                 coeff_sup_ub(new_coeffs), Rat(0), Rat(0)));
    return out;
}

ForgeResult forge_equal(const ExactProblem& p, const ExactProblem& q, const Rat& eps) {
    if (!(eps > 0) || !(eps < 1))
        throw std::invalid_argument("forge_equal: eps must lie in (0,1)");
    long n = p.order(), m = q.order();
    Rat eps2 = eps * eps;

    // Literal hypothesis window: indices min(n,m)..n+m of the two sequences.
    {
        auto sp = p.prefix(n + m + 1);
        auto sq = q.prefix(n + m + 1);
        for (long j = std::min(n, m); j <= n + m; ++j)
            if ((sp[static_cast<size_t>(j)] - sq[static_cast<size_t>(j)]).norm_sq() > eps2)
                throw HypothesisViolated("forge_equal: prefixes disagree beyond eps");
    }

    ForgeResult out;
    ExactProblem P = p, Q = q;
    if (n > m) {
        out.padded = n - m;
        Q.u = q.prefix(n);
        for (long i = 0; i < n - m; ++i) Q.roots.push_back(p.roots[static_cast<size_t>(i)]);
    } else if (m > n) {
        out.padded = m - n;
        P.u = p.prefix(m);
        for (long i = 0; i < m - n; ++i) P.roots.push_back(q.roots[static_cast<size_t>(i)]);
    }
    long nbar = std::max(n, m);

    // eta = eps^(1/(4 nbar - 2)), as a dyadic enclosure for reporting.
    long root_exp = 4 * nbar - 2;
    {
        Dyadic lo(0), hi(1);
        for (int it = 0; it < 80; ++it) {
            Dyadic mid = mul_pow2(lo + hi, -1).round(64, Round::Nearest);
            if (rat_pow(mid.to_rational(), root_exp) <= eps)
                lo = mid;
            else
                hi = mid;
        }
        out.budget.eta_lb = lo;
        out.budget.eta_ub = hi;
    }
    out.budget.eps = eps;

    // Matching at threshold eta, exactly: |lam - mu|^2 <= eta^2 iff
    // (|lam - mu|^2)^(2 nbar - 1) <= eps.
    auto edge = [&](int i, int j) {
        Rat d2 = (P.roots[static_cast<size_t>(i)] - Q.roots[static_cast<size_t>(j)]).norm_sq();
        return rat_pow(d2, 2 * nbar - 1) <= eps;
    };
    auto match = bipartite_max_matching(static_cast<int>(nbar), static_cast<int>(nbar), edge);

    std::vector<QQi> e_roots;
    std::vector<bool> q_used(static_cast<size_t>(nbar), false);
    for (long i = 0; i < nbar; ++i)
        if (match[static_cast<size_t>(i)] >= 0) {
            e_roots.push_back(P.roots[static_cast<size_t>(i)]);
            q_used[static_cast<size_t>(match[static_cast<size_t>(i)])] = true;
        }
    long l = static_cast<long>(e_roots.size());
    out.matched = l;

    std::vector<QQi> ce = coeffs_from_roots(e_roots);
    std::vector<QQi> seed(P.u.begin(), P.u.begin() + l);
    std::vector<QQi> u_new = extend_sequence(ce, seed, nbar);

    out.p_out.roots = P.roots;
    out.p_out.u = u_new;
    out.q_out.roots = e_roots;
    for (long j = 0; j < nbar; ++j)
        if (!q_used[static_cast<size_t>(j)])
            out.q_out.roots.push_back(Q.roots[static_cast<size_t>(j)]);
    out.q_out.u = u_new;

    // Both outputs restate (e, seed); their order-2 nbar prefixes must agree
    // exactly or the construction is broken.
    {
        auto a = out.p_out.prefix(2 * nbar);
        auto b = out.q_out.prefix(2 * nbar);
        for (long j = 0; j < 2 * nbar; ++j)
            if (!(a[static_cast<size_t>(j)] == b[static_cast<size_t>(j)]))
                throw std::logic_error("forge_equal: outputs fail exact prefix equality");
    }

    // Value-change budget: measured defect of u under e, pushed through the
    // re-extension envelope; the q side adds the measured prefix disagreement.
    Rat defect_ub(0);
    for (long j = l; j < nbar; ++j) {
        QQi d = P.u[static_cast<size_t>(j)];
        for (long k = 0; k < l; ++k)
            d = d + ce[static_cast<size_t>(k)] * P.u[static_cast<size_t>(j - l + k)];
        defect_ub = std::max(defect_ub, mod_ub(d));
    }
    Rat vnorm(0);
    for (const QQi& x : P.u) vnorm = std::max(vnorm, mod_ub(x));
    for (const QQi& x : u_new) vnorm = std::max(vnorm, mod_ub(x));
    out.budget.value_bound_p =
        reextension_envelope(l, nbar, defect_ub, coeff_sup_ub(ce), Rat(0), vnorm);
    Rat eps_meas(0);
    for (long j = 0; j < nbar; ++j)
        eps_meas = std::max(eps_meas, mod_ub(P.u[static_cast<size_t>(j)] -
                                             Q.u[static_cast<size_t>(j)]));
    out.budget.value_bound_q = out.budget.value_bound_p + eps_meas;
    return out;
}

BoundaryFamily make_boundary_family(BoundaryKind kind, long k) {
    BoundaryFamily fam;
    fam.k = k;
    Rat d = pow2_rat(-k);

    auto finish = [&](const char* name) {
        fam.up.family = name;
        fam.down.family = name;
        fam.up.margin = d;
        fam.down.margin = d;
        CompareLabel lu = oracle_eventual_compare(fam.up.p, fam.up.q);
        CompareLabel ld = oracle_eventual_compare(fam.down.p, fam.down.q);
        if (lu != fam.up.label || ld != fam.down.label)
            throw std::logic_error("boundary family labels disagree with the oracle");
    };

    switch (kind) {
        case BoundaryKind::SharedDominantCoefficient: {
            fam.p.roots = {QQi(1), QQi(-1)};
            fam.p.u = {QQi(2), QQi(0)};
            fam.q.roots = {QQi(1)};
            fam.q.u = {QQi(1)};
            // Coefficient moves cannot leave this boundary: whichever side's
            // root is nudged higher wins. The robust perturbations move the
            // root of g.
            fam.up.p = fam.p;
            fam.up.q.roots = {QQi(Rat(1) - d)};
            fam.up.q.u = {QQi(1)};
            fam.up.label = CompareLabel::GE;
            fam.down.p = fam.p;
            fam.down.q.roots = {QQi(Rat(1) + d)};
            fam.down.q.u = {QQi(1)};
            fam.down.label = CompareLabel::NotGE;
            finish("shared-dominant");
            break;
        }
        case BoundaryKind::IdenticallyEqual: {
            fam.p.roots = {QQi(1), QQi(2)};
            fam.p.u = {QQi(1), QQi(1)};
            fam.q.roots = {QQi(1)};
            fam.q.u = {QQi(1)};
            fam.up.p = fam.p;
            fam.up.p.u = {QQi(1), QQi(Rat(1) + d)};
            fam.up.q = fam.q;
            fam.up.label = CompareLabel::GE;
            fam.down.p = fam.p;
            fam.down.p.u = {QQi(1), QQi(Rat(1) - d)};
            fam.down.q = fam.q;
            fam.down.label = CompareLabel::NotGE;
            finish("identically-equal");
            break;
        }
        case BoundaryKind::ZeroComplexCoefficient: {
            // f = e^{-dt} carried by the real root, with a dormant conjugate
            // pair just above it in real part; q is the zero function.
            Rat r = -d;
            fam.p.roots = {QQi(Rat(0), Rat(1)), QQi(Rat(0), Rat(-1)), QQi(r)};
            fam.p.u = {QQi(1), QQi(r), QQi(r * r)};
            // Waking the pair oscillates the tail, so scaling f is still
            // boundary. The robust positive move sinks the pair below the
            // real root instead.
            Rat a = 2 * r;
            fam.up.p.roots = {QQi(a, Rat(1)), QQi(a, Rat(-1)), QQi(r)};
            fam.up.p.u = fam.p.u;
            fam.up.q = fam.q;
            fam.up.label = CompareLabel::GE;
            fam.down.p = fam.p;
            // Add d * cos t: its derivative prefix is (d, 0, -d).
            fam.down.p.u = {QQi(Rat(1) + d), QQi(r), QQi(r * r - d)};
            fam.down.q = fam.q;
            fam.down.label = CompareLabel::NotGE;
            finish("zero-complex-coefficient");
            break;
        }
    }
    return fam;
}

} // namespace cfc
