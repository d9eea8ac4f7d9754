#include "cfcomp/corpus.hpp"

#include "cfcomp/scalar.hpp"

#include <stdexcept>

namespace cfc {

namespace {

Rat pow2_rat(long k) {
    if (k >= 0) return Rat(Int(1) << k);
    return Rat(Int(1), Int(1) << (-k));
}

QQi pow_qqi(const QQi& x, long e) {
    QQi acc(1);
    for (long i = 0; i < e; ++i) acc = acc * x;
    return acc;
}

// One spectral mode: coefficient polynomial (by ascending t-degree) on
// e^{root t}.
struct ModeSpec {
    QQi root;
    std::vector<QQi> poly;
};

ExactProblem from_modes(const std::vector<ModeSpec>& ms) {
    ExactProblem p;
    long n = 0;
    for (const auto& m : ms) {
        for (size_t q = 0; q < m.poly.size(); ++q) p.roots.push_back(m.root);
        n += static_cast<long>(m.poly.size());
    }
    for (long j = 0; j < n; ++j) {
        QQi acc(0);
        for (const auto& m : ms)
            for (long q = 0; q < static_cast<long>(m.poly.size()) && q <= j; ++q)
                acc = acc + m.poly[static_cast<size_t>(q)] *
                                QQi(Rat(factorial_int(q) * binom_int(j, q))) *
                                pow_qqi(m.root, j - q);
        p.u.push_back(acc);
    }
    return p;
}

ModeSpec simple(const Rat& root, const Rat& coeff) {
    return ModeSpec{QQi(root), {QQi(coeff)}};
}

// alpha * cos(b t) e^{a t} as its two conjugate modes.
std::vector<ModeSpec> cos_pair(const Rat& a, const Rat& b, const Rat& alpha) {
    Rat half = alpha / 2;
    return {ModeSpec{QQi(a, b), {QQi(half)}}, ModeSpec{QQi(a, -b), {QQi(half)}}};
}

void push_checked(std::vector<LabeledInstance>& out, LabeledInstance inst) {
    CompareLabel truth = oracle_eventual_compare(inst.p, inst.q);
    if (truth != inst.label)
        throw std::logic_error("corpus: constructed label disagrees with the oracle");
    out.push_back(std::move(inst));
}

} // namespace

std::vector<LabeledInstance> make_soundness_corpus() {
    std::vector<LabeledInstance> out;
    const Rat tops[] = {Rat(1), Rat(2), Rat(5, 2), Rat(-1, 2)};
    const Rat gaps[] = {Rat(1, 4), Rat(1, 16), Rat(1, 64)};
    const Rat scales[] = {Rat(1), Rat(1, 4)};

    // p-side real dominance, both signs, two shapes.
    for (const Rat& T : tops)
        for (const Rat& g : gaps)
            for (int s : {1, -1})
                for (const Rat& a : scales)
                    for (int shape : {0, 1}) {
                        LabeledInstance inst;
                        Rat lead = s * a;
                        if (shape == 0) {
                            inst.p = from_modes({simple(T, lead), simple(T - 1, Rat(1))});
                            inst.q = from_modes({simple(T - g, Rat(1))});
                        } else {
                            inst.p = from_modes({simple(T, lead), simple(T - 1, Rat(-1)),
                                                 simple(T - Rat(3, 2), Rat(1))});
                            inst.q = from_modes(
                                {simple(T - g, Rat(1)), simple(T - Rat(5, 4), Rat(1))});
                        }
                        inst.label = s > 0 ? CompareLabel::GE : CompareLabel::NotGE;
                        inst.margin = std::min(g, a) / 2;
                        inst.family = "real-dominant-p";
                        push_checked(out, std::move(inst));
                    }

    // q-side real dominance.
    for (const Rat& T : tops)
        for (const Rat& g : gaps)
            for (int s : {1, -1})
                for (const Rat& a : scales) {
                    LabeledInstance inst;
                    inst.q = from_modes({simple(T, s * a), simple(T - 1, Rat(1))});
                    inst.p = from_modes({simple(T - g, Rat(1))});
                    inst.label = s > 0 ? CompareLabel::NotGE : CompareLabel::GE;
                    inst.margin = std::min(g, a) / 2;
                    inst.family = "real-dominant-q";
                    push_checked(out, std::move(inst));
                }

    // Complex-dominant oscillation.
    {
        const std::pair<Rat, Rat> pairs_ab[] = {
            {Rat(1), Rat(1)}, {Rat(0), Rat(2)}, {Rat(-1, 2), Rat(1)}};
        const Rat alphas[] = {Rat(1), Rat(-1, 2)};
        for (const auto& [a, b] : pairs_ab)
            for (const Rat& alpha : alphas)
                for (int gsign : {1, -1})
                    for (int with_q : {0, 1}) {
                        LabeledInstance inst;
                        auto ms = cos_pair(a, b, alpha);
                        ms.push_back(simple(a - 1, Rat(gsign)));
                        inst.p = from_modes(ms);
                        if (with_q)
                            inst.q = from_modes({simple(a - Rat(3, 4), Rat(1))});
                        inst.label = CompareLabel::NotGE;
                        inst.margin = rat_abs(alpha) / 2;
                        inst.family = "complex-dominant";
                        push_checked(out, std::move(inst));
                    }
    }

    // Complex pair strictly below a real dominant root.
    for (int s : {1, -1})
        for (const Rat& g : {Rat(1, 4), Rat(1, 64)}) {
            LabeledInstance inst;
            auto ms = cos_pair(Rat(0), Rat(1), Rat(1));
            ms.insert(ms.begin(), simple(Rat(1), Rat(s)));
            inst.p = from_modes(ms);
            inst.q = from_modes({simple(Rat(1) - g, Rat(1))});
            inst.label = s > 0 ? CompareLabel::GE : CompareLabel::NotGE;
            inst.margin = std::min(g, Rat(1)) / 2;
            inst.family = "complex-below";
            push_checked(out, std::move(inst));
        }

    // Repeated dominant real root with negative leading coefficient (the
    // positive-lead twin is a boundary configuration, not corpus material).
    {
        const Rat rhos[] = {Rat(1), Rat(3, 2), Rat(-1, 4)};
        for (const Rat& rho : rhos)
            for (int gsign : {1, -1})
                for (const Rat& s : scales)
                    for (const Rat& a0 : {Rat(0), Rat(2)})
                        for (int with_q : {0, 1}) {
                            LabeledInstance inst;
                            std::vector<ModeSpec> ms = {
                                ModeSpec{QQi(rho), {QQi(a0), QQi(-s)}},
                                simple(rho - 1, Rat(gsign))};
                            inst.p = from_modes(ms);
                            if (with_q)
                                inst.q = from_modes({simple(rho - Rat(1, 2), Rat(1))});
                            inst.label = CompareLabel::NotGE;
                            inst.margin = s / 2;
                            inst.family = "double-root";
                            push_checked(out, std::move(inst));
                        }
    }

    // Order <= 1 against the zero function, both ways.
    for (const Rat& T : {Rat(1), Rat(-1), Rat(1, 2), Rat(-3, 2)})
        for (const Rat& s : {Rat(1), Rat(-1, 2)}) {
            LabeledInstance a;
            a.p = from_modes({simple(T, s)});
            a.label = s > 0 ? CompareLabel::GE : CompareLabel::NotGE;
            a.margin = rat_abs(s) / 2;
            a.family = "positivity-left";
            push_checked(out, std::move(a));
            LabeledInstance b;
            b.q = from_modes({simple(T, s)});
            b.label = s > 0 ? CompareLabel::NotGE : CompareLabel::GE;
            b.margin = rat_abs(s) / 2;
            b.family = "positivity-right";
            push_checked(out, std::move(b));
        }

    // Shared dominant root with opposed coefficient signs: robustly decided
    // even though neither side's dominant set is alone on top.
    for (const Rat& rho : {Rat(1), Rat(3, 2)})
        for (const Rat& a : {Rat(1), Rat(1, 2)})
            for (const Rat& b : {Rat(1), Rat(1, 4)})
                for (int flip : {0, 1}) {
                    LabeledInstance inst;
                    Rat pa = flip ? -a : a;
                    Rat qb = flip ? b : -b;
                    inst.p = from_modes({simple(rho, pa), simple(rho - 1, Rat(1))});
                    inst.q = from_modes({simple(rho, qb), simple(rho - Rat(3, 2), Rat(1))});
                    inst.label = flip ? CompareLabel::NotGE : CompareLabel::GE;
                    inst.margin = std::min(a, b) / 2;
                    inst.family = "opposed-shared";
                    push_checked(out, std::move(inst));
                }

    return out;
}

LabeledInstance make_scaling_instance(long k) {
    LabeledInstance inst;
    inst.p = from_modes({simple(Rat(1), Rat(1)), simple(Rat(-1), Rat(1))});
    inst.q = from_modes({simple(Rat(1) - pow2_rat(-k), Rat(1))});
    inst.label = CompareLabel::GE;
    inst.margin = pow2_rat(-k);
    inst.family = "shared-dominant-scaling";
    CompareLabel truth = oracle_eventual_compare(inst.p, inst.q);
    if (truth != inst.label)
        throw std::logic_error("scaling instance label disagrees with the oracle");
    return inst;
}

std::vector<ForgeCase> make_forge_corpus() {
    std::vector<ForgeCase> out;
    const Rat pool[] = {Rat(1),     Rat(-1),    Rat(1, 2),
                        Rat(-1, 2), Rat(3, 4), Rat(-3, 4)};
    for (long t = 0; t < 100; ++t) {
        long nbar = 1 + t % 3;
        long je = 36 + (t * 7) % 11;
        Rat delta = pow2_rat(-je) * Rat(1 + t % 3);

        ExactProblem p;
        bool with_pair = (nbar >= 2) && (t % 4 == 1);
        if (with_pair) {
            Rat a = pool[t % 6];
            p.roots.push_back(QQi(a, Rat(1)));
            p.roots.push_back(QQi(a, Rat(-1)));
            for (long i = 2; i < nbar; ++i)
                p.roots.push_back(QQi(pool[(t + i) % 6] + Rat(i, 7)));
        } else {
            for (long i = 0; i < nbar; ++i)
                p.roots.push_back(QQi(pool[(t + i) % 6] + Rat(i, 7)));
        }
        for (long j = 0; j < nbar; ++j)
            p.u.push_back(QQi(Rat((t * 13 + j * 5) % 7 - 3)));

        ExactProblem q;
        bool pad = (t % 5 == 0);
        long qorder = nbar + (pad ? 1 : 0);
        q.roots = p.roots;
        if (with_pair) {
            q.roots[0].re += delta;
            q.roots[1].re += delta;
        } else {
            q.roots[0].re += delta;
        }
        if (pad) q.roots.push_back(QQi(Rat(2)));
        q.u = p.prefix(qorder);

        ForgeCase fc;
        fc.p = p;
        fc.q = q;
        long n = p.order(), m = q.order();
        auto sp = p.prefix(n + m + 1);
        auto sq = q.prefix(n + m + 1);
        Rat worst(0);
        for (long j = std::min(n, m); j <= n + m; ++j) {
            QQi d = sp[static_cast<size_t>(j)] - sq[static_cast<size_t>(j)];
            worst = std::max(worst, rat_abs(d.re) + rat_abs(d.im));
        }
        fc.eps = worst * 2 + pow2_rat(-40);
        if (!(fc.eps < 1)) throw std::logic_error("forge corpus case not near-equal");
        out.push_back(std::move(fc));
    }
    return out;
}

std::vector<EqualityCase> make_equality_corpus() {
    std::vector<EqualityCase> out;
    const Rat pool[] = {Rat(1), Rat(-1), Rat(1, 2), Rat(-2), Rat(5, 2)};

    // Identical descriptions.
    for (long t = 0; t < 20; ++t) {
        ExactProblem p;
        long n = 1 + t % 3;
        for (long i = 0; i < n; ++i) p.roots.push_back(QQi(pool[(t + i) % 5] + Rat(i, 9)));
        for (long j = 0; j < n; ++j) p.u.push_back(QQi(Rat((t + j) % 5 - 2)));
        out.push_back({p, p, true});
    }
    // Same function re-encoded one order higher.
    for (long t = 0; t < 20; ++t) {
        ExactProblem p;
        long n = 1 + t % 3;
        for (long i = 0; i < n; ++i) p.roots.push_back(QQi(pool[(t + 2 * i) % 5] + Rat(i, 9)));
        for (long j = 0; j < n; ++j) p.u.push_back(QQi(Rat((t * 3 + j) % 5 - 2)));
        ExactProblem q = p;
        q.roots.push_back(QQi(Rat(3) + Rat(t % 4, 5)));
        q.u = p.prefix(n + 1);
        out.push_back({p, q, true});
    }
    // Generic unequal: a value bumped, or a root moved against u = (1, 0, ...).
    for (long t = 0; t < 40; ++t) {
        ExactProblem p;
        long n = 1 + t % 3;
        for (long i = 0; i < n; ++i) p.roots.push_back(QQi(pool[(t + i) % 5] + Rat(i, 9)));
        for (long j = 0; j < n; ++j) p.u.push_back(QQi(Rat(j == 0 ? 1 : 0)));
        ExactProblem q = p;
        if (t % 3 == 0) {
            q.u[0] = q.u[0] + QQi(pow2_rat(-(8 + t % 8)));
        } else if (t % 3 == 1) {
            q.roots[0].re += pow2_rat(-12);
        } else {
            // Complex non-conjugate pair: allowed for equality testing.
            q = p;
            p.roots[0] = QQi(Rat(0), Rat(1));
            q.roots[0] = QQi(Rat(0), Rat(1) + pow2_rat(-16));
            q.u = p.u;
        }
        out.push_back({p, q, false});
    }
    // Difference first appears at the last prefix index n+m-1: the zero
    // function against eps * t^(m-1) e^(alpha t).
    for (long t = 0; t < 20; ++t) {
        long m = 1 + t % 4;
        Rat alpha = pool[t % 5];
        Rat eps = pow2_rat(-(6 + t % 10));
        ExactProblem q;
        for (long i = 0; i < m; ++i) q.roots.push_back(QQi(alpha));
        for (long j = 0; j < m - 1; ++j) q.u.push_back(QQi(0));
        q.u.push_back(QQi(eps * Rat(factorial_int(m - 1))));
        ExactProblem p; // order 0
        out.push_back({p, q, false});
    }
    return out;
}

} // namespace cfc
