#include "cfcomp/oracle.hpp"

#include "cfcomp/errors.hpp"
#include "cfcomp/vandermonde.hpp"

#include <algorithm>
#include <map>

namespace cfc {

const char* to_string(CompareLabel l) {
    switch (l) {
        case CompareLabel::GE: return "ge";
        case CompareLabel::NotGE: return "not-ge";
        default: return "equal";
    }
}

ExactModes exact_modes(const ExactProblem& p) {
    ExactModes out;
    if (p.order() == 0) return out;

    std::vector<QQi> distinct;
    std::vector<long> mult;
    for (const QQi& r : p.roots) {
        bool found = false;
        for (size_t j = 0; j < distinct.size(); ++j)
            if (distinct[j] == r) {
                ++mult[j];
                found = true;
                break;
            }
        if (!found) {
            distinct.push_back(r);
            mult.push_back(1);
        }
    }
    Signature sig;
    sig.m = mult;
    auto V = build_vandermonde<QQi>(sig, distinct, true);
    auto a = solve_linear<QQi>(V, p.u);
    size_t pos = 0;
    for (size_t j = 0; j < distinct.size(); ++j) {
        std::vector<QQi> coeffs;
        for (long q = 0; q < mult[j]; ++q) coeffs.push_back(a[pos++]);
        out.modes.emplace_back(distinct[j], std::move(coeffs));
    }
    return out;
}

namespace {

void trim_zeros(std::vector<QQi>& v) {
    while (!v.empty() && v.back().re == 0 && v.back().im == 0) v.pop_back();
}

struct Mode {
    QQi root;
    std::vector<QQi> poly;
};

// Modes of p minus modes of q, zero modes dropped.
std::vector<Mode> difference_modes(const ExactProblem& p, const ExactProblem& q) {
    std::vector<Mode> acc;
    auto add = [&acc](const ExactModes& m, int sgn) {
        for (const auto& [root, poly] : m.modes) {
            Mode* slot = nullptr;
            for (Mode& e : acc)
                if (e.root == root) slot = &e;
            if (!slot) {
                acc.push_back(Mode{root, {}});
                slot = &acc.back();
            }
            if (slot->poly.size() < poly.size()) slot->poly.resize(poly.size(), QQi(0));
            for (size_t k = 0; k < poly.size(); ++k) {
                if (sgn > 0)
                    slot->poly[k] = slot->poly[k] + poly[k];
                else
                    slot->poly[k] = slot->poly[k] - poly[k];
            }
        }
    };
    add(exact_modes(p), +1);
    add(exact_modes(q), -1);
    std::vector<Mode> live;
    for (Mode& m : acc) {
        trim_zeros(m.poly);
        if (!m.poly.empty()) live.push_back(std::move(m));
    }
    return live;
}

} // namespace

CompareLabel oracle_eventual_compare(const ExactProblem& p, const ExactProblem& q) {
    auto modes = difference_modes(p, q);
    if (modes.empty()) return CompareLabel::Equal;

    Rat top = modes[0].root.re;
    for (const Mode& m : modes) top = std::max(top, m.root.re);

    // Level set at the maximal real part: the real mode (if any) against the
    // oscillating conjugate pairs.
    long real_deg = -1;
    QQi real_lead(0);
    long osc_deg = -1;
    std::vector<const Mode*> osc;
    for (const Mode& m : modes) {
        if (m.root.re != top) continue;
        long d = static_cast<long>(m.poly.size()) - 1;
        if (m.root.im == 0) {
            real_deg = d;
            real_lead = m.poly.back();
        } else {
            osc_deg = std::max(osc_deg, d);
            osc.push_back(&m);
        }
    }

    if (osc.empty()) {
        if (real_lead.im != 0) throw OracleInapplicable("complex lead on real axis");
        return real_lead.re > 0 ? CompareLabel::GE : CompareLabel::NotGE;
    }
    if (real_deg > osc_deg) {
        if (real_lead.im != 0) throw OracleInapplicable("complex lead on real axis");
        return real_lead.re > 0 ? CompareLabel::GE : CompareLabel::NotGE;
    }
    if (real_deg < osc_deg) return CompareLabel::NotGE;

    // Tie in degree: amplitude comparison, only for a single conjugate pair.
    std::vector<const Mode*> top_osc;
    for (const Mode* m : osc)
        if (static_cast<long>(m->poly.size()) - 1 == osc_deg) top_osc.push_back(m);
    if (top_osc.size() != 2)
        throw OracleInapplicable("several oscillators tie the dominant degree");
    const QQi& c0 = top_osc[0]->poly.back();
    const QQi& c1 = top_osc[1]->poly.back();
    if (!(top_osc[0]->root == top_osc[1]->root.conj()) || !(c0 == c1.conj()))
        throw OracleInapplicable("dominant oscillator is not a conjugate pair");
    if (real_lead.im != 0) throw OracleInapplicable("complex lead on real axis");
    const Rat& a = real_lead.re;
    if (a <= 0) return CompareLabel::NotGE;
    // a + 2|c| cos(...) stays positive iff a^2 > 4|c|^2.
    Rat a2 = a * a;
    Rat amp2 = 4 * c0.norm_sq();
    if (a2 > amp2) return CompareLabel::GE;
    if (a2 < amp2) return CompareLabel::NotGE;
    throw OracleInapplicable("amplitude exactly cancels the real lead");
}

} // namespace cfc
