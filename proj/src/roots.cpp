#include "cfcomp/roots.hpp"

#include "cfcomp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

namespace cfc {

namespace {

// Plain rounded complex dyadic arithmetic for the iteration phase. The
// iteration has no correctness burden; certification below is what counts.
struct CD {
    Dyadic re, im;
};

CD cd_add(const CD& a, const CD& b) { return {a.re + b.re, a.im + b.im}; }
CD cd_sub(const CD& a, const CD& b) { return {a.re - b.re, a.im - b.im}; }

CD cd_mul(const CD& a, const CD& b, long prec) {
    return {(a.re * b.re - a.im * b.im).round(prec, Round::Nearest),
            (a.re * b.im + a.im * b.re).round(prec, Round::Nearest)};
}

Dyadic cd_abs2(const CD& a) { return a.re * a.re + a.im * a.im; }

CD cd_div(const CD& a, const CD& b, long prec) {
    Dyadic m2 = cd_abs2(b);
    return {div_dir(a.re * b.re + a.im * b.im, m2, prec, Round::Nearest),
            div_dir(a.im * b.re - a.re * b.im, m2, prec, Round::Nearest)};
}

Dyadic dist_ub(const Dyadic& dre, const Dyadic& dim) {
    return sqrt_ub(dre * dre + dim * dim, 24);
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<std::vector<int>> overlap_components(const std::vector<RootBall>& roots) {
    int n = static_cast<int>(roots.size());
    UnionFind uf(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (balls_overlap(roots[i].ball, roots[j].ball)) uf.unite(i, j);
    std::vector<std::vector<int>> comps;
    std::vector<int> where(n, -1);
    for (int i = 0; i < n; ++i) {
        int r = uf.find(i);
        if (where[r] < 0) {
            where[r] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        comps[where[r]].push_back(i);
    }
    return comps;
}

} // namespace

int RootList::component_of(int idx) const {
    for (size_t c = 0; c < components.size(); ++c)
        for (int m : components[c])
            if (m == idx) return static_cast<int>(c);
    return -1;
}

RootList find_roots(const CharPoly& p, long M) {
    long n = p.degree();
    RootList out;
    out.accuracy = M;
    if (n == 0) return out;

    // Guard bits so that component-wide enlargement still fits under 2^-M.
    long K = 6;
    while ((1L << K) < 2 * n + 2) ++K;
    K += 4;
    Dyadic cert_target = Dyadic::pow2(-(M + K));

    if (n == 1) {
        RootBall rb;
        rb.ball = ComplexBall(-p.c[0].re, -p.c[0].im, p.c[0].rad);
        if (!(rb.ball.rad <= Dyadic::pow2(-M)))
            throw PrecisionExhausted("degree-1 coefficient ball too wide");
        if (rb.ball.im.is_zero()) rb.conj_partner = -1;
        out.roots.push_back(rb);
        out.components = {{0}};
        return out;
    }

    // Working precision follows the information in the coefficients: a root of
    // multiplicity mu can only be pinned to 1/mu of the coefficient accuracy,
    // so the caller's retry policy (finer coefficient balls, same M) must
    // translate into finer iteration here. Exact coefficients get the cap.
    long cap = (n + 1) * (M + K) + 64;
    long avail = cap;
    for (long k = 0; k < n; ++k)
        if (!p.c[k].rad.is_zero()) {
            long bits = -(p.c[k].rad.floor_log2_abs() + 1);
            if (bits < avail) avail = bits;
        }
    if (avail < 0) avail = 0;
    long prec = std::max(2 * (M + K) + 48, std::min(avail + 32, cap));
    std::vector<CD> c(static_cast<size_t>(n));
    bool real_input = true;
    for (long k = 0; k < n; ++k) {
        c[k].re = p.c[k].re.round(prec, Round::Nearest);
        c[k].im = p.c[k].im.round(prec, Round::Nearest);
        if (!p.c[k].im.is_zero()) real_input = false;
    }

    // step 1: Aberth-Ehrlich simultaneous iteration from a perturbed circle.
    double radius = 1.0;
    for (long k = 0; k < n; ++k) {
        double a = std::abs(c[k].re.to_double()) + std::abs(c[k].im.to_double());
        if (!(a < 1e18)) a = 1e18;
        radius = std::max(radius, 1.0 + a);
    }
    std::vector<CD> z(static_cast<size_t>(n));
    for (long k = 0; k < n; ++k) {
        double ang = (2.0 * 3.14159265358979 * (k + 0.25)) / n + 0.137;
        double zr = radius * std::cos(ang) * (1.0 + 0.01 * k / n);
        double zi = radius * std::sin(ang) * (1.0 + 0.005 * k);
        z[k].re = Dyadic::from_rational(rat_from_string(std::to_string(zr)), 60, Round::Nearest);
        z[k].im = Dyadic::from_rational(rat_from_string(std::to_string(zi)), 60, Round::Nearest);
    }

    Dyadic step_stop = Dyadic::pow2(-(M + K + 8));
    Dyadic stop2 = step_stop * step_stop;
    long max_iters = 96 + 3 * prec;
    Dyadic nudge = Dyadic::pow2(-(prec / 2));
    for (long it = 0; it < max_iters; ++it) {
        Dyadic worst2;
        for (long i = 0; i < n; ++i) {
            // Horner for p and p' at z_i over the rounded centers.
            CD pv{Dyadic(1), Dyadic()};
            CD dv{Dyadic(), Dyadic()};
            for (long k = n; k-- > 0;) {
                dv = cd_add(cd_mul(dv, z[i], prec), pv);
                pv = cd_add(cd_mul(pv, z[i], prec), c[k]);
            }
            if (cd_abs2(pv).is_zero()) continue;
            if (cd_abs2(dv).is_zero()) {
                z[i].re += nudge;
                continue;
            }
            CD w = cd_div(pv, dv, prec);
            CD s{Dyadic(), Dyadic()};
            bool collision = false;
            for (long j = 0; j < n; ++j) {
                if (j == i) continue;
                CD d = cd_sub(z[i], z[j]);
                if (cd_abs2(d).is_zero()) {
                    collision = true;
                    break;
                }
                s = cd_add(s, cd_div(CD{Dyadic(1), Dyadic()}, d, prec));
            }
            if (collision) {
                z[i].re += nudge;
                z[i].im += nudge;
                continue;
            }
            CD denom = cd_sub(CD{Dyadic(1), Dyadic()}, cd_mul(w, s, prec));
            CD step = cd_abs2(denom).is_zero() ? w : cd_div(w, denom, prec);
            z[i] = cd_sub(z[i], step);
            Dyadic st2 = cd_abs2(step);
            if (st2 > worst2) worst2 = st2;
        }
        if (worst2 <= stop2) break;
    }

    // step 2: a posteriori certification. With W_i = p(z_i)/prod_{j!=i}
    // (z_i - z_j), the disks D(z_i, n |W_i|) jointly contain all roots, and a
    // connected component of k disks contains exactly k of them. Upper-bound
    // |W_i| over the whole coefficient family via ball evaluation.
    {
        ScopedPrec guard(prec + 16);
        for (long i = 0; i < n; ++i) {
            ComplexBall num(Dyadic(1), Dyadic(), Dyadic());
            ComplexBall zi = ComplexBall::exact_point(z[i].re, z[i].im);
            for (long k = n; k-- > 0;) num = num * zi + p.c[k];
            Dyadic den2(1);
            for (long j = 0; j < n; ++j) {
                if (j == i) continue;
                den2 *= cd_abs2(cd_sub(z[i], z[j]));
            }
            Dyadic den_lb = sqrt_lb(den2, 24);
            if (den_lb.is_zero())
                throw PrecisionExhausted("coincident approximations during certification");
            Dyadic wi = div_dir(num.abs_ub(), den_lb, 24, Round::Up);
            Dyadic ri = (Dyadic(n) * wi).round(16, Round::Up);
            // Trimming the center to prec bits moves it; the radius must
            // absorb that move or the enclosure silently loses the root.
            Dyadic cre = z[i].re.round(prec, Round::Nearest);
            Dyadic cim = z[i].im.round(prec, Round::Nearest);
            ri = (ri + dist_ub(cre - z[i].re, cim - z[i].im)).round(16, Round::Up);
            if (!(ri <= cert_target))
                throw PrecisionExhausted("root certification radius too large");
            RootBall rb;
            rb.ball = ComplexBall(cre, cim, ri);
            out.roots.push_back(rb);
        }
    }

    // step 3: conjugate symmetrization for real input: snap near-real disks
    // onto the axis, average the rest into mirrored pairs. Every move is
    // absorbed into the radius so containment survives.
    if (real_input) {
        long nn = n;
        std::vector<bool> done(static_cast<size_t>(nn), false);
        for (long i = 0; i < nn; ++i) {
            auto& b = out.roots[i].ball;
            if (b.im.abs() <= b.rad) {
                b.rad = (b.rad + b.im.abs()).round(16, Round::Up);
                b.im = Dyadic();
                out.roots[i].conj_partner = -1;
                done[i] = true;
            }
        }
        for (long i = 0; i < nn; ++i) {
            if (done[i] || out.roots[i].ball.im.sign() <= 0) continue;
            long best = -1;
            Dyadic best_d2;
            for (long j = 0; j < nn; ++j) {
                if (done[j] || out.roots[j].ball.im.sign() >= 0) continue;
                Dyadic dre = out.roots[i].ball.re - out.roots[j].ball.re;
                Dyadic dim = out.roots[i].ball.im + out.roots[j].ball.im;
                Dyadic d2 = dre * dre + dim * dim;
                if (best < 0 || d2 < best_d2) {
                    best = j;
                    best_d2 = d2;
                }
            }
            if (best < 0) continue; // snapped below instead
            auto& bi = out.roots[i].ball;
            auto& bj = out.roots[best].ball;
            Dyadic tre = mul_pow2(bi.re + bj.re, -1);
            Dyadic tim = mul_pow2(bi.im - bj.im, -1);
            Dyadic move = dist_ub(bi.re - tre, bi.im - tim);
            Dyadic r = (bi.rad > bj.rad ? bi.rad : bj.rad) + move;
            bi = ComplexBall(tre, tim, r.round(16, Round::Up));
            bj = ComplexBall(tre, -tim, r.round(16, Round::Up));
            out.roots[i].conj_partner = static_cast<int>(best);
            out.roots[best].conj_partner = static_cast<int>(i);
            done[i] = done[best] = true;
        }
        for (long i = 0; i < nn; ++i) {
            if (done[i]) continue; // unpaired leftover: snap it
            auto& b = out.roots[i].ball;
            b.rad = (b.rad + b.im.abs()).round(16, Round::Up);
            b.im = Dyadic();
            out.roots[i].conj_partner = -1;
        }
    } else {
        for (auto& r : out.roots) r.conj_partner = -2; // pairing not tracked
    }

    // step 4: enlarge every disk of an overlap component to cover the whole
    // component, so each ball contains each of the component's roots and any
    // in-component matching of true roots to balls is valid.
    auto comps = overlap_components(out.roots);
    for (const auto& comp : comps) {
        if (comp.size() <= 1) continue;
        std::vector<Dyadic> newrad(comp.size());
        for (size_t a = 0; a < comp.size(); ++a) {
            Dyadic r = out.roots[comp[a]].ball.rad;
            for (size_t b = 0; b < comp.size(); ++b) {
                if (a == b) continue;
                const auto& x = out.roots[comp[a]].ball;
                const auto& y = out.roots[comp[b]].ball;
                Dyadic cand = dist_ub(x.re - y.re, x.im - y.im) + y.rad;
                if (cand > r) r = cand;
            }
            newrad[a] = r.round(16, Round::Up);
        }
        for (size_t a = 0; a < comp.size(); ++a)
            out.roots[comp[a]].ball.rad = newrad[a];
    }
    Dyadic target = Dyadic::pow2(-M);
    for (const auto& r : out.roots)
        if (!(r.ball.rad <= target))
            throw PrecisionExhausted("cluster diameter exceeds requested accuracy");
    out.components = overlap_components(out.roots);
    return out;
}

std::vector<ComplexBall> real_coeffs_from_root_subset(const RootList& roots,
                                                      const std::vector<int>& subset) {
    std::vector<ComplexBall> pts;
    pts.reserve(subset.size());
    for (int i : subset) pts.push_back(roots.roots[i].ball);
    std::vector<ComplexBall> c = coeffs_from_roots(pts);
    for (auto& x : c) x = flatten_to_real(x);
    return c;
}

} // namespace cfc
