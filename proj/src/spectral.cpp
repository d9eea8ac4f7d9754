#include "cfcomp/spectral.hpp"

#include "cfcomp/errors.hpp"

#include <algorithm>

namespace cfc {

namespace {

bool try_augment(int u, const std::function<bool(int, int)>& edge, int n_right,
                 std::vector<int>& match_right, std::vector<bool>& seen) {
    for (int v = 0; v < n_right; ++v) {
        if (!edge(u, v) || seen[v]) continue;
        seen[v] = true;
        if (match_right[v] < 0 ||
            try_augment(match_right[v], edge, n_right, match_right, seen)) {
            match_right[v] = u;
            return true;
        }
    }
    return false;
}

} // namespace

std::vector<int> bipartite_max_matching(int n_left, int n_right,
                                        const std::function<bool(int, int)>& edge) {
    std::vector<int> match_right(n_right, -1);
    for (int u = 0; u < n_left; ++u) {
        std::vector<bool> seen(n_right, false);
        try_augment(u, edge, n_right, match_right, seen);
    }
    std::vector<int> match_left(n_left, -1);
    for (int v = 0; v < n_right; ++v)
        if (match_right[v] >= 0) match_left[match_right[v]] = v;
    return match_left;
}

bool bipartite_perfect_exists(int n, const std::function<bool(int, int)>& edge) {
    auto m = bipartite_max_matching(n, n, edge);
    for (int u = 0; u < n; ++u)
        if (m[u] < 0) return false;
    return true;
}

Rat exact_spectral_sq(const std::vector<QQi>& a, const std::vector<QQi>& b) {
    if (a.size() != b.size())
        throw LengthMismatch("spectral distance needs equal root counts");
    int n = static_cast<int>(a.size());
    if (n == 0) return Rat(0);
    std::vector<std::vector<Rat>> d2(n, std::vector<Rat>(n));
    std::vector<Rat> cand;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            d2[i][j] = (a[i] - b[j]).norm_sq();
            cand.push_back(d2[i][j]);
        }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    // Smallest threshold admitting a perfect matching; monotone, so bisect.
    size_t lo = 0, hi = cand.size() - 1;
    auto ok = [&](const Rat& t) {
        return bipartite_perfect_exists(
            n, [&](int i, int j) { return d2[i][j] <= t; });
    };
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (ok(cand[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return cand[lo];
}

SpectralValue spectral_distance(const RootList& a, const RootList& b) {
    if (a.size() != b.size())
        throw LengthMismatch("spectral distance needs equal root counts");
    int n = static_cast<int>(a.size());
    SpectralValue out;
    if (n == 0) {
        out.lo = out.hi = Dyadic();
        return out;
    }
    std::vector<std::vector<Dyadic>> d2(n, std::vector<Dyadic>(n));
    std::vector<Dyadic> cand;
    Dyadic ra, rb;
    for (int i = 0; i < n; ++i) {
        if (a.roots[i].ball.rad > ra) ra = a.roots[i].ball.rad;
        if (b.roots[i].ball.rad > rb) rb = b.roots[i].ball.rad;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Dyadic dre = a.roots[i].ball.re - b.roots[j].ball.re;
            Dyadic dim = a.roots[i].ball.im - b.roots[j].ball.im;
            d2[i][j] = dre * dre + dim * dim;
            cand.push_back(d2[i][j]);
        }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    size_t lo = 0, hi = cand.size() - 1;
    auto ok = [&](const Dyadic& t) {
        return bipartite_perfect_exists(
            n, [&](int i, int j) { return d2[i][j] <= t; });
    };
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (ok(cand[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    // Center matching value, widened by the enclosure radii.
    Dyadic slack = ra + rb;
    Dyadic l = sqrt_lb(cand[lo], 24) - slack;
    if (l.sign() < 0) l = Dyadic();
    out.lo = l;
    out.hi = (sqrt_ub(cand[lo], 24) + slack).round(16, Round::Up);
    return out;
}

} // namespace cfc
