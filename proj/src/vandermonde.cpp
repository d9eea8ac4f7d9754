#include "cfcomp/vandermonde.hpp"

namespace cfc {

Int factorial_int(long n) {
    Int f(1);
    for (long k = 2; k <= n; ++k) f *= k;
    return f;
}

Int binom_int(long n, long k) {
    if (n < 0 || k < 0 || k > n) return Int(0);
    if (k > n - k) k = n - k;
    Int acc(1);
    for (long i = 1; i <= k; ++i) {
        acc *= (n - k + i);
        acc /= i;
    }
    return acc;
}

bool check_q_recursions(long n, long m, long i, const std::vector<QQi>& xs,
                        const QQi& y, const QQi& z) {
    if (static_cast<long>(xs.size()) < n + 1)
        throw LengthMismatch("check_q_recursions: need n+1 sample points");
    std::vector<QQi> base(xs.begin(), xs.begin() + n);

    // (1): append Y resp. Z as the last variable, i = 0.
    std::vector<QQi> with_y = base, with_z = base, with_yz = base;
    with_y.push_back(y);
    with_z.push_back(z);
    with_yz.push_back(y);
    with_yz.push_back(z);
    QQi lhs1 = q_eval(n + 1, m, 0, with_y) - q_eval(n + 1, m, 0, with_z);
    QQi rhs1 = (y - z) * q_eval(n + 2, m - 1, 0, with_yz);
    if (lhs1 != rhs1) return false;

    // (2): one more variable against one more repetition weight.
    std::vector<QQi> ext(xs.begin(), xs.begin() + n + 1);
    QQi lhs2 = q_eval(n + 1, m, i, ext) - q_eval(n, m, i + 1, base);
    QQi rhs2 = (ext[n] - ext[0]) * q_eval(n + 1, m - 1, i + 1, ext);
    return lhs2 == rhs2;
}

bool check_prop3_identity(long m, long n1, long n2, const std::vector<QQi>& lam,
                          const std::vector<QQi>& u) {
    if (static_cast<long>(lam.size()) != n1 || static_cast<long>(u.size()) != n1)
        throw LengthMismatch("check_prop3_identity: bad lengths");
    auto pts_for = [&](long order) {
        std::vector<QQi> pts;
        pts.push_back(lam[0]);
        for (long j = m; j < order; ++j) pts.push_back(lam[j]); // lambda_{m+1}..
        return pts;
    };
    std::vector<QQi> u2(u.begin(), u.begin() + n2);
    QQi lhs = g_value(n1, m, pts_for(n1), u);
    QQi rhs = g_value(n2, m, pts_for(n2), u2);
    for (long j = n2; j < n1; ++j) rhs = rhs * (lam[j] - lam[0]);
    return lhs == rhs;
}

} // namespace cfc
