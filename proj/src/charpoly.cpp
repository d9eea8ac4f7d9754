#include "cfcomp/charpoly.hpp"

namespace cfc {

Rat exact_poly_sup_norm(const std::vector<QQi>& c) {
    // |re| + |im| dominates the modulus, keeping the bound rational.
    Rat m(0);
    for (const auto& z : c) {
        Rat b = rat_abs(z.re) + rat_abs(z.im);
        if (b > m) m = b;
    }
    return m;
}

} // namespace cfc
