#pragma once

#include "cfcomp/ball.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cfc {

// A real number given as an oracle: query(p) returns a dyadic q with
// |q - x| < 2^-p. Nothing else may be assumed; two queries at different
// precisions need not look related beyond the coherence this implies.
struct RealName {
    std::function<Dyadic(long)> query;
    // Set when the name was built from an exact rational; lets ground-truth
    // paths skip the oracle without changing observable behavior.
    std::optional<Rat> exact;

    static RealName of_rational(const Rat& x);
    static RealName of_dyadic(const Dyadic& x);
    // "pi", "e", "sqrt2", "sqrt3", "sqrt5".
    static RealName of_constant(const std::string& which);
    // A perfectly valid name of x whose answers wobble by almost the allowed
    // 2^-p at every precision; used to check answers do not depend on the
    // representative chosen.
    static RealName adversarial(const Rat& x);
};

// Ball of radius exactly 2^-p containing the named number.
ComplexBall name_to_ball(const RealName& x, long p);

struct ComplexName {
    RealName re, im;
    // Construction-time knowledge that im is the literal zero name.
    bool exactly_real = false;

    static ComplexName of_real(RealName r) {
        ComplexName out{std::move(r), RealName::of_rational(Rat(0)), true};
        return out;
    }
    static ComplexName of_exact(const QQi& z) {
        ComplexName out{RealName::of_rational(z.re), RealName::of_rational(z.im),
                        z.im.is_zero()};
        return out;
    }
};

ComplexBall name_to_ball(const ComplexName& x, long p);

} // namespace cfc
