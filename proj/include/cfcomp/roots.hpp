#pragma once

#include "cfcomp/charpoly.hpp"

#include <vector>

namespace cfc {

struct RootBall {
    ComplexBall ball;
    // Index of the conjugate partner after symmetrization; -1 for a ball
    // snapped onto the real axis.
    int conj_partner = -1;
};

struct RootList {
    std::vector<RootBall> roots;
    long accuracy = 0; // every radius <= 2^-accuracy
    // Overlap components; each component's balls all contain every root the
    // component accounts for, so any root-to-ball matching inside a
    // component is valid.
    std::vector<std::vector<int>> components;

    long size() const { return static_cast<long>(roots.size()); }
    int component_of(int idx) const;
};

// Certified root enclosures for a monic ball polynomial. The returned balls
// jointly contain all roots of every polynomial in the coefficient family,
// counted with multiplicity, and each ball has radius <= 2^-M. For a real
// polynomial the list is conjugate-symmetric (see RootBall::conj_partner).
// Throws PrecisionExhausted when certification at that radius fails; the
// caller owns the retry schedule. Coefficient radii should be well below
// 2^-M or certification cannot succeed.
RootList find_roots(const CharPoly& p, long M);

// Monic real-coefficient ball polynomial whose true value at the selected
// subset of true roots is real: imaginary slack is flattened into radii.
// The subset must be conjugation-closed (partners in or out together).
std::vector<ComplexBall> real_coeffs_from_root_subset(const RootList& roots,
                                                      const std::vector<int>& subset);

} // namespace cfc
