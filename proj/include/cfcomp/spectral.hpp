#pragma once

#include "cfcomp/roots.hpp"

#include <functional>
#include <vector>

namespace cfc {

// Maximum bipartite matching (augmenting paths). Returns, for each left
// vertex, the matched right vertex or -1. Edge order and ties are resolved by
// ascending index so results are deterministic.
std::vector<int> bipartite_max_matching(int n_left, int n_right,
                                        const std::function<bool(int, int)>& edge);

bool bipartite_perfect_exists(int n, const std::function<bool(int, int)>& edge);

// Min over perfect matchings of the max squared distance |a_i - b_pi(i)|^2,
// exact. Sizes must agree (LengthMismatch otherwise).
Rat exact_spectral_sq(const std::vector<QQi>& a, const std::vector<QQi>& b);

// Same value as a real ball, computed on root enclosures: the center matching
// is decided on ball centers and the enclosure radii widen the result.
struct SpectralValue {
    Dyadic lo, hi; // d_sigma of the true spectra lies in [lo, hi]
};
SpectralValue spectral_distance(const RootList& a, const RootList& b);

} // namespace cfc
