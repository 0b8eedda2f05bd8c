#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "group_algebra.hpp"
#include "random.hpp"

namespace bethe {

inline Permutation random_perm(SeededRandom& rng, int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    std::shuffle(img.begin(), img.end(), rng.engine());
    return Permutation::from_images(img);
}

/// Sum of `terms` random permutations with small rational coefficients.
inline GA random_element(SeededRandom& rng, int n, int terms) {
    GA a(n);
    for (int k = 0; k < terms; ++k) a.add(random_perm(rng, n), rng.rational());
    return a;
}

}  // namespace bethe
