#pragma once

#include <stdexcept>
#include <vector>

#include "matrix.hpp"
#include "permutation.hpp"

namespace bethe {

/// Pairwise commutation of a family of ring elements.
template <class T>
bool pairwise_commute(const std::vector<T>& family) {
    for (std::size_t a = 0; a < family.size(); ++a)
        for (std::size_t b = a + 1; b < family.size(); ++b)
            if (family[a] * family[b] != family[b] * family[a]) return false;
    return true;
}

/// sum_sigma sign(sigma) m(1, sigma(1)) ... m(n, sigma(n)), products taken in row order.
/// Meaningful only when all entries commute with each other.
template <class T>
T permutation_det(const Matrix<T>& m) {
    const int n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("permutation_det: matrix not square");
    T total{};
    if (n == 0) throw std::invalid_argument("permutation_det: empty matrix");
    for (const auto& p : all_permutations(n)) {
        bool zero = false;
        for (int a = 0; a < n && !zero; ++a) zero = bethe::is_zero(m(a, p.at0(a)));
        if (zero) continue;
        T prod = m(0, p.at0(0));
        for (int a = 1; a < n; ++a) prod = prod * m(a, p.at0(a));
        if (p.sign() > 0) total = total + prod;
        else total = total - prod;
    }
    return total;
}

}  // namespace bethe
