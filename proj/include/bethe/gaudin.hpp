#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "determinant.hpp"
#include "group_algebra.hpp"
#include "matrix.hpp"
#include "partitions.hpp"
#include "poly.hpp"
#include "representation.hpp"

namespace bethe {

inline bool pairwise_distinct(const std::vector<Rational>& z) {
    for (std::size_t a = 0; a < z.size(); ++a)
        for (std::size_t b = a + 1; b < z.size(); ++b)
            if (z[a] == z[b]) return false;
    return true;
}

struct ParameterSet {
    std::vector<Rational> z;
    bool distinct = true;

    ParameterSet() = default;
    explicit ParameterSet(std::vector<Rational> zs) : z(std::move(zs)), distinct(pairwise_distinct(z)) {}
    int n() const { return static_cast<int>(z.size()); }
};

/// Increasing i-subsets of {1..n}.
inline std::vector<std::vector<int>> subsets(int n, int i) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == i) {
            out.push_back(cur);
            return;
        }
        for (int r = start; r <= n; ++r) {
            cur.push_back(r);
            self(self, r + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

/// Lift a rational scalar into a coefficient ring given its unit.
template <class C>
C lift(const Rational& r, const C& one) {
    return scale(one, r);
}

/// Phi_i(u) = sum_r i! pi_r(A^(i)) prod_{a not in r} (u - z_a); for i = 0 the plain product.
inline UPoly<GA> phi_poly(const std::vector<Rational>& z, int i) {
    const int n = static_cast<int>(z.size());
    if (i < 0 || i > n) throw std::invalid_argument("phi_poly: index out of range");
    if (i == 0) return from_roots(z).map([&](const Rational& c) { return GA::scalar(n, c); });
    GA top = scale(antisymmetrizer(i), factorial(i));
    std::vector<GA> coeffs(static_cast<std::size_t>(n - i) + 1, GA(n));
    for (const auto& r : subsets(n, i)) {
        GA e = embed(top, r, n);
        std::vector<Rational> roots;
        std::size_t k = 0;
        for (int a = 1; a <= n; ++a) {
            if (k < r.size() && r[k] == a) {
                ++k;
                continue;
            }
            roots.push_back(z[static_cast<std::size_t>(a - 1)]);
        }
        UPoly<Rational> f = from_roots(roots);
        for (int d = 0; d <= f.degree(); ++d)
            if (!f[d].is_zero()) coeffs[static_cast<std::size_t>(d)] += scale(e, f[d]);
    }
    return UPoly<GA>(std::move(coeffs));
}

/// Phi_0(u), ..., Phi_n(u) with the coefficient table Phi_{i,j}.
struct PhiTable {
    int n = 0;
    std::vector<Rational> z;
    std::vector<UPoly<GA>> phi;

    /// Phi_{i,j}: coefficient of u^{n-i-j} in Phi_i(u).
    GA coeff(int i, int j) const {
        if (i < 0 || i > n || j < 0 || j > n - i) throw std::out_of_range("PhiTable::coeff: index out of range");
        GA c = phi[static_cast<std::size_t>(i)][n - i - j];
        return c.is_zero() ? GA(n) : c;
    }
    /// (i, j) for i = 1..n, j = 0..n-i.
    std::vector<std::pair<int, int>> labels() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 1; i <= n; ++i)
            for (int j = 0; j <= n - i; ++j) out.emplace_back(i, j);
        return out;
    }
    std::vector<GA> generators() const {
        std::vector<GA> out;
        for (auto [i, j] : labels()) out.push_back(coeff(i, j));
        return out;
    }
};

inline PhiTable phi_polys(const std::vector<Rational>& z) {
    PhiTable t;
    t.n = static_cast<int>(z.size());
    if (t.n < 1) throw std::invalid_argument("phi_polys: need at least one parameter");
    t.z = z;
    for (int i = 0; i <= t.n; ++i) t.phi.push_back(phi_poly(z, i));
    return t;
}

/// Phi(u,v) = v^n prod(u - z_a) + sum_i (-1)^i Phi_i(u) v^{n-i}.
inline BiPoly<GA> phi_gen(const PhiTable& t) {
    BiPoly<GA> out;
    for (int i = 0; i <= t.n; ++i) {
        const auto& f = t.phi[static_cast<std::size_t>(i)];
        for (int k = 0; k <= f.degree(); ++k) {
            if (f[k].is_zero()) continue;
            out.set(k, t.n - i, i % 2 ? -f[k] : f[k]);
        }
    }
    return out;
}
inline BiPoly<GA> phi_gen(const std::vector<Rational>& z) { return phi_gen(phi_polys(z)); }

/// (-1)^n sum_sigma sign(sigma) sigma prod_{b fixed} (1 - v (u - z_b)).
inline BiPoly<GA> phi_gen_fixed_point(const std::vector<Rational>& z) {
    const int n = static_cast<int>(z.size());
    using B = BiPoly<Rational>;
    std::map<std::vector<bool>, B> cache;
    std::vector<std::vector<GA>> grid(static_cast<std::size_t>(n) + 1, std::vector<GA>(static_cast<std::size_t>(n) + 1, GA(n)));
    for (const auto& p : all_permutations(n)) {
        std::vector<bool> fixed(static_cast<std::size_t>(n));
        for (int b = 1; b <= n; ++b) fixed[static_cast<std::size_t>(b - 1)] = p(b) == b;
        auto it = cache.find(fixed);
        if (it == cache.end()) {
            B prod(Rational(1));
            for (int b = 1; b <= n; ++b)
                if (fixed[static_cast<std::size_t>(b - 1)]) {
                    // 1 - v u + v z_b
                    B f;
                    f.set(0, 0, Rational(1));
                    f.set(1, 1, Rational(-1));
                    f.set(0, 1, z[static_cast<std::size_t>(b - 1)]);
                    prod *= f;
                }
            it = cache.emplace(fixed, prod).first;
        }
        Rational s(((n % 2) ? -1 : 1) * p.sign());
        for (int i = 0; i <= it->second.u_degree(); ++i)
            for (int j = 0; j <= it->second.v_degree(); ++j) {
                Rational c = it->second.coeff(i, j);
                if (!c.is_zero()) grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].add(p, s * c);
            }
    }
    for (auto& row : grid)
        for (auto& g : row)
            if (g.is_zero()) g = GA();
    return BiPoly<GA>(std::move(grid));
}

/// H_a = sum_{b != a} sigma_{a,b} / (z_a - z_b), checked against Phi_2 on construction.
inline std::vector<GA> kz_elements(const std::vector<Rational>& z) {
    const int n = static_cast<int>(z.size());
    if (!pairwise_distinct(z)) throw std::invalid_argument("kz_elements: parameters must be pairwise distinct");
    std::vector<GA> H;
    for (int a = 1; a <= n; ++a) {
        GA h(n);
        for (int b = 1; b <= n; ++b)
            if (b != a) h += scale(sigma(n, a, b), (z[static_cast<std::size_t>(a - 1)] - z[static_cast<std::size_t>(b - 1)]).inverse());
        H.push_back(h);
    }
    if (n >= 2) {
        // Phi_2(u) = sum_a (-H_a + sum_{b != a} 1/(z_a - z_b)) prod_{b != a} (u - z_b)
        UPoly<GA> rhs;
        for (int a = 1; a <= n; ++a) {
            Rational s;
            std::vector<Rational> roots;
            for (int b = 1; b <= n; ++b)
                if (b != a) {
                    s += (z[static_cast<std::size_t>(a - 1)] - z[static_cast<std::size_t>(b - 1)]).inverse();
                    roots.push_back(z[static_cast<std::size_t>(b - 1)]);
                }
            GA c = GA::scalar(n, s) - H[static_cast<std::size_t>(a - 1)];
            rhs += mul_scalar_poly(UPoly<GA>(c), from_roots(roots));
        }
        if (rhs != phi_poly(z, 2)) throw std::logic_error("kz_elements: Phi_2 self-check failed");
    }
    return H;
}

enum class DetVariant { P, Ptilde, Ptilde0 };

inline const char* variant_name(DetVariant v) {
    switch (v) {
        case DetVariant::P: return "P";
        case DetVariant::Ptilde: return "Ptilde";
        case DetVariant::Ptilde0: return "Ptilde0";
    }
    return "?";
}

/// det((u-Z)(v-Q)-1), det((u-Z)(v-ZQ)-Z) or det(v-ZQ) with Q_aa = h_a, Q_ab = 1/(z_a - z_b).
/// Entries lie in the commutative subring generated by the scalars and the family h.
template <class C>
BiPoly<C> det_presentation(DetVariant variant, const std::vector<Rational>& z, const std::vector<C>& h, const C& one) {
    const int n = static_cast<int>(z.size());
    if (static_cast<int>(h.size()) != n) throw std::invalid_argument("det_presentation: family size differs from n");
    if (!pairwise_distinct(z)) throw std::invalid_argument("det_presentation: parameters must be pairwise distinct");
    if (!pairwise_commute(h)) throw std::invalid_argument("det_presentation: family does not commute");
    Matrix<BiPoly<C>> m(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const Rational& za = z[static_cast<std::size_t>(a)];
            C q = a == b ? h[static_cast<std::size_t>(a)] : lift((za - z[static_cast<std::size_t>(b)]).inverse(), one);
            if (variant != DetVariant::P) q = scale(q, za);
            BiPoly<C> e;
            // v delta - q
            BiPoly<C> inner = BiPoly<C>::monomial(-q, 0, 0);
            if (a == b) inner += BiPoly<C>::monomial(one, 0, 1);
            if (variant == DetVariant::Ptilde0) {
                e = inner;
            } else {
                BiPoly<C> lin = BiPoly<C>::monomial(one, 1, 0) + BiPoly<C>::monomial(lift(-za, one), 0, 0);
                e = lin * inner;
                if (a == b) e -= BiPoly<C>::monomial(variant == DetVariant::P ? one : lift(za, one), 0, 0);
            }
            m(a, b) = e;
        }
    return permutation_det(m);
}

inline BiPoly<GA> det_presentation(DetVariant variant, const std::vector<Rational>& z, const std::vector<GA>& h) {
    return det_presentation(variant, z, h, GA::identity(static_cast<int>(z.size())));
}

/// Young-Jucys-Murphy elements and a spanning set of generators for the Gelfand-Zetlin subalgebra.
struct GZData {
    std::vector<GA> jm;         // J_1 .. J_n
    std::vector<GA> spanning;   // class sums of S_m embedded on 1..m, m = 1..n
};

inline GZData jm_gz(int n) {
    GZData d;
    for (int a = 1; a <= n; ++a) d.jm.push_back(jucys_murphy(n, a));
    for (int m = 1; m <= n; ++m)
        for (const auto& mu : partitions_of(m)) d.spanning.push_back(extend(class_sum(mu), m, n));
    return d;
}

/// Phi~(u,v) = Pi(v+1) (prod(u - z_a) + sum_i (-u)^i Phi_i(u) prod_{j<=i} 1/(v+j)), with exact division.
inline BiPoly<GA> phi_tilde(const PhiTable& t) {
    const int n = t.n;
    UPoly<GA> pi1 = pi_poly(n).shift(Rational(1));
    BiPoly<GA> out;
    auto add_at = [&](int ku, const UPoly<GA>& fv) {
        for (int l = 0; l <= fv.degree(); ++l) {
            if (fv[l].is_zero()) continue;
            out.set(ku, l, out.coeff(ku, l) + fv[l]);
        }
    };
    UPoly<Rational> denom(Rational(1));
    for (int i = 0; i <= n; ++i) {
        if (i > 0) denom *= UPoly<Rational>::linear(Rational(-i));
        const auto& f = t.phi[static_cast<std::size_t>(i)];
        for (int k = 0; k <= f.degree(); ++k) {
            if (f[k].is_zero()) continue;
            std::vector<GA> prod;
            for (int l = 0; l <= pi1.degree(); ++l) prod.push_back(pi1[l].is_zero() ? GA() : pi1[l] * f[k]);
            auto [q, r] = divmod(UPoly<GA>(std::move(prod)), denom);
            if (!r.is_zero()) throw std::logic_error("phi_tilde: divisibility failure");
            add_at(k + i, i % 2 ? scale(q, Rational(-1)) : q);
        }
    }
    return out;
}
inline BiPoly<GA> phi_tilde(const std::vector<Rational>& z) { return phi_tilde(phi_polys(z)); }

inline double abs_value(const Rational& x) { return std::fabs(x.to_double()); }
inline double abs_value(double x) { return std::fabs(x); }
inline double abs_value(const std::complex<double>& x) { return std::abs(x); }

template <class C>
double max_abs_coeff(const UPoly<C>& p) {
    double m = 0;
    for (const auto& c : p.coeffs()) m = std::max(m, abs_value(c));
    return m;
}

/// Residuals of the relations defining H_lambda(z) at scalar values of h.
template <class C>
struct HResidual {
    BiPoly<C> P;
    double offdiag_max = 0;          // max |P_{i,j}|, j < i
    UPoly<C> lambda_residual;        // LHS - RHS of the partition relation, in t
    double lambda_max = 0;
    bool ok(double tol) const { return offdiag_max <= tol && lambda_max <= tol; }
};

template <class C>
HResidual<C> check_relations_H(const Partition& lambda, const std::vector<Rational>& z, const std::vector<C>& h) {
    const int n = static_cast<int>(z.size());
    if (partition_size(lambda) != n) throw std::invalid_argument("check_relations_H: partition size differs from n");
    HResidual<C> r;
    const C one = lift(Rational(1), C(1));
    r.P = det_presentation(DetVariant::P, z, h, one);
    auto Pij = [&](int i, int j) { return r.P.coeff(n - j, n - i); };
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j < i; ++j) r.offdiag_max = std::max(r.offdiag_max, abs_value(Pij(i, j)));
    UPoly<C> lhs, rhs(one);
    for (int i = 0; i <= n; ++i) {
        UPoly<Rational> tail(Rational(1));
        for (int j = i + 1; j <= n; ++j) tail *= UPoly<Rational>::linear(Rational(-j));
        lhs += mul_scalar_poly(UPoly<C>(Pij(i, i)), tail);
    }
    for (int j = 1; j <= n; ++j) rhs = mul_scalar_poly(rhs, UPoly<Rational>::linear(Rational(part(lambda, j) - j)));
    r.lambda_residual = lhs - rhs;
    r.lambda_max = max_abs_coeff(r.lambda_residual);
    return r;
}

/// Residuals of the relations defining H~_lambda(z) at scalar values of h.
template <class C>
struct HtResidual {
    BiPoly<C> Pt;
    UPoly<C> top_residual;                  // P~_0(v) - Pi_lambda(v)
    double top_max = 0;
    std::vector<UPoly<C>> remainders;       // i = 1..n
    double remainder_max = 0;
    bool ok(double tol) const { return top_max <= tol && remainder_max <= tol; }
};

template <class C>
HtResidual<C> check_relations_Ht(const Partition& lambda, const std::vector<Rational>& z, const std::vector<C>& h) {
    const int n = static_cast<int>(z.size());
    if (partition_size(lambda) != n) throw std::invalid_argument("check_relations_Ht: partition size differs from n");
    HtResidual<C> r;
    const C one = lift(Rational(1), C(1));
    r.Pt = det_presentation(DetVariant::Ptilde, z, h, one);
    UPoly<Rational> pil = content_poly(lambda);
    UPoly<Rational> pil1 = pil.shift(Rational(1));
    r.top_residual = r.Pt.coeff_u(n) - mul_scalar_poly(UPoly<C>(one), pil);
    r.top_max = max_abs_coeff(r.top_residual);
    for (int i = 1; i <= n; ++i) {
        UPoly<Rational> w(Rational(1));
        for (int j = 1; j <= n - i; ++j) w *= UPoly<Rational>::linear(Rational(-j));
        UPoly<C> num = mul_scalar_poly(r.Pt.coeff_u(n - i), w);
        auto [q, rem] = divmod(num, pil1);
        r.remainder_max = std::max(r.remainder_max, max_abs_coeff(rem));
        r.remainders.push_back(std::move(rem));
    }
    return r;
}

}  // namespace bethe
