#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "determinant.hpp"
#include "gaudin.hpp"
#include "group_algebra.hpp"
#include "partitions.hpp"
#include "poly.hpp"

namespace bethe {

/// Element of C[S_N][u], stored with polynomial coefficients.
using UGA = GroupAlgebra<UPoly<Rational>>;
/// Polynomial in p whose coefficients are polynomials in u over C[S_n].
using PPoly = UPoly<UPoly<GA>>;

struct XXXParams {
    std::vector<Rational> z;
    Rational hbar{1};
    std::optional<Rational> p;
    bool distinct = true;
    bool shift_free = true;   // z_a - z_b != hbar for all a, b

    int n() const { return static_cast<int>(z.size()); }
};

inline XXXParams xxx_params(std::vector<Rational> z, const Rational& hbar, std::optional<Rational> p = std::nullopt) {
    if (hbar.is_zero()) throw std::invalid_argument("xxx_params: hbar must be nonzero");
    if (z.empty()) throw std::invalid_argument("xxx_params: need at least one parameter");
    XXXParams x;
    x.z = std::move(z);
    x.hbar = hbar;
    x.p = std::move(p);
    x.distinct = pairwise_distinct(x.z);
    for (const auto& a : x.z)
        for (const auto& b : x.z)
            if (a - b == hbar) x.shift_free = false;
    return x;
}

inline XXXParams with_p(XXXParams x, const Rational& p) {
    x.p = p;
    return x;
}

/// (u - z_a) + hbar sum_{b in others} sigma_{a,b} in C[S_N][u].
inline UGA xxx_factor(int N, const Rational& za, const Rational& hbar, int a, const std::vector<int>& others) {
    UGA f(N);
    f.add(Permutation(N), UPoly<Rational>::linear(za));
    for (int b : others) f.add(Permutation::transposition(N, a, b), UPoly<Rational>(hbar));
    return f;
}

/// (u - z_n + hbar sum_i sigma_{n,n+i}) ... (u - z_1 + hbar sum_i sigma_{1,n+i}) in C[S_{n+m}][u].
inline UGA xxx_chain(const XXXParams& x, int m) {
    const int n = x.n(), N = n + m;
    std::vector<int> aux = range_positions(n + 1, n + m);
    UGA prod(Permutation(N), UPoly<Rational>(Rational(1)));
    for (int a = n; a >= 1; --a) prod = prod * xxx_factor(N, x.z[static_cast<std::size_t>(a - 1)], x.hbar, a, aux);
    return prod;
}

inline UPoly<GA> scalar_upoly(const UPoly<Rational>& f, int n) {
    return f.map([n](const Rational& c) { return c.is_zero() ? GA() : GA::scalar(n, c); });
}

/// theta_m(A^(m)) times the chain, before the trace.
inline UGA xxx_trace_argument(const XXXParams& x, int m) {
    const int n = x.n();
    UGA a = constant_poly(theta_embed(antisymmetrizer(m), n, m));
    return a * xxx_chain(x, m);
}

/// T_m^n(u; p; hbar) at the concrete p carried by the parameters.
inline UPoly<GA> t_m_poly(const XXXParams& x, int m) {
    if (m < 0) throw std::invalid_argument("t_m_poly: m must be nonnegative");
    if (!x.p) throw std::invalid_argument("t_m_poly: p is symbolic; use t_m_symbolic");
    const int n = x.n();
    if (m == 0) return scalar_upoly(from_roots(x.z), n);
    return split_poly(trace_map(xxx_trace_argument(x, m), n, m, *x.p));
}

/// T_m^n(u; p; hbar) with p symbolic.
inline PPoly t_m_symbolic(const XXXParams& x, int m) {
    if (m < 0) throw std::invalid_argument("t_m_symbolic: m must be nonnegative");
    const int n = x.n();
    if (m == 0) return PPoly(scalar_upoly(from_roots(x.z), n));
    // outer polynomial in p, inner in u
    auto t = trace_map_symbolic(xxx_trace_argument(x, m), n, m);
    std::vector<std::vector<GA>> grid;
    for (const auto& [perm, cp] : t.terms())
        for (int k = 0; k <= cp.degree(); ++k)
            for (int d = 0; d <= cp[k].degree(); ++d) {
                if (cp[k][d].is_zero()) continue;
                if (static_cast<int>(grid.size()) <= k) grid.resize(static_cast<std::size_t>(k) + 1);
                auto& row = grid[static_cast<std::size_t>(k)];
                if (static_cast<int>(row.size()) <= d) row.resize(static_cast<std::size_t>(d) + 1, GA(n));
                row[static_cast<std::size_t>(d)].add(perm, cp[k][d]);
            }
    std::vector<UPoly<GA>> coeffs;
    for (auto& row : grid) {
        for (auto& g : row)
            if (g.is_zero()) g = GA();
        coeffs.emplace_back(std::move(row));
    }
    return PPoly(std::move(coeffs));
}

inline UPoly<GA> eval_p(const PPoly& f, const Rational& p) { return f.at(p); }

/// S_k^n(u; hbar); zero for k > n.
inline UPoly<GA> s_k_poly(const XXXParams& x, int k) {
    const int n = x.n();
    if (k < 0) throw std::invalid_argument("s_k_poly: k must be nonnegative");
    if (k == 0) return scalar_upoly(from_roots(x.z), n);
    if (k > n) return UPoly<GA>();
    UGA total(n);
    const GA top = scale(antisymmetrizer(k), factorial(k) * x.hbar.pow(k));
    for (const auto& r : subsets(n, k)) {
        UGA prod(Permutation(n), UPoly<Rational>(Rational(1)));
        for (int a = n; a >= 1; --a) {
            if (std::find(r.begin(), r.end(), a) != r.end()) continue;
            std::vector<int> below;
            for (int rj : r)
                if (rj < a) below.push_back(rj);
            prod = prod * xxx_factor(n, x.z[static_cast<std::size_t>(a - 1)], x.hbar, a, below);
        }
        total += constant_poly(embed(top, r, n)) * prod;
    }
    return split_poly(total);
}

/// Coefficients of T_m in u: T_{m,i} multiplies u^{n-i}.
inline GA t_coeff(const UPoly<GA>& t, int n, int i) {
    GA c = t[n - i];
    return c.is_zero() ? GA(n) : c;
}

/// Generators T_{m,i}, m = 1..n-1, i = 1..n.
inline std::vector<GA> xxx_generators(const XXXParams& x) {
    const int n = x.n();
    std::vector<GA> out;
    for (int m = 1; m <= n - 1; ++m) {
        UPoly<GA> t = t_m_poly(x, m);
        for (int i = 1; i <= n; ++i) out.push_back(t_coeff(t, n, i));
    }
    return out;
}

struct QKZFamily {
    std::vector<GA> K;
    bool invertible = true;
};

/// K_a = (z_a - z_{a-1} + hbar sigma_{a-1,a}) ... (z_a - z_1 + hbar sigma_{1,a})
///       (z_a - z_n + hbar sigma_{a,n}) ... (z_a - z_{a+1} + hbar sigma_{a,a+1})
inline QKZFamily qkz_elements(const XXXParams& x) {
    const int n = x.n();
    QKZFamily f;
    f.invertible = x.shift_free;
    auto factor = [&](int a, int b) {
        const int lo = std::min(a, b), hi = std::max(a, b);
        GA g = GA::scalar(n, x.z[static_cast<std::size_t>(a - 1)] - x.z[static_cast<std::size_t>(b - 1)]);
        g += scale(sigma(n, lo, hi), x.hbar);
        return g;
    };
    UPoly<GA> s1 = s_k_poly(x, 1);
    for (int a = 1; a <= n; ++a) {
        GA k = GA::identity(n);
        for (int b = a - 1; b >= 1; --b) k = k * factor(a, b);
        for (int b = n; b > a; --b) k = k * factor(a, b);
        // hbar K_a = S_1(z_a)
        if (scale(k, x.hbar) != s1.at(x.z[static_cast<std::size_t>(a - 1)]))
            throw std::logic_error("qkz_elements: mismatch with S_1 at z_a");
        f.K.push_back(std::move(k));
    }
    return f;
}

/// out += f(u) * g(v)
inline void add_product(BiPoly<GA>& out, const UPoly<GA>& f, const UPoly<Rational>& g) {
    for (int i = 0; i <= f.degree(); ++i) {
        if (f[i].is_zero()) continue;
        for (int j = 0; j <= g.degree(); ++j)
            if (!g[j].is_zero()) out += BiPoly<GA>::monomial(scale(f[i], g[j]), i, j);
    }
}

/// P(u, v) -> P(u, v + s)
template <class C>
BiPoly<C> shift_v(const BiPoly<C>& P, const Rational& s) {
    BiPoly<C> out;
    for (int i = 0; i <= P.u_degree(); ++i) {
        UPoly<C> row = P.coeff_u(i).shift(s);
        for (int j = 0; j <= row.degree(); ++j)
            if (!bethe::is_zero(row[j])) out.set(i, j, row[j]);
    }
    return out;
}

/// T(u, v) = sum_m (-1)^m T_m(u; n) v^{n-m}; the S-side expansion is checked against it.
inline BiPoly<GA> t_gen(const XXXParams& params) {
    const XXXParams x = with_p(params, Rational(params.n()));
    const int n = x.n();
    BiPoly<GA> lhs, rhs;
    for (int m = 0; m <= n; ++m) {
        UPoly<GA> t = t_m_poly(x, m);
        add_product(lhs, m % 2 ? scale(t, Rational(-1)) : t, UPoly<Rational>::monomial(Rational(1), n - m));
    }
    UPoly<Rational> vm1 = UPoly<Rational>::linear(Rational(1));
    for (int k = 0; k <= n; ++k) {
        UPoly<Rational> w(Rational(1));
        for (int j = 0; j < n - k; ++j) w *= vm1;
        UPoly<GA> s = s_k_poly(x, k);
        add_product(rhs, k % 2 ? scale(s, Rational(-1)) : s, w);
    }
    if (lhs != rhs) throw std::logic_error("t_gen: T-side and S-side expansions differ");
    return lhs;
}

/// det((u - Z)(v - Q) - hbar Q) with Q_ab = c_a / (z_a - z_b + hbar), c_a = q(z_a) prod_{b != a} 1/(z_a - z_b).
template <class C>
BiPoly<C> det_P_hbar(const XXXParams& x, const UPoly<C>& q, const C& one) {
    const int n = x.n();
    if (!x.distinct) throw std::invalid_argument("det_P_hbar: parameters must be pairwise distinct");
    if (!pairwise_commute(q.coeffs())) throw std::invalid_argument("det_P_hbar: coefficients of q do not commute");
    std::vector<C> c;
    for (int a = 0; a < n; ++a) {
        Rational w(1);
        for (int b = 0; b < n; ++b)
            if (b != a) w /= x.z[static_cast<std::size_t>(a)] - x.z[static_cast<std::size_t>(b)];
        C qa = q.is_zero() ? lift(Rational(0), one) : q.at(x.z[static_cast<std::size_t>(a)]);
        c.push_back(scale(qa, w));
    }
    Matrix<BiPoly<C>> m(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const Rational& za = x.z[static_cast<std::size_t>(a)];
            Rational den = za - x.z[static_cast<std::size_t>(b)] + x.hbar;
            if (den.is_zero()) throw std::invalid_argument("det_P_hbar: vanishing denominator z_a - z_b + hbar");
            C Q = scale(c[static_cast<std::size_t>(a)], den.inverse());
            BiPoly<C> inner = BiPoly<C>::monomial(-Q, 0, 0);
            if (a == b) inner += BiPoly<C>::monomial(one, 0, 1);
            BiPoly<C> lin = BiPoly<C>::monomial(one, 1, 0) + BiPoly<C>::monomial(lift(-za, one), 0, 0);
            m(a, b) = lin * inner - BiPoly<C>::monomial(scale(Q, x.hbar), 0, 0);
        }
    return permutation_det(m);
}

inline BiPoly<GA> det_P_hbar(const XXXParams& x, const UPoly<GA>& q) {
    return det_P_hbar(x, q, GA::identity(x.n()));
}

/// Residuals of the relations defining H_{hbar,lambda}(z) at scalar q_1..q_n.
template <class C>
struct HhResidual {
    BiPoly<C> P;                    // in u and w = v - 1
    double offdiag_max = 0;
    UPoly<C> lambda_residual;
    double lambda_max = 0;
    bool ok(double tol) const { return offdiag_max <= tol && lambda_max <= tol; }
};

template <class C>
HhResidual<C> check_relations_Hh(const Partition& lambda, const XXXParams& x, const std::vector<C>& q) {
    const int n = x.n();
    if (partition_size(lambda) != n) throw std::invalid_argument("check_relations_Hh: partition size differs from n");
    if (static_cast<int>(q.size()) != n) throw std::invalid_argument("check_relations_Hh: need q_1..q_n");
    if (!x.shift_free) throw std::invalid_argument("check_relations_Hh: requires z_a - z_b != hbar");
    const C one = lift(Rational(1), C(1));
    // q(u) = sum_i q_i u^{n-i}
    std::vector<C> qc(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) qc[static_cast<std::size_t>(n - i)] = q[static_cast<std::size_t>(i - 1)];
    HhResidual<C> r;
    r.P = shift_v(det_P_hbar(x, UPoly<C>(std::move(qc)), one), Rational(1));
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

}  // namespace bethe
