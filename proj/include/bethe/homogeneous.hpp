#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "determinant.hpp"
#include "gaudin.hpp"
#include "group_algebra.hpp"
#include "poly.hpp"

namespace bethe {

/// G_k^n = sum over i_1 < ... < i_k of sigma_{i_1,i_2} sigma_{i_2,i_3} ... sigma_{i_{k-1},i_k}.
inline GA g_cycles(int n, int k) {
    if (k < 2 || k > n) throw std::invalid_argument("g_cycles: need 2 <= k <= n");
    GA out(n);
    for (const auto& r : subsets(n, k)) {
        Permutation p(n);
        for (std::size_t j = 0; j + 1 < r.size(); ++j) p = p * Permutation::transposition(n, r[j], r[j + 1]);
        out.add(p, Rational(1));
    }
    return out;
}

/// gamma_n = sigma_{1,2} sigma_{2,3} ... sigma_{n-1,n}.
inline Permutation gamma_n(int n) {
    Permutation p(n);
    for (int a = 1; a < n; ++a) p = p * Permutation::transposition(n, a, a + 1);
    return p;
}

inline Permutation perm_power(const Permutation& g, int m) {
    Permutation r(g.degree());
    for (int i = 0; i < m; ++i) r = r * g;
    return r;
}

/// S_1^n(u) at z = 0, hbar = 1 assembled from the cycle sums: n u^{n-1} + sum_k G_k u^{n-k}.
inline UPoly<GA> s1_homogeneous(int n) {
    std::vector<GA> c(static_cast<std::size_t>(n), GA());
    c[static_cast<std::size_t>(n - 1)] = GA::scalar(n, Rational(n));
    for (int k = 2; k <= n; ++k) c[static_cast<std::size_t>(n - k)] = g_cycles(n, k);
    return UPoly<GA>(std::move(c));
}

struct LocalChargeSeries {
    int n = 0;
    int order = 0;
    std::vector<GA> charges;   // I_1 .. I_order

    const GA& I(int k) const { return charges.at(static_cast<std::size_t>(k - 1)); }
};

/// log(gamma_n^{-1} S_1^n(u)) = sum_k I_k u^k, truncated at u^order.
inline LocalChargeSeries local_charges(int n, int order = -1) {
    if (n < 3) throw std::invalid_argument("local_charges: need n >= 3");
    if (order < 0) order = n - 2;
    GA ginv = GA::basis(gamma_n(n).inverse());
    UPoly<GA> f = s1_homogeneous(n).map([&](const GA& c) { return c.is_zero() ? GA() : ginv * c; });
    UPoly<GA> lg = series_log(f, order);
    LocalChargeSeries s;
    s.n = n;
    s.order = order;
    for (int k = 1; k <= order; ++k) s.charges.push_back(lg[k].is_zero() ? GA(n) : lg[k]);
    // each charge commutes with gamma_n up to u^{n-2}
    GA g = GA::basis(gamma_n(n));
    for (int k = 1; k <= std::min(order, n - 2); ++k)
        if (g * s.I(k) != s.I(k) * g) throw std::logic_error("local_charges: charge does not commute with gamma_n");
    return s;
}

/// sum_{m=0}^{n-1} gamma^m pi_{k+1}(theta) gamma^{-m}
inline GA cyclic_sum(const GA& theta, int n) {
    GA e = extend(theta, theta.degree(), n);
    Permutation g = gamma_n(n);
    GA out(n);
    for (int m = 0; m < n; ++m) out += e.conjugate(perm_power(g, m));
    return out;
}

/// sigma_{a,a+1} with sigma_{n,n+1} read as sigma_{1,n}.
inline Permutation wrap_transposition(int n, int a) {
    return a == n ? Permutation::transposition(n, 1, n) : Permutation::transposition(n, a, a + 1);
}

/// sigma-vector attached to i_1 < ... < i_k; every admissible split point is evaluated and must agree.
inline Permutation sigma_vec(int n, const std::vector<int>& idx) {
    const int k = static_cast<int>(idx.size());
    auto at = [&](int j) { return j == 0 ? 0 : j == k + 1 ? n + 1 : idx[static_cast<std::size_t>(j - 1)]; };
    std::optional<Permutation> result;
    // i_0 = 0 and i_{k+1} = n + 1; the split m = 0 is needed when i_k = n
    for (int m = 0; m <= k; ++m) {
        if (at(m + 1) - at(m) <= 1) continue;
        Permutation p(n);
        for (int j = m; j >= 1; --j) p = p * wrap_transposition(n, at(j));
        for (int j = k; j >= m + 1; --j) p = p * wrap_transposition(n, at(j));
        if (result && *result != p) throw std::logic_error("sigma_vec: depends on the split point");
        result = p;
    }
    if (!result) throw std::invalid_argument("sigma_vec: no admissible split point");
    return *result;
}

/// Polynomial in commuting variables u_1..u_n with C[S_n] coefficients, truncated in total degree.
struct MultiSeries {
    int n = 0;
    int order = 0;
    std::map<std::vector<int>, GA> terms;

    static int total(const std::vector<int>& e) {
        int s = 0;
        for (int x : e) s += x;
        return s;
    }
    void add(const std::vector<int>& e, const GA& c) {
        if (c.is_zero() || total(e) > order) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(e, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
    friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
        MultiSeries r{a.n, a.order, {}};
        for (const auto& [ea, ca] : a.terms)
            for (const auto& [eb, cb] : b.terms) {
                if (total(ea) + total(eb) > a.order) continue;
                std::vector<int> e(ea);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add(e, ca * cb);
            }
        return r;
    }
    GA coeff(const std::vector<int>& e) const {
        auto it = terms.find(e);
        return it == terms.end() ? GA(n) : it->second;
    }
};

struct ThetaElement {
    int k = 0;
    GA theta;   // element of C[S_{k+1}]
};

inline bool is_cyclic_interval(const std::vector<int>& e) {
    const int n = static_cast<int>(e.size());
    int starts = 0, nonzero = 0;
    for (int i = 0; i < n; ++i) {
        if (e[static_cast<std::size_t>(i)] != 0) ++nonzero;
        if (e[static_cast<std::size_t>(i)] != 0 && e[static_cast<std::size_t>((i + n - 1) % n)] == 0) ++starts;
    }
    return nonzero == 0 || nonzero == n || starts == 1;
}

inline bool supported_on_prefix(const GA& a, int m) {
    for (const auto& [p, c] : a.terms())
        for (int i = m + 1; i <= p.degree(); ++i)
            if (p(i) != i) return false;
    return true;
}

inline GA restrict_to_prefix(const GA& a, int m) {
    GA out(m);
    for (const auto& [p, c] : a.terms()) {
        std::vector<int> img(static_cast<std::size_t>(m));
        for (int i = 1; i <= m; ++i) img[static_cast<std::size_t>(i - 1)] = p(i);
        out.add(Permutation::from_images(img), c);
    }
    return out;
}

/// theta_k from the multivariable logarithm at n = k + 2.
inline ThetaElement theta_extract(int k) {
    if (k < 1) throw std::invalid_argument("theta_extract: need k >= 1");
    const int n = k + 2;
    MultiSeries x{n, k, {}};
    for (int j = 1; j <= n - 2; ++j)
        for (const auto& idx : subsets(n, j)) {
            std::vector<int> e(static_cast<std::size_t>(n), 0);
            for (int i : idx) e[static_cast<std::size_t>(i - 1)] = 1;
            x.add(e, GA::basis(sigma_vec(n, idx)));
        }
    // log(1 + x) = sum_j (-1)^{j+1} x^j / j
    MultiSeries phi{n, k, {}}, power = x;
    for (int j = 1; j <= k && !power.terms.empty(); ++j) {
        for (const auto& [e, c] : power.terms) phi.add(e, scale(c, Rational(j % 2 ? 1 : -1, j)));
        power = power * x;
    }
    GA top(n);
    for (const auto& [e, c] : phi.terms) {
        if (!is_cyclic_interval(e)) throw std::logic_error("theta_extract: coefficient off a cyclic interval is nonzero");
        // support starting at u_1 with trailing zeros, total degree k
        if (MultiSeries::total(e) != k || e[0] == 0) continue;
        int m = 0;
        while (m < n && e[static_cast<std::size_t>(m)] != 0) ++m;
        bool trailing = true;
        for (int i = m; i < n; ++i) trailing = trailing && e[static_cast<std::size_t>(i)] == 0;
        if (!trailing) continue;
        if (!supported_on_prefix(c, m + 1)) throw std::logic_error("theta_extract: coefficient not supported on the first m+1 symbols");
        top += c;
    }
    if (!top.is_zero() && !supported_on_prefix(top, k + 1)) throw std::logic_error("theta_extract: theta not in S_{k+1}");
    return ThetaElement{k, top.is_zero() ? GA(k + 1) : restrict_to_prefix(top, k + 1)};
}

/// det((u - Zh)(v - Qh) - Qh), Zh the upper shift, Qh_ab = [u^{n-a}] q(u) (1+u)^{-b}.
template <class C>
BiPoly<C> det_P_hat(int n, const UPoly<C>& q, const C& one) {
    if (n < 1) throw std::invalid_argument("det_P_hat: need n >= 1");
    if (!pairwise_commute(q.coeffs())) throw std::invalid_argument("det_P_hat: coefficients of q do not commute");
    const C zero = lift(Rational(0), one);
    Matrix<C> Qh(n, n);
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            C s = zero;
            const int d = n - a;
            for (int j = 0; j <= d; ++j) {
                if (d - j > q.degree() || bethe::is_zero(q[d - j])) continue;
                s = s + scale(q[d - j], binomial(Rational(-b), j));
            }
            Qh(a - 1, b - 1) = s;
        }
    auto vq = [&](int a, int b) {
        // v delta_ab - Qh_ab
        BiPoly<C> e = BiPoly<C>::monomial(-Qh(a, b), 0, 0);
        if (a == b) e += BiPoly<C>::monomial(one, 0, 1);
        return e;
    };
    Matrix<BiPoly<C>> m(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            BiPoly<C> e = BiPoly<C>::monomial(one, 1, 0) * vq(a, b) - BiPoly<C>::monomial(Qh(a, b), 0, 0);
            if (a + 1 < n) e -= vq(a + 1, b);
            m(a, b) = e;
        }
    return permutation_det(m);
}

inline BiPoly<GA> det_P_hat(int n, const UPoly<GA>& q) { return det_P_hat(n, q, GA::identity(n)); }

/// Generators of the homogeneous subalgebra: G_2 .. G_n.
inline std::vector<GA> homogeneous_generators(int n) {
    std::vector<GA> out;
    for (int k = 2; k <= n; ++k) out.push_back(g_cycles(n, k));
    return out;
}

}  // namespace bethe
