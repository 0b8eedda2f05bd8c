#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "determinant.hpp"
#include "gaudin.hpp"
#include "partitions.hpp"
#include "poly.hpp"

namespace bethe {

using cd = std::complex<double>;

enum class WronskiVariant { Differential, Discrete };

inline const char* variant_name(WronskiVariant v) { return v == WronskiVariant::Differential ? "differential" : "discrete"; }

/// det(d^{i-1} f_j).
template <class C>
UPoly<C> wronskian(const std::vector<UPoly<C>>& fs) {
    const int n = static_cast<int>(fs.size());
    if (n == 0) throw std::invalid_argument("wronskian: empty family");
    Matrix<UPoly<C>> m(n, n);
    for (int j = 0; j < n; ++j) {
        UPoly<C> d = fs[static_cast<std::size_t>(j)];
        for (int i = 0; i < n; ++i) {
            m(i, j) = d;
            d = d.derivative();
        }
    }
    return permutation_det(m);
}

/// det(f_j(u - hbar (i-1))).
template <class C>
UPoly<C> casorati(const std::vector<UPoly<C>>& fs, const Rational& hbar) {
    if (hbar.is_zero()) throw std::invalid_argument("casorati: hbar must be nonzero");
    const int n = static_cast<int>(fs.size());
    if (n == 0) throw std::invalid_argument("casorati: empty family");
    Matrix<UPoly<C>> m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = fs[static_cast<std::size_t>(j)].shift(-hbar * Rational(i));
    return permutation_det(m);
}

/// (-hbar)^{n(n-1)/2}: leading factor of the Casorati determinant relative to the Wronskian.
inline Rational casorati_constant(int n, const Rational& hbar) {
    Rational c(1);
    for (int k = 0; k < n * (n - 1) / 2; ++k) c *= -hbar;
    return c;
}

/// Expansion of the (n+1)x(n+1) determinant whose last column comes from the exponential:
/// discrete rows (f_j(u - hbar i), v^{n-i}), differential rows (d^i f_j, v^i), i = 0..n.
template <class C>
BiPoly<C> f_bivariate(const std::vector<UPoly<C>>& fs, WronskiVariant variant = WronskiVariant::Discrete,
                      const Rational& hbar = Rational(1)) {
    const int n = static_cast<int>(fs.size());
    if (n == 0) throw std::invalid_argument("f_bivariate: empty family");
    if (variant == WronskiVariant::Discrete && hbar.is_zero()) throw std::invalid_argument("f_bivariate: hbar must be nonzero");
    const C one = lift(Rational(1), C(1));
    Matrix<BiPoly<C>> m(n + 1, n + 1);
    for (int j = 0; j < n; ++j) {
        UPoly<C> d = fs[static_cast<std::size_t>(j)];
        for (int i = 0; i <= n; ++i) {
            if (variant == WronskiVariant::Discrete) {
                m(i, j) = BiPoly<C>::from_u(fs[static_cast<std::size_t>(j)].shift(-hbar * Rational(i)));
            } else {
                m(i, j) = BiPoly<C>::from_u(d);
                d = d.derivative();
            }
        }
    }
    for (int i = 0; i <= n; ++i) m(i, n) = BiPoly<C>::monomial(one, 0, variant == WronskiVariant::Discrete ? n - i : i);
    BiPoly<C> F = permutation_det(m);
    if (F.is_zero()) throw std::invalid_argument("f_bivariate: polynomials are linearly dependent");
    return F;
}

/// The operator read off from F = sum_k c_k(u) v^k applied to p:
/// discrete sum_k c_k(u) p(u - hbar (n - k)), differential sum_k c_k(u) d^k p.
template <class C>
UPoly<C> apply_f_operator(const BiPoly<C>& F, int n, const UPoly<C>& p, WronskiVariant variant, const Rational& hbar = Rational(1)) {
    UPoly<C> out;
    UPoly<C> d = p;
    for (int k = 0; k <= std::max(n, F.v_degree()); ++k) {
        UPoly<C> ck = F.coeff_v(k);
        UPoly<C> moved = variant == WronskiVariant::Discrete ? p.shift(-hbar * Rational(n - k)) : d;
        if (!ck.is_zero()) out += ck * moved;
        if (variant == WronskiVariant::Differential) d = d.derivative();
    }
    return out;
}

template <class C>
struct OReport {
    UPoly<C> wronskian;
    UPoly<C> expected;
    UPoly<C> residual;
    double residual_max = 0;
    std::vector<std::string> violations;   // degree and missing-coefficient constraints

    bool ok(double tol) const { return violations.empty() && residual_max <= tol; }
};

/// Residual of Wr[f] = prod(l_j - l_i + i - j)(u^n + sum (-1)^s a_s u^{n-s}), or its Casorati analogue
/// with the extra factor (-hbar)^{n(n-1)/2}, together with the shape constraints on f_i.
template <class C>
OReport<C> check_O_relations(const Partition& lambda, const std::vector<Rational>& a, const std::vector<UPoly<C>>& fs,
                             WronskiVariant variant, const Rational& hbar = Rational(1)) {
    const int m = static_cast<int>(fs.size());
    const int n = partition_size(lambda);
    if (static_cast<int>(lambda.size()) > m) throw std::invalid_argument("check_O_relations: more parts than polynomials");
    if (static_cast<int>(a.size()) != n) throw std::invalid_argument("check_O_relations: need a_1..a_n");
    const C one = lift(Rational(1), C(1));
    OReport<C> r;
    for (int i = 1; i <= m; ++i) {
        const auto& f = fs[static_cast<std::size_t>(i - 1)];
        const int deg = part(lambda, i) + m - i;
        if (f.degree() != deg || !bethe::is_one(f.leading()))
            r.violations.push_back("f_" + std::to_string(i) + " is not monic of degree " + std::to_string(deg));
        for (int s = i + 1; s <= m; ++s) {
            const int gap = part(lambda, s) + m - s;
            if (!bethe::is_zero(f[gap]))
                r.violations.push_back("f_" + std::to_string(i) + " has a nonzero coefficient at u^" + std::to_string(gap));
        }
    }
    Rational c(1);
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) c *= Rational(part(lambda, j) - part(lambda, i) + i - j);
    if (variant == WronskiVariant::Discrete) c *= casorati_constant(m, hbar);
    std::vector<Rational> e(static_cast<std::size_t>(n) + 1);
    e[static_cast<std::size_t>(n)] = Rational(1);
    for (int s = 1; s <= n; ++s) e[static_cast<std::size_t>(n - s)] = s % 2 ? -a[static_cast<std::size_t>(s - 1)] : a[static_cast<std::size_t>(s - 1)];
    r.expected = mul_scalar_poly(UPoly<C>(one), scale(UPoly<Rational>(e), c));
    r.wronskian = variant == WronskiVariant::Discrete ? casorati(fs, hbar) : wronskian(fs);
    r.residual = r.wronskian - r.expected;
    r.residual_max = max_abs_coeff(r.residual);
    return r;
}

/// a_s with u^n + sum (-1)^s a_s u^{n-s} = prod (u - r_i).
inline std::vector<Rational> a_from_roots(const std::vector<Rational>& roots) {
    UPoly<Rational> p = from_roots(roots);
    const int n = static_cast<int>(roots.size());
    std::vector<Rational> a;
    for (int s = 1; s <= n; ++s) a.push_back(s % 2 ? -p[n - s] : p[n - s]);
    return a;
}

/// Finite-dimensional space of polynomials with complex coefficients.
struct PolySpace {
    std::vector<UPoly<cd>> basis;

    int dim() const { return static_cast<int>(basis.size()); }
    int max_degree() const {
        int d = -1;
        for (const auto& p : basis) d = std::max(d, p.degree());
        return d;
    }

    /// Reduced echelon form by degree: monic basis with distinct leading degrees, descending,
    /// and zero coefficients at the other leading degrees.
    PolySpace canonical(double tol = 1e-9) const {
        const int D = max_degree();
        std::vector<std::vector<cd>> rows;
        for (const auto& p : basis) {
            std::vector<cd> r(static_cast<std::size_t>(D) + 1);
            for (int k = 0; k <= p.degree(); ++k) r[static_cast<std::size_t>(k)] = p[k];
            rows.push_back(std::move(r));
        }
        double scale_ref = 0;
        for (const auto& r : rows)
            for (const auto& c : r) scale_ref = std::max(scale_ref, std::abs(c));
        std::vector<std::pair<int, std::size_t>> pivots;   // (column, row), columns descending
        std::vector<bool> used(rows.size(), false);
        for (int col = D; col >= 0; --col) {
            int best = -1;
            double bv = tol * scale_ref;
            for (std::size_t r = 0; r < rows.size(); ++r)
                if (!used[r] && std::abs(rows[r][static_cast<std::size_t>(col)]) > bv) {
                    bv = std::abs(rows[r][static_cast<std::size_t>(col)]);
                    best = static_cast<int>(r);
                }
            if (best < 0) continue;
            used[static_cast<std::size_t>(best)] = true;
            auto& pr = rows[static_cast<std::size_t>(best)];
            cd inv = 1.0 / pr[static_cast<std::size_t>(col)];
            for (auto& c : pr) c *= inv;
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r == static_cast<std::size_t>(best)) continue;
                cd f = rows[r][static_cast<std::size_t>(col)];
                if (f == 0.0) continue;
                for (std::size_t k = 0; k < pr.size(); ++k) rows[r][k] -= f * pr[k];
            }
            pivots.emplace_back(col, static_cast<std::size_t>(best));
        }
        PolySpace out;
        for (const auto& [col, row] : pivots) {
            std::vector<cd> r = rows[row];
            r.resize(static_cast<std::size_t>(col) + 1);
            r[static_cast<std::size_t>(col)] = 1.0;
            for (const auto& [c2, unused] : pivots)
                if (c2 < col) r[static_cast<std::size_t>(c2)] = 0.0;
            out.basis.emplace_back(r);
        }
        return out;
    }

    std::vector<int> degrees() const {
        std::vector<int> d;
        for (const auto& p : canonical().basis) d.push_back(p.degree());
        return d;
    }

    static PolySpace from_exact(const std::vector<UPoly<Rational>>& ps) {
        PolySpace s;
        for (const auto& p : ps) s.basis.push_back(p.map([](const Rational& c) { return cd(c.to_double(), 0.0); }));
        return s;
    }
};

/// Max coefficient difference of the canonical forms; infinity when the shapes differ.
inline double poly_space_distance(const PolySpace& a, const PolySpace& b) {
    PolySpace ca = a.canonical(), cb = b.canonical();
    if (ca.dim() != cb.dim()) return INFINITY;
    double m = 0;
    for (int i = 0; i < ca.dim(); ++i) {
        const auto& p = ca.basis[static_cast<std::size_t>(i)];
        const auto& q = cb.basis[static_cast<std::size_t>(i)];
        if (p.degree() != q.degree()) return INFINITY;
        for (int k = 0; k <= p.degree(); ++k) m = std::max(m, std::abs(p[k] - q[k]));
    }
    return m;
}

/// Polynomial kernel of the operator read off from F, in degrees <= max_degree.
inline PolySpace reconstruct_subspace(const BiPoly<cd>& F, int n, WronskiVariant variant, int max_degree,
                                      const Rational& hbar = Rational(1), double tol = 1e-7) {
    if (n < 1 || max_degree < n - 1) throw std::invalid_argument("reconstruct_subspace: bad sizes");
    const int cols = max_degree + 1;
    std::vector<UPoly<cd>> images;
    int rows = 1;
    for (int k = 0; k < cols; ++k) {
        images.push_back(apply_f_operator(F, n, UPoly<cd>::monomial(cd(1.0, 0.0), k), variant, hbar));
        rows = std::max(rows, images.back().degree() + 1);
    }
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(rows, cols);
    for (int k = 0; k < cols; ++k)
        for (int r = 0; r <= images[static_cast<std::size_t>(k)].degree(); ++r) A(r, k) = images[static_cast<std::size_t>(k)][r];
    // column scaling keeps high powers of u from dominating the singular values
    Eigen::VectorXd colnorm(cols);
    double biggest = 0;
    for (int k = 0; k < cols; ++k) biggest = std::max(biggest, A.col(k).norm());
    for (int k = 0; k < cols; ++k) {
        const double c = A.col(k).norm();
        // round-off columns would otherwise be blown up to unit size
        if (c <= 1e-11 * biggest) {
            A.col(k).setZero();
            colnorm(k) = 1.0;
        } else {
            colnorm(k) = c;
            A.col(k) /= c;
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    int kernel = 0;
    for (Eigen::Index i = 0; i < cols; ++i) {
        double s = i < sv.size() ? sv(i) : 0.0;
        if (s <= tol * std::max(1.0, sv(0))) ++kernel;
    }
    if (kernel != n)
        throw std::runtime_error("reconstruct_subspace: kernel dimension " + std::to_string(kernel) + " differs from " + std::to_string(n));
    PolySpace out;
    const auto& V = svd.matrixV();
    for (int c = cols - n; c < cols; ++c) {
        std::vector<cd> coeffs(static_cast<std::size_t>(cols));
        for (int k = 0; k < cols; ++k) coeffs[static_cast<std::size_t>(k)] = V(k, c) / colnorm(k);
        out.basis.emplace_back(coeffs);
    }
    return out.canonical();
}

/// Drop coefficients below tol times the largest one.
inline UPoly<cd> chop(const UPoly<cd>& p, double tol = 1e-9) {
    double m = 0;
    for (const auto& c : p.coeffs()) m = std::max(m, std::abs(c));
    std::vector<cd> out = p.coeffs();
    for (auto& c : out)
        if (std::abs(c) <= tol * m) c = 0.0;
    return UPoly<cd>(std::move(out));
}

/// Rescale the last basis vector so that the Casorati determinant has the given leading coefficient.
inline PolySpace normalize_casorati(PolySpace s, const cd& leading, const Rational& hbar = Rational(1)) {
    UPoly<cd> w = chop(casorati(s.basis, hbar));
    if (w.is_zero()) throw std::invalid_argument("normalize_casorati: dependent basis");
    s.basis.back() = s.basis.back().map([&](const cd& c) { return c * leading / w.leading(); });
    return s;
}

}  // namespace bethe
