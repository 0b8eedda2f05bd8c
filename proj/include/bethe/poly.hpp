#pragma once

#include <algorithm>
#include <concepts>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace bethe {

inline bool is_one(const Rational& r) { return r == Rational(1); }
inline bool is_one(double x) { return x == 1.0; }
inline bool is_one(const std::complex<double>& x) { return x == 1.0; }
template <class T>
auto is_one(const T& x) -> decltype(x.is_one()) { return x.is_one(); }

/// Dense univariate polynomial, lowest degree first, no trailing zeros.
/// R is any coefficient ring with +, -, *, is_zero and scale(R, Rational).
/// Multiplication keeps the order of coefficient products, so R need not commute.
template <class R>
class UPoly {
public:
    using coeff_type = R;

    UPoly() = default;
    UPoly(const R& c) : c_{c} { trim(); }
    template <class S>
        requires(!std::same_as<S, R> && !std::same_as<S, UPoly> && std::constructible_from<R, S>)
    explicit UPoly(const S& s) : c_{R(s)} { trim(); }
    explicit UPoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UPoly monomial(const R& c, int k) {
        std::vector<R> v(static_cast<std::size_t>(k) + 1);
        v[static_cast<std::size_t>(k)] = c;
        return UPoly(std::move(v));
    }
    /// The variable itself; requires R(1).
    static UPoly x() { return monomial(R(1), 1); }
    /// (x - a) for a scalar root.
    static UPoly linear(const R& root) { return UPoly(std::vector<R>{-root, R(1)}); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && bethe::is_one(c_[0]); }
    std::size_t size() const { return c_.size(); }
    const std::vector<R>& coeffs() const { return c_; }

    R operator[](int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return R{};
        return c_[static_cast<std::size_t>(i)];
    }
    R leading() const { return c_.empty() ? R{} : c_.back(); }

    void set(int i, const R& v) {
        if (i < 0) throw std::out_of_range("UPoly::set: negative degree");
        if (i >= static_cast<int>(c_.size())) c_.resize(static_cast<std::size_t>(i) + 1);
        c_[static_cast<std::size_t>(i)] = v;
        trim();
    }

    UPoly operator-() const {
        UPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    UPoly& operator+=(const UPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        trim();
        return *this;
    }
    UPoly& operator-=(const UPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
        trim();
        return *this;
    }
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        std::vector<R> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (bethe::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (bethe::is_zero(b.c_[j])) continue;
                out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
            }
        }
        return UPoly(std::move(out));
    }
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    /// Horner evaluation at a ring element (placed on the right of each coefficient).
    R operator()(const R& x) const {
        R r{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }
    /// Evaluation at a rational scalar.
    R at(const Rational& x) const {
        R r{};
        Rational xp(1);
        for (const auto& c : c_) {
            r = r + scale(c, xp);
            xp *= x;
        }
        return r;
    }

    /// f(u) -> f(u + c).
    UPoly shift(const Rational& c) const {
        std::vector<R> out(c_.size());
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (bethe::is_zero(c_[k])) continue;
            Rational cp(1);
            for (std::size_t j = 0; j <= k; ++j) {
                // u^k -> sum_j binom(k, j) c^j u^(k-j)
                out[k - j] = out[k - j] + scale(c_[k], binomial(Rational(static_cast<long>(k)), static_cast<int>(j)) * cp);
                cp *= c;
            }
        }
        return UPoly(std::move(out));
    }
    /// f(u) -> f(s u).
    UPoly dilate(const Rational& s) const {
        std::vector<R> out(c_);
        Rational sp(1);
        for (auto& c : out) {
            c = scale(c, sp);
            sp *= s;
        }
        return UPoly(std::move(out));
    }
    UPoly derivative() const {
        if (c_.size() <= 1) return UPoly();
        std::vector<R> out(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) out[k - 1] = scale(c_[k], Rational(static_cast<long>(k)));
        return UPoly(std::move(out));
    }
    /// Keep terms of degree < order.
    UPoly truncate(int order) const {
        if (order <= 0) return UPoly();
        std::vector<R> out(c_.begin(), c_.begin() + std::min<std::size_t>(c_.size(), static_cast<std::size_t>(order)));
        return UPoly(std::move(out));
    }

    template <class F>
    auto map(F&& f) const -> UPoly<std::decay_t<decltype(f(std::declval<const R&>()))>> {
        using S = std::decay_t<decltype(f(std::declval<const R&>()))>;
        std::vector<S> out;
        out.reserve(c_.size());
        for (const auto& c : c_) out.push_back(f(c));
        return UPoly<S>(std::move(out));
    }

private:
    void trim() {
        while (!c_.empty() && bethe::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<R> c_;
};

template <class R>
UPoly<R> scale(const UPoly<R>& p, const Rational& s) {
    return p.map([&](const R& c) { return scale(c, s); });
}

/// Multiply every coefficient by a ring element on the right.
template <class R>
UPoly<R> times_right(const UPoly<R>& p, const R& r) {
    return p.map([&](const R& c) { return c * r; });
}
/// Multiply every coefficient by a ring element on the left.
template <class R>
UPoly<R> times_left(const R& r, const UPoly<R>& p) {
    return p.map([&](const R& c) { return r * c; });
}

/// Product of a polynomial over R with a scalar polynomial.
template <class R>
UPoly<R> mul_scalar_poly(const UPoly<R>& a, const UPoly<Rational>& b) {
    if (a.is_zero() || b.is_zero()) return UPoly<R>();
    std::vector<R> out(a.size() + b.size() - 1);
    for (int i = 0; i <= a.degree(); ++i) {
        if (is_zero(a[i])) continue;
        for (int j = 0; j <= b.degree(); ++j) {
            if (b[j].is_zero()) continue;
            out[static_cast<std::size_t>(i + j)] = out[static_cast<std::size_t>(i + j)] + scale(a[i], b[j]);
        }
    }
    return UPoly<R>(std::move(out));
}

/// Division with remainder by a scalar polynomial with nonzero leading coefficient.
template <class R>
std::pair<UPoly<R>, UPoly<R>> divmod(const UPoly<R>& a, const UPoly<Rational>& b) {
    if (b.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
    const int db = b.degree();
    const Rational inv_lead = b.leading().inverse();
    std::vector<R> rem(a.coeffs());
    std::vector<R> quo(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0);
    for (int k = a.degree(); k >= db; --k) {
        R q = scale(rem[static_cast<std::size_t>(k)], inv_lead);
        quo[static_cast<std::size_t>(k - db)] = q;
        if (is_zero(q)) continue;
        for (int j = 0; j <= db; ++j) {
            if (b[j].is_zero()) continue;
            auto& slot = rem[static_cast<std::size_t>(k - db + j)];
            slot = slot - scale(q, b[j]);
        }
    }
    rem.resize(static_cast<std::size_t>(std::max(0, std::min<int>(db, static_cast<int>(rem.size())))));
    return {UPoly<R>(std::move(quo)), UPoly<R>(std::move(rem))};
}

inline UPoly<Rational> monic(const UPoly<Rational>& p) {
    if (p.is_zero()) return p;
    return scale(p, p.leading().inverse());
}

inline UPoly<Rational> gcd(UPoly<Rational> a, UPoly<Rational> b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

/// True iff gcd(f, f') is constant.
inline bool squarefree_test(const UPoly<Rational>& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree_test: zero polynomial");
    return gcd(f, f.derivative()).degree() == 0;
}

/// prod_i (x - roots_i)
inline UPoly<Rational> from_roots(const std::vector<Rational>& roots) {
    UPoly<Rational> p(Rational(1));
    for (const auto& r : roots) p *= UPoly<Rational>::linear(r);
    return p;
}

// ---------------------------------------------------------------------------
// truncated power series (terms of degree <= order are kept)

template <class R>
UPoly<R> series_mul(const UPoly<R>& a, const UPoly<R>& b, int order) {
    return (a.truncate(order + 1) * b.truncate(order + 1)).truncate(order + 1);
}

/// log f for f with constant term equal to the ring unit.
template <class R>
UPoly<R> series_log(const UPoly<R>& f, int order) {
    if (f.is_zero() || !is_one(f[0])) throw std::domain_error("series_log: constant term is not the unit");
    UPoly<R> x = f.truncate(order + 1);
    x.set(0, R{});
    UPoly<R> out, power = x;
    for (int k = 1; k <= order && !power.is_zero(); ++k) {
        Rational c(k % 2 == 1 ? 1 : -1, k);
        out += scale(power, c);
        power = series_mul(power, x, order);
    }
    return out;
}

/// exp f for f with zero constant term; `one` is the ring unit.
template <class R>
UPoly<R> series_exp(const UPoly<R>& f, int order, const R& one) {
    if (!is_zero(f[0])) throw std::domain_error("series_exp: constant term must vanish");
    UPoly<R> x = f.truncate(order + 1);
    UPoly<R> out(one), power = x;
    for (int k = 1; k <= order && !power.is_zero(); ++k) {
        out += scale(power, factorial(k).inverse());
        power = series_mul(power, x, order);
    }
    return out;
}

inline Rational unit_inverse(const Rational& c) {
    if (c.is_zero()) throw std::domain_error("series_inverse: constant term is not a unit");
    return c.inverse();
}
template <class R>
R unit_inverse(const R& c) {
    if (!is_one(c)) throw std::domain_error("series_inverse: constant term is not a unit");
    return c;
}

/// 1/f for f with invertible constant term.
template <class R>
UPoly<R> series_inverse(const UPoly<R>& f, int order) {
    if (f.is_zero()) throw std::domain_error("series_inverse: zero series");
    R c0inv = unit_inverse(f[0]);
    // g_k = -c0^{-1} sum_{j>=1} f_j g_{k-j}
    std::vector<R> g(static_cast<std::size_t>(order) + 1);
    g[0] = c0inv;
    for (int k = 1; k <= order; ++k) {
        R acc{};
        for (int j = 1; j <= k; ++j) acc = acc + f[j] * g[static_cast<std::size_t>(k - j)];
        g[static_cast<std::size_t>(k)] = -(c0inv * acc);
    }
    return UPoly<R>(std::move(g));
}

// ---------------------------------------------------------------------------

/// Dense bivariate polynomial; coefficient (i, j) multiplies u^i v^j.
template <class R>
class BiPoly {
public:
    using coeff_type = R;

    BiPoly() = default;
    BiPoly(const R& c) : g_{{c}} { trim(); }
    template <class S>
        requires(!std::same_as<S, R> && !std::same_as<S, BiPoly> && std::constructible_from<R, S>)
    explicit BiPoly(const S& s) : g_{{R(s)}} { trim(); }
    explicit BiPoly(std::vector<std::vector<R>> grid) : g_(std::move(grid)) { trim(); }

    static BiPoly monomial(const R& c, int i, int j) {
        BiPoly p;
        p.set(i, j, c);
        return p;
    }
    static BiPoly u() { return monomial(R(1), 1, 0); }
    static BiPoly v() { return monomial(R(1), 0, 1); }
    static BiPoly from_u(const UPoly<R>& p) {
        BiPoly b;
        for (int i = 0; i <= p.degree(); ++i) b.set(i, 0, p[i]);
        return b;
    }
    static BiPoly from_v(const UPoly<R>& p) {
        BiPoly b;
        for (int j = 0; j <= p.degree(); ++j) b.set(0, j, p[j]);
        return b;
    }

    bool is_zero() const { return g_.empty(); }
    bool is_one() const { return g_.size() == 1 && g_[0].size() == 1 && bethe::is_one(g_[0][0]); }
    int u_degree() const { return static_cast<int>(g_.size()) - 1; }
    int v_degree() const { return g_.empty() ? -1 : static_cast<int>(g_[0].size()) - 1; }
    const std::vector<std::vector<R>>& grid() const { return g_; }

    R coeff(int i, int j) const {
        if (i < 0 || j < 0 || i > u_degree() || j > v_degree()) return R{};
        return g_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    void set(int i, int j, const R& c) {
        if (i < 0 || j < 0) throw std::out_of_range("BiPoly::set: negative degree");
        std::size_t rows = std::max<std::size_t>(g_.size(), static_cast<std::size_t>(i) + 1);
        std::size_t cols = std::max<std::size_t>(g_.empty() ? 0 : g_[0].size(), static_cast<std::size_t>(j) + 1);
        resize(rows, cols);
        g_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c;
        trim();
    }
    /// Coefficient of u^i as a polynomial in v.
    UPoly<R> coeff_u(int i) const {
        std::vector<R> out;
        if (i >= 0 && i <= u_degree()) out = g_[static_cast<std::size_t>(i)];
        return UPoly<R>(std::move(out));
    }
    /// Coefficient of v^j as a polynomial in u.
    UPoly<R> coeff_v(int j) const {
        std::vector<R> out;
        for (int i = 0; i <= u_degree(); ++i) out.push_back(coeff(i, j));
        return UPoly<R>(std::move(out));
    }

    BiPoly operator-() const {
        BiPoly r = *this;
        for (auto& row : r.g_)
            for (auto& c : row) c = -c;
        return r;
    }
    BiPoly& operator+=(const BiPoly& o) {
        resize(std::max(g_.size(), o.g_.size()), std::max(cols(), o.cols()));
        for (std::size_t i = 0; i < o.g_.size(); ++i)
            for (std::size_t j = 0; j < o.g_[i].size(); ++j) g_[i][j] = g_[i][j] + o.g_[i][j];
        trim();
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o) {
        resize(std::max(g_.size(), o.g_.size()), std::max(cols(), o.cols()));
        for (std::size_t i = 0; i < o.g_.size(); ++i)
            for (std::size_t j = 0; j < o.g_[i].size(); ++j) g_[i][j] = g_[i][j] - o.g_[i][j];
        trim();
        return *this;
    }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        if (a.is_zero() || b.is_zero()) return BiPoly();
        std::vector<std::vector<R>> out(a.g_.size() + b.g_.size() - 1,
                                        std::vector<R>(a.cols() + b.cols() - 1));
        for (std::size_t i = 0; i < a.g_.size(); ++i)
            for (std::size_t j = 0; j < a.g_[i].size(); ++j) {
                if (bethe::is_zero(a.g_[i][j])) continue;
                for (std::size_t k = 0; k < b.g_.size(); ++k)
                    for (std::size_t l = 0; l < b.g_[k].size(); ++l) {
                        if (bethe::is_zero(b.g_[k][l])) continue;
                        out[i + k][j + l] = out[i + k][j + l] + a.g_[i][j] * b.g_[k][l];
                    }
            }
        return BiPoly(std::move(out));
    }
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.g_ == b.g_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    R at(const Rational& u, const Rational& v) const {
        R r{};
        Rational up(1);
        for (const auto& row : g_) {
            Rational vp(1);
            for (const auto& c : row) {
                r = r + scale(c, up * vp);
                vp *= v;
            }
            up *= u;
        }
        return r;
    }

    /// P(u, v) -> P(u, v + c).
    BiPoly shift_v(const Rational& c) const {
        BiPoly out;
        for (int i = 0; i <= u_degree(); ++i) {
            auto row = coeff_u(i).shift(c);
            for (int j = 0; j <= row.degree(); ++j) out.set(i, j, row[j]);
        }
        return out;
    }
    /// P(u, v) -> P(u + c, v).
    BiPoly shift_u(const Rational& c) const {
        BiPoly out;
        for (int j = 0; j <= v_degree(); ++j) {
            auto col = coeff_v(j).shift(c);
            for (int i = 0; i <= col.degree(); ++i) out.set(i, j, col[i]);
        }
        return out;
    }

    template <class F>
    auto map(F&& f) const -> BiPoly<std::decay_t<decltype(f(std::declval<const R&>()))>> {
        using S = std::decay_t<decltype(f(std::declval<const R&>()))>;
        std::vector<std::vector<S>> out;
        out.reserve(g_.size());
        for (const auto& row : g_) {
            std::vector<S> r;
            r.reserve(row.size());
            for (const auto& c : row) r.push_back(f(c));
            out.push_back(std::move(r));
        }
        return BiPoly<S>(std::move(out));
    }

private:
    std::size_t cols() const { return g_.empty() ? 0 : g_[0].size(); }
    void resize(std::size_t rows, std::size_t ncols) {
        g_.resize(rows);
        for (auto& row : g_) row.resize(ncols);
    }
    void trim() {
        auto row_zero = [](const std::vector<R>& row) {
            return std::all_of(row.begin(), row.end(), [](const R& c) { return bethe::is_zero(c); });
        };
        while (!g_.empty() && row_zero(g_.back())) g_.pop_back();
        if (g_.empty()) return;
        std::size_t ncols = cols();
        while (ncols > 0) {
            bool zero = true;
            for (const auto& row : g_) zero = zero && bethe::is_zero(row[ncols - 1]);
            if (!zero) break;
            --ncols;
        }
        for (auto& row : g_) row.resize(ncols);
    }
    std::vector<std::vector<R>> g_;
};

template <class R>
BiPoly<R> scale(const BiPoly<R>& p, const Rational& s) {
    return p.map([&](const R& c) { return scale(c, s); });
}

}  // namespace bethe
