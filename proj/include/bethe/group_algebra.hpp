#pragma once

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "permutation.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace bethe {

/// Sparse element of the group algebra of S_n with coefficients in a commutative ring R.
/// The zero element may carry degree 0; it combines with elements of any degree.
template <class R>
class GroupAlgebra {
public:
    using coeff_type = R;
    using Map = std::unordered_map<Permutation, R, PermutationHash>;

    GroupAlgebra() = default;
    explicit GroupAlgebra(int n) : n_(n) {}
    GroupAlgebra(const Permutation& p, const R& c) : n_(p.degree()) {
        if (!bethe::is_zero(c)) t_.emplace(p, c);
    }

    static GroupAlgebra identity(int n) { return GroupAlgebra(Permutation(n), R(1)); }
    static GroupAlgebra scalar(int n, const R& c) { return GroupAlgebra(Permutation(n), c); }
    static GroupAlgebra basis(const Permutation& p) { return GroupAlgebra(p, R(1)); }
    static GroupAlgebra transposition(int n, int a, int b) { return basis(Permutation::transposition(n, a, b)); }

    int degree() const { return n_; }
    bool is_zero() const { return t_.empty(); }
    bool is_one() const {
        if (t_.size() != 1) return false;
        const auto& [p, c] = *t_.begin();
        return p.is_identity() && bethe::is_one(c);
    }
    std::size_t size() const { return t_.size(); }
    const Map& terms() const { return t_; }

    R coeff(const Permutation& p) const {
        auto it = t_.find(p);
        return it == t_.end() ? R{} : it->second;
    }
    void add(const Permutation& p, const R& c) {
        if (bethe::is_zero(c)) return;
        adopt(p.degree());
        auto [it, fresh] = t_.try_emplace(p, c);
        if (!fresh) {
            it->second = it->second + c;
            if (bethe::is_zero(it->second)) t_.erase(it);
        }
    }

    /// Terms ordered lexicographically by one-line notation.
    std::vector<std::pair<Permutation, R>> sorted_terms() const {
        std::vector<std::pair<Permutation, R>> out(t_.begin(), t_.end());
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    }

    GroupAlgebra operator-() const {
        GroupAlgebra r = *this;
        for (auto& [p, c] : r.t_) c = -c;
        return r;
    }
    GroupAlgebra& operator+=(const GroupAlgebra& o) {
        if (!o.is_zero()) adopt(o.n_);
        for (const auto& [p, c] : o.t_) add(p, c);
        if (n_ == 0) n_ = o.n_;
        return *this;
    }
    GroupAlgebra& operator-=(const GroupAlgebra& o) {
        if (!o.is_zero()) adopt(o.n_);
        for (const auto& [p, c] : o.t_) add(p, -c);
        if (n_ == 0) n_ = o.n_;
        return *this;
    }
    friend GroupAlgebra operator+(GroupAlgebra a, const GroupAlgebra& b) { return a += b; }
    friend GroupAlgebra operator-(GroupAlgebra a, const GroupAlgebra& b) { return a -= b; }
    friend GroupAlgebra operator*(const GroupAlgebra& a, const GroupAlgebra& b) {
        GroupAlgebra r(std::max(a.n_, b.n_));
        if (a.is_zero() || b.is_zero()) return r;
        if (a.n_ != b.n_) throw std::invalid_argument("GroupAlgebra: degree mismatch in product");
        Map acc;
        acc.reserve(a.t_.size() * b.t_.size());
        for (const auto& [p, x] : a.t_)
            for (const auto& [q, y] : b.t_) {
                Permutation pq = p * q;
                auto [it, fresh] = acc.try_emplace(pq, x * y);
                if (!fresh) it->second = it->second + x * y;
            }
        for (auto& [p, c] : acc)
            if (!bethe::is_zero(c)) r.t_.emplace(p, std::move(c));
        return r;
    }
    GroupAlgebra& operator*=(const GroupAlgebra& o) { return *this = *this * o; }

    /// Multiply every coefficient by a ring element.
    GroupAlgebra times(const R& r) const {
        GroupAlgebra out(n_);
        for (const auto& [p, c] : t_) out.add(p, c * r);
        return out;
    }

    friend bool operator==(const GroupAlgebra& a, const GroupAlgebra& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.n_ == b.n_ && a.t_ == b.t_;
    }
    friend bool operator!=(const GroupAlgebra& a, const GroupAlgebra& b) { return !(a == b); }

    /// sigma -> sigma^{-1} with coefficients kept.
    GroupAlgebra dagger() const {
        GroupAlgebra r(n_);
        for (const auto& [p, c] : t_) r.t_.emplace(p.inverse(), c);
        return r;
    }
    /// g a g^{-1}
    GroupAlgebra conjugate(const Permutation& g) const {
        GroupAlgebra r(n_);
        Permutation gi = g.inverse();
        for (const auto& [p, c] : t_) r.t_.emplace(g * p * gi, c);
        return r;
    }

    template <class F>
    auto map(F&& f) const -> GroupAlgebra<std::decay_t<decltype(f(std::declval<const R&>()))>> {
        using S = std::decay_t<decltype(f(std::declval<const R&>()))>;
        GroupAlgebra<S> r(n_);
        for (const auto& [p, c] : t_) r.add(p, f(c));
        return r;
    }

private:
    void adopt(int n) {
        if (t_.empty()) n_ = n;
        else if (n != n_) throw std::invalid_argument("GroupAlgebra: degree mismatch");
    }

    int n_ = 0;
    Map t_;
};

template <class R>
GroupAlgebra<R> scale(const GroupAlgebra<R>& a, const Rational& s) {
    return a.map([&](const R& c) { return scale(c, s); });
}

using GA = GroupAlgebra<Rational>;
using GAPoly = GroupAlgebra<UPoly<Rational>>;    // coefficients polynomial in one variable
using GABiPoly = GroupAlgebra<BiPoly<Rational>>; // coefficients polynomial in two variables

inline GA sigma(int n, int a, int b) { return GA::transposition(n, a, b); }

/// Commutator ab - ba.
template <class R>
GroupAlgebra<R> commutator(const GroupAlgebra<R>& a, const GroupAlgebra<R>& b) {
    return a * b - b * a;
}

/// pi_r: the embedding S_m -> S_n induced by i -> r_i (positions are 1-based).
template <class R>
GroupAlgebra<R> embed(const GroupAlgebra<R>& a, const std::vector<int>& positions, int n) {
    const int m = static_cast<int>(positions.size());
    if (!a.is_zero() && a.degree() != m) throw std::invalid_argument("embed: degree does not match number of positions");
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (int r : positions) {
        if (r < 1 || r > n || used[static_cast<std::size_t>(r)]) throw std::invalid_argument("embed: repeated or out-of-range position");
        used[static_cast<std::size_t>(r)] = true;
    }
    GroupAlgebra<R> out(n);
    for (const auto& [p, c] : a.terms()) {
        std::vector<int> img(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) img[static_cast<std::size_t>(i - 1)] = i;
        for (int i = 0; i < m; ++i) img[static_cast<std::size_t>(positions[static_cast<std::size_t>(i)] - 1)] = positions[static_cast<std::size_t>(p.at0(i))];
        out.add(Permutation::from_images(img), c);
    }
    return out;
}

inline std::vector<int> range_positions(int from, int to) {
    std::vector<int> r;
    for (int i = from; i <= to; ++i) r.push_back(i);
    return r;
}

/// theta_m = pi_{n+1..n+m} into S_{n+m}.
template <class R>
GroupAlgebra<R> theta_embed(const GroupAlgebra<R>& a, int n, int m) {
    return embed(a, range_positions(n + 1, n + m), n + m);
}

/// pi_{1..n} into S_N.
template <class R>
GroupAlgebra<R> extend(const GroupAlgebra<R>& a, int n, int N) {
    return embed(a, range_positions(1, n), N);
}

/// A^(m) = (1/m!) sum sign(sigma) sigma.
inline GA antisymmetrizer(int m) {
    if (m < 1) throw std::invalid_argument("antisymmetrizer: m must be positive");
    GA out(m);
    Rational w = factorial(m).inverse();
    for (const auto& p : all_permutations(m)) out.add(p, p.sign() > 0 ? w : -w);
    return out;
}

enum class Involution { dagger, star };

/// Both antiinvolutions send sigma to sigma^{-1}; star also conjugates coefficients,
/// which is the identity on rational coefficients.
template <class R>
GroupAlgebra<R> antiinvolution(const GroupAlgebra<R>& a, Involution) {
    return a.dagger();
}

/// Delete the symbols above n from the cycle notation of sigma in S_{n+m}.
/// Returns the resulting tau in S_n and the number of cycles lost entirely.
inline std::pair<Permutation, int> trace_reduce(const Permutation& s, int n) {
    const int total = s.degree();
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        int j = s.at0(i);
        while (j >= n) j = s.at0(j);
        img[static_cast<std::size_t>(i)] = j + 1;
    }
    int lost = 0;
    std::vector<bool> seen(static_cast<std::size_t>(total), false);
    for (int i = n; i < total; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        bool high = true;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = s.at0(j)) {
            seen[static_cast<std::size_t>(j)] = true;
            high = high && j >= n;
        }
        if (high) ++lost;
    }
    return {Permutation::from_images(img), lost};
}

/// Tr_m^(p) with a caller-supplied weight(coefficient, lost orbit count).
template <class R, class W>
auto trace_map_with(const GroupAlgebra<R>& a, int n, int m, W&& weight)
    -> GroupAlgebra<std::decay_t<decltype(weight(std::declval<const R&>(), 0))>> {
    using S = std::decay_t<decltype(weight(std::declval<const R&>(), 0))>;
    if (!a.is_zero() && a.degree() != n + m) throw std::invalid_argument("trace_map: degree is not n + m");
    GroupAlgebra<S> out(n);
    for (const auto& [s, c] : a.terms()) {
        auto [tau, lost] = trace_reduce(s, n);
        out.add(tau, weight(c, lost));
    }
    return out;
}

/// Tr_m^(p) at a concrete value of p.
template <class R>
GroupAlgebra<R> trace_map(const GroupAlgebra<R>& a, int n, int m, const Rational& p) {
    std::vector<Rational> powers{Rational(1)};
    for (int k = 1; k <= m; ++k) powers.push_back(powers.back() * p);
    return trace_map_with(a, n, m, [&](const R& c, int k) { return scale(c, powers[static_cast<std::size_t>(k)]); });
}

/// Tr_m^(p) with p kept symbolic: coefficients become polynomials in p over R.
template <class R>
GroupAlgebra<UPoly<R>> trace_map_symbolic(const GroupAlgebra<R>& a, int n, int m) {
    return trace_map_with(a, n, m, [](const R& c, int k) { return UPoly<R>::monomial(c, k); });
}

/// sum_sigma c_sigma(x) sigma  ->  sum_k (sum_sigma c_sigma[k] sigma) x^k
template <class R>
UPoly<GroupAlgebra<R>> split_poly(const GroupAlgebra<UPoly<R>>& a) {
    std::vector<GroupAlgebra<R>> out;
    for (const auto& [p, c] : a.terms()) {
        if (static_cast<int>(out.size()) <= c.degree()) out.resize(static_cast<std::size_t>(c.degree()) + 1, GroupAlgebra<R>(a.degree()));
        for (int k = 0; k <= c.degree(); ++k) out[static_cast<std::size_t>(k)].add(p, c[k]);
    }
    for (auto& g : out)
        if (g.is_zero()) g = GroupAlgebra<R>();
    return UPoly<GroupAlgebra<R>>(std::move(out));
}

template <class R>
GroupAlgebra<UPoly<R>> join_poly(const UPoly<GroupAlgebra<R>>& f, int n) {
    GroupAlgebra<UPoly<R>> out(n);
    for (int k = 0; k <= f.degree(); ++k)
        for (const auto& [p, c] : f[k].terms()) out.add(p, UPoly<R>::monomial(c, k));
    return out;
}

template <class R>
BiPoly<GroupAlgebra<R>> split_bipoly(const GroupAlgebra<BiPoly<R>>& a) {
    BiPoly<GroupAlgebra<R>> out;
    int du = -1, dv = -1;
    for (const auto& [p, c] : a.terms()) {
        du = std::max(du, c.u_degree());
        dv = std::max(dv, c.v_degree());
    }
    std::vector<std::vector<GroupAlgebra<R>>> grid(static_cast<std::size_t>(du + 1),
                                                   std::vector<GroupAlgebra<R>>(static_cast<std::size_t>(dv + 1), GroupAlgebra<R>(a.degree())));
    for (const auto& [p, c] : a.terms())
        for (int i = 0; i <= c.u_degree(); ++i)
            for (int j = 0; j <= c.v_degree(); ++j) grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].add(p, c.coeff(i, j));
    for (auto& row : grid)
        for (auto& g : row)
            if (g.is_zero()) g = GroupAlgebra<R>();
    return BiPoly<GroupAlgebra<R>>(std::move(grid));
}

template <class R>
GroupAlgebra<BiPoly<R>> join_bipoly(const BiPoly<GroupAlgebra<R>>& f, int n) {
    GroupAlgebra<BiPoly<R>> out(n);
    for (int i = 0; i <= f.u_degree(); ++i)
        for (int j = 0; j <= f.v_degree(); ++j)
            for (const auto& [p, c] : f.coeff(i, j).terms()) out.add(p, BiPoly<R>::monomial(c, i, j));
    return out;
}

/// Lift a scalar-coefficient element to polynomial coefficients (constant polynomials).
template <class R>
GroupAlgebra<UPoly<R>> constant_poly(const GroupAlgebra<R>& a) {
    return a.map([](const R& c) { return UPoly<R>(c); });
}
template <class R>
GroupAlgebra<BiPoly<R>> constant_bipoly(const GroupAlgebra<R>& a) {
    return a.map([](const R& c) { return BiPoly<R>(c); });
}

}  // namespace bethe
