#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "gaudin.hpp"
#include "group_algebra.hpp"
#include "matrix.hpp"
#include "rational_function.hpp"

namespace bethe {

inline int int_pow(int b, int e) {
    int r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

/// Sparse exact operator on (C^N)^{tensor n}; basis index sum_a i_a N^{n-a}, first factor most significant.
class TensorOperator {
public:
    TensorOperator() = default;
    TensorOperator(int N, int n) : N_(N), n_(n), rows_(static_cast<std::size_t>(int_pow(N, n))) {
        if (N < 1 || n < 0) throw std::invalid_argument("TensorOperator: need N >= 1, n >= 0");
    }
    static TensorOperator identity(int N, int n) {
        TensorOperator t(N, n);
        for (int i = 0; i < t.dim(); ++i) t.add(i, i, Rational(1));
        return t;
    }
    static TensorOperator from_dense(int N, int n, const QMatrix& m) {
        TensorOperator t(N, n);
        if (m.rows() != t.dim() || m.cols() != t.dim()) throw std::invalid_argument("TensorOperator: size mismatch");
        for (int i = 0; i < t.dim(); ++i)
            for (int j = 0; j < t.dim(); ++j) t.add(i, j, m(i, j));
        return t;
    }

    int N() const { return N_; }
    int n() const { return n_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::map<int, Rational>& row(int i) const { return rows_.at(static_cast<std::size_t>(i)); }

    Rational operator()(int i, int j) const {
        const auto& r = row(i);
        auto it = r.find(j);
        return it == r.end() ? Rational(0) : it->second;
    }
    void add(int i, int j, const Rational& c) {
        if (c.is_zero()) return;
        auto& r = rows_.at(static_cast<std::size_t>(i));
        auto [it, fresh] = r.emplace(j, c);
        if (fresh) return;
        it->second += c;
        if (it->second.is_zero()) r.erase(it);
    }
    bool is_zero() const {
        for (const auto& r : rows_)
            if (!r.empty()) return false;
        return true;
    }
    std::size_t nonzeros() const {
        std::size_t k = 0;
        for (const auto& r : rows_) k += r.size();
        return k;
    }

    TensorOperator& operator+=(const TensorOperator& o) {
        check(o);
        for (int i = 0; i < dim(); ++i)
            for (const auto& [j, c] : o.row(i)) add(i, j, c);
        return *this;
    }
    TensorOperator& operator-=(const TensorOperator& o) {
        check(o);
        for (int i = 0; i < dim(); ++i)
            for (const auto& [j, c] : o.row(i)) add(i, j, -c);
        return *this;
    }
    friend TensorOperator operator+(TensorOperator a, const TensorOperator& b) { return a += b; }
    friend TensorOperator operator-(TensorOperator a, const TensorOperator& b) { return a -= b; }
    friend TensorOperator operator*(const TensorOperator& a, const TensorOperator& b) {
        a.check(b);
        TensorOperator out(a.N_, a.n_);
        for (int i = 0; i < a.dim(); ++i)
            for (const auto& [k, x] : a.row(i))
                for (const auto& [j, y] : b.row(k)) out.add(i, j, x * y);
        return out;
    }
    friend TensorOperator scale(const TensorOperator& a, const Rational& s) {
        TensorOperator out(a.N_, a.n_);
        for (int i = 0; i < a.dim(); ++i)
            for (const auto& [j, c] : a.row(i)) out.add(i, j, c * s);
        return out;
    }
    friend bool operator==(const TensorOperator& a, const TensorOperator& b) {
        return a.N_ == b.N_ && a.n_ == b.n_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const TensorOperator& a, const TensorOperator& b) { return !(a == b); }

    QMatrix dense() const {
        QMatrix m(dim(), dim());
        for (int i = 0; i < dim(); ++i)
            for (const auto& [j, c] : row(i)) m(i, j) = c;
        return m;
    }

private:
    void check(const TensorOperator& o) const {
        if (N_ != o.N_ || n_ != o.n_) throw std::invalid_argument("TensorOperator: size mismatch");
    }
    int N_ = 1, n_ = 0;
    std::vector<std::map<int, Rational>> rows_;
};

/// X tensor Y.
inline TensorOperator kron(const TensorOperator& x, const TensorOperator& y) {
    if (x.N() != y.N()) throw std::invalid_argument("kron: local dimensions differ");
    TensorOperator out(x.N(), x.n() + y.n());
    const int d = y.dim();
    for (int i = 0; i < x.dim(); ++i)
        for (const auto& [j, a] : x.row(i))
            for (int k = 0; k < d; ++k)
                for (const auto& [l, b] : y.row(k)) out.add(i * d + k, j * d + l, a * b);
    return out;
}

/// E_{i,j} on C^N, 1-based.
inline TensorOperator unit_op(int N, int i, int j) {
    TensorOperator t(N, 1);
    t.add(i - 1, j - 1, Rational(1));
    return t;
}

/// X acting on factor a of n.
inline TensorOperator local_op(const TensorOperator& x, int n, int a) {
    if (x.n() != 1 || a < 1 || a > n) throw std::invalid_argument("local_op: bad factor");
    return kron(kron(TensorOperator::identity(x.N(), a - 1), x), TensorOperator::identity(x.N(), n - a));
}

inline std::vector<int> digits(int idx, int N, int n) {
    std::vector<int> d(static_cast<std::size_t>(n));
    for (int a = n - 1; a >= 0; --a) {
        d[static_cast<std::size_t>(a)] = idx % N;
        idx /= N;
    }
    return d;
}

inline int undigits(const std::vector<int>& d, int N) {
    int idx = 0;
    for (int x : d) idx = idx * N + x;
    return idx;
}

/// sigma moves the tensor factor in position a to position sigma(a).
inline TensorOperator varpi(const GA& a, int N, int n) {
    if (!a.is_zero() && a.degree() != n) throw std::invalid_argument("varpi: degree does not match n");
    TensorOperator out(N, n);
    const int d = out.dim();
    for (const auto& [s, c] : a.terms())
        for (int i = 0; i < d; ++i) {
            std::vector<int> src = digits(i, N, n), dst(static_cast<std::size_t>(n));
            for (int k = 1; k <= n; ++k) dst[static_cast<std::size_t>(s(k) - 1)] = src[static_cast<std::size_t>(k - 1)];
            out.add(undigits(dst, N), i, c);
        }
    return out;
}

/// Trace over the last m tensor factors.
inline TensorOperator partial_trace(const TensorOperator& x, int m) {
    if (m < 0 || m > x.n()) throw std::invalid_argument("partial_trace: size mismatch");
    const int k = int_pow(x.N(), m);
    TensorOperator out(x.N(), x.n() - m);
    for (int i = 0; i < x.dim(); ++i)
        for (const auto& [j, c] : x.row(i))
            if (i % k == j % k) out.add(i / k, j / k, c);
    return out;
}

/// Matrix of rational functions in u.
using RationalOperatorFunction = Matrix<RationalFunction>;

inline RationalOperatorFunction to_rof(const TensorOperator& t, const RationalFunction& f = RationalFunction(Rational(1))) {
    RationalOperatorFunction m(t.dim(), t.dim());
    for (int i = 0; i < t.dim(); ++i)
        for (const auto& [j, c] : t.row(i)) m(i, j) = scale(f, c);
    return m;
}

inline QMatrix evaluate(const RationalOperatorFunction& f, const Rational& u) {
    return f.map([&](const RationalFunction& r) { return r.at(u); });
}

inline RationalOperatorFunction derivative(const RationalOperatorFunction& f) {
    return f.map([](const RationalFunction& r) { return r.derivative(); });
}

inline RationalOperatorFunction mul_scalar(const RationalOperatorFunction& f, const RationalFunction& s) {
    return f.map([&](const RationalFunction& r) { return r * s; });
}

inline RationalOperatorFunction kron(const RationalOperatorFunction& a, const RationalOperatorFunction& b) {
    RationalOperatorFunction out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return out;
}

/// sum_k A_k(u) d^k with coefficients written to the left of the derivation.
class DiffOperator {
public:
    explicit DiffOperator(int dim) : dim_(dim) {}
    DiffOperator(int dim, std::vector<RationalOperatorFunction> c) : dim_(dim), c_(std::move(c)) { trim(); }

    int dim() const { return dim_; }
    int order() const { return static_cast<int>(c_.size()) - 1; }
    RationalOperatorFunction coeff(int k) const {
        if (k < 0 || k > order()) return RationalOperatorFunction(dim_, dim_);
        return c_[static_cast<std::size_t>(k)];
    }

    friend DiffOperator operator+(const DiffOperator& a, const DiffOperator& b) {
        std::vector<RationalOperatorFunction> c;
        for (int k = 0; k <= std::max(a.order(), b.order()); ++k) c.push_back(a.coeff(k) + b.coeff(k));
        return DiffOperator(a.dim_, std::move(c));
    }
    DiffOperator operator-() const {
        std::vector<RationalOperatorFunction> c;
        for (const auto& x : c_) c.push_back(-x);
        return DiffOperator(dim_, std::move(c));
    }
    /// (A d^k)(B d^l) = A sum_r binom(k, r) B^{(r)} d^{k - r + l}
    friend DiffOperator operator*(const DiffOperator& a, const DiffOperator& b) {
        const int top = std::max(0, a.order() + b.order());
        std::vector<RationalOperatorFunction> c(static_cast<std::size_t>(top) + 1, RationalOperatorFunction(a.dim_, a.dim_));
        for (int l = 0; l <= b.order(); ++l) {
            RationalOperatorFunction br = b.coeff(l);
            for (int r = 0; r <= a.order(); ++r) {
                if (br.is_zero()) break;
                for (int k = r; k <= a.order(); ++k) {
                    RationalOperatorFunction ak = a.coeff(k);
                    if (ak.is_zero()) continue;
                    c[static_cast<std::size_t>(k - r + l)] += scale(ak * br, binomial(Rational(k), r));
                }
                br = derivative(br);
            }
        }
        return DiffOperator(a.dim_, std::move(c));
    }
    /// Multiply on the left by a scalar function.
    DiffOperator times(const RationalFunction& f) const {
        std::vector<RationalOperatorFunction> c;
        for (const auto& x : c_) c.push_back(mul_scalar(x, f));
        return DiffOperator(dim_, std::move(c));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    int dim_;
    std::vector<RationalOperatorFunction> c_;
};

struct GaudinDiffopTable {
    int N = 0, n = 0;
    std::vector<Rational> z;
    std::vector<std::vector<TensorOperator>> c;   // c[i][j], i = 0..N, j = 0..n-i

    /// C_{i,j}; zero when i > N.
    TensorOperator at(int i, int j) const {
        if (i < 0 || j < 0 || j > n - i) throw std::out_of_range("GaudinDiffopTable: index out of range");
        if (i > N) return TensorOperator(N, n);
        return c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
};

/// X_{i,j} = delta_{ij} d - sum_a E^{(a)}_{i,j} / (u - z_a).
inline DiffOperator gaudin_x(int N, const std::vector<Rational>& z, int i, int j) {
    const int n = static_cast<int>(z.size());
    const int d = int_pow(N, n);
    RationalOperatorFunction c0(d, d);
    for (int a = 1; a <= n; ++a) c0 -= to_rof(local_op(unit_op(N, i, j), n, a), RationalFunction::pole(z[static_cast<std::size_t>(a - 1)]));
    std::vector<RationalOperatorFunction> c{c0};
    if (i == j) c.push_back(RationalOperatorFunction::identity(d));
    return DiffOperator(d, std::move(c));
}

/// Coefficients of D = prod(u - z_a) sum sign(s) X_{s(1),1} ... X_{s(N),N} = sum (-1)^i C_{ij} u^{n-i-j} d^{N-i}.
inline GaudinDiffopTable gaudin_diffop_coeffs(int N, const std::vector<Rational>& z) {
    const int n = static_cast<int>(z.size());
    if (N < 1 || n < 1) throw std::invalid_argument("gaudin_diffop_coeffs: need N, n >= 1");
    if (!pairwise_distinct(z)) throw std::invalid_argument("gaudin_diffop_coeffs: coincident z");
    const int d = int_pow(N, n);
    std::vector<std::vector<DiffOperator>> x(static_cast<std::size_t>(N));
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) x[static_cast<std::size_t>(i - 1)].push_back(gaudin_x(N, z, i, j));
    DiffOperator sum(d);
    for (const auto& s : all_permutations(N)) {
        DiffOperator prod = x[static_cast<std::size_t>(s(1) - 1)][0];
        for (int k = 2; k <= N; ++k) prod = prod * x[static_cast<std::size_t>(s(k) - 1)][static_cast<std::size_t>(k - 1)];
        sum = sum + (s.sign() > 0 ? prod : -prod);
    }
    DiffOperator D = sum.times(RationalFunction::poly(from_roots(z)));
    if (D.order() > N) throw std::logic_error("gaudin_diffop_coeffs: order exceeds N");
    GaudinDiffopTable t;
    t.N = N;
    t.n = n;
    t.z = z;
    for (int i = 0; i <= N; ++i) {
        RationalOperatorFunction m = D.coeff(N - i);
        for (const auto& e : m.data())
            if (!e.is_polynomial()) throw std::logic_error("gaudin_diffop_coeffs: D is not polynomial");
        std::vector<TensorOperator> row;
        for (int j = 0; j <= n - i; ++j) {
            TensorOperator op(N, n);
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c) op.add(r, c, i % 2 ? -m(r, c).num()[n - i - j] : m(r, c).num()[n - i - j]);
            row.push_back(op);
        }
        // nothing may sit above u^{n-i}; for i > n the whole coefficient must vanish
        for (const auto& e : m.data())
            if (e.num().degree() > n - i) throw std::logic_error("gaudin_diffop_coeffs: degree exceeds n - i");
        t.c.push_back(std::move(row));
    }
    return t;
}

/// psi_x(t_{i,j}(u - s)) = delta_{ij} + E_{j,i} / (u - s - x) on C^N.
inline RationalOperatorFunction evaluation_t(int N, int i, int j, const Rational& x, const Rational& s) {
    RationalOperatorFunction m(N, N);
    if (i == j)
        for (int k = 0; k < N; ++k) m(k, k) = RationalFunction(Rational(1));
    m(j - 1, i - 1) += RationalFunction::pole(x + s);
    return m;
}

/// Image of t_{i,j}(u - s) on the tensor product of evaluation modules, via Delta(t_ij) = sum_k t_kj (x) t_ik.
inline std::vector<std::vector<RationalOperatorFunction>> tensor_t(int N, const std::vector<Rational>& x, const Rational& s) {
    const int n = static_cast<int>(x.size());
    std::vector<std::vector<RationalOperatorFunction>> cur;
    for (int i = 1; i <= N; ++i) {
        cur.emplace_back();
        for (int j = 1; j <= N; ++j) cur.back().push_back(evaluation_t(N, i, j, x[0], s));
    }
    for (int a = 2; a <= n; ++a) {
        const int d = cur[0][0].rows();
        std::vector<std::vector<RationalOperatorFunction>> next;
        for (int i = 1; i <= N; ++i) {
            next.emplace_back();
            for (int j = 1; j <= N; ++j) {
                RationalOperatorFunction acc(d * N, d * N);
                for (int k = 1; k <= N; ++k)
                    acc += kron(cur[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - 1)],
                                evaluation_t(N, i, k, x[static_cast<std::size_t>(a - 1)], s));
                next.back().push_back(std::move(acc));
            }
        }
        cur = std::move(next);
    }
    return cur;
}

/// psi_x(T_m(u)), T_m(u) = sum_sigma sum_{i_1<...<i_m} sign(sigma) t_{i_s(1),i_1}(u-m+1) ... t_{i_s(m),i_m}(u).
inline RationalOperatorFunction yangian_transfer(int N, int m, const std::vector<Rational>& x) {
    if (m < 1 || m > N) throw std::invalid_argument("yangian_transfer: need 1 <= m <= N");
    if (x.empty()) throw std::invalid_argument("yangian_transfer: need at least one evaluation point");
    const int n = static_cast<int>(x.size());
    const int d = int_pow(N, n);
    std::vector<std::vector<std::vector<RationalOperatorFunction>>> t;   // t[k][i][j] at shift m - 1 - k
    for (int k = 0; k < m; ++k) t.push_back(tensor_t(N, x, Rational(m - 1 - k)));
    RationalOperatorFunction out(d, d);
    for (const auto& idx : subsets(N, m))
        for (const auto& s : all_permutations(m)) {
            RationalOperatorFunction prod = RationalOperatorFunction::identity(d);
            for (int k = 1; k <= m; ++k)
                prod = prod * t[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(idx[static_cast<std::size_t>(s(k) - 1)] - 1)]
                               [static_cast<std::size_t>(idx[static_cast<std::size_t>(k - 1)] - 1)];
            if (s.sign() > 0) out += prod;
            else out -= prod;
        }
    return out;
}

/// sum_a sum_{i,j} E^{(a)}_{i,j} E^{(a+1)}_{j,i}, factor n + 1 read as 1.
inline TensorOperator heisenberg_chain(int N, int n) {
    TensorOperator out(N, n);
    for (int a = 1; a <= n; ++a) {
        const int b = a == n ? 1 : a + 1;
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j) out += local_op(unit_op(N, i, j), n, a) * local_op(unit_op(N, j, i), n, b);
    }
    return out;
}

}  // namespace bethe
