#pragma once

#include <Eigen/Dense>

#include <map>
#include <stdexcept>
#include <vector>

#include "poly.hpp"
#include "rational.hpp"

namespace bethe {

/// Dense row-major matrix over a ring R.
template <class R>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : r_(rows), c_(cols), d_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = R(1);
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    R& operator()(int i, int j) { return d_[idx(i, j)]; }
    const R& operator()(int i, int j) const { return d_[idx(i, j)]; }
    const std::vector<R>& data() const { return d_; }

    bool is_zero() const {
        for (const auto& x : d_)
            if (!bethe::is_zero(x)) return false;
        return true;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < d_.size(); ++k) d_[k] = d_[k] + o.d_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < d_.size(); ++k) d_[k] = d_[k] - o.d_[k];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix out(a.r_, b.c_);
        for (int i = 0; i < a.r_; ++i)
            for (int k = 0; k < a.c_; ++k) {
                const R& x = a(i, k);
                if (bethe::is_zero(x)) continue;
                for (int j = 0; j < b.c_; ++j) {
                    const R& y = b(k, j);
                    if (bethe::is_zero(y)) continue;
                    out(i, j) = out(i, j) + x * y;
                }
            }
        return out;
    }
    Matrix operator-() const {
        Matrix m = *this;
        for (auto& x : m.d_) x = -x;
        return m;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.d_ == b.d_; }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix transpose() const {
        Matrix t(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    template <class F>
    auto map(F&& f) const -> Matrix<std::decay_t<decltype(f(std::declval<const R&>()))>> {
        Matrix<std::decay_t<decltype(f(std::declval<const R&>()))>> out(r_, c_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) out(i, j) = f((*this)(i, j));
        return out;
    }

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * static_cast<std::size_t>(c_) + static_cast<std::size_t>(j); }
    void check_same(const Matrix& o) const {
        if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("Matrix: shape mismatch");
    }
    int r_ = 0, c_ = 0;
    std::vector<R> d_;
};

using QMatrix = Matrix<Rational>;

template <class R>
Matrix<R> scale(const Matrix<R>& m, const Rational& s) {
    return m.map([&](const R& x) { return scale(x, s); });
}

/// Row-reduced echelon form in place; returns pivot columns.
inline std::vector<int> rref(QMatrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!m(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
        Rational inv = m(row, col).inverse();
        for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            Rational f = m(i, col);
            for (int j = col; j < m.cols(); ++j)
                if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline int rank(QMatrix m) { return static_cast<int>(rref(m).size()); }

/// Basis of {x : m x = 0}.
inline std::vector<std::vector<Rational>> nullspace(QMatrix m) {
    auto piv = rref(m);
    std::vector<bool> is_piv(static_cast<std::size_t>(m.cols()), false);
    for (int p : piv) is_piv[static_cast<std::size_t>(p)] = true;
    std::vector<std::vector<Rational>> out;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_piv[static_cast<std::size_t>(free)]) continue;
        std::vector<Rational> x(static_cast<std::size_t>(m.cols()));
        x[static_cast<std::size_t>(free)] = Rational(1);
        for (std::size_t r = 0; r < piv.size(); ++r) x[static_cast<std::size_t>(piv[r])] = -m(static_cast<int>(r), free);
        out.push_back(std::move(x));
    }
    return out;
}

/// det(t - M) by Faddeev-LeVerrier.
inline UPoly<Rational> charpoly(const QMatrix& m) {
    const int n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("charpoly: matrix not square");
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    c[static_cast<std::size_t>(n)] = Rational(1);
    QMatrix Mk(n, n);  // M_0 = 0
    QMatrix I = QMatrix::identity(n);
    for (int k = 1; k <= n; ++k) {
        // M_k = M (M_{k-1} + c_{n-k+1} I)
        QMatrix inner = Mk + scale(I, c[static_cast<std::size_t>(n - k + 1)]);
        Mk = m * inner;
        Rational tr;
        for (int i = 0; i < n; ++i) tr += Mk(i, i);
        c[static_cast<std::size_t>(n - k)] = -tr / Rational(k);
    }
    return UPoly<Rational>(c);
}

inline Eigen::MatrixXd to_eigen(const QMatrix& m) {
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_double();
    return out;
}

/// Incrementally maintained reduced echelon basis of a subspace of Q^dim.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t dim = 0) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return rows_.size(); }
    const std::vector<std::vector<Rational>>& rows() const { return rows_; }

    /// Residual of v after elimination against the basis.
    std::vector<Rational> reduce(std::vector<Rational> v) const {
        check(v);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::size_t pc = pivots_[r];
            if (v[pc].is_zero()) continue;
            Rational f = v[pc];
            for (std::size_t j = pc; j < dim_; ++j)
                if (!rows_[r][j].is_zero()) v[j] -= f * rows_[r][j];
        }
        return v;
    }
    bool contains(const std::vector<Rational>& v) const {
        auto r = reduce(v);
        for (const auto& x : r)
            if (!x.is_zero()) return false;
        return true;
    }
    /// Adds v if independent; returns whether the basis grew.
    bool insert(const std::vector<Rational>& v) {
        auto r = reduce(v);
        std::size_t pc = dim_;
        for (std::size_t j = 0; j < dim_; ++j)
            if (!r[j].is_zero()) {
                pc = j;
                break;
            }
        if (pc == dim_) return false;
        Rational inv = r[pc].inverse();
        for (std::size_t j = pc; j < dim_; ++j) r[j] *= inv;
        // keep fully reduced
        for (auto& row : rows_) {
            if (row[pc].is_zero()) continue;
            Rational f = row[pc];
            for (std::size_t j = pc; j < dim_; ++j)
                if (!r[j].is_zero()) row[j] -= f * r[j];
        }
        // insert sorted by pivot column
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < pc) ++pos;
        rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(r));
        pivots_.insert(pivots_.begin() + static_cast<long>(pos), pc);
        return true;
    }

private:
    void check(const std::vector<Rational>& v) const {
        if (v.size() != dim_) throw std::invalid_argument("EchelonBasis: vector length mismatch");
    }
    std::size_t dim_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace bethe
