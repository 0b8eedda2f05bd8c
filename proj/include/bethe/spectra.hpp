#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "representation.hpp"
#include "spans.hpp"
#include "wronski.hpp"

namespace bethe {

struct EigenRecord {
    Partition lambda;
    Eigen::VectorXcd vector;
    std::vector<cd> values;   // one per generator
    double residual = 0;      // max relative residual over the generators
};

/// Relative residual ||M v - mu v|| / max(1, ||M||) with mu the Rayleigh quotient.
inline std::pair<cd, double> rayleigh(const Eigen::MatrixXd& M, const Eigen::VectorXcd& v) {
    Eigen::VectorXcd Mv = M.cast<cd>() * v;
    cd mu = v.dot(Mv) / v.dot(v);
    double res = (Mv - mu * v).norm() / (std::max(1.0, M.norm()) * v.norm());
    return {mu, res};
}

/// Joint eigenvectors of a commuting family, block by block, from a random combination with separated eigenvalues.
inline std::vector<EigenRecord> joint_eigen(const std::vector<GA>& generators, int n, std::uint64_t seed, double tol = 1e-8) {
    if (generators.empty()) throw std::invalid_argument("joint_eigen: no generators");
    const Representer& rep = representer(n);
    SeededRandom rng(seed);
    std::vector<EigenRecord> out;
    for (const auto& lambda : rep.partitions()) {
        std::vector<Eigen::MatrixXd> mats;
        for (const auto& g : generators) mats.push_back(to_eigen(rep.represent_block(g.is_zero() ? GA(n) : g, lambda)));
        const Eigen::Index d = mats.front().rows();
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es;
        bool separated = false;
        for (int attempt = 0; attempt < 8 && !separated; ++attempt) {
            Eigen::MatrixXd X = Eigen::MatrixXd::Zero(d, d);
            for (const auto& m : mats) X += static_cast<double>(rng.integer(-40, 40)) / static_cast<double>(rng.integer(1, 7)) * m / std::max(1.0, m.norm());
            es.compute(X.cast<cd>());
            double gap = INFINITY;
            const auto& ev = es.eigenvalues();
            for (Eigen::Index i = 0; i < d; ++i)
                for (Eigen::Index j = i + 1; j < d; ++j) gap = std::min(gap, std::abs(ev(i) - ev(j)));
            separated = gap > 1e-6;
        }
        if (!separated) throw std::runtime_error("joint_eigen: no combination with separated eigenvalues in block " + partition_string(lambda));
        for (Eigen::Index k = 0; k < d; ++k) {
            EigenRecord r;
            r.lambda = lambda;
            r.vector = es.eigenvectors().col(k).normalized();
            for (const auto& m : mats) {
                auto [mu, res] = rayleigh(m, r.vector);
                r.values.push_back(mu);
                r.residual = std::max(r.residual, res);
            }
            if (r.residual > tol) throw std::runtime_error("joint_eigen: residual above tolerance in block " + partition_string(lambda));
            out.push_back(std::move(r));
        }
    }
    return out;
}

/// Eigenvalue of g on the record's vector; throws when the vector is not an eigenvector of g.
inline cd record_eigenvalue(const GA& g, const EigenRecord& r, int n, double tol = 1e-8) {
    auto [mu, res] = rayleigh(to_eigen(representer(n).represent_block(g.is_zero() ? GA(n) : g, r.lambda)), r.vector);
    if (res > tol) throw std::runtime_error("record_eigenvalue: not an eigenvector");
    return mu;
}

template <class P>
auto record_eigenvalue_poly(const P& f, const EigenRecord& r, int n, double tol = 1e-8) {
    return f.map([&](const GA& c) { return record_eigenvalue(c, r, n, tol); });
}

/// Polynomial in y_1..y_n with rational coefficients.
using MPoly = std::map<std::vector<int>, Rational>;

inline void mpoly_add(MPoly& p, const std::vector<int>& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = p.emplace(e, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
}

/// Exponent vectors of total degree exactly d (or at most d).
inline std::vector<std::vector<int>> monomials(int n, int d, bool up_to = false) {
    std::vector<std::vector<int>> out;
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == n - 1) {
            for (int k = up_to ? 0 : left; k <= left; ++k) {
                e[static_cast<std::size_t>(pos)] = k;
                out.push_back(e);
            }
            return;
        }
        for (int k = 0; k <= left; ++k) {
            e[static_cast<std::size_t>(pos)] = k;
            self(self, pos + 1, left - k);
        }
    };
    if (n == 0) return {{}};
    rec(rec, 0, d);
    return out;
}

/// (q - s_i q) / (y_i - y_{i+1}), 1-based i.
inline MPoly divided_difference(const MPoly& q, int i) {
    MPoly out;
    const std::size_t a = static_cast<std::size_t>(i - 1), b = static_cast<std::size_t>(i);
    for (const auto& [e, c] : q) {
        int p = e[a], r = e[b];
        if (p == r) continue;
        // (y_i^p y_{i+1}^r - y_i^r y_{i+1}^p) / (y_i - y_{i+1})
        int lo = std::min(p, r), hi = std::max(p, r);
        Rational sign = p > r ? Rational(1) : Rational(-1);
        for (int k = 0; k < hi - lo; ++k) {
            std::vector<int> f = e;
            f[a] = lo + hi - lo - 1 - k;
            f[b] = lo + k;
            mpoly_add(out, f, c * sign);
        }
    }
    return out;
}

inline MPoly swap_vars(const MPoly& q, int i) {
    MPoly out;
    for (const auto& [e, c] : q) {
        std::vector<int> f = e;
        std::swap(f[static_cast<std::size_t>(i - 1)], f[static_cast<std::size_t>(i)]);
        mpoly_add(out, f, c);
    }
    return out;
}

enum class CyclicVariant { Classic, Hbar };

/// sigma_{i,i+1} on polynomials: plain swap, or the swap corrected by -hbar times the divided difference.
inline MPoly poly_action(const MPoly& q, int i, CyclicVariant variant, const Rational& hbar) {
    MPoly out = swap_vars(q, i);
    if (variant == CyclicVariant::Hbar)
        for (const auto& [e, c] : divided_difference(q, i)) mpoly_add(out, e, -hbar * c);
    return out;
}

inline Rational mpoly_at(const MPoly& q, const std::vector<Rational>& y) {
    Rational s(0);
    for (const auto& [e, c] : q) {
        Rational t = c;
        for (std::size_t k = 0; k < e.size(); ++k)
            for (int j = 0; j < e[k]; ++j) t *= y[k];
        s += t;
    }
    return s;
}

struct CyclicVector {
    Partition lambda;
    int degree = 0;
    std::vector<MPoly> components;   // one polynomial per basis vector of M_lambda
    std::vector<Rational> at_z;
};

/// The lowest-degree invariant of M_lambda tensor C[y_1..y_n] (plain or hbar-deformed action), evaluated at y = z.
inline CyclicVector cyclic_vector(const Partition& lambda, const std::vector<Rational>& z, CyclicVariant variant,
                                  const Rational& hbar = Rational(1)) {
    const int n = partition_size(lambda);
    if (static_cast<int>(z.size()) != n) throw std::invalid_argument("cyclic_vector: need n parameters");
    IrrepAction rep = seminormal_rep(lambda);
    int d = 0;
    for (int i = 1; i <= n; ++i) d += (i - 1) * part(lambda, i);
    auto mons = monomials(n, d, variant == CyclicVariant::Hbar);
    std::map<std::vector<int>, int> index;
    for (std::size_t b = 0; b < mons.size(); ++b) index[mons[b]] = static_cast<int>(b);
    const int nm = static_cast<int>(mons.size()), dim = rep.dim;
    const int unknowns = dim * nm;
    QMatrix eqs((n - 1) * unknowns, unknowns);
    for (int i = 1; i < n; ++i) {
        const QMatrix& R = rep.s(i);
        const int base = (i - 1) * unknowns;
        for (int b = 0; b < nm; ++b) {
            MPoly img = poly_action(MPoly{{mons[static_cast<std::size_t>(b)], Rational(1)}}, i, variant, hbar);
            for (int k = 0; k < dim; ++k) {
                const int col = k * nm + b;
                // (R tensor A - 1) applied to e_k tensor m_b
                for (const auto& [e, c] : img)
                    for (int l = 0; l < dim; ++l)
                        if (!R(l, k).is_zero()) eqs(base + l * nm + index.at(e), col) += R(l, k) * c;
                eqs(base + col, col) -= Rational(1);
            }
        }
    }
    auto kernel = nullspace(eqs);
    if (kernel.size() != 1)
        throw std::logic_error("cyclic_vector: invariant space of degree " + std::to_string(d) + " has dimension " + std::to_string(kernel.size()));
    auto w = kernel.front();
    Rational lead;
    for (const auto& c : w)
        if (!c.is_zero()) {
            lead = c;
            break;
        }
    CyclicVector cv;
    cv.lambda = lambda;
    cv.degree = d;
    cv.components.resize(static_cast<std::size_t>(dim));
    for (int k = 0; k < dim; ++k)
        for (int b = 0; b < nm; ++b) mpoly_add(cv.components[static_cast<std::size_t>(k)], mons[static_cast<std::size_t>(b)], w[static_cast<std::size_t>(k * nm + b)] / lead);
    for (const auto& q : cv.components) cv.at_z.push_back(mpoly_at(q, z));
    return cv;
}

struct CyclicityVerdict {
    int image_rank = 0;
    bool injective = false;
    bool isomorphism = false;   // injective and dim = sum dim M_lambda
};

/// X -> (X w_lambda(z))_lambda on a basis of the span.
inline CyclicityVerdict cyclicity(const SpanBasis& s, int n, const std::vector<Rational>& z, CyclicVariant variant,
                                  const Rational& hbar = Rational(1)) {
    const Representer& rep = representer(n);
    std::vector<std::vector<Rational>> ws;
    int total = 0;
    for (const auto& lambda : rep.partitions()) {
        ws.push_back(cyclic_vector(lambda, z, variant, hbar).at_z);
        total += static_cast<int>(ws.back().size());
    }
    QMatrix m(static_cast<int>(s.dim()), total);
    for (std::size_t r = 0; r < s.dim(); ++r) {
        int off = 0;
        for (std::size_t k = 0; k < ws.size(); ++k) {
            const QMatrix& B = s.elements[r].blocks[k];
            for (int i = 0; i < B.rows(); ++i) {
                Rational acc(0);
                for (int j = 0; j < B.cols(); ++j) acc += B(i, j) * ws[k][static_cast<std::size_t>(j)];
                m(static_cast<int>(r), off + i) = acc;
            }
            off += B.rows();
        }
    }
    CyclicityVerdict v;
    v.image_rank = rank(m);
    v.injective = v.image_rank == static_cast<int>(s.dim());
    v.isomorphism = v.injective && static_cast<int>(s.dim()) == total;
    return v;
}

}  // namespace bethe
