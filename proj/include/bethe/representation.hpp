#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "group_algebra.hpp"
#include "matrix.hpp"
#include "partitions.hpp"

namespace bethe {

/// Young's seminormal form of M_lambda: one matrix per adjacent transposition.
struct IrrepAction {
    Partition shape;
    int dim = 0;
    std::vector<StandardTableau> basis;
    std::vector<QMatrix> generators;  // generators[i-1] represents sigma_{i,i+1}

    const QMatrix& s(int i) const { return generators.at(static_cast<std::size_t>(i - 1)); }
};

inline IrrepAction seminormal_rep(const Partition& lambda) {
    IrrepAction rep;
    rep.shape = lambda;
    rep.basis = standard_tableaux(lambda);
    rep.dim = static_cast<int>(rep.basis.size());
    const int n = partition_size(lambda);
    std::map<std::vector<std::vector<int>>, int> index;
    for (int k = 0; k < rep.dim; ++k) index[rep.basis[static_cast<std::size_t>(k)].rows] = k;
    for (int i = 1; i < n; ++i) {
        QMatrix m(rep.dim, rep.dim);
        for (int k = 0; k < rep.dim; ++k) {
            const auto& T = rep.basis[static_cast<std::size_t>(k)];
            Rational d(T.content(i + 1) - T.content(i));
            auto sw = T.swapped_rows(i);
            if (!is_standard(sw)) {
                m(k, k) = d.inverse();
                continue;
            }
            int l = index.at(sw);
            if (k > l) continue;  // handled from the earlier tableau
            Rational inv = d.inverse();
            // columns are images: sigma v_T = (1/d) v_T + v_{sT}, sigma v_{sT} = (1 - 1/d^2) v_T - (1/d) v_{sT}
            m(k, k) = inv;
            m(l, k) = Rational(1);
            m(k, l) = Rational(1) - inv * inv;
            m(l, l) = -inv;
        }
        rep.generators.push_back(std::move(m));
    }
    return rep;
}

/// One exact matrix per partition of n, in reverse-lexicographic partition order.
struct BlockMatrix {
    std::vector<QMatrix> blocks;

    bool is_zero() const {
        for (const auto& b : blocks)
            if (!b.is_zero()) return false;
        return true;
    }
    BlockMatrix& operator+=(const BlockMatrix& o) {
        check(o);
        for (std::size_t k = 0; k < blocks.size(); ++k) blocks[k] += o.blocks[k];
        return *this;
    }
    BlockMatrix& operator-=(const BlockMatrix& o) {
        check(o);
        for (std::size_t k = 0; k < blocks.size(); ++k) blocks[k] -= o.blocks[k];
        return *this;
    }
    friend BlockMatrix operator+(BlockMatrix a, const BlockMatrix& b) { return a += b; }
    friend BlockMatrix operator-(BlockMatrix a, const BlockMatrix& b) { return a -= b; }
    friend BlockMatrix operator*(const BlockMatrix& a, const BlockMatrix& b) {
        a.check(b);
        BlockMatrix r;
        for (std::size_t k = 0; k < a.blocks.size(); ++k) r.blocks.push_back(a.blocks[k] * b.blocks[k]);
        return r;
    }
    friend bool operator==(const BlockMatrix& a, const BlockMatrix& b) { return a.blocks == b.blocks; }
    friend bool operator!=(const BlockMatrix& a, const BlockMatrix& b) { return !(a == b); }

    /// Concatenated row-major entries of all blocks.
    std::vector<Rational> flatten() const {
        std::vector<Rational> v;
        for (const auto& b : blocks) v.insert(v.end(), b.data().begin(), b.data().end());
        return v;
    }
    std::size_t ambient_dim() const {
        std::size_t d = 0;
        for (const auto& b : blocks) d += b.data().size();
        return d;
    }
    /// Inverse of flatten for the same block shapes.
    BlockMatrix unflatten(const std::vector<Rational>& v) const {
        BlockMatrix r;
        std::size_t off = 0;
        for (const auto& b : blocks) {
            QMatrix m(b.rows(), b.cols());
            for (int i = 0; i < b.rows(); ++i)
                for (int j = 0; j < b.cols(); ++j) m(i, j) = v[off++];
            r.blocks.push_back(std::move(m));
        }
        return r;
    }

private:
    void check(const BlockMatrix& o) const {
        if (blocks.size() != o.blocks.size()) throw std::invalid_argument("BlockMatrix: block count mismatch");
    }
};

inline BlockMatrix scale(const BlockMatrix& b, const Rational& s) {
    BlockMatrix r;
    for (const auto& m : b.blocks) r.blocks.push_back(scale(m, s));
    return r;
}

/// Blockwise evaluation of C[S_n] on all irreducible modules.
class Representer {
public:
    explicit Representer(int n) : n_(n), partitions_(partitions_of(n)) {
        for (const auto& p : partitions_) irreps_.push_back(seminormal_rep(p));
        if (n_ <= 6) build_cache();
    }

    int n() const { return n_; }
    const std::vector<Partition>& partitions() const { return partitions_; }
    const std::vector<IrrepAction>& irreps() const { return irreps_; }
    int block_index(const Partition& p) const {
        for (std::size_t k = 0; k < partitions_.size(); ++k)
            if (partitions_[k] == p) return static_cast<int>(k);
        throw std::invalid_argument("Representer: unknown partition " + partition_string(p));
    }

    /// Matrix of a single permutation on block k.
    QMatrix perm_block(const Permutation& p, std::size_t k) const {
        if (!cache_.empty()) return cache_.at(p)[k];
        return word_block(p, k);
    }

    QMatrix represent_block(const GA& a, std::size_t k) const {
        check_degree(a);
        const int d = irreps_[k].dim;
        QMatrix out(d, d);
        for (const auto& [p, c] : a.terms()) {
            QMatrix m = perm_block(p, k);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    if (!m(i, j).is_zero()) out(i, j) += c * m(i, j);
        }
        return out;
    }
    QMatrix represent_block(const GA& a, const Partition& p) const { return represent_block(a, static_cast<std::size_t>(block_index(p))); }

    BlockMatrix represent(const GA& a) const {
        BlockMatrix b;
        for (std::size_t k = 0; k < irreps_.size(); ++k) b.blocks.push_back(represent_block(a, k));
        return b;
    }
    BlockMatrix identity() const { return represent(GA::identity(n_)); }

    /// Polynomial-valued input: one block matrix per coefficient.
    std::vector<BlockMatrix> represent(const UPoly<GA>& f) const {
        std::vector<BlockMatrix> out;
        for (int k = 0; k <= f.degree(); ++k) out.push_back(represent(f[k].is_zero() ? GA(n_) : f[k]));
        return out;
    }

private:
    void check_degree(const GA& a) const {
        if (!a.is_zero() && a.degree() != n_) throw std::invalid_argument("represent: degree mismatch");
    }

    QMatrix word_block(const Permutation& p, std::size_t k) const {
        // peel right descents: p = p' s_i with fewer inversions
        const auto& rep = irreps_[k];
        Permutation q = p;
        QMatrix acc = QMatrix::identity(rep.dim);
        std::vector<int> word;
        for (;;) {
            int i = 1;
            while (i < n_ && q(i) < q(i + 1)) ++i;
            if (i >= n_) break;
            word.push_back(i);
            q = q * Permutation::transposition(n_, i, i + 1);
        }
        // p = s_{w_last} ... s_{w_first}
        for (auto it = word.rbegin(); it != word.rend(); ++it) acc = acc * rep.s(*it);
        return acc;
    }

    void build_cache() {
        Permutation id(n_);
        std::vector<QMatrix> idm;
        for (const auto& r : irreps_) idm.push_back(QMatrix::identity(r.dim));
        cache_.emplace(id, idm);
        std::vector<Permutation> frontier{id};
        while (!frontier.empty()) {
            std::vector<Permutation> next;
            for (const auto& p : frontier) {
                const auto& mp = cache_.at(p);
                for (int i = 1; i < n_; ++i) {
                    Permutation q = Permutation::transposition(n_, i, i + 1) * p;
                    if (cache_.count(q)) continue;
                    std::vector<QMatrix> mq;
                    for (std::size_t k = 0; k < irreps_.size(); ++k) mq.push_back(irreps_[k].s(i) * mp[k]);
                    cache_.emplace(q, std::move(mq));
                    next.push_back(q);
                }
            }
            frontier = std::move(next);
        }
    }

    int n_;
    std::vector<Partition> partitions_;
    std::vector<IrrepAction> irreps_;
    std::unordered_map<Permutation, std::vector<QMatrix>, PermutationHash> cache_;
};

/// Shared representer for S_n, built once per n.
inline const Representer& representer(int n) {
    static std::mutex mtx;
    static std::map<int, std::unique_ptr<Representer>> table;
    std::lock_guard<std::mutex> lock(mtx);
    auto& slot = table[n];
    if (!slot) slot = std::make_unique<Representer>(n);
    return *slot;
}

/// chi_lambda = (d_lambda / n!) sum_sigma chi^lambda(sigma) sigma.
inline GA central_idempotent(const Partition& lambda) {
    const int n = partition_size(lambda);
    GA out(n);
    Rational w = Rational(hook_dimension(lambda)) / factorial(n);
    std::map<Partition, Rational> by_class;
    for (const auto& p : all_permutations(n)) {
        Partition t = p.cycle_type();
        auto it = by_class.find(t);
        if (it == by_class.end()) it = by_class.emplace(t, character(lambda, t)).first;
        out.add(p, w * it->second);
    }
    return out;
}

/// J_a = sum_{b<a} sigma_{a,b}; J_1 = 0.
inline GA jucys_murphy(int n, int a) {
    GA j(n);
    for (int b = 1; b < a; ++b) j += sigma(n, b, a);
    return j;
}

/// Sum of all permutations of S_m with cycle type mu.
inline GA class_sum(const Partition& mu) {
    const int m = partition_size(mu);
    Partition key = mu;
    std::sort(key.rbegin(), key.rend());
    GA out(m);
    for (const auto& p : all_permutations(m))
        if (p.cycle_type() == key) out.add(p, Rational(1));
    return out;
}

/// Pi(v) = sum_sigma sign(sigma) v^{c(sigma)} sigma, as a polynomial in v.
inline UPoly<GA> pi_poly(int n) {
    std::vector<GA> c(static_cast<std::size_t>(n) + 1, GA(n));
    for (const auto& p : all_permutations(n)) c[static_cast<std::size_t>(p.orbit_count())].add(p, Rational(p.sign()));
    for (auto& g : c)
        if (g.is_zero()) g = GA();
    return UPoly<GA>(std::move(c));
}

}  // namespace bethe
