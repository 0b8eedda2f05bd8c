#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "matrix.hpp"
#include "random.hpp"
#include "representation.hpp"

namespace bethe {

/// Linearly independent block matrices spanning a unital subalgebra.
struct SpanBasis {
    std::vector<BlockMatrix> elements;
    EchelonBasis echelon;

    std::size_t dim() const { return elements.size(); }
    bool contains(const BlockMatrix& b) const { return echelon.contains(b.flatten()); }
};

inline std::vector<BlockMatrix> represent_all(const std::vector<GA>& gens, int n) {
    std::vector<BlockMatrix> out;
    for (const auto& g : gens) out.push_back(representer(n).represent(g.is_zero() ? GA(n) : g));
    return out;
}

inline bool same_span(const SpanBasis& a, const SpanBasis& b) {
    if (a.dim() != b.dim()) return false;
    for (const auto& e : b.elements)
        if (!a.contains(e)) return false;
    return true;
}

inline BlockMatrix block_identity_like(const BlockMatrix& shape) {
    BlockMatrix id;
    for (const auto& b : shape.blocks) id.blocks.push_back(QMatrix::identity(b.rows()));
    return id;
}

/// Plain linear span (no closure).
inline SpanBasis linear_span(const std::vector<BlockMatrix>& elems) {
    if (elems.empty()) throw std::invalid_argument("linear_span: empty family");
    SpanBasis s{{}, EchelonBasis(elems.front().ambient_dim())};
    for (const auto& e : elems)
        if (s.echelon.insert(e.flatten())) s.elements.push_back(e);
    return s;
}

/// Unital subalgebra generated by the given block matrices, closed to a fixpoint.
inline SpanBasis algebra_span(const std::vector<BlockMatrix>& generators) {
    if (generators.empty()) throw std::invalid_argument("algebra_span: no generators");
    SpanBasis s{{}, EchelonBasis(generators.front().ambient_dim())};
    auto push = [&](const BlockMatrix& b) {
        if (s.echelon.insert(b.flatten())) s.elements.push_back(b);
    };
    push(block_identity_like(generators.front()));
    std::vector<BlockMatrix> gens;
    for (const auto& g : generators)
        if (!g.is_zero()) gens.push_back(g);
    for (const auto& g : gens) push(g);
    // words in the generators: right-multiply every basis element until nothing new appears
    for (std::size_t k = 0; k < s.elements.size(); ++k)
        for (const auto& g : gens) push(s.elements[k] * g);
    return s;
}

inline bool is_commutative(const SpanBasis& s) {
    for (std::size_t a = 0; a < s.dim(); ++a)
        for (std::size_t b = a + 1; b < s.dim(); ++b)
            if (s.elements[a] * s.elements[b] != s.elements[b] * s.elements[a]) return false;
    return true;
}

/// Dimension of the commutant of the span inside the image of C[S_n] (blockwise).
inline std::size_t commutant_dim(const SpanBasis& s) {
    if (s.elements.empty()) throw std::invalid_argument("commutant_dim: empty basis");
    std::size_t total = 0;
    const auto& shape = s.elements.front();
    for (std::size_t k = 0; k < shape.blocks.size(); ++k) {
        const int d = shape.blocks[k].rows();
        const std::size_t unknowns = static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
        EchelonBasis eqs(unknowns);
        // X B - B X = 0, unknown X(r, c) at index r*d + c
        for (const auto& e : s.elements) {
            const QMatrix& B = e.blocks[k];
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c) {
                    std::vector<Rational> row(unknowns);
                    bool any = false;
                    for (int l = 0; l < d; ++l) {
                        if (!B(l, c).is_zero()) {
                            row[static_cast<std::size_t>(r * d + l)] += B(l, c);
                            any = true;
                        }
                        if (!B(r, l).is_zero()) {
                            row[static_cast<std::size_t>(l * d + c)] -= B(r, l);
                            any = true;
                        }
                    }
                    if (any) eqs.insert(row);
                }
            if (eqs.size() == unknowns) break;
        }
        total += unknowns - eqs.size();
    }
    return total;
}

/// Characteristic polynomial on the direct sum of the blocks (one copy of each irreducible).
inline UPoly<Rational> block_charpoly(const BlockMatrix& b) {
    UPoly<Rational> p(Rational(1));
    for (const auto& m : b.blocks) p *= charpoly(m);
    return p;
}

struct SpectrumCertificate {
    bool certified = false;
    std::vector<Rational> combination;
    UPoly<Rational> charpoly;
};

/// Random rational combination with squarefree characteristic polynomial certifies a simple spectrum.
inline SpectrumCertificate simple_spectrum_cert(const SpanBasis& s, std::uint64_t seed, int attempts = 3) {
    SeededRandom rng(seed);
    SpectrumCertificate cert;
    for (int t = 0; t < attempts && !cert.certified; ++t) {
        BlockMatrix x = scale(s.elements.front(), Rational(0));
        std::vector<Rational> c;
        for (const auto& e : s.elements) {
            c.push_back(Rational(rng.integer(-50, 50), static_cast<long>(rng.integer(1, 7))));
            x += scale(e, c.back());
        }
        cert.combination = c;
        cert.charpoly = block_charpoly(x);
        cert.certified = squarefree_test(cert.charpoly);
    }
    return cert;
}

/// Orthonormal basis (columns) of the span of the given flattened vectors.
inline Eigen::MatrixXd orthonormal_columns(const SpanBasis& s) {
    const auto& rows = s.echelon.rows();
    Eigen::MatrixXd m(static_cast<Eigen::Index>(s.echelon.dim()), static_cast<Eigen::Index>(rows.size()));
    for (std::size_t c = 0; c < rows.size(); ++c)
        for (std::size_t r = 0; r < rows[c].size(); ++r) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[c][r].to_double();
    if (rows.empty()) return m;
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
    return qr.householderQ() * Eigen::MatrixXd::Identity(m.rows(), m.cols());
}

/// Sine of the largest principal angle between two spans; 1 when the dimensions differ.
inline double span_distance(const SpanBasis& a, const SpanBasis& b) {
    if (a.echelon.dim() != b.echelon.dim()) throw std::invalid_argument("span_distance: different ambient spaces");
    if (a.dim() != b.dim()) return 1.0;
    if (a.dim() == 0) return 0.0;
    Eigen::MatrixXd qa = orthonormal_columns(a), qb = orthonormal_columns(b);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(qa.transpose() * qb);
    double smin = svd.singularValues().minCoeff();
    smin = std::min(1.0, std::max(0.0, smin));
    return std::sqrt(std::max(0.0, 1.0 - smin * smin));
}

}  // namespace bethe
