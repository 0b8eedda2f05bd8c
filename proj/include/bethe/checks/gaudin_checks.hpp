#pragma once

#include "common.hpp"

namespace bethe::checks {

inline Outcome need_distinct() { return skipped("requires pairwise distinct z"); }

inline Outcome gaudin_fixed_point(const Context& x) {
    Exact e;
    e.eq(phi_gen(x.z), phi_gen_fixed_point(x.z));
    return e.outcome();
}

inline Outcome gaudin_commute(const Context& x) {
    auto gens = phi_polys(x.z).generators();
    Exact e;
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a + 1; b < gens.size(); ++b) e.note(sup_norm(commutator(gens[a], gens[b])), "pair " + std::to_string(a) + "," + std::to_string(b));
    Outcome o = e.outcome();
    o.value = gens.size();
    return o;
}

inline Outcome gaudin_det(const Context& x, DetVariant v) {
    if (!x.distinct()) return need_distinct();
    if (x.n > 4 && !x.slow) return skipped("n > 4 needs --slow");
    auto H = kz_elements(x.z);
    Exact e;
    if (v == DetVariant::P) e.eq(phi_gen(x.z), det_presentation(DetVariant::P, x.z, H));
    else if (v == DetVariant::Ptilde) e.eq(phi_tilde(x.z), det_presentation(DetVariant::Ptilde, x.z, H));
    else {
        BiPoly<GA> d = det_presentation(DetVariant::Ptilde0, x.z, H);
        e.truth(d.u_degree() == 0, "u-degree");
        e.eq(d.coeff_u(0), pi_poly(x.n));
    }
    return e.outcome();
}

inline Outcome gaudin_center(const Context& x) {
    using P = UPoly<Rational>;
    const int n = x.n;
    auto t = phi_polys(x.z);
    UPoly<GA> lhs, rhs;
    for (int i = 0; i <= n; ++i) {
        P tail(Rational(1));
        for (int j = i + 1; j <= n; ++j) tail *= P::linear(Rational(-j));
        GA c = i == 0 ? GA::identity(n) : t.coeff(i, 0);
        lhs += mul_scalar_poly(UPoly<GA>(i % 2 ? -c : c), tail);
    }
    for (const auto& l : partitions_of(n)) {
        P f(Rational(1));
        for (int j = 1; j <= n; ++j) f *= P::linear(Rational(part(l, j) - j));
        rhs += mul_scalar_poly(UPoly<GA>(central_idempotent(l)), f);
    }
    Exact e;
    e.eq(lhs, rhs);
    return e.outcome();
}

inline Outcome pi_three_ways(const Context& x) {
    const int n = x.n;
    UPoly<GA> by_idem;
    for (const auto& l : partitions_of(n)) {
        GA c = central_idempotent(l);
        UPoly<Rational> pi = content_poly(l);
        std::vector<GA> coeffs;
        for (int k = 0; k <= pi.degree(); ++k) coeffs.push_back(scale(c, pi[k]));
        by_idem += UPoly<GA>(coeffs);
    }
    UPoly<GA> by_jm(GA::identity(n));
    for (int i = 1; i <= n; ++i) by_jm = by_jm * UPoly<GA>(std::vector<GA>{-jucys_murphy(n, i), GA::identity(n)});
    std::vector<GA> coeffs(static_cast<std::size_t>(n) + 1, GA(n));
    for (const auto& p : all_permutations(n)) coeffs[static_cast<std::size_t>(p.orbit_count())].add(p, Rational(p.sign()));
    UPoly<GA> by_sum(coeffs);
    Exact e;
    e.eq(by_idem, by_jm, "idempotents vs Jucys-Murphy");
    e.eq(by_jm, by_sum, "Jucys-Murphy vs permutation sum");
    e.eq(by_idem, pi_poly(n), "library pi_poly");
    return e.outcome();
}

inline Outcome gaudin_scale_shift(const Context& x) {
    SeededRandom rng = x.rng(11);
    const Rational s = rng.nonzero_rational();
    std::vector<Rational> sz, tz;
    for (const auto& a : x.z) {
        sz.push_back(s * a);
        tz.push_back(a + s);
    }
    auto t = phi_polys(x.z), ts = phi_polys(sz), tt = phi_polys(tz);
    Exact e;
    for (auto [i, j] : t.labels()) e.eq(ts.coeff(i, j), scale(t.coeff(i, j), s.pow(j)), "scaling");
    for (int i = 1; i <= x.n; ++i) e.eq(tt.phi[static_cast<std::size_t>(i)].shift(s), t.phi[static_cast<std::size_t>(i)], "shift");
    Outcome o = e.outcome();
    o.params["s"] = rational_json(s);
    return o;
}

inline Outcome gaudin_permutation(const Context& x) {
    SeededRandom rng = x.rng(12);
    auto t = phi_polys(x.z);
    Exact e;
    json used = json::array();
    for (int trial = 0; trial < 3; ++trial) {
        Permutation g = random_perm(rng, x.n);
        used.push_back(g.cycle_string());
        std::vector<Rational> zg;
        for (int a = 1; a <= x.n; ++a) zg.push_back(x.z[static_cast<std::size_t>(g(a) - 1)]);
        auto tg = phi_polys(zg);
        for (auto [i, j] : t.labels()) e.eq(tg.coeff(i, j).conjugate(g), t.coeff(i, j), g.cycle_string());
    }
    Outcome o = e.outcome();
    o.params["sigma"] = used;
    return o;
}

inline Outcome gaudin_self_adjoint(const Context& x) {
    Exact e;
    for (const auto& g : phi_polys(x.z).generators()) {
        e.eq(g.dagger(), g, "dagger");
        e.eq(antiinvolution(g, Involution::star), g, "star");
    }
    return e.outcome();
}

inline Outcome kz_properties(const Context& x) {
    if (!x.distinct()) return need_distinct();
    auto H = kz_elements(x.z);
    Exact e;
    GA sum(x.n);
    for (std::size_t a = 0; a < H.size(); ++a) {
        sum += H[a];
        e.eq(H[a].dagger(), H[a], "self-adjoint");
        for (std::size_t b = a + 1; b < H.size(); ++b) e.note(sup_norm(commutator(H[a], H[b])), "commutator");
    }
    e.note(sup_norm(sum), "sum");
    return e.outcome();
}

inline Outcome seminormal_relations(const Context& x) {
    Exact e;
    for (const auto& l : partitions_of(x.n)) {
        auto r = seminormal_rep(l);
        QMatrix I = QMatrix::identity(r.dim);
        const std::string at = partition_string(l);
        for (int i = 1; i < x.n; ++i) {
            e.eq(r.s(i) * r.s(i), I, at);
            if (i + 1 < x.n) e.eq(r.s(i) * r.s(i + 1) * r.s(i), r.s(i + 1) * r.s(i) * r.s(i + 1), at);
            for (int j = i + 2; j < x.n; ++j) e.eq(r.s(i) * r.s(j), r.s(j) * r.s(i), at);
        }
    }
    return e.outcome();
}

inline Outcome jm_contents(const Context& x) {
    const auto& R = representer(x.n);
    Exact e;
    for (int k = 1; k <= x.n; ++k) {
        BlockMatrix b = R.represent(jucys_murphy(x.n, k));
        for (std::size_t blk = 0; blk < b.blocks.size(); ++blk) {
            const auto& basis = R.irreps()[blk].basis;
            QMatrix expected(static_cast<int>(basis.size()), static_cast<int>(basis.size()));
            for (std::size_t t = 0; t < basis.size(); ++t) expected(static_cast<int>(t), static_cast<int>(t)) = Rational(basis[t].content(k));
            e.eq(b.blocks[blk], expected, "J_" + std::to_string(k));
        }
    }
    return e.outcome();
}

inline Outcome idempotents(const Context& x) {
    const int n = x.n;
    auto parts = partitions_of(n);
    std::vector<GA> chi;
    GA sum(n);
    for (const auto& l : parts) {
        chi.push_back(central_idempotent(l));
        sum += chi.back();
    }
    Exact e;
    e.eq(sum, GA::identity(n), "completeness");
    const auto& R = representer(n);
    std::vector<BlockMatrix> img;
    for (std::size_t a = 0; a < parts.size(); ++a) {
        img.push_back(R.represent(chi[a]));
        for (std::size_t k = 0; k < parts.size(); ++k) {
            const std::string at = partition_string(parts[a]) + " on " + partition_string(parts[k]);
            if (k == a) e.eq(img[a].blocks[k], QMatrix::identity(R.irreps()[k].dim), at);
            else e.truth(img[a].blocks[k].is_zero(), at);
        }
    }
    // group-algebra products are quadratic in n!; beyond n = 5 the faithful block form is used
    const bool direct = n <= 5;
    for (std::size_t a = 0; a < parts.size(); ++a)
        for (std::size_t c = 0; c < parts.size(); ++c) {
            if (direct) e.eq(chi[a] * chi[c], a == c ? chi[a] : GA(n), "product");
            else {
                BlockMatrix pr = img[a] * img[c];
                e.eq(pr, a == c ? img[a] : scale(img[a], Rational(0)), "product");
            }
        }
    Outcome o = e.outcome();
    o.params["products"] = direct ? "group algebra" : "blockwise";
    return o;
}

inline std::vector<CheckDef> gaudin_suite() {
    return {
        {"gaudin.center-polynomial", "top Gaudin coefficients and the central idempotents satisfy the partition polynomial identity", gaudin_center},
        {"gaudin.commute", "Gaudin coefficients pairwise commute", gaudin_commute},
        {"gaudin.covariance-permutation", "conjugation by a permutation permutes the points", gaudin_permutation},
        {"gaudin.covariance-scale-shift", "Gaudin coefficients under z -> s z and z -> z + s", gaudin_scale_shift},
        {"gaudin.det-presentation", "Gaudin generating function equals the KZ determinant P(u,v;z;H)",
         [](const Context& x) { return gaudin_det(x, DetVariant::P); }},
        {"gaudin.det-presentation-tilde", "modified generating function equals the determinant P~(u,v;z;H)",
         [](const Context& x) { return gaudin_det(x, DetVariant::Ptilde); }},
        {"gaudin.det-tilde-top", "the u-free part P~_0(v) equals Pi(v)", [](const Context& x) { return gaudin_det(x, DetVariant::Ptilde0); }},
        {"gaudin.fixed-point", "generating function equals its fixed-point expansion", gaudin_fixed_point},
        {"gaudin.kz", "KZ elements commute, are self-adjoint and sum to zero", kz_properties},
        {"gaudin.pi-three-ways", "Pi(v) from idempotents, from Jucys-Murphy elements and from cycle counts", pi_three_ways},
        {"gaudin.self-adjoint", "Gaudin coefficients are fixed by dagger and star", gaudin_self_adjoint},
        {"rep.idempotents", "central idempotents are complete, orthogonal and blockwise identities", idempotents},
        {"rep.jucys-murphy-contents", "Jucys-Murphy elements are diagonal with content eigenvalues", jm_contents},
        {"rep.seminormal", "seminormal matrices satisfy the Coxeter relations", seminormal_relations},
    };
}

}  // namespace bethe::checks
