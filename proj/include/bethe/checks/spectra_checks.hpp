#pragma once

#include "common.hpp"
#include "homogeneous_checks.hpp"

namespace bethe::checks {

inline bool too_big(const Context& x, int limit) { return x.n > limit && !x.slow; }

inline std::string too_big_reason(int limit) { return "n > " + std::to_string(limit) + " needs --slow"; }

enum class Family { Gaudin, XXX, Homogeneous, GelfandZetlin };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::Gaudin: return "gaudin";
        case Family::XXX: return "xxx";
        case Family::Homogeneous: return "homogeneous";
        case Family::GelfandZetlin: return "gelfand-zetlin";
    }
    return "?";
}

/// Generators of the family at the configured point, or a reason it does not apply.
inline std::optional<std::string> family_generators(const Context& x, Family f, std::vector<GA>& out) {
    switch (f) {
        case Family::Gaudin:
            if (!x.distinct()) return "requires pairwise distinct z";
            out = phi_polys(x.z).generators();
            return std::nullopt;
        case Family::XXX: {
            auto par = x.xxx();
            if (!par.distinct) return "requires pairwise distinct z";
            if (!par.shift_free) return "requires z_a - z_b != hbar";
            out = xxx_generators(par);
            return std::nullopt;
        }
        case Family::Homogeneous: out = homogeneous_generators(x.n); return std::nullopt;
        case Family::GelfandZetlin: out = jm_gz(x.n).jm; return std::nullopt;
    }
    return "unknown family";
}

inline Outcome span_dimension(const Context& x, Family f) {
    if (too_big(x, 4)) return skipped(too_big_reason(4));
    std::vector<GA> gens;
    if (auto why = family_generators(x, f, gens)) return skipped(*why);
    auto s = span_of(gens, x.n);
    const std::size_t want = irrep_dim_sum(x.n);
    Exact e;
    e.note(Rational(static_cast<long>(s.dim()) - static_cast<long>(want)).abs(), "dimension");
    Outcome o = e.outcome();
    o.value = s.dim();
    o.params["expected"] = want;
    return o;
}

inline Outcome maximality(const Context& x, Family f) {
    if (too_big(x, 4)) return skipped(too_big_reason(4));
    std::vector<GA> gens;
    if (auto why = family_generators(x, f, gens)) return skipped(*why);
    auto s = span_of(gens, x.n);
    const std::size_t c = commutant_dim(s);
    Exact e;
    e.truth(is_commutative(s), "commutative");
    e.note(Rational(static_cast<long>(c) - static_cast<long>(s.dim())).abs(), "commutant");
    Outcome o = e.outcome();
    o.value = {{"span", s.dim()}, {"commutant", c}};
    return o;
}

inline Outcome coincident_points(const Context& x) {
    if (x.n < 4) return skipped("fixed n = 4 configuration; runs when n >= 4");
    auto sz = [](std::initializer_list<long> v) {
        std::vector<Rational> out;
        for (long a : v) out.emplace_back(a);
        return out;
    };
    auto pair = span_of(phi_polys(sz({0, 0, 2, 5})).generators(), 4);
    auto triple = span_of(phi_polys(sz({0, 0, 0, 5})).generators(), 4);
    const std::size_t cp = commutant_dim(pair), ct = commutant_dim(triple);
    Exact e;
    e.truth(cp == pair.dim(), "pair maximal");
    e.truth(is_commutative(triple), "triple commutative");
    e.truth(ct > triple.dim(), "triple not maximal");
    Outcome o = e.outcome();
    o.params["pair"] = rationals_json(sz({0, 0, 2, 5}));
    o.params["triple"] = rationals_json(sz({0, 0, 0, 5}));
    o.value = {{"pair_span", pair.dim()}, {"pair_commutant", cp}, {"triple_span", triple.dim()}, {"triple_commutant", ct}};
    return o;
}

inline Outcome certificate(const Context& x, Family f) {
    if (too_big(x, 4)) return skipped(too_big_reason(4));
    std::vector<GA> gens;
    Outcome o;
    if (f == Family::XXX) {
        // (z_a - z_{a+1}) / hbar = 2 > 1
        std::vector<Rational> z;
        for (int a = 1; a <= x.n; ++a) z.push_back(Rational(2 * (x.n - a)) * x.hbar);
        gens = xxx_generators(xxx_params(z, x.hbar, x.p));
        o.params["z"] = rationals_json(z);
    } else if (auto why = family_generators(x, f, gens)) {
        return skipped(*why);
    }
    auto cert = simple_spectrum_cert(span_of(gens, x.n), x.seed);
    o.status = cert.certified ? Status::Pass : Status::Fail;
    o.residual = cert.certified ? "0" : "1";
    return o;
}

/// Residual relative to the largest coefficient of the determinant, floored at 1.
inline double relative(double r, const BiPoly<cd>& P) {
    double m = 1;
    for (const auto& row : P.grid())
        for (const auto& c : row) m = std::max(m, std::abs(c));
    return r / m;
}

inline std::vector<GA> nonempty(std::vector<GA> g, int n) {
    if (g.empty()) g.push_back(GA::identity(n));
    return g;
}

inline Outcome eigen_counts(const Context& x) {
    if (too_big(x, 4)) return skipped(too_big_reason(4));
    Exact e;
    json counts = json::object();
    for (Family f : {Family::Gaudin, Family::XXX, Family::Homogeneous}) {
        std::vector<GA> gens;
        if (family_generators(x, f, gens)) continue;
        auto recs = joint_eigen(nonempty(gens, x.n), x.n, x.seed, x.tol);
        counts[family_name(f)] = recs.size();
        e.note(Rational(static_cast<long>(recs.size()) - static_cast<long>(irrep_dim_sum(x.n))).abs(), family_name(f));
    }
    Outcome o = e.outcome();
    o.value = counts;
    o.params["expected"] = irrep_dim_sum(x.n);
    return o;
}

inline Outcome kz_relations(const Context& x) {
    if (!x.distinct()) return skipped("requires pairwise distinct z");
    if (too_big(x, 4)) return skipped(too_big_reason(4));
    auto H = kz_elements(x.z);
    Numeric num;
    std::size_t used = 0;
    for (const auto& r : joint_eigen(H, x.n, x.seed, x.tol)) {
        if (!keep_block(x, r.lambda)) continue;
        std::vector<cd> h;
        for (const auto& g : H) h.push_back(record_eigenvalue(g, r, x.n, x.tol));
        auto res = check_relations_H(r.lambda, x.z, h);
        num.note(relative(std::max(res.offdiag_max, res.lambda_max), res.P));
        ++used;
    }
    Outcome o = num.outcome(x.tol);
    o.value = used;
    return o;
}

inline Outcome theta_reconstruction(const Context& x) {
    if (x.n < 2) return skipped("needs n >= 2");
    if (too_big(x, 4)) return skipped(too_big_reason(4));
    const int n = x.n;
    BiPoly<GA> T = t_gen(xxx_params(zeros(n), Rational(1)));
    UPoly<cd> target(cd(1.0, 0.0));
    for (int i = 0; i < n; ++i) target = target * UPoly<cd>(std::vector<cd>{cd(1.0, 0.0), cd(1.0, 0.0)});
    Numeric num;
    Exact degrees;
    std::size_t used = 0;
    for (const auto& r : joint_eigen(homogeneous_generators(n), n, x.seed, x.tol)) {
        if (!keep_block(x, r.lambda)) continue;
        BiPoly<cd> t = record_eigenvalue_poly(T, r, n, x.tol);
        PolySpace U = reconstruct_subspace(t, n, WronskiVariant::Discrete, 2 * n - 1);
        std::vector<int> want;
        for (int i = 1; i <= n; ++i) want.push_back(part(r.lambda, i) + n - i);
        degrees.truth(U.degrees() == want, partition_string(r.lambda));
        U = normalize_casorati(U, cd(1.0, 0.0));
        UPoly<cd> cas = casorati(U.basis, Rational(1)) - target;
        double dev = 0;
        for (const auto& c : cas.coeffs()) dev = std::max(dev, std::abs(c));
        num.note(dev);
        BiPoly<cd> back = f_bivariate(U.basis) - (n % 2 ? -t : t);
        double fdev = 0;
        for (const auto& row : back.grid())
            for (const auto& c : row) fdev = std::max(fdev, std::abs(c));
        num.note(fdev);
        ++used;
    }
    Outcome o = num.outcome(x.recon_tol);
    if (!degrees.worst.is_zero()) {
        o.status = Status::Fail;
        o.detail = "degree mismatch at " + degrees.first_failure;
    }
    o.value = used;
    return o;
}

inline Outcome cyclic_vectors(const Context& x) {
    if (x.n < 2) return skipped("needs n >= 2");
    if (too_big(x, 4)) return skipped(too_big_reason(4));
    Exact e;
    std::vector<GA> gens;
    if (!family_generators(x, Family::Gaudin, gens)) e.truth(cyclicity(span_of(gens, x.n), x.n, x.z, CyclicVariant::Classic).isomorphism, "gaudin");
    gens.clear();
    if (!family_generators(x, Family::XXX, gens))
        e.truth(cyclicity(span_of(gens, x.n), x.n, x.z, CyclicVariant::Hbar, x.hbar).isomorphism, "xxx");
    return e.outcome();
}

inline std::string join_distances(const std::vector<double>& d) {
    json a = json::array();
    for (double v : d) a.push_back(format_double(v));
    return a.dump();
}

inline Outcome trend(const std::vector<double>& d, std::size_t dim_mismatch) {
    bool dec = true;
    for (std::size_t k = 1; k < d.size(); ++k) dec = dec && d[k] < d[k - 1];
    Outcome o;
    o.status = dec && dim_mismatch == 0 ? Status::Pass : Status::Fail;
    o.residual = format_double(d.back());
    json a = json::array();
    for (double v : d) a.push_back(format_double(v));
    o.value = a;
    if (!dec) o.detail = "distances not strictly decreasing";
    if (dim_mismatch) o.detail = "span dimensions differ along the family";
    return o;
}

inline Outcome limit_gz(const Context& x, bool hbar_family) {
    if (x.n < 3) return skipped("at n <= 2 every family equals the Gelfand-Zetlin subalgebra");
    if (too_big(x, 4)) return skipped(too_big_reason(4));
    auto gz = span_of(jm_gz(x.n).jm, x.n);
    std::vector<double> d;
    std::size_t mismatch = 0;
    for (long s : {100L, 10000L, 1000000L}) {
        std::vector<Rational> z;
        Rational p(1);
        for (int a = 0; a < x.n; ++a) {
            z.push_back(p);
            p *= Rational(s);
        }
        auto span = span_of(hbar_family ? xxx_generators(xxx_params(z, Rational(1), Rational(x.n))) : phi_polys(z).generators(), x.n);
        if (span.dim() != gz.dim()) ++mismatch;
        d.push_back(span_distance(span, gz));
    }
    Outcome o = trend(d, mismatch);
    o.params["s"] = {"100", "10000", "1000000"};
    return o;
}

inline Outcome limit_hbar(const Context& x) {
    if (x.n < 3) return skipped("at n <= 2 both families equal the center");
    if (!x.distinct()) return skipped("requires pairwise distinct z");
    if (too_big(x, 4)) return skipped(too_big_reason(4));
    auto gaudin = span_of(phi_polys(x.z).generators(), x.n);
    std::vector<double> d;
    std::size_t mismatch = 0;
    for (Rational h : {Rational(1), Rational(1, 10), Rational(1, 100)}) {
        auto par = xxx_params(x.z, h, Rational(x.n));
        if (!par.shift_free) return skipped("some z_a - z_b equals a sampled hbar");
        auto span = span_of(xxx_generators(par), x.n);
        if (span.dim() != gaudin.dim()) ++mismatch;
        d.push_back(span_distance(span, gaudin));
    }
    Outcome o = trend(d, mismatch);
    o.params["hbar"] = {"1", "1/10", "1/100"};
    return o;
}

inline std::vector<CheckDef> spectra_suite() {
    std::vector<CheckDef> out;
    for (Family f : {Family::Gaudin, Family::XXX, Family::Homogeneous}) {
        const std::string name = family_name(f);
        out.push_back({"spectra.dimension." + name, "span dimension equals the sum of irreducible dimensions",
                       [f](const Context& x) { return span_dimension(x, f); }});
        out.push_back({"spectra.certificate." + name, "a random element has squarefree characteristic polynomial on every block",
                       [f](const Context& x) { return certificate(x, f); }});
    }
    for (Family f : {Family::Gaudin, Family::XXX, Family::Homogeneous, Family::GelfandZetlin})
        out.push_back({std::string("spectra.maximal.") + family_name(f), "commutant dimension equals span dimension",
                       [f](const Context& x) { return maximality(x, f); }});
    out.push_back({"spectra.maximal.coincident", "coinciding pair keeps maximality, coinciding triple loses it", coincident_points});
    out.push_back({"spectra.eigen-counts", "joint eigenvector counts match the dimension law", eigen_counts});
    out.push_back({"spectra.kz-relations", "KZ eigenvalues satisfy the relations of H_lambda(z)", kz_relations});
    out.push_back({"spectra.theta-reconstruction", "homogeneous eigenvalues reconstruct spaces in Theta_lambda", theta_reconstruction});
    out.push_back({"spectra.cyclic-vector", "evaluation at the cyclic vector is an isomorphism onto the sum of irreducibles", cyclic_vectors});
    out.push_back({"spectra.limit.gelfand-zetlin", "steep points move the Gaudin span towards Gelfand-Zetlin",
                   [](const Context& x) { return limit_gz(x, false); }});
    out.push_back({"spectra.limit.gelfand-zetlin-hbar", "steep points move the XXX span towards Gelfand-Zetlin",
                   [](const Context& x) { return limit_gz(x, true); }});
    out.push_back({"spectra.limit.hbar-to-zero", "small hbar moves the XXX span towards the Gaudin span", limit_hbar});
    return out;
}

// Conjecture probes: residuals of the relations at joint eigenvalues.

inline bool has_zero(const std::vector<Rational>& z) {
    return std::any_of(z.begin(), z.end(), [](const Rational& a) { return a.is_zero(); });
}

inline Outcome probe_tilde(const Context& x) {
    if (!x.distinct()) return skipped("requires pairwise distinct z");
    if (too_big(x, 3)) return skipped(too_big_reason(3));
    auto H = kz_elements(x.z);
    Numeric num;
    std::size_t used = 0;
    for (const auto& r : joint_eigen(H, x.n, x.seed, x.tol)) {
        if (!keep_block(x, r.lambda)) continue;
        std::vector<cd> h;
        for (const auto& g : H) h.push_back(record_eigenvalue(g, r, x.n, x.tol));
        auto res = check_relations_Ht(r.lambda, x.z, h);
        num.note(relative(std::max(res.top_max, res.remainder_max), res.Pt));
        ++used;
    }
    Outcome o = num.outcome(x.tol, true);
    o.value = used;
    if (has_zero(x.z)) o.detail = "some z_a = 0, so the relations do not constrain that h_a";
    return o;
}

inline Outcome probe_qkz(const Context& x, bool literal) {
    auto par = x.xxx_unit();
    if (!par.distinct) return skipped("requires pairwise distinct z");
    if (!par.shift_free) return skipped("requires z_a - z_b != hbar");
    if (too_big(x, 3)) return skipped(too_big_reason(3));
    const int n = x.n;
    UPoly<GA> s1 = s_k_poly(par, 1);
    auto coeff = [&](int k) { return s1[k].is_zero() ? GA(n) : s1[k]; };
    Numeric num;
    std::size_t used = 0;
    for (const auto& r : joint_eigen(nonempty(xxx_generators(par), n), n, x.seed, x.tol)) {
        if (!keep_block(x, r.lambda)) continue;
        std::vector<cd> q;
        for (int i = 1; i <= n; ++i) q.push_back(record_eigenvalue(coeff(n - i), r, n, x.tol));
        if (literal) q[0] = cd(1.0, 0.0);
        auto res = check_relations_Hh(r.lambda, par, q);
        num.note(relative(std::max(res.offdiag_max, res.lambda_max), res.P));
        ++used;
    }
    Outcome o = num.outcome(x.tol, true);
    o.value = used;
    o.params["scaled_z"] = rationals_json(par.z);
    o.params["q1"] = literal ? "hbar" : "top coefficient of S_1 (hbar n)";
    return o;
}

inline std::vector<CheckDef> conjecture_suite() {
    return {
        {"conjecture.qkz-relations-literal", "H_{hbar,lambda}(z) relations at eigenvalues, q_1 -> hbar",
         [](const Context& x) { return probe_qkz(x, true); }},
        {"conjecture.qkz-relations-top", "H_{hbar,lambda}(z) relations at eigenvalues, q_1 -> top coefficient of S_1",
         [](const Context& x) { return probe_qkz(x, false); }},
        {"conjecture.tilde-relations", "KZ eigenvalues satisfy the relations of H~_lambda(z)", probe_tilde},
    };
}

}  // namespace bethe::checks
