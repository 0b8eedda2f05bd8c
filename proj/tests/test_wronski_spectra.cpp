#include <gtest/gtest.h>

#include <cmath>

#include "bethe/homogeneous.hpp"
#include "bethe/random.hpp"
#include "bethe/spectra.hpp"
#include "bethe/xxx.hpp"

using namespace bethe;

namespace {

using Q = Rational;
using P = UPoly<Rational>;
using B = BiPoly<Rational>;

std::vector<Q> zs(std::initializer_list<long> v) {
    std::vector<Q> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

P poly(std::initializer_list<long> c) {
    std::vector<Q> v;
    for (long x : c) v.emplace_back(x);
    return P(v);
}

P random_monic(SeededRandom& rng, int deg) {
    std::vector<Q> c;
    for (int k = 0; k < deg; ++k) c.push_back(rng.rational(5, 3));
    c.push_back(Q(1));
    return P(c);
}

Q vandermonde_of_degrees(const std::vector<int>& d) {
    Q v(1);
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) v *= Q(d[j] - d[i]);
    return v;
}

SpanBasis span_of(const std::vector<GA>& gens, int n) { return algebra_span(represent_all(gens, n)); }

std::size_t sum_dims(int n) {
    std::size_t s = 0;
    for (const auto& p : partitions_of(n)) s += static_cast<std::size_t>(hook_dimension(p));
    return s;
}

std::vector<Q> first(std::vector<Q> v, int n) {
    v.resize(static_cast<std::size_t>(n));
    return v;
}

std::vector<Q> zeros(int n) { return std::vector<Q>(static_cast<std::size_t>(n), Q(0)); }

BiPoly<cd> to_complex(const B& b) {
    return b.map([](const Q& c) { return cd(c.to_double(), 0.0); });
}

double max_abs(const BiPoly<cd>& b) {
    double m = 0;
    for (const auto& row : b.grid())
        for (const auto& c : row) m = std::max(m, std::abs(c));
    return m;
}

UPoly<cd> to_complex(const P& p) {
    return p.map([](const Q& c) { return cd(c.to_double(), 0.0); });
}

double max_abs(const UPoly<cd>& p) {
    double m = 0;
    for (const auto& c : p.coeffs()) m = std::max(m, std::abs(c));
    return m;
}

/// (u + 1)^n
P u_plus_one(int n) {
    P p(Q(1));
    for (int i = 0; i < n; ++i) p *= P::linear(Q(-1));
    return p;
}

}  // namespace

TEST(Wronskian, Examples) {
    EXPECT_EQ(wronskian<Q>({P(Q(1)), P::x()}), P(Q(1)));
    EXPECT_EQ(wronskian<Q>({P::x(), poly({0, 0, 1})}), poly({0, 0, 1}));
    P f = poly({3, -1, 2});
    EXPECT_TRUE(wronskian<Q>({f, f}).is_zero());
    EXPECT_EQ(wronskian<Q>({f}), f);
    EXPECT_THROW(wronskian<Q>({}), std::invalid_argument);
}

TEST(Wronskian, LeadingCoefficientIsVandermondeOfDegrees) {
    SeededRandom rng(41);
    for (const auto& d : std::vector<std::vector<int>>{{0, 1}, {3, 1}, {4, 2, 0}, {2, 5, 3, 0}}) {
        std::vector<P> fs;
        int total = 0;
        for (int k : d) {
            fs.push_back(random_monic(rng, k));
            total += k;
        }
        const int m = static_cast<int>(d.size());
        P w = wronskian(fs);
        EXPECT_EQ(w.degree(), total - m * (m - 1) / 2);
        EXPECT_EQ(w.leading(), vandermonde_of_degrees(d));
    }
}

TEST(Casorati, Examples) {
    for (Q h : {Q(1), Q(1, 3), Q(-2)}) {
        EXPECT_EQ(casorati<Q>({P(Q(1)), P::x()}, h), P(-h));
        EXPECT_EQ(casorati<Q>({P(Q(1)), P::x(), poly({0, 0, 1})}, h), P(Q(-2) * h * h * h));
    }
    P f = poly({1, 1, 1});
    EXPECT_TRUE(casorati<Q>({f, f}, Q(1)).is_zero());
    EXPECT_THROW(casorati<Q>({f}, Q(0)), std::invalid_argument);
}

TEST(Casorati, LeadingCoefficientCarriesHbarPower) {
    SeededRandom rng(43);
    for (const auto& d : std::vector<std::vector<int>>{{1, 0}, {4, 2, 1}, {3, 5, 0, 2}})
        for (Q h : {Q(1), Q(2, 5)}) {
            std::vector<P> fs;
            for (int k : d) fs.push_back(random_monic(rng, k));
            const int m = static_cast<int>(d.size());
            P c = casorati(fs, h);
            EXPECT_EQ(c.leading(), casorati_constant(m, h) * vandermonde_of_degrees(d));
            EXPECT_EQ(c.degree(), wronskian(fs).degree());
        }
}

TEST(Casorati, SmallStepApproachesWronskian) {
    SeededRandom rng(47);
    std::vector<P> fs{random_monic(rng, 4), random_monic(rng, 2), random_monic(rng, 1)};
    P w = wronskian(fs);
    std::vector<double> err;
    for (Q h : {Q(1, 10), Q(1, 100), Q(1, 1000)}) {
        P c = scale(casorati(fs, h), casorati_constant(3, h).inverse());
        err.push_back(max_abs_coeff(c - w));
    }
    EXPECT_GT(err[0], 5 * err[1]);
    EXPECT_GT(err[1], 5 * err[2]);
}

TEST(FBivariate, OnePolynomial) {
    P p = poly({1, 1});
    // rows (p(u), v), (p(u-1), 1)
    B expect = B::from_u(p) - B::monomial(Q(1), 1, 1);
    EXPECT_EQ(f_bivariate<Q>({p}), expect);
    // rows (p, 1), (p', v)
    EXPECT_EQ(f_bivariate<Q>({p}, WronskiVariant::Differential), B::monomial(Q(1), 1, 1) + B::monomial(Q(1), 0, 1) - B(Q(1)));
    EXPECT_THROW(f_bivariate<Q>({p, p}), std::invalid_argument);
}

TEST(FBivariate, OperatorAnnihilatesTheSpan) {
    SeededRandom rng(53);
    for (auto variant : {WronskiVariant::Discrete, WronskiVariant::Differential})
        for (int n = 1; n <= 4; ++n) {
            std::vector<P> fs;
            for (int i = 0; i < n; ++i) fs.push_back(random_monic(rng, 2 * n - 1 - 2 * i > 0 ? 2 * n - 1 - 2 * i : i));
            Q h = variant == WronskiVariant::Discrete ? Q(2, 3) : Q(1);
            B F = f_bivariate(fs, variant, h);
            P comb;
            for (const auto& f : fs) comb += scale(f, rng.rational());
            EXPECT_TRUE(apply_f_operator(F, n, comb, variant, h).is_zero()) << variant_name(variant) << " n=" << n;
            for (const auto& f : fs) EXPECT_TRUE(apply_f_operator(F, n, f, variant, h).is_zero());
            P outside = P::monomial(Q(1), 2 * n + 3);
            EXPECT_FALSE(apply_f_operator(F, n, outside, variant, h).is_zero());
        }
}

TEST(FBivariate, DegreeStructureAndBasisChange) {
    SeededRandom rng(59);
    for (int n = 1; n <= 3; ++n) {
        std::vector<P> fs;
        for (int i = 0; i < n; ++i) fs.push_back(random_monic(rng, n + 1 - i));
        B F = f_bivariate(fs);
        EXPECT_EQ(F.v_degree(), n);
        // v^n carries (-1)^n Cas(u - 1); the differential v^n coefficient is the Wronskian
        P top = casorati(fs, Q(1)).shift(Q(-1));
        EXPECT_EQ(F.coeff_v(n), n % 2 ? -top : top);
        EXPECT_EQ(f_bivariate(fs, WronskiVariant::Differential).coeff_v(n), wronskian(fs));
        // an upper triangular change of basis with diagonal (2, 1, ...) doubles F
        std::vector<P> gs = fs;
        gs[0] = scale(fs[0], Q(2));
        for (int i = 1; i < n; ++i) gs[static_cast<std::size_t>(i)] = fs[static_cast<std::size_t>(i)] + scale(fs[0], rng.rational());
        EXPECT_EQ(f_bivariate(gs), scale(F, Q(2)));
    }
}

TEST(ORelations, OnePoint) {
    Q a1(7, 2);
    auto ok = check_O_relations<Q>({1}, {a1}, {P::linear(a1)}, WronskiVariant::Differential);
    EXPECT_TRUE(ok.ok(0));
    auto bad = check_O_relations<Q>({1}, {a1}, {P::linear(Q(-5))}, WronskiVariant::Differential);
    EXPECT_FALSE(bad.ok(0));
    EXPECT_TRUE(bad.violations.empty());
    EXPECT_GT(bad.residual_max, 0);
}

TEST(ORelations, TwoPointsSignModule) {
    // lambda = (1,1): f_1 = u^2 - z_1 z_2, f_2 = u - (z_1 + z_2)/2, constant -1
    auto z = zs({3, -5});
    P f1 = poly({15, 0, 1}), f2 = P::linear(Q(-1));
    auto r = check_O_relations<Q>({1, 1}, a_from_roots(z), {f1, f2}, WronskiVariant::Differential);
    EXPECT_TRUE(r.ok(0)) << r.residual_max;
    // a nonzero coefficient at u^1 in f_1 is a shape violation
    auto g = check_O_relations<Q>({1, 1}, a_from_roots(z), {f1 + P::x(), f2}, WronskiVariant::Differential);
    EXPECT_FALSE(g.violations.empty());
    auto h = check_O_relations<Q>({1, 1}, a_from_roots(z), {scale(f1, Q(2)), f2}, WronskiVariant::Differential);
    EXPECT_FALSE(h.violations.empty());
}

TEST(ORelations, DiscreteHomogeneousPoint) {
    // lambda = (1), n = 1: Cas[f] = f = u + 1
    auto r = check_O_relations<Q>({1}, a_from_roots({Q(-1)}), {P::linear(Q(-1))}, WronskiVariant::Discrete);
    EXPECT_TRUE(r.ok(0));
    // lambda = (2): constant (0 - 2 + 1 - 2)(-1) = 3, so f_1(u) - f_1(u-1) = 3 (u+1)^2
    const auto a = a_from_roots({Q(-1), Q(-1)});
    P f1({Q(0), Q(13, 2), Q(9, 2), Q(1)});
    EXPECT_EQ(f1 - f1.shift(Q(-1)), scale(u_plus_one(2), Q(3)));
    auto ok = check_O_relations<Q>({2}, a, {f1, P(Q(1))}, WronskiVariant::Discrete);
    EXPECT_TRUE(ok.ok(0)) << ok.residual_max;
    SeededRandom rng(61);
    for (int trial = 0; trial < 3; ++trial)
        EXPECT_FALSE(check_O_relations<Q>({2}, a, {random_monic(rng, 3), P(Q(1))}, WronskiVariant::Discrete).ok(0));
}

TEST(Spans, ThreePointGaudinExample) {
    auto z = zs({0, 2, 7});
    auto s = span_of(phi_polys(z).generators(), 3);
    EXPECT_EQ(s.dim(), 4u);
    GA sum = sigma(3, 1, 2) + sigma(3, 1, 3) + sigma(3, 2, 3);
    GA cyc = sigma(3, 1, 2) * sigma(3, 2, 3) + sigma(3, 2, 3) * sigma(3, 1, 2);
    GA lin = scale(sigma(3, 2, 3), z[0]) + scale(sigma(3, 1, 3), z[1]) + scale(sigma(3, 1, 2), z[2]);
    auto t = linear_span(represent_all({GA::identity(3), sum, cyc, lin}, 3));
    EXPECT_TRUE(same_span(s, t));
    EXPECT_EQ(span_of({GA::identity(3)}, 3).dim(), 1u);
}

TEST(Spans, DimensionIsSumOfIrrepDimensions) {
    for (int n = 2; n <= 4; ++n) {
        SeededRandom rng(static_cast<std::uint64_t>(100 + n));
        auto z = rng.distinct_rationals(n);
        EXPECT_EQ(span_of(phi_polys(z).generators(), n).dim(), sum_dims(n)) << n;
        std::vector<Q> zh;
        for (int a = 0; a < n; ++a) zh.push_back(Q(3 * a));
        EXPECT_EQ(span_of(xxx_generators(xxx_params(zh, Q(1), Q(n))), n).dim(), sum_dims(n)) << n;
        EXPECT_EQ(span_of(homogeneous_generators(n), n).dim(), sum_dims(n)) << n;
    }
    EXPECT_EQ(span_of(phi_polys(zs({0, 1, 3, 7, 12})).generators(), 5).dim(), 26u);
}

TEST(Spans, CenterFromFirstColumn) {
    for (int n = 1; n <= 5; ++n) {
        PhiTable t = phi_polys(SeededRandom(7).distinct_rationals(n));
        std::vector<GA> c;
        for (int i = 1; i <= n; ++i) c.push_back(t.coeff(i, 0));
        EXPECT_EQ(span_of(c, n).dim(), partitions_of(n).size()) << n;
    }
}

TEST(Commutant, CenterAndFullImage) {
    for (int n = 2; n <= 4; ++n) {
        std::vector<GA> center;
        for (const auto& mu : partitions_of(n)) center.push_back(class_sum(mu));
        auto zc = span_of(center, n);
        long fact = 1;
        for (int k = 2; k <= n; ++k) fact *= k;
        EXPECT_EQ(commutant_dim(zc), static_cast<std::size_t>(fact));
        std::vector<GA> all;
        for (const auto& p : all_permutations(n)) all.push_back(GA::basis(p));
        EXPECT_EQ(commutant_dim(span_of(all, n)), partitions_of(n).size());
    }
}

TEST(Commutant, BetheFamiliesAreMaximal) {
    for (int n = 2; n <= 4; ++n) {
        std::vector<std::vector<GA>> families{
            phi_polys(SeededRandom(static_cast<std::uint64_t>(n)).distinct_rationals(n)).generators(),
            xxx_generators(xxx_params(first(zs({0, 3, 7, 12}), n), Q(1), Q(n))),
            homogeneous_generators(n),
            jm_gz(n).jm};
        for (const auto& f : families) {
            auto s = span_of(f, n);
            EXPECT_TRUE(is_commutative(s));
            EXPECT_EQ(s.dim(), sum_dims(n));
            EXPECT_EQ(commutant_dim(s), s.dim()) << n;
        }
    }
}

TEST(Commutant, CoincidentPairAndTriple) {
    auto pair = span_of(phi_polys(zs({0, 0, 2, 5})).generators(), 4);
    EXPECT_EQ(commutant_dim(pair), pair.dim());
    EXPECT_EQ(pair.dim(), 10u);
    auto triple = span_of(phi_polys(zs({0, 0, 0, 5})).generators(), 4);
    EXPECT_TRUE(is_commutative(triple));
    EXPECT_GT(commutant_dim(triple), triple.dim());
}

TEST(SimpleSpectrum, Certificates) {
    EXPECT_TRUE(simple_spectrum_cert(span_of(homogeneous_generators(3), 3), 1).certified);
    std::vector<GA> center;
    for (const auto& mu : partitions_of(3)) center.push_back(class_sum(mu));
    EXPECT_FALSE(simple_spectrum_cert(span_of(center, 3), 1).certified);
    EXPECT_TRUE(simple_spectrum_cert(span_of(phi_polys(zs({0, 1, 3, 7})).generators(), 4), 2).certified);
    // (z_i - z_{i+1}) / hbar > 1
    for (auto [z, h] : std::vector<std::pair<std::vector<Q>, Q>>{
             {zs({9, 6, 3, 0}), Q(1)}, {zs({7, 4, 2, 0}), Q(1)}, {zs({3, 2, 1, 0}), Q(1, 2)}, {zs({5, 2, 0}), Q(1)}}) {
        const int n = static_cast<int>(z.size());
        EXPECT_TRUE(simple_spectrum_cert(span_of(xxx_generators(xxx_params(z, h, Q(n))), n), 3).certified);
    }
}

TEST(JointEigen, TwoPointHomogeneousByCharacters) {
    // every block is one-dimensional, so eigenvalues are character sums
    BiPoly<GA> T = t_gen(xxx_params(zeros(2), Q(1)));
    auto recs = joint_eigen(homogeneous_generators(2), 2, 5);
    ASSERT_EQ(recs.size(), 2u);
    for (const auto& r : recs) {
        const bool trivial = r.lambda == Partition{2};
        BiPoly<cd> t = record_eigenvalue_poly(T, r, 2);
        B expect;
        for (int i = 0; i <= T.u_degree(); ++i)
            for (int j = 0; j <= T.v_degree(); ++j) {
                Q c(0);
                const GA g = T.coeff(i, j);
                for (const auto& [p, x] : g.terms()) c += trivial || p.sign() > 0 ? x : -x;
                if (!c.is_zero()) expect += B::monomial(c, i, j);
            }
        EXPECT_LT(max_abs(t - to_complex(expect)), 1e-9);
        // u^2 (v-1)^2 - (2u + 1)(v-1) on the trivial block, u^2 (v-1)^2 - (2u - 1)(v-1) + 2 on the sign block
        const B w = B::from_v(poly({-1, 1}));
        const B closed = B::monomial(Q(1), 2, 0) * w * w - (B::monomial(Q(2), 1, 0) + B(Q(trivial ? 1 : -1))) * w +
                         B(Q(trivial ? 0 : 2));
        EXPECT_EQ(expect, closed);
    }
}

TEST(JointEigen, CountsAndSumRule) {
    for (int n = 2; n <= 4; ++n) {
        auto z = zs({0, 2, 5, 11});
        z.resize(static_cast<std::size_t>(n));
        auto recs = joint_eigen(phi_polys(z).generators(), n, 9);
        EXPECT_EQ(recs.size(), sum_dims(n));
        auto H = kz_elements(z);
        for (const auto& r : recs) {
            cd s = 0;
            for (const auto& h : H) s += record_eigenvalue(h, r, n);
            EXPECT_LT(std::abs(s), 1e-9);
        }
    }
    EXPECT_EQ(joint_eigen(homogeneous_generators(3), 3, 2).size(), 4u);
}

TEST(JointEigen, KZEigenvaluesSatisfyRelationsH) {
    for (int n = 1; n <= 3; ++n) {
        auto z = zs({0, 2, 5});
        z.resize(static_cast<std::size_t>(n));
        auto H = kz_elements(z);
        for (const auto& r : joint_eigen(H.size() > 1 ? H : std::vector<GA>{GA::identity(n)}, n, 4)) {
            std::vector<double> h;
            for (const auto& g : H) {
                cd mu = record_eigenvalue(g, r, n);
                EXPECT_LT(std::abs(mu.imag()), 1e-9);
                h.push_back(mu.real());
            }
            auto res = check_relations_H(r.lambda, z, h);
            EXPECT_LT(res.offdiag_max, 1e-8);
            EXPECT_LT(res.lambda_max, 1e-8);
            // the same values on a different block fail
            for (const auto& mu : partitions_of(n))
                if (mu != r.lambda && n >= 2) EXPECT_FALSE(check_relations_H(mu, z, h).ok(1e-8));
        }
    }
}

TEST(Reconstruction, RoundTripFromRationalSpaces) {
    SeededRandom rng(67);
    for (auto variant : {WronskiVariant::Discrete, WronskiVariant::Differential})
        for (int n = 1; n <= 4; ++n) {
            std::vector<P> fs;
            for (int i = 0; i < n; ++i) fs.push_back(random_monic(rng, 2 * n - 1 - i));
            B F = f_bivariate(fs, variant);
            PolySpace U = reconstruct_subspace(to_complex(F), n, variant, 2 * n - 1);
            EXPECT_LT(poly_space_distance(U, PolySpace::from_exact(fs)), 1e-6) << variant_name(variant) << " n=" << n;
        }
    EXPECT_THROW(reconstruct_subspace(to_complex(f_bivariate<Q>({P::x(), poly({0, 0, 0, 1})})), 2, WronskiVariant::Discrete, 0),
                 std::invalid_argument);
    // kernel too small for the requested degree window
    EXPECT_THROW(reconstruct_subspace(to_complex(f_bivariate<Q>({poly({0, 0, 0, 0, 0, 1}), P(Q(1))})), 2,
                                      WronskiVariant::Discrete, 3),
                 std::runtime_error);
}

TEST(Reconstruction, HomogeneousEigenvectorsGiveTheta) {
    for (int n = 2; n <= 4; ++n) {
        auto x = xxx_params(zeros(n), Q(1));
        BiPoly<GA> T = t_gen(x);
        auto recs = joint_eigen(homogeneous_generators(n), n, 11);
        EXPECT_EQ(recs.size(), sum_dims(n));
        for (const auto& r : recs) {
            BiPoly<cd> t = record_eigenvalue_poly(T, r, n);
            PolySpace U = reconstruct_subspace(t, n, WronskiVariant::Discrete, 2 * n - 1);
            // degrees lambda_i + n - i
            std::vector<int> want;
            for (int i = 1; i <= n; ++i) want.push_back(part(r.lambda, i) + n - i);
            EXPECT_EQ(U.degrees(), want) << partition_string(r.lambda);
            // Cas[p] proportional to (u+1)^n
            U = normalize_casorati(U, cd(1.0, 0.0));
            UPoly<cd> cas = casorati(U.basis, Q(1));
            EXPECT_LT(max_abs(cas - to_complex(u_plus_one(n))), 1e-6) << partition_string(r.lambda);
            // F_U recomputed from U equals (-1)^n times the eigenvalue of T
            BiPoly<cd> F = f_bivariate(U.basis);
            BiPoly<cd> signed_t = n % 2 ? -t : t;
            EXPECT_LT(max_abs(F - signed_t), 1e-6) << partition_string(r.lambda);
        }
    }
}

TEST(CyclicVector, TrivialAndSignModules) {
    for (int n = 1; n <= 4; ++n) {
        auto w = cyclic_vector(Partition{n}, zeros(n), CyclicVariant::Classic);
        EXPECT_EQ(w.degree, 0);
        ASSERT_EQ(w.components.size(), 1u);
        EXPECT_EQ(w.components[0], (MPoly{{std::vector<int>(static_cast<std::size_t>(n), 0), Q(1)}}));
    }
    auto a = cyclic_vector(Partition{1, 1}, zs({4, 1}), CyclicVariant::Classic);
    EXPECT_EQ(a.degree, 1);
    const auto& c = a.components[0];
    ASSERT_EQ(c.size(), 2u);
    EXPECT_EQ(c.at({1, 0}), -c.at({0, 1}));
    EXPECT_EQ(a.at_z[0], c.at({1, 0}) * Q(3));
    // hbar action: the sign invariant is y_1 - y_2 + hbar
    Q h(2, 3);
    auto b = cyclic_vector(Partition{1, 1}, zs({4, 1}), CyclicVariant::Hbar, h);
    const auto& d = b.components[0];
    const Q lead = d.at({1, 0});
    EXPECT_EQ(d.at({0, 1}), -lead);
    EXPECT_EQ(d.at({0, 0}), lead * h);
}

TEST(CyclicVector, HbarActionIsAnAction) {
    SeededRandom rng(73);
    Q h(3, 2);
    for (int n = 2; n <= 4; ++n) {
        MPoly q;
        for (const auto& e : monomials(n, 3, true)) mpoly_add(q, e, rng.rational(4, 2));
        auto act = [&](const MPoly& p, int i) { return poly_action(p, i, CyclicVariant::Hbar, h); };
        for (int i = 1; i < n; ++i) {
            EXPECT_EQ(act(act(q, i), i), q);
            if (i + 1 < n) EXPECT_EQ(act(act(act(q, i), i + 1), i), act(act(act(q, i + 1), i), i + 1));
            for (int j = i + 2; j < n; ++j) EXPECT_EQ(act(act(q, i), j), act(act(q, j), i));
        }
    }
}

TEST(CyclicVector, CyclicForBetheAlgebras) {
    for (int n = 2; n <= 4; ++n) {
        auto z = zs({0, 2, 5, 11});
        z.resize(static_cast<std::size_t>(n));
        auto s = span_of(phi_polys(z).generators(), n);
        auto v = cyclicity(s, n, z, CyclicVariant::Classic);
        EXPECT_TRUE(v.isomorphism) << n;
        auto zh = zs({0, 3, 7, 12});
        zh.resize(static_cast<std::size_t>(n));
        auto sh = span_of(xxx_generators(xxx_params(zh, Q(1), Q(n))), n);
        EXPECT_TRUE(cyclicity(sh, n, zh, CyclicVariant::Hbar, Q(1)).isomorphism) << n;
    }
    // the invariant degree is sum (i-1) lambda_i
    EXPECT_EQ(cyclic_vector(Partition{2, 1, 1}, zs({0, 1, 2, 3}), CyclicVariant::Hbar).degree, 3);
}

TEST(Limits, SteepParametersApproachGelfandZetlin) {
    for (int n = 3; n <= 4; ++n) {
        auto gz = span_of(jm_gz(n).jm, n);
        std::vector<double> dg, dh;
        for (long s : {100L, 10000L, 1000000L}) {
            std::vector<Q> z;
            Q p(1);
            for (int a = 0; a < n; ++a) {
                z.push_back(a == 0 ? Q(1) : p);
                p *= Q(s);
            }
            dg.push_back(span_distance(span_of(phi_polys(z).generators(), n), gz));
            dh.push_back(span_distance(span_of(xxx_generators(xxx_params(z, Q(1), Q(n))), n), gz));
        }
        EXPECT_GT(dg[0], dg[1]);
        EXPECT_GT(dg[1], dg[2]);
        EXPECT_GT(dh[0], dh[1]);
        EXPECT_GT(dh[1], dh[2]);
        EXPECT_LT(dg[2], 1e-3);
        EXPECT_LT(dh[2], 1e-3);
    }
}
