#include <gtest/gtest.h>

#include <Eigen/Dense>

#include "bethe/random.hpp"
#include "bethe/spans.hpp"
#include "bethe/xxx.hpp"

using namespace bethe;

namespace {

using Q = Rational;
using P = UPoly<Rational>;

std::vector<Rational> zs(std::initializer_list<long> v) {
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

UPoly<GA> scalar_poly(const P& p, int n) { return scalar_upoly(p, n); }

BiPoly<GA> bmono(const GA& c, int i, int j) { return BiPoly<GA>::monomial(c, i, j); }

/// prod_{i=1}^{r} (p - m + i) as a polynomial in p
P falling(int m, int r) {
    P out(Q(1));
    for (int i = 1; i <= r; ++i) out *= P::linear(Q(m - i));
    return out;
}

/// f(u) -> f(-u - h)
UPoly<GA> reflect(const UPoly<GA>& f, const Q& h) { return f.shift(-h).dilate(Q(-1)); }

std::vector<Q> negated(const std::vector<Q>& z) {
    std::vector<Q> out;
    for (const auto& x : z) out.push_back(-x);
    return out;
}

std::vector<Q> reversed(std::vector<Q> z) {
    std::reverse(z.begin(), z.end());
    return z;
}

/// Scalar by which an element acts on a one-dimensional module.
Q scalar_on(const GA& g, const Partition& lambda) {
    const int n = partition_size(lambda);
    return representer(n).represent_block(g.is_zero() ? GA(n) : g, lambda)(0, 0);
}

}  // namespace

TEST(TPoly, Examples) {
    SeededRandom rng(201);
    auto z = rng.distinct_rationals(3);
    auto x = xxx_params(z, Q(1, 3), Q(5));
    EXPECT_EQ(t_m_poly(x, 0), scalar_poly(from_roots(z), 3));

    Q z1(7, 2), h(2, 5), p(3);
    auto x1 = xxx_params({z1}, h, p);
    EXPECT_EQ(t_m_poly(x1, 1), scalar_poly(scale(P::linear(z1), p) + P(h), 1));
    PPoly sym = t_m_symbolic(xxx_params({z1}, h), 1);
    // p (u - z1) + h
    EXPECT_EQ(sym.degree(), 1);
    EXPECT_EQ(sym[1], scalar_poly(P::linear(z1), 1));
    EXPECT_EQ(sym[0], scalar_poly(P(h), 1));

    auto z2 = rng.distinct_rationals(2);
    Q h2(3, 7);
    auto x2 = xxx_params(z2, h2, Q(2));
    EXPECT_EQ(t_m_poly(x2, 2), scalar_poly(P::linear(z2[0] - h2) * P::linear(z2[1] - h2), 2));
    EXPECT_THROW(t_m_poly(xxx_params(z2, h2), 1), std::invalid_argument);
    EXPECT_THROW(xxx_params(z2, Q(0)), std::invalid_argument);
}

TEST(SPoly, Examples) {
    auto x = xxx_params(zs({0, 0}), Q(1));
    GA one = GA::identity(2), s = sigma(2, 1, 2);
    UPoly<GA> s1 = s_k_poly(x, 1), s2 = s_k_poly(x, 2);
    EXPECT_EQ(s1, UPoly<GA>(std::vector<GA>{s, scale(one, Q(2))}));
    EXPECT_EQ(s2, UPoly<GA>(one - s));
    EXPECT_EQ(s_k_poly(x, 0) + s1 + s2, scalar_poly(P::linear(Q(-1)) * P::linear(Q(-1)), 2));
    EXPECT_TRUE(s_k_poly(x, 3).is_zero());
    EXPECT_TRUE(s_k_poly(xxx_params(zs({1, 2, 4}), Q(1)), 4).is_zero());
}

TEST(SPoly, FirstIsSumOfIncreasingCycles) {
    // S_1 = sum_j sum_{i_1 < ... < i_j} hbar^j (i_1 ... i_j) prod_{a not in i} (u - z_a)
    SeededRandom rng(202);
    for (int n = 1; n <= 5; ++n) {
        auto z = rng.distinct_rationals(n);
        Q h = rng.nonzero_rational();
        UPoly<GA> expected;
        for (int j = 1; j <= n; ++j)
            for (const auto& r : subsets(n, j)) {
                GA c = scale(GA::basis(Permutation::cycle(n, r)), h.pow(j));
                std::vector<Q> roots;
                for (int a = 1; a <= n; ++a)
                    if (std::find(r.begin(), r.end(), a) == r.end()) roots.push_back(z[static_cast<std::size_t>(a - 1)]);
                expected += mul_scalar_poly(UPoly<GA>(c), from_roots(roots));
            }
        EXPECT_EQ(s_k_poly(xxx_params(z, h), 1), expected) << n;
    }
}

TEST(SPoly, SumIsShiftedProduct) {
    SeededRandom rng(203);
    for (int n = 1; n <= 5; ++n) {
        auto z = rng.distinct_rationals(n);
        Q h = rng.nonzero_rational();
        auto x = xxx_params(z, h);
        UPoly<GA> sum;
        for (int k = 0; k <= n; ++k) sum += s_k_poly(x, k);
        std::vector<Q> roots;
        for (const auto& a : z) roots.push_back(a - h);
        EXPECT_EQ(sum, scalar_poly(from_roots(roots), n)) << n;
    }
}

TEST(SPoly, LeadingCoefficientIsScaledPhi) {
    // S_{m,0} = hbar^m Phi_{m,0}
    SeededRandom rng(204);
    for (int n = 1; n <= 5; ++n) {
        auto z = rng.distinct_rationals(n);
        Q h = rng.nonzero_rational();
        auto x = xxx_params(z, h);
        auto phi = phi_polys(z);
        for (int m = 1; m <= n; ++m) {
            UPoly<GA> s = s_k_poly(x, m);
            EXPECT_EQ(s.degree(), n - m);
            EXPECT_EQ(s[n - m], scale(phi.coeff(m, 0), h.pow(m))) << n << " " << m;
        }
    }
}

TEST(Transform, TFromSSymbolicInP) {
    SeededRandom rng(205);
    for (int n = 1; n <= 4; ++n) {
        auto x = xxx_params(rng.distinct_rationals(n), rng.nonzero_rational());
        std::vector<UPoly<GA>> S;
        for (int k = 0; k <= 4; ++k) S.push_back(s_k_poly(x, k));
        for (int m = 0; m <= 4; ++m) {
            PPoly rhs;
            for (int k = 0; k <= m; ++k) {
                if (S[static_cast<std::size_t>(k)].is_zero()) continue;
                P c = scale(falling(m, m - k), factorial(m - k).inverse());
                rhs += mul_scalar_poly(PPoly(S[static_cast<std::size_t>(k)]), c);
            }
            EXPECT_EQ(t_m_symbolic(x, m), rhs) << n << " " << m;
        }
    }
}

TEST(Transform, SFromTSymbolicInP) {
    SeededRandom rng(206);
    for (int n = 1; n <= 4; ++n) {
        auto x = xxx_params(rng.distinct_rationals(n), rng.nonzero_rational());
        std::vector<PPoly> T;
        for (int k = 0; k <= 4; ++k) T.push_back(t_m_symbolic(x, k));
        for (int m = 0; m <= 4; ++m) {
            PPoly rhs;
            for (int k = 0; k <= m; ++k) {
                P c = scale(falling(m, m - k), factorial(m - k).inverse() * Q((m - k) % 2 ? -1 : 1));
                rhs += mul_scalar_poly(T[static_cast<std::size_t>(k)], c);
            }
            UPoly<GA> s = s_k_poly(x, m);
            EXPECT_EQ(rhs, s.is_zero() ? PPoly() : PPoly(s)) << n << " " << m;
        }
    }
}

TEST(Transform, SIsTAtPEqualsMMinusOne) {
    SeededRandom rng(207);
    for (int n = 1; n <= 3; ++n) {
        auto x = xxx_params(rng.distinct_rationals(n), rng.nonzero_rational());
        for (int m = 1; m <= n + 1; ++m) EXPECT_EQ(t_m_poly(with_p(x, Q(m - 1)), m), s_k_poly(x, m)) << n << " " << m;
    }
}

TEST(Transform, IntegerPSaturates) {
    SeededRandom rng(208);
    for (int n = 1; n <= 3; ++n) {
        auto z = rng.distinct_rationals(n);
        Q h = rng.nonzero_rational();
        std::vector<Q> roots;
        for (const auto& a : z) roots.push_back(a - h);
        for (int m = n; m <= std::min(n + 1, 4); ++m) {
            auto x = xxx_params(z, h, Q(m));
            EXPECT_EQ(t_m_poly(x, m), scalar_poly(from_roots(roots), n)) << n << " " << m;
            for (int k = m + 1; k <= std::min(m + 2, 5); ++k) EXPECT_TRUE(t_m_poly(x, k).is_zero()) << n << " " << m << " " << k;
        }
    }
}

TEST(Transform, ShiftedChainCollapses) {
    // theta(A)(u-(m-1)h + h s_{a,n+1})...(u + h s_{a,n+m}) = theta(A)(u + h sum_i s_{a,n+i}) prod_{i<m}(u - i h)
    SeededRandom rng(209);
    for (int n = 1; n <= 2; ++n)
        for (int m = 1; m <= 3; ++m) {
            const int N = n + m;
            Q h = rng.nonzero_rational();
            UGA A = constant_poly(theta_embed(antisymmetrizer(m), n, m));
            for (int a = 1; a <= n; ++a) {
                UGA lhs = A, printed = A;
                for (int i = 1; i <= m; ++i) {
                    lhs = lhs * xxx_factor(N, Q(m - i) * h, h, a, {n + i});
                    printed = printed * xxx_factor(N, Q(m - i) * h, h, a, {n + 1});
                }
                UGA rhs = A * xxx_factor(N, Q(0), h, a, range_positions(n + 1, n + m));
                P tail(Q(1));
                for (int i = 1; i < m; ++i) tail *= P::linear(Q(i) * h);
                rhs = rhs * UGA(Permutation(N), tail);
                EXPECT_EQ(lhs, rhs) << n << " " << m << " " << a;
                // repeating the first auxiliary symbol in every factor breaks the identity
                if (m >= 2) {
                    EXPECT_NE(printed, rhs) << n << " " << m << " " << a;
                }
            }
        }
}

TEST(Symmetry, CyclicShiftOfParameters) {
    SeededRandom rng(210);
    for (int n = 2; n <= 4; ++n) {
        auto z = rng.distinct_rationals(n);
        std::vector<Q> zc(z.begin() + 1, z.end());
        zc.push_back(z.front());
        Q h = rng.nonzero_rational(), p = rng.rational();
        Permutation g = shift_cycle(n);
        for (int m = 1; m <= std::min(n, 3); ++m) {
            UPoly<GA> lhs = t_m_poly(xxx_params(zc, h, p), m).map([&](const GA& c) { return c.conjugate(g); });
            EXPECT_EQ(lhs, t_m_poly(xxx_params(z, h, p), m)) << n << " " << m;
        }
    }
}

TEST(Symmetry, AdjacentSwapIntertwiner) {
    SeededRandom rng(211);
    for (int n = 2; n <= 4; ++n) {
        auto z = rng.distinct_rationals(n);
        Q h = rng.nonzero_rational(), p = rng.rational();
        for (int a = 1; a < n; ++a) {
            auto zs_ = z;
            std::swap(zs_[static_cast<std::size_t>(a - 1)], zs_[static_cast<std::size_t>(a)]);
            GA w = scale(sigma(n, a, a + 1), z[static_cast<std::size_t>(a - 1)] - z[static_cast<std::size_t>(a)]) + GA::scalar(n, h);
            for (int m = 1; m <= std::min(n, 3); ++m) {
                UPoly<GA> t = t_m_poly(xxx_params(z, h, p), m), ts = t_m_poly(xxx_params(zs_, h, p), m);
                EXPECT_EQ(times_left(w, t), times_right(ts, w)) << n << " " << a << " " << m;
            }
        }
    }
}

TEST(Symmetry, DaggerAndReversal) {
    SeededRandom rng(212);
    for (int n = 1; n <= 3; ++n) {
        auto z = rng.distinct_rationals(n);
        Q h = rng.nonzero_rational(), N(n);
        Q sign(n % 2 ? -1 : 1);
        Permutation rho = reversal(n);
        for (int m = 0; m <= n; ++m) {
            UPoly<GA> rhs = scale(reflect(t_m_poly(xxx_params(negated(z), h, N), n - m), h), sign);
            UPoly<GA> dag = t_m_poly(xxx_params(z, h, N), m).map([](const GA& c) { return c.dagger(); });
            EXPECT_EQ(dag, rhs) << n << " " << m;
            UPoly<GA> rev = t_m_poly(xxx_params(reversed(z), h, N), m).map([&](const GA& c) { return c.conjugate(rho); });
            EXPECT_EQ(rev, rhs) << n << " " << m;
        }
    }
}

TEST(Symmetry, ScalingAndShiftCovariance) {
    SeededRandom rng(213);
    for (int n = 2; n <= 4; ++n) {
        auto z = rng.distinct_rationals(n);
        Q h = rng.nonzero_rational(), p = rng.rational(), s = rng.nonzero_rational();
        std::vector<Q> sz, tz;
        for (const auto& a : z) {
            sz.push_back(s * a);
            tz.push_back(a + s);
        }
        for (int m = 1; m <= std::min(n, 3); ++m) {
            UPoly<GA> t = t_m_poly(xxx_params(z, h, p), m);
            UPoly<GA> ts = t_m_poly(xxx_params(sz, s * h, p), m);
            for (int i = 0; i <= n; ++i) EXPECT_EQ(t_coeff(ts, n, i), scale(t_coeff(t, n, i), s.pow(i))) << n << " " << m << " " << i;
            EXPECT_EQ(t_m_poly(xxx_params(tz, h, p), m).shift(s), t) << n << " " << m;
        }
    }
}

TEST(Commutativity, AllCoefficientsCommute) {
    SeededRandom rng(214);
    for (int n = 2; n <= 5; ++n) {
        auto x = xxx_params(rng.distinct_rationals(n), rng.nonzero_rational(), rng.rational());
        EXPECT_TRUE(pairwise_commute(xxx_generators(x))) << n;
    }
    EXPECT_TRUE(pairwise_commute(xxx_generators(xxx_params(zs({2, 2, 2, 2}), Q(1), Q(3)))));
}

TEST(Commutativity, ContainsTheCenter) {
    SeededRandom rng(215);
    for (int n = 2; n <= 4; ++n) {
        auto x = xxx_params(rng.distinct_rationals(n), rng.nonzero_rational(), Q(n));
        auto span = algebra_span(represent_all(xxx_generators(x), n));
        for (const auto& mu : partitions_of(n)) EXPECT_TRUE(span.contains(representer(n).represent(class_sum(mu)))) << n;
    }
}

TEST(Commutativity, SubalgebraIndependentOfP) {
    SeededRandom rng(216);
    for (int n = 2; n <= 4; ++n) {
        auto x = xxx_params(rng.distinct_rationals(n), rng.nonzero_rational());
        std::vector<SpanBasis> spans;
        for (long p : {1, 2, 17}) spans.push_back(algebra_span(represent_all(xxx_generators(with_p(x, Q(p))), n)));
        for (std::size_t k = 1; k < spans.size(); ++k) {
            EXPECT_EQ(spans[k].dim(), spans[0].dim()) << n;
            for (const auto& e : spans[k].elements) EXPECT_TRUE(spans[0].contains(e)) << n;
        }
    }
}

TEST(Limit, SmallHbarApproachesGaudin) {
    for (const auto& z : {zs({0, 2, 5}), zs({0, 2, 5, 11})}) {
        const int n = static_cast<int>(z.size());
        auto gaudin = algebra_span(represent_all(phi_polys(z).generators(), n));
        std::vector<double> d;
        for (Q h : {Q(1), Q(1, 10), Q(1, 100)}) {
            auto span = algebra_span(represent_all(xxx_generators(xxx_params(z, h, Q(n))), n));
            EXPECT_EQ(span.dim(), gaudin.dim());
            d.push_back(span_distance(span, gaudin));
        }
        EXPECT_GT(d[0], d[1]);
        EXPECT_GT(d[1], d[2]);
        EXPECT_LT(d[2], 0.05);
    }
}

TEST(QKZ, Examples) {
    GA one = GA::identity(2), s = sigma(2, 1, 2);
    auto f = qkz_elements(xxx_params(zs({0, 1}), Q(1)));
    EXPECT_EQ(f.K[0], s - one);
    EXPECT_TRUE((f.K[0] * f.K[1]).is_zero());
    EXPECT_FALSE(f.invertible);
    auto g = qkz_elements(xxx_params(zs({0, 2}), Q(1)));
    EXPECT_EQ(g.K[0] * g.K[1], GA::scalar(2, Q(-3)));
    EXPECT_TRUE(g.invertible);
    auto h = qkz_elements(xxx_params(zs({4}), Q(3)));
    EXPECT_EQ(h.K[0], GA::identity(1));
}

TEST(QKZ, CommuteWithProductFormula) {
    SeededRandom rng(217);
    for (int n = 1; n <= 4; ++n) {
        auto z = rng.distinct_rationals(n);
        Q h = rng.nonzero_rational();
        auto f = qkz_elements(xxx_params(z, h));
        EXPECT_TRUE(pairwise_commute(f.K));
        GA prod = GA::identity(n);
        for (const auto& k : f.K) prod = prod * k;
        Q c(1);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (a != b) c *= z[static_cast<std::size_t>(a)] - z[static_cast<std::size_t>(b)] + h;
        EXPECT_EQ(prod, GA::scalar(n, c)) << n;
        if (n == 1) continue;
        // the qKZ elements lie in the subalgebra
        auto span = algebra_span(represent_all(xxx_generators(xxx_params(z, h, Q(n))), n));
        for (const auto& k : f.K) EXPECT_TRUE(span.contains(representer(n).represent(k)));
    }
}

TEST(TGen, Examples) {
    GA one = GA::identity(2), s = sigma(2, 1, 2);
    // u^2 (v-1)^2 - (2u + s)(v-1) + (1 - s)
    BiPoly<GA> w = bmono(one, 0, 1) - bmono(one, 0, 0);
    BiPoly<GA> expected = bmono(one, 2, 0) * w * w - (bmono(scale(one, Q(2)), 1, 0) + bmono(s, 0, 0)) * w + bmono(one - s, 0, 0);
    EXPECT_EQ(t_gen(xxx_params(zs({0, 0}), Q(1))), expected);

    Q z1(3), h(1, 2);
    GA e = GA::identity(1);
    BiPoly<GA> t1 = bmono(e, 1, 1) + bmono(scale(e, -z1), 0, 1) - bmono(e, 1, 0) - bmono(scale(e, h - z1), 0, 0);
    EXPECT_EQ(t_gen(xxx_params({z1}, h)), t1);

    SeededRandom rng(218);
    auto z = rng.distinct_rationals(3);
    auto T = t_gen(xxx_params(z, Q(2, 3)));
    EXPECT_EQ(T.coeff_v(3), scalar_poly(from_roots(z), 3));
}

TEST(DetHbar, Examples) {
    Q z1(2), h(1, 3), q0(5, 4);
    auto x = xxx_params({z1}, h);
    // (u - z1)(v - c) - h c with c = q(z1)
    BiPoly<Q> expected;
    expected.set(1, 1, Q(1));
    expected.set(0, 1, -z1);
    expected.set(1, 0, -q0 / h);
    expected.set(0, 0, z1 * q0 / h - q0);
    EXPECT_EQ(det_P_hbar(x, P(q0), Q(1)), expected);

    SeededRandom rng(219);
    auto z = rng.distinct_rationals(3);
    BiPoly<Q> zero_q = det_P_hbar(xxx_params(z, Q(1)), P(), Q(1));
    BiPoly<Q> vprod;
    P f = from_roots(z);
    for (int i = 0; i <= 3; ++i) vprod.set(i, 3, f[i]);
    EXPECT_EQ(zero_q, vprod);
}

TEST(DetHbar, GeneratesTheSubalgebra) {
    {
        auto x = xxx_params(zs({0, 2, 5}), Q(1));
        EXPECT_EQ(det_P_hbar(x, s_k_poly(x, 1)), t_gen(x));
    }
    SeededRandom rng(220);
    for (int n = 1; n <= 4; ++n) {
        auto x = xxx_params(rng.distinct_rationals(n), rng.nonzero_rational());
        if (!x.shift_free) continue;
        EXPECT_EQ(det_P_hbar(x, s_k_poly(x, 1)), t_gen(x)) << n;
    }
}

TEST(DetHbar, RejectsBadInput) {
    EXPECT_THROW(det_P_hbar(xxx_params(zs({1, 1}), Q(1)), P(Q(1)), Q(1)), std::invalid_argument);
    EXPECT_THROW(det_P_hbar(xxx_params(zs({1, 0}), Q(1)), P(Q(1)), Q(1)), std::invalid_argument);
    UPoly<GA> noncomm(std::vector<GA>{sigma(3, 1, 2), sigma(3, 2, 3)});
    EXPECT_THROW(det_P_hbar(xxx_params(zs({0, 3, 7}), Q(1)), noncomm), std::invalid_argument);
}

TEST(RelationsHh, OnePoint) {
    auto x = xxx_params({Q(4)}, Q(1));
    EXPECT_TRUE(check_relations_Hh<Q>({1}, x, {Q(1)}).ok(0));
    EXPECT_FALSE(check_relations_Hh<Q>({1}, x, {Q(2)}).ok(0));
    // the partition relation is normalised for hbar = 1
    auto y = xxx_params({Q(4)}, Q(1, 2));
    auto r = check_relations_Hh<Q>({1}, y, {Q(1, 2)});
    EXPECT_EQ(r.offdiag_max, 0);
    EXPECT_GT(r.lambda_max, 0);
    EXPECT_THROW(check_relations_Hh<Q>({1}, x, {}), std::invalid_argument);
    EXPECT_THROW(check_relations_Hh<Q>({1, 1}, xxx_params(zs({0, 1}), Q(1)), {Q(1), Q(0)}), std::invalid_argument);
}

TEST(RelationsHh, OneDimensionalModulesFromS1) {
    // q(u) = eigenvalue of S_1(u); the u^{n-1} coefficient is hbar n
    SeededRandom rng(221);
    for (int n = 1; n <= 4; ++n) {
        auto x = xxx_params(rng.distinct_rationals(n, 40, 1), Q(1));
        if (!x.shift_free) continue;
        UPoly<GA> s1 = s_k_poly(x, 1);
        for (const Partition& lam : {Partition{n}, Partition(static_cast<std::size_t>(n), 1)}) {
            std::vector<Q> q;
            for (int i = 1; i <= n; ++i) q.push_back(scalar_on(s1[n - i], lam));
            EXPECT_EQ(q[0], Q(n));
            EXPECT_TRUE(check_relations_Hh(lam, x, q).ok(0)) << n;
            auto bad = q;
            bad.back() += Q(1, 7);
            EXPECT_FALSE(check_relations_Hh(lam, x, bad).ok(0)) << n;
        }
    }
}

TEST(RelationsHh, TwoDimensionalModuleNumeric) {
    auto x = xxx_params(zs({9, 6, 3}), Q(1));
    UPoly<GA> s1 = s_k_poly(x, 1);
    const Partition lam{2, 1};
    std::vector<Eigen::MatrixXd> mats;
    for (int i = 1; i <= 3; ++i) mats.push_back(to_eigen(representer(3).represent_block(s1[3 - i].is_zero() ? GA(3) : s1[3 - i], lam)));
    Eigen::MatrixXd gen = mats[1] + 0.37 * mats[2];
    Eigen::EigenSolver<Eigen::MatrixXd> es(gen);
    ASSERT_EQ(es.info(), Eigen::Success);
    for (int k = 0; k < 2; ++k) {
        EXPECT_LT(std::abs(es.eigenvalues()(k).imag()), 1e-12);
        Eigen::VectorXd v = es.eigenvectors().col(k).real();
        Eigen::Index idx;
        v.cwiseAbs().maxCoeff(&idx);
        std::vector<double> q;
        for (const auto& M : mats) q.push_back((M * v)(idx) / v(idx));
        auto r = check_relations_Hh(lam, x, q);
        EXPECT_LT(r.offdiag_max, 1e-8);
        EXPECT_LT(r.lambda_max, 1e-8);
        q[2] += 1e-3;
        auto bad = check_relations_Hh(lam, x, q);
        EXPECT_GT(bad.offdiag_max + bad.lambda_max, 1e-6);
    }
}
