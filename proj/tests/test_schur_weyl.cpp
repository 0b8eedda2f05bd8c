#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "bethe/homogeneous.hpp"
#include "bethe/random.hpp"
#include "bethe/schur_weyl.hpp"
#include "bethe/xxx.hpp"

using namespace bethe;

namespace {

using Q = Rational;
using P = UPoly<Rational>;

std::vector<Q> zs(std::initializer_list<long> v) {
    std::vector<Q> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

Permutation random_perm(SeededRandom& rng, int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    std::shuffle(img.begin(), img.end(), rng.engine());
    return Permutation::from_images(img);
}

GA random_element(SeededRandom& rng, int n, int terms) {
    GA a(n);
    for (int k = 0; k < terms; ++k) a.add(random_perm(rng, n), rng.rational());
    return a;
}

TensorOperator random_op(SeededRandom& rng, int N, int n) {
    TensorOperator t(N, n);
    for (int i = 0; i < t.dim(); ++i)
        for (int j = 0; j < t.dim(); ++j) t.add(i, j, rng.rational(3, 2));
    return t;
}

int rank_of_rows(const std::vector<TensorOperator>& ops) {
    const int d = ops.front().dim();
    QMatrix m(static_cast<int>(ops.size()), d * d);
    for (int r = 0; r < m.rows(); ++r)
        for (int i = 0; i < d; ++i)
            for (const auto& [j, c] : ops[static_cast<std::size_t>(r)].row(i)) m(r, i * d + j) = c;
    return static_cast<int>(rref(m).size());
}

int rank_of(const TensorOperator& t) {
    QMatrix m = t.dense();
    return static_cast<int>(rref(m).size());
}

long choose(int a, int b) {
    if (b < 0 || b > a) return 0;
    long r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

std::vector<Q> divided(const std::vector<Q>& z, const Q& h) {
    std::vector<Q> out;
    for (const auto& x : z) out.push_back(x / h);
    return out;
}

}  // namespace

TEST(RationalFunction, ArithmeticAndNormalization) {
    RF a = RF::pole(Q(1));                        // 1/(u-1)
    RF b = RF::pole(Q(-1));                       // 1/(u+1)
    RF s = a + b;                                 // 2u/(u^2-1)
    EXPECT_EQ(s.num(), P(std::vector<Q>{Q(0), Q(2)}));
    EXPECT_EQ(s.den(), from_roots(zs({1, -1})));
    RF c = RF(P::linear(Q(1)), P(Q(3)));          // (u-1)/3
    EXPECT_TRUE((a * c).is_polynomial());
    EXPECT_EQ(a * c, RF(Q(1, 3)));
    EXPECT_EQ((a - a), RF());
    EXPECT_EQ(s.at(Q(2)), Q(4, 3));
    EXPECT_THROW(a.at(Q(1)), std::domain_error);
    EXPECT_EQ(a.derivative(), -(a * a));
    EXPECT_EQ(s / s, RF(1));
}

TEST(DiffOperator, DerivationRule) {
    // d o f = f o d + f'
    RF f = RF::pole(Q(2)) + RF::poly(P::linear(Q(5)));
    std::vector<RationalOperatorFunction> one{RationalOperatorFunction(1, 1), RationalOperatorFunction::identity(1)};
    DiffOperator d(1, one);
    RationalOperatorFunction fm(1, 1);
    fm(0, 0) = f;
    DiffOperator mf(1, {fm});
    RationalOperatorFunction fp(1, 1);
    fp(0, 0) = f.derivative();
    DiffOperator lhs = d * mf, rhs = mf * d + DiffOperator(1, {fp});
    for (int k = 0; k <= 1; ++k) EXPECT_EQ(lhs.coeff(k), rhs.coeff(k));
    // d^2 o f = f d^2 + 2 f' d + f''
    DiffOperator dd = d * d * mf;
    EXPECT_EQ(dd.coeff(2)(0, 0), f);
    EXPECT_EQ(dd.coeff(1)(0, 0), scale(f.derivative(), Q(2)));
    EXPECT_EQ(dd.coeff(0)(0, 0), f.derivative().derivative());
}

TEST(Varpi, IdentityAndSwap) {
    for (int N = 1; N <= 3; ++N)
        for (int n = 1; n <= 3; ++n) EXPECT_EQ(varpi(GA::identity(n), N, n), TensorOperator::identity(N, n));
    TensorOperator sw = varpi(sigma(2, 1, 2), 2, 2);
    QMatrix expect(4, 4);
    expect(0, 0) = Q(1);
    expect(1, 2) = Q(1);
    expect(2, 1) = Q(1);
    expect(3, 3) = Q(1);
    EXPECT_EQ(sw.dense(), expect);
}

TEST(Varpi, TranspositionIsLocalFlip) {
    // sigma_{a,b} -> sum_{i,j} E^{(a)}_{ij} E^{(b)}_{ji}
    for (int N = 2; N <= 3; ++N)
        for (int a = 1; a <= 3; ++a)
            for (int b = a + 1; b <= 3; ++b) {
                TensorOperator flip(N, 3);
                for (int i = 1; i <= N; ++i)
                    for (int j = 1; j <= N; ++j) flip += local_op(unit_op(N, i, j), 3, a) * local_op(unit_op(N, j, i), 3, b);
                EXPECT_EQ(varpi(sigma(3, a, b), N, 3), flip);
            }
}

TEST(Varpi, LinearAndMultiplicative) {
    SeededRandom rng(71);
    for (int N = 1; N <= 3; ++N)
        for (int n = 1; n <= 4; ++n) {
            if (N == 3 && n == 4) continue;
            for (int trial = 0; trial < 3; ++trial) {
                GA a = random_element(rng, n, 3), b = random_element(rng, n, 3);
                Q c = rng.rational();
                EXPECT_EQ(varpi(a * b, N, n), varpi(a, N, n) * varpi(b, N, n));
                EXPECT_EQ(varpi(a + scale(b, c), N, n), varpi(a, N, n) + scale(varpi(b, N, n), c));
            }
        }
    EXPECT_THROW(varpi(sigma(3, 1, 2), 2, 2), std::invalid_argument);
}

TEST(Varpi, AntisymmetrizerVanishesExactlyBelowN) {
    for (auto [N, n] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 3}, {3, 3}, {1, 1}, {3, 2}, {2, 4}}) {
        TensorOperator a = varpi(antisymmetrizer(n), N, n);
        EXPECT_EQ(a.is_zero(), N < n) << N << " " << n;
        // the image is the projector onto the exterior power
        EXPECT_EQ(rank_of(a), choose(N, n)) << N << " " << n;
        EXPECT_EQ(a * a, a);
    }
}

TEST(Varpi, FaithfulWhenNAtLeastN) {
    for (auto [N, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}, {4, 3}, {2, 3}, {1, 3}, {3, 4}}) {
        std::vector<TensorOperator> imgs;
        for (const auto& s : all_permutations(n)) imgs.push_back(varpi(GA::basis(s), N, n));
        long fact = 1;
        for (int k = 2; k <= n; ++k) fact *= k;
        // N < n: only Young diagrams with at most N rows survive, sum of d_lambda^2
        long expect = fact;
        if (N == 2 && n == 3) expect = 1 + 4;
        if (N == 1) expect = 1;
        if (N == 3 && n == 4) expect = 24 - 1;
        EXPECT_EQ(rank_of_rows(imgs), expect) << N << " " << n;
    }
}

TEST(PartialTrace, IdentityAndSwap) {
    for (int N = 1; N <= 3; ++N)
        for (int n = 0; n <= 2; ++n)
            for (int m = 0; m <= 2; ++m)
                EXPECT_EQ(partial_trace(TensorOperator::identity(N, n + m), m),
                          scale(TensorOperator::identity(N, n), Q(int_pow(N, m))));
    TensorOperator t = partial_trace(varpi(sigma(2, 1, 2), 2, 2), 1);
    EXPECT_EQ(t, TensorOperator::identity(2, 1));
    EXPECT_EQ(varpi(trace_map(sigma(2, 1, 2), 1, 1, Q(2)), 2, 1), t);
    EXPECT_THROW(partial_trace(TensorOperator::identity(2, 1), 2), std::invalid_argument);
}

TEST(PartialTrace, TensorProductFactor) {
    SeededRandom rng(5);
    for (int N = 2; N <= 3; ++N)
        for (int n = 1; n <= 2; ++n)
            for (int m = 1; m <= 2; ++m) {
                TensorOperator x = random_op(rng, N, n), y = random_op(rng, N, m);
                Q tr(0);
                for (int i = 0; i < y.dim(); ++i) tr += y(i, i);
                EXPECT_EQ(partial_trace(kron(x, y), m), scale(x, tr));
            }
}

TEST(PartialTrace, CommutesWithTraceMap) {
    SeededRandom rng(23);
    for (int N = 2; N <= 3; ++N)
        for (int total = 2; total <= 5; ++total)
            for (int m = 1; m < total; ++m) {
                const int n = total - m;
                for (int trial = 0; trial < 4; ++trial) {
                    GA s = trial < 3 ? GA::basis(random_perm(rng, total)) : random_element(rng, total, 4);
                    EXPECT_EQ(partial_trace(varpi(s, N, total), m), varpi(trace_map(s, n, m, Q(N)), N, n))
                        << "N=" << N << " n=" << n << " m=" << m;
                }
            }
}

TEST(GaudinDiffop, OneDimensionalSpace) {
    // N = 1: D = P(u) (d - sum 1/(u - z_a)) = P d - P'
    auto z = zs({2, -3});
    GaudinDiffopTable t = gaudin_diffop_coeffs(1, z);
    TensorOperator id = TensorOperator::identity(1, 2);
    EXPECT_EQ(t.at(0, 0), id);
    EXPECT_EQ(t.at(0, 1), scale(id, Q(1)));
    EXPECT_EQ(t.at(0, 2), scale(id, Q(-6)));
    EXPECT_EQ(t.at(1, 0), scale(id, Q(2)));
    EXPECT_EQ(t.at(1, 1), scale(id, Q(1)));
    EXPECT_TRUE(t.at(2, 0).is_zero());
}

TEST(GaudinDiffop, LeadingRowIsProductOfLinearFactors) {
    auto z = zs({0, 3, -1});
    P p = from_roots(z);
    for (int N = 1; N <= 2; ++N) {
        GaudinDiffopTable t = gaudin_diffop_coeffs(N, z);
        for (int j = 0; j <= 3; ++j) EXPECT_EQ(t.at(0, j), scale(TensorOperator::identity(N, 3), p[3 - j]));
    }
}

TEST(GaudinDiffop, MatchesPhiCoefficients) {
    SeededRandom rng(3);
    for (auto [N, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}, {1, 2}, {2, 3}}) {
        auto z = rng.distinct_rationals(n, 6, 2);
        GaudinDiffopTable t = gaudin_diffop_coeffs(N, z);
        PhiTable phi = phi_polys(z);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n - i; ++j)
                EXPECT_EQ(varpi(phi.coeff(i, j), N, n), t.at(i, j)) << "N=" << N << " n=" << n << " i=" << i << " j=" << j;
    }
}

TEST(GaudinDiffop, RejectsCoincidentPoints) {
    EXPECT_THROW(gaudin_diffop_coeffs(2, zs({1, 1})), std::invalid_argument);
}

TEST(Yangian, SingleSiteFirstTransfer) {
    Q x(5, 2);
    RationalOperatorFunction t = yangian_transfer(2, 1, {x});
    RF expect = RF(2) + RF::pole(x);
    EXPECT_EQ(t(0, 0), expect);
    EXPECT_EQ(t(1, 1), expect);
    EXPECT_TRUE(t(0, 1).is_zero());
    EXPECT_TRUE(t(1, 0).is_zero());
    EXPECT_THROW(yangian_transfer(2, 3, {x}), std::invalid_argument);
    EXPECT_THROW(yangian_transfer(2, 0, {x}), std::invalid_argument);
}

TEST(Yangian, TopTransferIsScalarOnOneSite) {
    for (int N = 2; N <= 3; ++N) {
        Q x(-4, 3);
        RationalOperatorFunction t = yangian_transfer(N, N, {x});
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                if (i == j) EXPECT_EQ(t(i, i), t(0, 0));
                else EXPECT_TRUE(t(i, j).is_zero());
            }
        EXPECT_FALSE(t(0, 0).is_zero());
    }
}

TEST(Yangian, TransferMatricesCommute) {
    const std::vector<Q> us{Q(7, 3), Q(11, 2), Q(-5, 4)};
    for (auto [N, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
        std::vector<Q> x = SeededRandom(N * 10 + n).distinct_rationals(n, 9, 2);
        std::vector<RationalOperatorFunction> t;
        for (int m = 1; m <= N; ++m) t.push_back(yangian_transfer(N, m, x));
        for (std::size_t a = 0; a < t.size(); ++a)
            for (std::size_t b = 0; b < t.size(); ++b)
                for (const auto& u : us)
                    for (const auto& v : us) {
                        if (u == v && a == b) continue;
                        QMatrix A = evaluate(t[a], u), B = evaluate(t[b], v);
                        EXPECT_EQ(A * B, B * A) << "N=" << N << " n=" << n;
                    }
        // T_1 is not diagonal, so the commutators are not trivially zero
        QMatrix t1 = evaluate(t[0], us[0]);
        bool offdiag = false;
        for (int i = 0; i < t1.rows(); ++i)
            for (int j = 0; j < t1.cols(); ++j) offdiag = offdiag || (i != j && !t1(i, j).is_zero());
        EXPECT_TRUE(offdiag);
    }
}

TEST(Yangian, MatchesTraceFamily) {
    for (auto [N, z, h] : std::vector<std::tuple<int, std::vector<Q>, Q>>{
             {2, zs({0, 3}), Q(1)}, {2, zs({1, -2}), Q(1, 2)}, {2, zs({0, 2, 5}), Q(3)}, {3, zs({0, 4}), Q(2)}}) {
        const int n = static_cast<int>(z.size());
        P denom = from_roots(z).dilate(h);   // P(hbar u)
        XXXParams x = with_p(xxx_params(z, h), Q(N));
        for (int m = 1; m <= N; ++m) {
            UPoly<GA> t = t_m_poly(x, m).dilate(h);
            const int d = int_pow(N, n);
            std::vector<TensorOperator> imgs;
            for (int k = 0; k <= t.degree(); ++k) imgs.push_back(varpi(t[k].is_zero() ? GA(n) : t[k], N, n));
            RationalOperatorFunction lhs(d, d);
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c) {
                    std::vector<Q> num;
                    for (const auto& im : imgs) num.push_back(im(r, c));
                    lhs(r, c) = RF(P(num), denom);
                }
            EXPECT_EQ(lhs, yangian_transfer(N, m, divided(z, h))) << "N=" << N << " n=" << n << " m=" << m;
        }
    }
}

TEST(Heisenberg, FirstLocalChargeIsCyclicExchange) {
    for (int n = 3; n <= 4; ++n) {
        LocalChargeSeries s = local_charges(n);
        for (int N = 2; N <= 3; ++N) EXPECT_EQ(varpi(s.I(1), N, n), heisenberg_chain(N, n)) << "N=" << N << " n=" << n;
    }
}
