#pragma once

#include "../schur_weyl.hpp"
#include "common.hpp"

namespace bethe::checks {

inline Outcome sw_partial_trace(const Context& x) {
    if (x.n > 4) return skipped("needs n + m <= 5 with m >= 1");
    SeededRandom rng = x.rng(31);
    Exact e;
    std::size_t cases = 0;
    for (int N = 2; N <= 3; ++N)
        for (int m = 1; x.n + m <= 5; ++m) {
            const int total = x.n + m;
            for (int trial = 0; trial < 4; ++trial) {
                GA s = trial < 3 ? GA::basis(random_perm(rng, total)) : random_element(rng, total, 4);
                e.eq(partial_trace(varpi(s, N, total), m), varpi(trace_map(s, x.n, m, Rational(N)), N, x.n),
                     "N=" + std::to_string(N) + " m=" + std::to_string(m));
                ++cases;
            }
        }
    Outcome o = e.outcome();
    o.value = cases;
    return o;
}

inline Outcome sw_gaudin_operator(const Context& x) {
    if (!x.distinct()) return skipped("requires pairwise distinct z");
    if (x.n > 3) return skipped("operator sizes grow as N^n; run at n <= 3");
    PhiTable phi = phi_polys(x.z);
    Exact e;
    json Ns = json::array();
    for (int N = std::max(x.n, 2); N <= x.n + (x.n <= 2 ? 1 : 0); ++N) {
        Ns.push_back(N);
        GaudinDiffopTable t = gaudin_diffop_coeffs(N, x.z);
        for (int i = 0; i <= x.n; ++i)
            for (int j = 0; j <= x.n - i; ++j)
                e.eq(varpi(phi.coeff(i, j), N, x.n), t.at(i, j), "N=" + std::to_string(N) + " i=" + std::to_string(i) + " j=" + std::to_string(j));
    }
    Outcome o = e.outcome();
    o.params["N"] = Ns;
    return o;
}

inline Outcome sw_faithful(const Context& x) {
    if (x.n > 3) return skipped("rank computation in dimension N^{2n}; run at n <= 3");
    const int N = std::max(x.n, 1);
    std::vector<TensorOperator> imgs;
    for (const auto& s : all_permutations(x.n)) imgs.push_back(varpi(GA::basis(s), N, x.n));
    const int d = imgs.front().dim();
    QMatrix m(static_cast<int>(imgs.size()), d * d);
    for (int r = 0; r < m.rows(); ++r)
        for (int i = 0; i < d; ++i)
            for (const auto& [j, c] : imgs[static_cast<std::size_t>(r)].row(i)) m(r, i * d + j) = c;
    const int rk = rank(m);
    Exact e;
    e.note(Rational(static_cast<long>(imgs.size()) - rk).abs(), "rank");
    Outcome o = e.outcome();
    o.value = rk;
    o.params["N"] = N;
    return o;
}

inline std::vector<Rational> divided(const std::vector<Rational>& z, const Rational& h) {
    std::vector<Rational> out;
    for (const auto& a : z) out.push_back(a / h);
    return out;
}

inline Outcome sw_yangian(const Context& x) {
    if (x.n > 3) return skipped("run at n <= 3");
    Exact e;
    json Ns = json::array();
    for (int N = 2; N <= (x.n <= 2 ? 3 : 2); ++N) {
        Ns.push_back(N);
        UPoly<Rational> denom = from_roots(x.z).dilate(x.hbar);
        XXXParams par = with_p(xxx_params(x.z, x.hbar), Rational(N));
        const int d = int_pow(N, x.n);
        for (int m = 1; m <= N; ++m) {
            UPoly<GA> t = t_m_poly(par, m).dilate(x.hbar);
            std::vector<TensorOperator> imgs;
            for (int k = 0; k <= t.degree(); ++k) imgs.push_back(varpi(t[k].is_zero() ? GA(x.n) : t[k], N, x.n));
            RationalOperatorFunction lhs(d, d);
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c) {
                    std::vector<Rational> num;
                    for (const auto& im : imgs) num.push_back(im(r, c));
                    lhs(r, c) = RF(UPoly<Rational>(num), denom);
                }
            e.eq(lhs, yangian_transfer(N, m, divided(x.z, x.hbar)), "N=" + std::to_string(N) + " m=" + std::to_string(m));
        }
    }
    Outcome o = e.outcome();
    o.params["N"] = Ns;
    return o;
}

inline Outcome sw_transfer_commute(const Context& x) {
    if (x.n > 3) return skipped("run at n <= 3");
    const std::vector<Rational> us{Rational(7, 3), Rational(11, 2), Rational(-5, 4)};
    const int N = 2;
    std::vector<RationalOperatorFunction> t;
    for (int m = 1; m <= N; ++m) t.push_back(yangian_transfer(N, m, divided(x.z, x.hbar)));
    Exact e;
    for (std::size_t a = 0; a < t.size(); ++a)
        for (std::size_t b = 0; b < t.size(); ++b)
            for (const auto& u : us)
                for (const auto& v : us) {
                    QMatrix A = evaluate(t[a], u), B = evaluate(t[b], v);
                    e.eq(A * B, B * A, "m=" + std::to_string(a + 1) + "," + std::to_string(b + 1));
                }
    return e.outcome();
}

inline Outcome sw_heisenberg(const Context& x) {
    if (x.n < 3) return skipped("local charges need n >= 3");
    if (x.n > 5) return skipped("run at n <= 5");
    LocalChargeSeries s = local_charges(x.n, 1);
    Exact e;
    for (int N = 2; N <= 3 && int_pow(N, x.n) <= 81; ++N) e.eq(varpi(s.I(1), N, x.n), heisenberg_chain(N, x.n), "N=" + std::to_string(N));
    return e.outcome();
}

inline std::vector<CheckDef> schur_weyl_suite() {
    return {
        {"sw.faithful", "the tensor representation is faithful when N >= n", sw_faithful},
        {"sw.gaudin-operator", "tensor images of the Gaudin coefficients are the coefficients of the Gaudin differential operator", sw_gaudin_operator},
        {"sw.heisenberg", "first local charge acts as the cyclic Heisenberg exchange", sw_heisenberg},
        {"sw.partial-trace", "partial trace of the tensor image equals the image of the trace map at p = N", sw_partial_trace},
        {"sw.transfer-commute", "Yangian transfer matrices commute at sample points", sw_transfer_commute},
        {"sw.yangian-transfer", "evaluation image of the transfer matrix equals the XXX family over P(hbar u)", sw_yangian},
    };
}

}  // namespace bethe::checks
