#pragma once

#include "common.hpp"

namespace bethe::checks {

using QPoly = UPoly<Rational>;

/// prod_{i=1}^{r} (p - m + i) as a polynomial in p
inline QPoly falling(int m, int r) {
    QPoly out(Rational(1));
    for (int i = 1; i <= r; ++i) out *= QPoly::linear(Rational(m - i));
    return out;
}

inline Outcome need_shift_free() { return skipped("requires z_a - z_b != hbar"); }

inline Outcome t_from_s(const Context& x) {
    auto par = xxx_params(x.z, x.hbar);
    std::vector<UPoly<GA>> S;
    for (int k = 0; k <= 4; ++k) S.push_back(s_k_poly(par, k));
    Exact e;
    for (int m = 0; m <= 4; ++m) {
        PPoly rhs;
        for (int k = 0; k <= m; ++k) {
            if (S[static_cast<std::size_t>(k)].is_zero()) continue;
            rhs += mul_scalar_poly(PPoly(S[static_cast<std::size_t>(k)]), scale(falling(m, m - k), factorial(m - k).inverse()));
        }
        e.eq(t_m_symbolic(par, m), rhs, "m=" + std::to_string(m));
    }
    return e.outcome();
}

inline Outcome s_from_t(const Context& x) {
    auto par = xxx_params(x.z, x.hbar);
    std::vector<PPoly> T;
    for (int k = 0; k <= 4; ++k) T.push_back(t_m_symbolic(par, k));
    Exact e;
    for (int m = 0; m <= 4; ++m) {
        PPoly rhs;
        for (int k = 0; k <= m; ++k)
            rhs += mul_scalar_poly(T[static_cast<std::size_t>(k)], scale(falling(m, m - k), factorial(m - k).inverse() * Rational((m - k) % 2 ? -1 : 1)));
        UPoly<GA> s = s_k_poly(par, m);
        e.eq(rhs, s.is_zero() ? PPoly() : PPoly(s), "m=" + std::to_string(m));
    }
    return e.outcome();
}

inline std::vector<Rational> shifted_roots(const Context& x) {
    std::vector<Rational> r;
    for (const auto& a : x.z) r.push_back(a - x.hbar);
    return r;
}

inline Outcome s_sum(const Context& x) {
    auto par = xxx_params(x.z, x.hbar);
    UPoly<GA> sum;
    for (int k = 0; k <= x.n + 1; ++k) sum += s_k_poly(par, k);
    Exact e;
    e.eq(sum, scalar_upoly(from_roots(shifted_roots(x)), x.n));
    return e.outcome();
}

inline Outcome saturation(const Context& x) {
    if (x.n > 3 && !x.slow) return skipped("n > 3 needs --slow");
    const int n = x.n;
    Exact e;
    const UPoly<GA> prod = scalar_upoly(from_roots(shifted_roots(x)), n);
    for (int m = n; m <= std::min(n + 1, 4); ++m) {
        auto par = xxx_params(x.z, x.hbar, Rational(m));
        e.eq(t_m_poly(par, m), prod, "T_m(u;m), m=" + std::to_string(m));
        for (int k = m + 1; k <= std::min(m + 2, 5); ++k) e.truth(t_m_poly(par, k).is_zero(), "T_k(u;m), k=" + std::to_string(k));
    }
    return e.outcome();
}

inline Outcome chain_collapse(const Context& x) {
    const Rational h = x.hbar;
    Exact e;
    for (int n = 1; n <= 2; ++n)
        for (int m = 1; m <= 3; ++m) {
            const int N = n + m;
            UGA A = constant_poly(theta_embed(antisymmetrizer(m), n, m));
            for (int a = 1; a <= n; ++a) {
                UGA lhs = A;
                for (int i = 1; i <= m; ++i) lhs = lhs * xxx_factor(N, Rational(m - i) * h, h, a, {n + i});
                UGA rhs = A * xxx_factor(N, Rational(0), h, a, range_positions(n + 1, n + m));
                QPoly tail(Rational(1));
                for (int i = 1; i < m; ++i) tail *= QPoly::linear(Rational(i) * h);
                rhs = rhs * UGA(Permutation(N), tail);
                const std::string at = "n=" + std::to_string(n) + " m=" + std::to_string(m);
                e.truth(lhs == rhs, at);
            }
        }
    return e.outcome();
}

inline UPoly<GA> conj_poly(const UPoly<GA>& f, const Permutation& g) {
    return f.map([&](const GA& c) { return c.conjugate(g); });
}

inline Outcome cyclic_shift(const Context& x) {
    if (x.n < 2) return skipped("needs n >= 2");
    std::vector<Rational> zc(x.z.begin() + 1, x.z.end());
    zc.push_back(x.z.front());
    Permutation g = shift_cycle(x.n);
    Exact e;
    for (int m = 1; m <= std::min(x.n, 3); ++m)
        e.eq(conj_poly(t_m_poly(xxx_params(zc, x.hbar, x.p), m), g), t_m_poly(x.xxx(), m), "m=" + std::to_string(m));
    return e.outcome();
}

inline Outcome adjacent_intertwiner(const Context& x) {
    if (x.n < 2) return skipped("needs n >= 2");
    Exact e;
    for (int a = 1; a < x.n; ++a) {
        auto zs = x.z;
        std::swap(zs[static_cast<std::size_t>(a - 1)], zs[static_cast<std::size_t>(a)]);
        GA w = scale(sigma(x.n, a, a + 1), x.z[static_cast<std::size_t>(a - 1)] - x.z[static_cast<std::size_t>(a)]) + GA::scalar(x.n, x.hbar);
        for (int m = 1; m <= std::min(x.n, 3); ++m) {
            UPoly<GA> t = t_m_poly(x.xxx(), m), ts = t_m_poly(xxx_params(zs, x.hbar, x.p), m);
            e.eq(times_left(w, t), times_right(ts, w), "a=" + std::to_string(a) + " m=" + std::to_string(m));
        }
    }
    return e.outcome();
}

inline Outcome dagger_reversal(const Context& x) {
    if (x.n > 3 && !x.slow) return skipped("n > 3 needs --slow");
    const int n = x.n;
    const Rational h = x.hbar, N(n), sign(n % 2 ? -1 : 1);
    std::vector<Rational> neg, rev(x.z.rbegin(), x.z.rend());
    for (const auto& a : x.z) neg.push_back(-a);
    Permutation rho = reversal(n);
    Exact e;
    for (int m = 0; m <= n; ++m) {
        // (-1)^n T_{n-m}(-u - hbar; -z)
        UPoly<GA> rhs = scale(t_m_poly(xxx_params(neg, h, N), n - m).shift(-h).dilate(Rational(-1)), sign);
        UPoly<GA> dag = t_m_poly(xxx_params(x.z, h, N), m).map([](const GA& c) { return c.dagger(); });
        e.eq(dag, rhs, "dagger m=" + std::to_string(m));
        e.eq(conj_poly(t_m_poly(xxx_params(rev, h, N), m), rho), rhs, "reversal m=" + std::to_string(m));
    }
    return e.outcome();
}

inline Outcome xxx_scale_shift(const Context& x) {
    SeededRandom rng = x.rng(21);
    const Rational s = rng.nonzero_rational();
    std::vector<Rational> sz, tz;
    for (const auto& a : x.z) {
        sz.push_back(s * a);
        tz.push_back(a + s);
    }
    Exact e;
    for (int m = 1; m <= std::min(x.n, 3); ++m) {
        UPoly<GA> t = t_m_poly(x.xxx(), m);
        UPoly<GA> ts = t_m_poly(xxx_params(sz, s * x.hbar, x.p), m);
        for (int i = 0; i <= x.n; ++i) e.eq(t_coeff(ts, x.n, i), scale(t_coeff(t, x.n, i), s.pow(i)), "scaling");
        e.eq(t_m_poly(xxx_params(tz, x.hbar, x.p), m).shift(s), t, "shift");
    }
    Outcome o = e.outcome();
    o.params["s"] = rational_json(s);
    return o;
}

inline Outcome xxx_commute(const Context& x) {
    auto gens = xxx_generators(x.xxx());
    Exact e;
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a + 1; b < gens.size(); ++b) e.note(sup_norm(commutator(gens[a], gens[b])), "pair");
    Outcome o = e.outcome();
    o.value = gens.size();
    return o;
}

inline Outcome p_independence(const Context& x) {
    if (x.n > 4 && !x.slow) return skipped("n > 4 needs --slow");
    std::vector<SpanBasis> spans;
    for (long p : {1, 2, 17}) spans.push_back(span_of(xxx_generators(xxx_params(x.z, x.hbar, Rational(p))), x.n));
    Exact e;
    for (std::size_t k = 1; k < spans.size(); ++k) e.truth(same_span(spans[0], spans[k]), "p index " + std::to_string(k));
    Outcome o = e.outcome();
    o.value = spans[0].dim();
    return o;
}

inline Outcome xxx_det(const Context& x) {
    auto par = xxx_params(x.z, x.hbar);
    if (!par.shift_free) return need_shift_free();
    if (x.n > 4 && !x.slow) return skipped("n > 4 needs --slow");
    Exact e;
    e.eq(det_P_hbar(par, s_k_poly(par, 1)), t_gen(par));
    return e.outcome();
}

inline Outcome qkz(const Context& x) {
    auto par = xxx_params(x.z, x.hbar);
    auto f = qkz_elements(par);
    Exact e;
    GA prod = GA::identity(x.n);
    for (std::size_t a = 0; a < f.K.size(); ++a) {
        prod = prod * f.K[a];
        for (std::size_t b = a + 1; b < f.K.size(); ++b) e.note(sup_norm(commutator(f.K[a], f.K[b])), "commutator");
    }
    Rational c(1);
    for (int a = 0; a < x.n; ++a)
        for (int b = 0; b < x.n; ++b)
            if (a != b) c *= x.z[static_cast<std::size_t>(a)] - x.z[static_cast<std::size_t>(b)] + x.hbar;
    e.eq(prod, GA::scalar(x.n, c), "product");
    e.truth(f.invertible == !c.is_zero(), "invertibility flag");
    return e.outcome();
}

inline Outcome trace_worked_example(const Context& x) {
    Permutation s = Permutation::from_cycles(9, {{1, 3, 7}, {2, 5, 6}, {8, 9}});
    GroupAlgebra<QPoly> expected(4);
    expected.add(Permutation::transposition(4, 1, 3), QPoly::monomial(Rational(1), 1));
    Exact e;
    e.truth(trace_map_symbolic(GA::basis(s), 4, 5) == expected, "symbolic p");
    e.eq(trace_map(GA::basis(s), 4, 5, x.p), scale(sigma(4, 1, 3), x.p), "p from config");
    return e.outcome();
}

inline Outcome trace_binomial(const Context&) {
    Exact e;
    for (int n = 1; n <= 2; ++n)
        for (int m = 1; m <= 4; ++m) {
            auto tr = trace_map_symbolic(theta_embed(antisymmetrizer(m), n, m), n, m);
            QPoly binom(Rational(1));
            for (int i = 0; i < m; ++i) binom *= QPoly::linear(Rational(i));
            GroupAlgebra<QPoly> expected(n);
            expected.add(Permutation(n), scale(binom, factorial(m).inverse()));
            e.truth(tr == expected, "n=" + std::to_string(n) + " m=" + std::to_string(m));
        }
    return e.outcome();
}

inline Outcome trace_antisymmetrizer(const Context& x) {
    SeededRandom rng = x.rng(22);
    Exact e;
    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k <= 2; ++k)
            for (int m = std::max(k, 1); m <= (n <= 2 ? 4 : 3); ++m) {
                GA X = random_element(rng, n + k, 5);
                auto lhs = trace_map_symbolic(theta_embed(antisymmetrizer(m), n, m) * extend(X, n + k, n + m), n, m);
                GA inner = k == 0 ? X : theta_embed(antisymmetrizer(k), n, k) * X;
                QPoly factor(Rational(1));
                for (int i = 1; i <= m - k; ++i) factor = scale(factor * QPoly::linear(Rational(m - i)), Rational(1, m + 1 - i));
                auto rhs = trace_map_symbolic(inner, n, k).map([&](const QPoly& c) { return c * factor; });
                e.truth(lhs == rhs, "n=" + std::to_string(n) + " k=" + std::to_string(k) + " m=" + std::to_string(m));
            }
    return e.outcome();
}

inline Outcome trace_cyclicity(const Context& x) {
    SeededRandom rng = x.rng(23);
    Exact e;
    std::size_t cases = 0;
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m) {
            const int N = n + m;
            std::vector<std::vector<int>> cols;
            for (int a = 1; a <= N; ++a)
                for (int b = 1; b <= N; ++b)
                    if (a != b) cols.push_back({a, b});
            for (const auto& r : cols)
                for (const auto& s : cols) {
                    bool ok = true;
                    for (int p : r)
                        for (int q : s)
                            if (p == q && p <= n) ok = false;
                    if (!ok) continue;
                    GA X = random_element(rng, 2, 2), Y = random_element(rng, 2, 2);
                    GA lhs = embed(X, r, N) * embed(Y, s, N), rhs = embed(Y, s, N) * embed(X, r, N);
                    e.truth(trace_map_symbolic(lhs, n, m) == trace_map_symbolic(rhs, n, m), "n=" + std::to_string(n) + " m=" + std::to_string(m));
                    ++cases;
                }
        }
    Outcome o = e.outcome();
    o.value = cases;
    return o;
}

inline std::vector<CheckDef> xxx_suite() {
    return {
        {"trace.antisymmetrizer-reduction", "trace of an antisymmetrized product reduces to a smaller trace", trace_antisymmetrizer},
        {"trace.binomial", "trace of the antisymmetrizer is binom(p, m)", trace_binomial},
        {"trace.cyclicity", "trace is cyclic for factors meeting only in traced symbols", trace_cyclicity},
        {"trace.worked-example", "trace of (1 3 7)(2 5 6)(8 9) from S_9 to S_4 is p (1 3)", trace_worked_example},
        {"xxx.chain-collapse", "antisymmetrized chain of shifted factors collapses", chain_collapse},
        {"xxx.commute", "XXX coefficients pairwise commute", xxx_commute},
        {"xxx.covariance-scale-shift", "XXX coefficients under (z, hbar) -> (s z, s hbar) and z -> z + s", xxx_scale_shift},
        {"xxx.cyclic-shift", "conjugation by the long cycle rotates the points", cyclic_shift},
        {"xxx.dagger-reversal", "dagger and reversal exchange T_m and T_{n-m} at p = n", dagger_reversal},
        {"xxx.det-presentation", "XXX generating function equals the determinant P_hbar(u,v;z;S_1)", xxx_det},
        {"xxx.intertwiner", "adjacent swaps intertwine through (z_a - z_{a+1}) sigma + hbar", adjacent_intertwiner},
        {"xxx.p-independence", "span of the XXX coefficients does not depend on p", p_independence},
        {"xxx.qkz", "qKZ elements commute and multiply to prod (z_a - z_b + hbar)", qkz},
        {"xxx.s-from-t", "S_m recovered from T_0..T_m as an identity in p", s_from_t},
        {"xxx.s-sum", "sum of S_k equals prod (u - z_a + hbar)", s_sum},
        {"xxx.saturation", "T_m(u; m) saturates for m >= n and higher T_k vanish", saturation},
        {"xxx.t-from-s", "T_m expands in S_k with falling factorials in p", t_from_s},
    };
}

}  // namespace bethe::checks
