#pragma once

#include "common.hpp"

namespace bethe::checks {

inline GA theta2_closed_form() {
    GA s12 = sigma(3, 1, 2), s23 = sigma(3, 2, 3);
    return scale(s23 * s12 - s12 * s23 - GA::identity(3), Rational(1, 2));
}

inline std::vector<Rational> zeros(int n) { return std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)); }

inline Outcome local_charges_low(const Context& x) {
    if (x.n < 3) return skipped("local charges need n >= 3");
    if (x.n > 5 && !x.slow) return skipped("n > 5 needs --slow");
    auto s = local_charges(x.n);
    Exact e;
    e.eq(s.I(1), cyclic_sum(sigma(2, 1, 2), x.n), "I_1");
    e.eq(theta_extract(1).theta, sigma(2, 1, 2), "theta_1");
    if (x.n >= 4) {
        e.eq(theta_extract(2).theta, theta2_closed_form(), "theta_2");
        e.eq(s.I(2), cyclic_sum(theta2_closed_form(), x.n), "I_2");
    }
    std::vector<GA> fam = s.charges;
    fam.push_back(GA::basis(gamma_n(x.n)));
    e.truth(pairwise_commute(fam), "charges and gamma commute");
    Outcome o = e.outcome();
    o.value = s.charges.size();
    return o;
}

inline Outcome theta3_consistency(const Context& x) {
    if (x.n < 5) return skipped("theta_3 needs n >= 5");
    if (x.n > 5 && !x.slow) return skipped("n > 5 needs --slow");
    auto t3 = theta_extract(3);
    Exact e;
    e.eq(cyclic_sum(t3.theta, x.n), local_charges(x.n).I(3), "I_3");
    Outcome o = e.outcome();
    o.value = t3.theta.size();
    return o;
}

inline Outcome homogeneous_det(const Context& x) {
    if (x.n > 4 && !x.slow) return skipped("n > 4 needs --slow");
    auto par = xxx_params(zeros(x.n), Rational(1));
    Exact e;
    e.eq(det_P_hat(x.n, s_k_poly(par, 1)), t_gen(par), "P^(S_1)");
    if (x.n >= 2) e.eq(s_k_poly(par, 1), s1_homogeneous(x.n), "S_1 from cycle sums");
    return e.outcome();
}

inline Outcome charges_generate(const Context& x) {
    if (x.n < 3) return skipped("local charges need n >= 3");
    if (x.n > 4 && !x.slow) return skipped("n > 4 needs --slow");
    std::vector<GA> gens = local_charges(x.n).charges;
    gens.push_back(GA::basis(gamma_n(x.n)));
    auto a = span_of(gens, x.n), b = span_of(homogeneous_generators(x.n), x.n);
    Exact e;
    e.truth(same_span(a, b));
    Outcome o = e.outcome();
    o.value = b.dim();
    return o;
}

inline Outcome homogeneous_independence(const Context& x) {
    if (x.n > 4 && !x.slow) return skipped("n > 4 needs --slow");
    const int n = x.n;
    auto ref = span_of(homogeneous_generators(n), n);
    Exact e;
    for (auto [h, z1] : std::vector<std::pair<long, long>>{{1, 0}, {2, 0}, {1, 5}}) {
        std::vector<Rational> z(static_cast<std::size_t>(n), Rational(z1));
        e.truth(same_span(ref, span_of(xxx_generators(xxx_params(z, Rational(h), Rational(n))), n)),
                "hbar=" + std::to_string(h) + " z1=" + std::to_string(z1));
    }
    Outcome o = e.outcome();
    o.value = ref.dim();
    return o;
}

inline Outcome homogeneous_dagger(const Context& x) {
    if (x.n > 4 && !x.slow) return skipped("n > 4 needs --slow");
    const int n = x.n;
    std::vector<GA> dag, star;
    for (const auto& g : homogeneous_generators(n)) {
        dag.push_back(g.dagger());
        star.push_back(antiinvolution(g, Involution::star));
    }
    auto a = span_of(homogeneous_generators(n), n);
    Exact e;
    e.truth(same_span(a, span_of(dag, n)), "dagger");
    e.truth(same_span(a, span_of(star, n)), "star");
    return e.outcome();
}

inline std::vector<CheckDef> homogeneous_suite() {
    return {
        {"homogeneous.charges-generate", "gamma and the local charges generate the homogeneous subalgebra", charges_generate},
        {"homogeneous.dagger", "homogeneous subalgebra is stable under dagger and star", homogeneous_dagger},
        {"homogeneous.det-presentation", "homogeneous generating function equals P^(u,v;S_1)", homogeneous_det},
        {"homogeneous.independence", "span at (z_1, ..., z_1) does not depend on hbar or z_1", homogeneous_independence},
        {"homogeneous.local-charges", "I_1 and I_2 are cyclic sums of theta_1 and theta_2", local_charges_low},
        {"homogeneous.theta3", "theta_3 extracted at n = 5 reproduces I_3", theta3_consistency},
    };
}

}  // namespace bethe::checks
