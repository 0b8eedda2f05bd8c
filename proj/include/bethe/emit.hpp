#pragma once

#include "checks.hpp"

namespace bethe {

inline const std::vector<std::string>& emit_kinds() {
    static const std::vector<std::string> kinds{"phi", "t", "s", "qkz", "kz", "charges", "theta", "idempotents"};
    return kinds;
}

/// Terms sorted by permutation: {"perm": one-line images, "cycles": cycle notation, "coeff": "num/den"}.
inline json terms_json(const GA& g) {
    json a = json::array();
    if (g.is_zero()) return a;
    for (const auto& [p, c] : g.sorted_terms()) {
        json t;
        t["perm"] = p.images();
        t["cycles"] = p.cycle_string();
        t["coeff"] = c.str();
        a.push_back(t);
    }
    return a;
}

inline json upoly_json(const UPoly<GA>& f) {
    json a = json::array();
    for (int k = 0; k <= f.degree(); ++k) a.push_back(terms_json(f[k]));
    return a;
}

/// Nested [u-degree][v-degree] arrays of term lists.
inline json bipoly_json(const BiPoly<GA>& f) {
    json a = json::array();
    for (const auto& row : f.grid()) {
        json r = json::array();
        for (const auto& c : row) r.push_back(terms_json(c));
        a.push_back(r);
    }
    return a;
}

struct EmitRequest {
    std::string kind;
    SuiteConfig config;
    std::optional<int> k;
};

inline json emit_object(const EmitRequest& req) {
    const std::string& kind = req.kind;
    if (std::find(emit_kinds().begin(), emit_kinds().end(), kind) == emit_kinds().end())
        throw ConfigError("unknown object kind '" + kind + "'");
    json out;
    out["kind"] = kind;
    if (kind == "theta") {
        const int k = req.k.value_or(1);
        if (k < 1 || k > 4) throw ConfigError("theta needs 1 <= k <= 4");
        auto t = theta_extract(k);
        out["k"] = k;
        out["n"] = k + 1;
        out["theta"] = terms_json(t.theta);
        return out;
    }
    const Context x = resolve(req.config);
    out["n"] = x.n;
    if (kind == "phi") {
        out["z"] = rationals_json(x.z);
        out["layout"] = "[u-degree][v-degree]";
        out["phi"] = bipoly_json(phi_gen(x.z));
    } else if (kind == "t" || kind == "s" || kind == "qkz") {
        auto par = x.xxx();
        out["z"] = rationals_json(x.z);
        out["hbar"] = rational_json(x.hbar);
        if (kind == "t") {
            out["p"] = rational_json(x.p);
            out["layout"] = "[u-degree][v-degree]";
            out["t"] = bipoly_json(t_gen(par));
        } else if (kind == "s") {
            json s = json::object();
            const int lo = req.k.value_or(1), hi = req.k.value_or(x.n);
            if (lo < 0 || hi > x.n) throw ConfigError("s needs 0 <= k <= n");
            for (int k = lo; k <= hi; ++k) s[std::to_string(k)] = upoly_json(s_k_poly(par, k));
            out["layout"] = "k -> [u-degree]";
            out["s"] = s;
        } else {
            auto q = qkz_elements(par);
            out["invertible"] = q.invertible;
            json K = json::array();
            for (const auto& g : q.K) K.push_back(terms_json(g));
            out["K"] = K;
        }
    } else if (kind == "kz") {
        if (!x.distinct()) throw ConfigError("kz needs pairwise distinct z");
        out["z"] = rationals_json(x.z);
        json H = json::array();
        for (const auto& g : kz_elements(x.z)) H.push_back(terms_json(g));
        out["H"] = H;
    } else if (kind == "charges") {
        if (x.n < 3) throw ConfigError("charges need n >= 3");
        auto s = local_charges(x.n);
        json I = json::array();
        for (const auto& g : s.charges) I.push_back(terms_json(g));
        out["I"] = I;
    } else {
        json ids = json::array();
        for (const auto& l : partitions_of(x.n)) {
            if (x.lambda && *x.lambda != l) continue;
            json e;
            e["lambda"] = partition_json(l);
            e["chi"] = terms_json(central_idempotent(l));
            ids.push_back(e);
        }
        out["idempotents"] = ids;
    }
    return out;
}

}  // namespace bethe
