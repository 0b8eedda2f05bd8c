#pragma once

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "../gaudin.hpp"
#include "../homogeneous.hpp"
#include "../report.hpp"
#include "../sampling.hpp"
#include "../spans.hpp"
#include "../spectra.hpp"
#include "../xxx.hpp"

namespace bethe {

inline constexpr int kHardCap = 7;
inline constexpr int kOverrideCap = 9;

struct SuiteConfig {
    std::string suite = "all";
    int n = 3;
    std::vector<Rational> z;              // empty: default points
    Rational hbar{1};
    std::optional<Rational> p;            // empty: p = n
    std::optional<Partition> lambda;      // restricts eigen-based checks to one block
    std::uint64_t seed = 1;
    double tol = 1e-8;
    double recon_tol = 1e-6;
    bool slow = false;
    bool allow_large = false;             // lifts the n <= 7 cap
};

/// 0, 2, 5, 11, ...: pairwise differences avoid +-1 and the points stay small.
inline std::vector<Rational> default_points(int n) {
    static const long base[] = {0, 2, 5, 11, 19, 31, 47, 67, 97};
    std::vector<Rational> z;
    for (int a = 0; a < n; ++a) z.emplace_back(base[a]);
    return z;
}

struct Context {
    int n = 3;
    std::vector<Rational> z;
    Rational hbar{1};
    Rational p{3};
    std::optional<Partition> lambda;
    std::uint64_t seed = 1;
    double tol = 1e-8;
    double recon_tol = 1e-6;
    bool slow = false;

    SeededRandom rng(std::uint64_t salt) const { return SeededRandom(seed * 1000003ULL + salt); }
    bool distinct() const { return pairwise_distinct(z); }
    XXXParams xxx() const { return xxx_params(z, hbar, p); }
    /// (z / hbar, 1): same subalgebra, unit step
    XXXParams xxx_unit() const {
        std::vector<Rational> w;
        for (const auto& a : z) w.push_back(a / hbar);
        return xxx_params(w, Rational(1), p);
    }
};

inline Context resolve(const SuiteConfig& c) {
    const int cap = c.allow_large ? kOverrideCap : kHardCap;
    if (c.n < 1) throw ConfigError("n must be at least 1");
    if (c.n > cap) throw ConfigError("n = " + std::to_string(c.n) + " exceeds the cap " + std::to_string(cap));
    if (!c.z.empty() && static_cast<int>(c.z.size()) != c.n)
        throw ConfigError("z has " + std::to_string(c.z.size()) + " entries, expected n = " + std::to_string(c.n));
    if (c.hbar.is_zero()) throw ConfigError("hbar must be nonzero");
    if (!(c.tol > 0) || !(c.recon_tol > 0)) throw ConfigError("tolerances must be positive");
    if (c.lambda) {
        const auto& l = *c.lambda;
        bool ok = partition_size(l) == c.n;
        for (std::size_t i = 0; ok && i < l.size(); ++i) ok = l[i] > 0 && (i == 0 || l[i] <= l[i - 1]);
        if (!ok) throw ConfigError("lambda must be a partition of n");
    }
    Context x;
    x.n = c.n;
    x.z = c.z.empty() ? default_points(c.n) : c.z;
    x.hbar = c.hbar;
    x.p = c.p ? *c.p : Rational(c.n);
    x.lambda = c.lambda;
    x.seed = c.seed;
    x.tol = c.tol;
    x.recon_tol = c.recon_tol;
    x.slow = c.slow;
    return x;
}

inline json config_json(const Context& x, const std::string& suite) {
    json j;
    j["suite"] = suite;
    j["n"] = x.n;
    j["z"] = rationals_json(x.z);
    j["hbar"] = rational_json(x.hbar);
    j["p"] = rational_json(x.p);
    if (x.lambda) j["lambda"] = partition_json(*x.lambda);
    j["seed"] = x.seed;
    j["tol"] = x.tol;
    j["recon_tol"] = x.recon_tol;
    j["slow"] = x.slow;
    return j;
}

struct Outcome {
    Status status = Status::Pass;
    std::string residual = "0";
    json value;
    std::string detail;
    json params = json::object();
};

inline Outcome skipped(std::string why) {
    Outcome o;
    o.status = Status::Skipped;
    o.detail = std::move(why);
    return o;
}

/// Running worst residual of an exact check.
struct Exact {
    Rational worst{0};
    std::string first_failure;

    template <class T>
    void eq(const T& a, const T& b, const std::string& where = {}) {
        note(diff_norm(a, b), where);
    }
    void truth(bool ok, const std::string& where = {}) { note(ok ? Rational(0) : Rational(1), where); }
    void note(const Rational& r, const std::string& where) {
        if (!r.is_zero() && worst.is_zero() && first_failure.empty()) first_failure = where;
        worst = std::max(worst, r);
    }
    Outcome outcome() const {
        Outcome o;
        o.status = worst.is_zero() ? Status::Pass : Status::Fail;
        o.residual = worst.is_zero() ? "0" : worst.pretty();
        if (!worst.is_zero() && !first_failure.empty()) o.detail = "first failure at " + first_failure;
        return o;
    }
};

/// Running worst residual of a floating-point check.
struct Numeric {
    double worst = 0;
    void note(double r) { worst = std::max(worst, std::isnan(r) ? INFINITY : r); }
    Outcome outcome(double tol, bool conjecture = false) const {
        Outcome o;
        const bool ok = worst <= tol;
        o.status = conjecture ? (ok ? Status::ConjecturePass : Status::ConjectureFail) : (ok ? Status::Pass : Status::Fail);
        o.residual = format_double(worst);
        return o;
    }
};

struct CheckDef {
    std::string id;
    std::string anchor;
    std::function<Outcome(const Context&)> run;
};

inline CheckRecord run_check(const CheckDef& def, const Context& ctx) {
    CheckRecord r;
    r.id = def.id;
    r.anchor = def.anchor;
    r.params["n"] = ctx.n;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = def.run(ctx);
    } catch (const InternalError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        o.status = Status::Fail;
        o.residual = "nan";
        o.detail = std::string("error: ") + e.what();
    } catch (const std::domain_error& e) {
        o.status = Status::Fail;
        o.residual = "nan";
        o.detail = std::string("error: ") + e.what();
    } catch (const std::logic_error& e) {
        throw InternalError(def.id + ": " + e.what());
    } catch (const std::exception& e) {
        o.status = Status::Fail;
        o.residual = "nan";
        o.detail = std::string("error: ") + e.what();
    }
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    r.status = o.status;
    r.residual = o.residual;
    r.value = o.value;
    r.detail = o.detail;
    for (auto it = o.params.begin(); it != o.params.end(); ++it) r.params[it.key()] = it.value();
    return r;
}

inline std::size_t irrep_dim_sum(int n) {
    std::size_t s = 0;
    for (const auto& l : partitions_of(n)) s += static_cast<std::size_t>(hook_dimension(l));
    return s;
}

/// An empty family generates the scalars.
inline SpanBasis span_of(std::vector<GA> gens, int n) {
    if (gens.empty()) gens.push_back(GA::identity(n));
    return algebra_span(represent_all(gens, n));
}

inline std::vector<Rational> take(std::vector<Rational> v, int n) {
    v.resize(static_cast<std::size_t>(n));
    return v;
}

inline bool keep_block(const Context& x, const Partition& l) { return !x.lambda || *x.lambda == l; }

}  // namespace bethe
