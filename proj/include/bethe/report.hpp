#pragma once

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "partitions.hpp"
#include "poly.hpp"
#include "rational_function.hpp"
#include "representation.hpp"
#include "schur_weyl.hpp"

namespace bethe {

using json = nlohmann::ordered_json;

enum class Status { Pass, Fail, ConjecturePass, ConjectureFail, Skipped };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::ConjecturePass: return "CONJECTURE-PASS";
        case Status::ConjectureFail: return "CONJECTURE-FAIL";
        case Status::Skipped: return "SKIPPED";
    }
    return "?";
}

/// Raised when the library contradicts itself; maps to exit code 3.
struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised for unusable configurations; maps to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CheckRecord {
    std::string id;
    std::string anchor;
    json params = json::object();
    Status status = Status::Skipped;
    std::string residual = "0";
    json value;                 // optional measured quantity
    std::string detail;
    double runtime_ms = 0;
};

struct Report {
    std::string suite;
    json config = json::object();
    std::vector<CheckRecord> checks;

    std::size_t count(Status s) const {
        return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [&](const CheckRecord& r) { return r.status == s; }));
    }
    bool any_fail() const { return count(Status::Fail) > 0; }
    bool any_conjecture_fail() const { return count(Status::ConjectureFail) > 0; }
    void sort() {
        std::stable_sort(checks.begin(), checks.end(), [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
    }
};

inline std::string format_double(double x) {
    if (x == 0) return "0";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

inline json to_json(const CheckRecord& r, bool timings) {
    json j;
    j["id"] = r.id;
    j["anchor"] = r.anchor;
    j["params"] = r.params;
    j["status"] = status_name(r.status);
    j["residual"] = r.residual;
    if (!r.value.is_null()) j["value"] = r.value;
    if (!r.detail.empty()) j["detail"] = r.detail;
    if (timings) j["runtime_ms"] = r.runtime_ms;
    return j;
}

inline json to_json(const Report& rep, bool timings = false) {
    json j;
    j["suite"] = rep.suite;
    j["config"] = rep.config;
    j["summary"] = {{"total", rep.checks.size()},
                    {"pass", rep.count(Status::Pass)},
                    {"fail", rep.count(Status::Fail)},
                    {"conjecture_pass", rep.count(Status::ConjecturePass)},
                    {"conjecture_fail", rep.count(Status::ConjectureFail)},
                    {"skipped", rep.count(Status::Skipped)}};
    json arr = json::array();
    for (const auto& r : rep.checks) arr.push_back(to_json(r, timings));
    j["checks"] = std::move(arr);
    return j;
}

inline std::string to_text(const Report& rep, bool timings = false) {
    std::ostringstream os;
    os << "suite " << rep.suite << "\n";
    std::size_t w = 0;
    for (const auto& r : rep.checks) w = std::max(w, r.id.size());
    for (const auto& r : rep.checks) {
        std::string st = status_name(r.status);
        os << "  " << st << std::string(16 - std::min<std::size_t>(15, st.size()), ' ') << r.id;
        if (r.status != Status::Skipped) os << std::string(w - r.id.size() + 2, ' ') << "residual " << r.residual;
        if (!r.value.is_null()) os << "  value " << r.value.dump();
        if (timings) os << "  " << format_double(r.runtime_ms) << " ms";
        if (!r.detail.empty()) os << "  (" << r.detail << ")";
        os << "\n";
    }
    os << rep.count(Status::Pass) << " pass, " << rep.count(Status::Fail) << " fail, " << rep.count(Status::ConjecturePass)
       << " conjecture-pass, " << rep.count(Status::ConjectureFail) << " conjecture-fail, " << rep.count(Status::Skipped)
       << " skipped\n";
    return os.str();
}

// Exact sup-norms of differences, used as residuals of exact identities.

inline Rational sup_norm(const Rational& x) { return x.abs(); }

inline Rational sup_norm(const RationalFunction& f) {
    Rational m(0);
    for (const auto& c : f.num().coeffs()) m = std::max(m, c.abs());
    return m;
}

template <class R>
Rational sup_norm(const GroupAlgebra<R>& a) {
    Rational m(0);
    for (const auto& [p, c] : a.terms()) m = std::max(m, sup_norm(c));
    return m;
}

template <class R>
Rational sup_norm(const UPoly<R>& f) {
    Rational m(0);
    for (const auto& c : f.coeffs()) m = std::max(m, sup_norm(c));
    return m;
}

template <class R>
Rational sup_norm(const BiPoly<R>& f) {
    Rational m(0);
    for (const auto& row : f.grid())
        for (const auto& c : row) m = std::max(m, sup_norm(c));
    return m;
}

template <class T>
Rational sup_norm(const Matrix<T>& a) {
    Rational m(0);
    for (const auto& c : a.data()) m = std::max(m, sup_norm(c));
    return m;
}

inline Rational sup_norm(const BlockMatrix& b) {
    Rational m(0);
    for (const auto& blk : b.blocks) m = std::max(m, sup_norm(blk));
    return m;
}

inline Rational sup_norm(const TensorOperator& t) {
    Rational m(0);
    for (int i = 0; i < t.dim(); ++i)
        for (const auto& [j, c] : t.row(i)) m = std::max(m, c.abs());
    return m;
}

template <class T>
Rational diff_norm(const T& a, const T& b) {
    return sup_norm(a - b);
}

inline json rational_json(const Rational& r) { return r.str(); }

inline json rationals_json(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

inline json partition_json(const Partition& p) {
    json a = json::array();
    for (int x : p) a.push_back(x);
    return a;
}

}  // namespace bethe
