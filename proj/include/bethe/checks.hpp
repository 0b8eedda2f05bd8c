#pragma once

#include <algorithm>

#include "checks/gaudin_checks.hpp"
#include "checks/homogeneous_checks.hpp"
#include "checks/schur_weyl_checks.hpp"
#include "checks/spectra_checks.hpp"
#include "checks/xxx_checks.hpp"

namespace bethe {

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"identities-gaudin", "identities-xxx", "homogeneous", "schur-weyl",
                                                "spectra",           "conjectures",    "all"};
    return names;
}

inline std::vector<CheckDef> suite_checks(const std::string& suite) {
    using namespace checks;
    auto append = [](std::vector<CheckDef>& a, std::vector<CheckDef> b) { a.insert(a.end(), b.begin(), b.end()); };
    std::vector<CheckDef> out;
    if (suite == "identities-gaudin" || suite == "all") append(out, gaudin_suite());
    if (suite == "identities-xxx" || suite == "all") append(out, xxx_suite());
    if (suite == "homogeneous" || suite == "all") append(out, homogeneous_suite());
    if (suite == "schur-weyl" || suite == "all") append(out, schur_weyl_suite());
    if (suite == "spectra" || suite == "all") append(out, spectra_suite());
    if (suite == "conjectures" || suite == "all") append(out, conjecture_suite());
    if (out.empty()) throw ConfigError("unknown suite '" + suite + "'");
    return out;
}

inline Report run_suite(const SuiteConfig& cfg) {
    const Context ctx = resolve(cfg);
    Report rep;
    rep.suite = cfg.suite;
    rep.config = config_json(ctx, cfg.suite);
    for (const auto& def : suite_checks(cfg.suite)) rep.checks.push_back(run_check(def, ctx));
    rep.sort();
    return rep;
}

}  // namespace bethe
