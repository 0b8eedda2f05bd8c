#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bethe/emit.hpp"

namespace {

using bethe::ConfigError;
using bethe::json;
using bethe::Rational;

struct Options {
    bethe::SuiteConfig cfg;
    std::optional<int> k;
    std::string format = "json";
    std::string out;
    bool strict = false;
    bool timings = false;
};

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (!item.empty()) parts.push_back(item);
    }
    return parts;
}

Rational parse_rational(const std::string& s, const std::string& what) {
    try {
        return Rational::parse(s);
    } catch (const std::exception&) {
        throw ConfigError("cannot parse " + what + " value '" + s + "'");
    }
}

std::vector<Rational> parse_points(const std::string& s) {
    std::vector<Rational> z;
    for (const auto& p : split(s)) z.push_back(parse_rational(p, "z"));
    return z;
}

bethe::Partition parse_partition(const std::string& s) {
    bethe::Partition l;
    for (const auto& p : split(s)) {
        try {
            std::size_t used = 0;
            l.push_back(std::stoi(p, &used));
            if (used != p.size()) throw std::invalid_argument(p);
        } catch (const std::exception&) {
            throw ConfigError("cannot parse lambda part '" + p + "'");
        }
    }
    return l;
}

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string list_text(const json& v) {
    if (!v.is_array()) return scalar_text(v);
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : ",") + scalar_text(e);
    return s;
}

/// Config file keys mirror the long flag names (dashes or underscores).
void apply_config_file(const std::string& path, Options& o) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
    try {
        for (auto it = j.begin(); it != j.end(); ++it) {
            std::string key = it.key();
            std::replace(key.begin(), key.end(), '_', '-');
            const json& v = it.value();
            if (key == "suite") o.cfg.suite = v.get<std::string>();
            else if (key == "n") o.cfg.n = v.get<int>();
            else if (key == "z") o.cfg.z = parse_points(list_text(v));
            else if (key == "hbar") o.cfg.hbar = parse_rational(scalar_text(v), "hbar");
            else if (key == "p") o.cfg.p = parse_rational(scalar_text(v), "p");
            else if (key == "lambda") o.cfg.lambda = parse_partition(list_text(v));
            else if (key == "seed") o.cfg.seed = v.get<std::uint64_t>();
            else if (key == "tol") o.cfg.tol = v.get<double>();
            else if (key == "recon-tol") o.cfg.recon_tol = v.get<double>();
            else if (key == "slow") o.cfg.slow = v.get<bool>();
            else if (key == "allow-large") o.cfg.allow_large = v.get<bool>();
            else if (key == "strict") o.strict = v.get<bool>();
            else if (key == "timings") o.timings = v.get<bool>();
            else if (key == "format") o.format = v.get<std::string>();
            else if (key == "out") o.out = v.get<std::string>();
            else if (key == "k") o.k = v.get<int>();
            else throw ConfigError("unknown config key '" + it.key() + "'");
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad config value: ") + e.what());
    }
}

std::filesystem::path output_path(const Options& o, const std::string& stem) {
    const char* dir = std::getenv("BETHE_OUTPUT_DIR");
    if (!o.out.empty()) {
        std::filesystem::path p(o.out);
        if (p.is_relative() && dir && *dir) p = std::filesystem::path(dir) / p;
        return p;
    }
    if (dir && *dir) return std::filesystem::path(dir) / (stem + (o.format == "json" ? ".json" : ".txt"));
    return {};
}

void write_output(const std::string& text, const std::filesystem::path& p) {
    if (p.empty()) {
        std::cout << text;
        return;
    }
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream f(p, std::ios::binary);
    if (!f) throw ConfigError("cannot write " + p.string());
    f << text;
}

std::string emit_text(const json& obj) { return obj.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification driver for Bethe subalgebras of the symmetric group algebra"};
    app.require_subcommand(1);
    Options o;
    std::string config_file, z_text, hbar_text, p_text, lambda_text;
    int n = 0;
    std::uint64_t seed = 1;
    double tol = 0, recon_tol = 0;
    int k = 0;
    std::string target;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--config", config_file, "JSON file mirroring the flags");
        sub->add_option("--n", n, "number of tensor factors");
        sub->add_option("--z", z_text, "comma-separated points, e.g. 0,1/2,3");
        sub->add_option("--hbar", hbar_text, "step hbar");
        sub->add_option("--p", p_text, "trace parameter p (default n)");
        sub->add_option("--lambda", lambda_text, "restrict to one partition, e.g. 2,1");
        sub->add_option("--seed", seed, "random seed");
        sub->add_option("--tol", tol, "numeric tolerance");
        sub->add_option("--recon-tol", recon_tol, "reconstruction tolerance");
        sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--out", o.out, "output file");
        sub->add_flag("--slow", o.cfg.slow, "enable the larger cases");
        sub->add_flag("--allow-large", o.cfg.allow_large, "raise the cap on n to 9");
    };
    CLI::App* run = app.add_subcommand("run", "run a verification suite");
    run->add_option("suite", target, "suite name")->required();
    common(run);
    run->add_flag("--strict", o.strict, "CONJECTURE-FAIL also fails the process");
    run->add_flag("--timings", o.timings, "include runtime_ms in the report");
    CLI::App* emit = app.add_subcommand("emit", "serialize a constructed object");
    emit->add_option("kind", target, "phi, t, s, qkz, kz, charges, theta or idempotents")->required();
    common(emit);
    emit->add_option("--k", k, "index for theta and s");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        CLI::App* sub = run->parsed() ? run : emit;
        if (!config_file.empty()) apply_config_file(config_file, o);
        if (sub->count("--n")) o.cfg.n = n;
        if (sub->count("--z")) o.cfg.z = parse_points(z_text);
        if (sub->count("--hbar")) o.cfg.hbar = parse_rational(hbar_text, "hbar");
        if (sub->count("--p")) o.cfg.p = parse_rational(p_text, "p");
        if (sub->count("--lambda")) o.cfg.lambda = parse_partition(lambda_text);
        if (sub->count("--seed")) o.cfg.seed = seed;
        if (sub->count("--tol")) o.cfg.tol = tol;
        if (sub->count("--recon-tol")) o.cfg.recon_tol = recon_tol;
        if (sub == emit && emit->count("--k")) o.k = k;
        if (o.format != "json" && o.format != "text") throw ConfigError("format must be json or text");

        if (sub == run) {
            o.cfg.suite = target;
            const auto& names = bethe::suite_names();
            if (std::find(names.begin(), names.end(), target) == names.end()) throw ConfigError("unknown suite '" + target + "'");
            bethe::Report rep = bethe::run_suite(o.cfg);
            const std::string text = o.format == "json" ? bethe::to_json(rep, o.timings).dump(2) + "\n" : bethe::to_text(rep, o.timings);
            write_output(text, output_path(o, target));
            const bool fail = rep.any_fail() || (o.strict && rep.any_conjecture_fail());
            return fail ? 1 : 0;
        }
        bethe::EmitRequest req{target, o.cfg, o.k};
        write_output(emit_text(bethe::emit_object(req)), output_path(o, "emit-" + target));
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
