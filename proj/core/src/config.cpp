#include "apriori/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace apriori {

namespace {

std::string join(const std::vector<std::string>& errors) {
    std::string out = "configuration errors:";
    for (const auto& e : errors) out += "\n  " + e;
    return out;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

struct Parser {
    std::vector<std::string> errors;
    int line = 0;

    void fail(const std::string& msg) {
        errors.push_back("line " + std::to_string(line) + ": " + msg);
    }

    bool to_double(const std::string& v, double& out) {
        if (v == "inf") {
            out = std::numeric_limits<double>::infinity();
            return true;
        }
        try {
            std::size_t pos = 0;
            out = std::stod(v, &pos);
            if (pos != v.size()) throw std::invalid_argument("");
            return true;
        } catch (...) {
            fail("expected a number, got '" + v + "'");
            return false;
        }
    }

    bool to_int(const std::string& v, int& out) {
        try {
            std::size_t pos = 0;
            out = std::stoi(v, &pos);
            if (pos != v.size()) throw std::invalid_argument("");
            return true;
        } catch (...) {
            fail("expected an integer, got '" + v + "'");
            return false;
        }
    }

    bool to_u64(const std::string& v, std::uint64_t& out) {
        try {
            std::size_t pos = 0;
            out = std::stoull(v, &pos);
            if (pos != v.size()) throw std::invalid_argument("");
            return true;
        } catch (...) {
            fail("expected an unsigned integer, got '" + v + "'");
            return false;
        }
    }

    bool to_bool(const std::string& v, bool& out) {
        if (v == "true" || v == "on" || v == "1") {
            out = true;
            return true;
        }
        if (v == "false" || v == "off" || v == "0") {
            out = false;
            return true;
        }
        fail("expected a boolean, got '" + v + "'");
        return false;
    }
};

}  // namespace

ConfigError::ConfigError(std::vector<std::string> errors)
    : std::runtime_error(join(errors)), errors_(std::move(errors)) {}

ExperimentConfig parse_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError({"cannot open config file: " + path});

    ExperimentConfig cfg;
    Parser p;
    std::string section;
    std::string raw;
    while (std::getline(f, raw)) {
        ++p.line;
        std::string text = raw;
        auto hash = text.find('#');
        if (hash != std::string::npos) text = text.substr(0, hash);
        text = trim(text);
        if (text.empty()) continue;
        if (text.front() == '[') {
            if (text.back() != ']') {
                p.fail("malformed section header '" + text + "'");
                continue;
            }
            section = text.substr(1, text.size() - 2);
            if (section == "simulation") cfg.has_simulation = true;
            else if (section == "transform") cfg.has_transform = true;
            else if (section == "check") cfg.has_check = true;
            else if (section == "calibration") cfg.has_calibration = true;
            else if (section != "output")
                p.fail("unknown section [" + section + "]");
            continue;
        }
        auto eq = text.find('=');
        if (eq == std::string::npos) {
            p.fail("expected 'key = value', got '" + text + "'");
            continue;
        }
        std::string key = trim(text.substr(0, eq));
        std::string value = trim(text.substr(eq + 1));
        if (section.empty()) {
            p.fail("key '" + key + "' appears before any [section] header");
            continue;
        }

        if (section == "simulation") {
            SimConfig& s = cfg.sim;
            if (key == "system") {
                if (value == "NS") s.system = System::NS;
                else if (value == "QG") s.system = System::QG;
                else p.fail("system must be NS or QG, got '" + value + "'");
            } else if (key == "n") p.to_int(value, s.n);
            else if (key == "nu") p.to_double(value, s.nu);
            else if (key == "kappa") p.to_double(value, s.kappa);
            else if (key == "alpha") p.to_double(value, s.alpha);
            else if (key == "t_end") p.to_double(value, s.t_end);
            else if (key == "dt") p.to_double(value, s.dt);
            else if (key == "cfl_scaled") p.to_bool(value, s.cfl_scaled);
            else if (key == "cfl_safety") p.to_double(value, s.cfl_safety);
            else if (key == "stride") p.to_int(value, s.stride);
            else if (key == "preset") s.preset = value;
            else if (key == "amplitude") p.to_double(value, s.amplitude);
            else if (key == "seed") p.to_u64(value, s.seed);
            else if (key == "besov") p.to_bool(value, s.besov);
            else if (key == "vorticity") p.to_bool(value, s.vorticity);
            else if (key == "tail_threshold") p.to_double(value, s.tail_threshold);
            else if (key == "lp") {
                s.lp_exponents.clear();
                for (const auto& item : split_list(value)) {
                    double e;
                    if (p.to_double(item, e)) s.lp_exponents.push_back(e);
                }
            } else if (key == "dk") {
                s.dk_norms.clear();
                for (const auto& item : split_list(value)) {
                    auto colon = item.find(':');
                    if (colon == std::string::npos) {
                        p.fail("dk entries are k:p pairs, got '" + item + "'");
                        continue;
                    }
                    int kk;
                    double pp;
                    if (p.to_int(trim(item.substr(0, colon)), kk) &&
                        p.to_double(trim(item.substr(colon + 1)), pp))
                        s.dk_norms.emplace_back(kk, pp);
                }
            } else p.fail("unknown key '" + key + "' in [simulation]");
        } else if (section == "transform") {
            TransformParams& t = cfg.transform;
            if (key == "family") {
                try {
                    t.family = family_from_name(value);
                } catch (const std::exception& e) {
                    p.fail(e.what());
                }
            } else if (key == "sign") {
                if (value == "+") t.sign = +1;
                else if (value == "-") t.sign = -1;
                else p.fail("sign must be + or -, got '" + value + "'");
            } else if (key == "gamma") p.to_double(value, t.gamma);
            else if (key == "k") p.to_int(value, t.k);
            else if (key == "p") p.to_double(value, t.p);
            else if (key == "lambda") p.to_double(value, t.lambda);
            else p.fail("unknown key '" + key + "' in [transform]");
        } else if (section == "check") {
            EstimateParams& c = cfg.check;
            if (key == "theorem") {
                try {
                    c.theorem = theorem_from_name(value);
                } catch (const std::exception& e) {
                    p.fail(e.what());
                }
            } else if (key == "gamma") p.to_double(value, c.gamma);
            else if (key == "k") p.to_int(value, c.k);
            else if (key == "p") p.to_double(value, c.p);
            else if (key == "c0") p.to_double(value, c.C0);
            else if (key == "rtol") p.to_double(value, cfg.rtol);
            else if (key == "gamma_grid") {
                cfg.gamma_grid.clear();
                for (const auto& item : split_list(value)) {
                    double g;
                    if (p.to_double(item, g)) cfg.gamma_grid.push_back(g);
                }
            } else p.fail("unknown key '" + key + "' in [check]");
        } else if (section == "calibration") {
            if (key == "kind") {
                try {
                    cfg.calib_kind = constant_kind_from_string(value);
                } catch (const std::exception& e) {
                    p.fail(e.what());
                }
            } else if (key == "trials") p.to_int(value, cfg.calib_trials);
            else if (key == "seed") p.to_u64(value, cfg.calib_seed);
            else if (key == "n") p.to_int(value, cfg.calib_n);
            else if (key == "k") p.to_int(value, cfg.calib_k);
            else if (key == "p") p.to_double(value, cfg.calib_p);
            else p.fail("unknown key '" + key + "' in [calibration]");
        } else if (section == "output") {
            if (key == "directory") cfg.out_dir = value;
            else if (key == "svg") p.to_bool(value, cfg.emit_svg);
            else if (key == "json") p.to_bool(value, cfg.emit_json);
            else p.fail("unknown key '" + key + "' in [output]");
        }
    }

    if (cfg.has_simulation) {
        try {
            cfg.sim.validate();
        } catch (const std::exception& e) {
            p.errors.push_back(std::string("[simulation]: ") + e.what());
        }
    }
    if (cfg.has_transform) {
        try {
            cfg.transform.validate();
        } catch (const std::exception& e) {
            p.errors.push_back(std::string("[transform]: ") + e.what());
        }
    }
    if (cfg.has_check) {
        const EstimateParams& c = cfg.check;
        bool unit_factor =
            c.theorem == Theorem::T12 || c.theorem == Theorem::T14Upper || c.theorem == Theorem::T14Lower;
        if (c.C0 <= 0.0) p.errors.push_back("[check]: c0 must be positive");
        if (unit_factor && c.gamma < c.C0)
            p.errors.push_back("[check]: gamma must satisfy gamma >= C0 (threshold " +
                               format_g17(c.C0) + ")");
        if (!unit_factor && c.gamma <= 0.0)
            p.errors.push_back(
                "[check]: gamma must be positive and >= C0 * (initial norm)^(1 - beta), "
                "checked against the series at run time");
        if (cfg.has_simulation) {
            std::vector<std::string> menu{"t", "l2", "grad_linf"};
            for (double lp : cfg.sim.lp_exponents) menu.push_back(lp_label(lp));
            for (const auto& [kk, pp] : cfg.sim.dk_norms) menu.push_back(dkl_label(kk, pp));
            if (cfg.sim.besov) menu.push_back("besov_b0inf1");
            for (const std::string& col : {c.lhs_column(), c.drive_column()}) {
                if (std::find(menu.begin(), menu.end(), col) == menu.end())
                    p.errors.push_back("[check]: column '" + col +
                                       "' is not produced by the [simulation] norm menu");
            }
        }
    }
    if (cfg.has_calibration) {
        if (cfg.calib_trials < 1) p.errors.push_back("[calibration]: trials must be >= 1");
        if (cfg.calib_n < 16 || cfg.calib_n % 2 != 0)
            p.errors.push_back("[calibration]: n must be even and >= 16");
    }

    if (!p.errors.empty()) throw ConfigError(std::move(p.errors));
    return cfg;
}

}  // namespace apriori
