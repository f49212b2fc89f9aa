#include "minsky/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace minsky {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::string& section,
                         const std::set<std::string>& known) {
    for (const auto& item : obj.items()) {
        if (!known.count(item.key())) {
            const std::string path =
                section.empty() ? item.key() : section + "." + item.key();
            throw ConfigError(path + ": unknown key");
        }
    }
}

double get_number(const json& obj, const std::string& section, const std::string& key,
                  double fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number()) {
        throw ConfigError(section + "." + key + ": expected a number");
    }
    return v.get<double>();
}

std::uint64_t get_seed(const json& obj, const std::string& key, std::uint64_t fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number_unsigned() && !v.is_number_integer()) {
        throw ConfigError("driver." + key + ": expected an integer seed");
    }
    return v.get<std::uint64_t>();
}

ModelParams parse_params(const json& obj) {
    reject_unknown_keys(obj, "params",
                        {"r", "delta", "nu", "theta1", "theta2", "eta1", "eta2", "d0",
                         "population", "y0", "phillips"});
    ModelParams p;
    p.r = get_number(obj, "params", "r", p.r);
    p.delta = get_number(obj, "params", "delta", p.delta);
    p.nu = get_number(obj, "params", "nu", p.nu);
    p.theta1 = get_number(obj, "params", "theta1", p.theta1);
    p.theta2 = get_number(obj, "params", "theta2", p.theta2);
    p.eta1 = get_number(obj, "params", "eta1", p.eta1);
    p.eta2 = get_number(obj, "params", "eta2", p.eta2);
    p.d0 = get_number(obj, "params", "d0", p.d0);
    p.population = get_number(obj, "params", "population", p.population);
    p.y0 = get_number(obj, "params", "y0", p.y0);
    if (obj.contains("phillips")) {
        const json& ph = obj.at("phillips");
        if (!ph.is_object()) throw ConfigError("params.phillips: expected an object");
        reject_unknown_keys(ph, "params.phillips", {"c1", "c2", "c3", "c4"});
        p.phillips.c1 = get_number(ph, "params.phillips", "c1", p.phillips.c1);
        p.phillips.c2 = get_number(ph, "params.phillips", "c2", p.phillips.c2);
        p.phillips.c3 = get_number(ph, "params.phillips", "c3", p.phillips.c3);
        p.phillips.c4 = get_number(ph, "params.phillips", "c4", p.phillips.c4);
    }
    validate(p);
    return p;
}

ProductivityDriver parse_driver(const json& obj) {
    if (!obj.is_object()) throw ConfigError("driver: expected an object");
    std::string kind = "constant";
    if (obj.contains("kind")) {
        if (!obj.at("kind").is_string()) throw ConfigError("driver.kind: expected a string");
        kind = obj.at("kind").get<std::string>();
    }

    if (kind == "constant") {
        reject_unknown_keys(obj, "driver", {"kind", "alpha"});
        return ConstantDriver{get_number(obj, "driver", "alpha", 0.02)};
    }
    if (kind == "step") {
        reject_unknown_keys(obj, "driver", {"kind", "alpha_before", "alpha_after", "t_switch"});
        StepDriver d;
        d.alpha_before = get_number(obj, "driver", "alpha_before", d.alpha_before);
        d.alpha_after = get_number(obj, "driver", "alpha_after", d.alpha_after);
        d.t_switch = get_number(obj, "driver", "t_switch", d.t_switch);
        if (!(d.t_switch >= 0.0)) throw ConfigError("driver.t_switch: must be >= 0");
        return d;
    }
    if (kind == "ramp") {
        reject_unknown_keys(obj, "driver",
                            {"kind", "alpha_before", "alpha_after", "t_start", "t_end"});
        RampDriver d;
        d.alpha_before = get_number(obj, "driver", "alpha_before", d.alpha_before);
        d.alpha_after = get_number(obj, "driver", "alpha_after", d.alpha_after);
        d.t_start = get_number(obj, "driver", "t_start", d.t_start);
        d.t_end = get_number(obj, "driver", "t_end", d.t_end);
        if (!(d.t_end > d.t_start)) throw ConfigError("driver.t_end: must exceed t_start");
        return d;
    }
    if (kind == "stochastic") {
        reject_unknown_keys(obj, "driver",
                            {"kind", "mean", "std_dev", "seed", "mean_after", "t_switch"});
        StochasticAnnualDriver d;
        d.mean = get_number(obj, "driver", "mean", d.mean);
        d.std_dev = get_number(obj, "driver", "std_dev", d.std_dev);
        if (!(d.std_dev >= 0.0)) throw ConfigError("driver.std_dev: must be >= 0");
        d.seed = get_seed(obj, "seed", d.seed);
        d.mean_after = get_number(obj, "driver", "mean_after", d.mean);
        d.t_switch = get_number(obj, "driver", "t_switch", d.t_switch);
        return d;
    }
    throw ConfigError("driver.kind: '" + kind +
                      "' is not one of constant, step, ramp, stochastic");
}

IntegrationConfig parse_integration(const json& obj) {
    reject_unknown_keys(obj, "integration",
                        {"dt", "horizon", "record_stride", "eps_singularity"});
    IntegrationConfig c;
    c.dt = get_number(obj, "integration", "dt", c.dt);
    c.horizon = get_number(obj, "integration", "horizon", c.horizon);
    c.eps_singularity = get_number(obj, "integration", "eps_singularity", c.eps_singularity);
    if (obj.contains("record_stride")) {
        const json& v = obj.at("record_stride");
        if (!v.is_number_integer()) {
            throw ConfigError("integration.record_stride: expected an integer");
        }
        c.record_stride = v.get<int>();
    }
    validate(c);
    return c;
}

std::optional<SystemState> parse_init(const json& obj) {
    if (!obj.is_object()) throw ConfigError("init: expected an object");
    if (obj.contains("standard")) {
        reject_unknown_keys(obj, "init", {"standard"});
        if (!obj.at("standard").is_boolean() || !obj.at("standard").get<bool>()) {
            throw ConfigError("init.standard: must be true (or give the four state fields)");
        }
        return std::nullopt;
    }
    reject_unknown_keys(obj, "init", {"d_target", "debt", "employment", "wage_share"});
    for (const char* key : {"d_target", "debt", "employment", "wage_share"}) {
        if (!obj.contains(key)) {
            throw ConfigError(std::string("init.") + key + ": required for an explicit state");
        }
    }
    SystemState s;
    s.d_target = get_number(obj, "init", "d_target", 0.0);
    s.debt = get_number(obj, "init", "debt", 0.0);
    s.employment = get_number(obj, "init", "employment", 0.0);
    s.wage_share = get_number(obj, "init", "wage_share", 0.0);
    return s;
}

}  // namespace

Scenario parse_scenario_json(const std::string& text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(origin + ": " + e.what());
    }
    if (!doc.is_object()) throw ConfigError(origin + ": top level must be an object");
    reject_unknown_keys(doc, "",
                        {"schema_version", "params", "driver", "integration", "init"});
    if (doc.contains("schema_version")) {
        if (!doc.at("schema_version").is_number_integer() ||
            doc.at("schema_version").get<int>() != 1) {
            throw ConfigError("schema_version: this build reads version 1");
        }
    }

    Scenario s;
    s.name = origin;
    if (doc.contains("params")) {
        if (!doc.at("params").is_object()) throw ConfigError("params: expected an object");
        s.params = parse_params(doc.at("params"));
    }
    if (doc.contains("driver")) s.driver = parse_driver(doc.at("driver"));
    if (doc.contains("integration")) {
        if (!doc.at("integration").is_object()) {
            throw ConfigError("integration: expected an object");
        }
        s.config = parse_integration(doc.at("integration"));
    }
    if (doc.contains("init")) s.init = parse_init(doc.at("init"));
    return s;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario_json(buf.str(), path);
}

}  // namespace minsky
