#include "wabl/config_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace wabl {

namespace {

using Json = nlohmann::ordered_json; // preserves term declaration order

void reject_unknown_fields(const Json& obj, const std::set<std::string>& allowed,
                           const std::string& path) {
    for (const auto& [key, value] : obj.items()) {
        if (allowed.find(key) == allowed.end()) {
            throw ConfigError("unknown field at " + path + "/" + key);
        }
    }
}

double require_number(const Json& obj, const std::string& key, const std::string& path) {
    if (!obj.contains(key)) {
        throw ConfigError("missing field " + path + "/" + key);
    }
    if (!obj[key].is_number()) {
        throw ConfigError("field " + path + "/" + key + " must be a number");
    }
    return obj[key].get<double>();
}

std::string require_string(const Json& obj, const std::string& key, const std::string& path) {
    if (!obj.contains(key)) {
        throw ConfigError("missing field " + path + "/" + key);
    }
    if (!obj[key].is_string()) {
        throw ConfigError("field " + path + "/" + key + " must be a string");
    }
    return obj[key].get<std::string>();
}

Interval parse_universe(const Json& node, const std::string& path) {
    if (!node.is_array() || node.size() != 2 || !node[0].is_number() || !node[1].is_number()) {
        throw ConfigError("field " + path + " must be a [lo, hi] pair");
    }
    return {node[0].get<double>(), node[1].get<double>()};
}

PiecewiseLinearMF parse_mf(const Json& node, Interval universe, const std::string& path) {
    if (!node.is_array() || node.empty()) {
        throw ConfigError("field " + path + " must be a nonempty array of [x, mu] pairs");
    }
    std::vector<MfPoint> pts;
    pts.reserve(node.size());
    for (std::size_t i = 0; i < node.size(); ++i) {
        const Json& p = node[i];
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
            throw ConfigError("field " + path + "/" + std::to_string(i) +
                              " must be an [x, mu] pair");
        }
        pts.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    try {
        return PiecewiseLinearMF(std::move(pts), universe);
    } catch (const Error& e) {
        throw ConfigError("invalid membership function at " + path + ": " + e.what());
    }
}

LinguisticVariable parse_variable(const Json& node, const std::string& path) {
    if (!node.is_object()) {
        throw ConfigError("field " + path + " must be an object");
    }
    reject_unknown_fields(node, {"name", "units", "universe", "terms"}, path);
    const std::string name = require_string(node, "name", path);
    const std::string units = node.contains("units") ? require_string(node, "units", path) : "";
    if (!node.contains("universe")) {
        throw ConfigError("missing field " + path + "/universe");
    }
    const Interval universe = parse_universe(node["universe"], path + "/universe");
    if (!node.contains("terms") || !node["terms"].is_object() || node["terms"].empty()) {
        throw ConfigError("field " + path + "/terms must be a nonempty object");
    }
    std::vector<LinguisticVariable::Term> terms;
    for (const auto& [term_name, mf_node] : node["terms"].items()) {
        terms.emplace_back(term_name,
                           parse_mf(mf_node, universe, path + "/terms/" + term_name));
    }
    try {
        return LinguisticVariable(name, units, universe, std::move(terms));
    } catch (const Error& e) {
        throw ConfigError(std::string("at ") + path + ": " + e.what());
    }
}

Rule parse_rule(const Json& node, const std::string& path) {
    if (!node.is_object()) {
        throw ConfigError("field " + path + " must be an object");
    }
    reject_unknown_fields(node, {"if", "then"}, path);
    if (!node.contains("if") || !node["if"].is_array() || node["if"].empty()) {
        throw ConfigError("field " + path + "/if must be a nonempty array");
    }
    Rule rule;
    for (std::size_t i = 0; i < node["if"].size(); ++i) {
        const Json& ant = node["if"][i];
        const std::string ant_path = path + "/if/" + std::to_string(i);
        if (!ant.is_object()) {
            throw ConfigError("field " + ant_path + " must be an object");
        }
        reject_unknown_fields(ant, {"var", "term"}, ant_path);
        rule.antecedents.emplace_back(require_string(ant, "var", ant_path),
                                      require_string(ant, "term", ant_path));
    }
    rule.then_term = require_string(node, "then", path);
    return rule;
}

Json parse_text(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(origin + ": " + e.what());
    }
}

void check_version(const Json& doc, const std::string& origin) {
    if (!doc.contains("version") || !doc["version"].is_number_integer() ||
        doc["version"].get<int>() != 1) {
        throw ConfigError(origin + ": field /version must be the integer 1");
    }
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot read " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

ControllerDocument parse_controller(const std::string& text, const std::string& origin) {
    const Json doc = parse_text(text, origin);
    if (!doc.is_object()) {
        throw ConfigError(origin + ": document must be an object");
    }
    reject_unknown_fields(doc, {"version", "inputs", "output", "rules", "defaults"}, "");
    check_version(doc, origin);

    if (!doc.contains("inputs") || !doc["inputs"].is_array() || doc["inputs"].empty()) {
        throw ConfigError("field /inputs must be a nonempty array");
    }
    std::vector<LinguisticVariable> inputs;
    for (std::size_t i = 0; i < doc["inputs"].size(); ++i) {
        inputs.push_back(parse_variable(doc["inputs"][i], "/inputs/" + std::to_string(i)));
    }
    if (!doc.contains("output")) {
        throw ConfigError("missing field /output");
    }
    LinguisticVariable output = parse_variable(doc["output"], "/output");

    if (!doc.contains("rules") || !doc["rules"].is_array() || doc["rules"].empty()) {
        throw ConfigError("field /rules must be a nonempty array");
    }
    std::vector<Rule> rules;
    for (std::size_t i = 0; i < doc["rules"].size(); ++i) {
        rules.push_back(parse_rule(doc["rules"][i], "/rules/" + std::to_string(i)));
    }

    double c_left = 0.5, c_right = 0.5, m = 2.0;
    bool normalize = false;
    if (doc.contains("defaults")) {
        const Json& d = doc["defaults"];
        if (!d.is_object()) {
            throw ConfigError("field /defaults must be an object");
        }
        reject_unknown_fields(d, {"c_left", "c_right", "m", "normalize"}, "/defaults");
        if (d.contains("c_left")) c_left = require_number(d, "c_left", "/defaults");
        if (d.contains("c_right")) {
            c_right = require_number(d, "c_right", "/defaults");
        } else if (d.contains("c_left")) {
            c_right = 1.0 - c_left;
        }
        if (d.contains("m")) m = require_number(d, "m", "/defaults");
        if (d.contains("normalize")) {
            if (!d["normalize"].is_boolean()) {
                throw ConfigError("field /defaults/normalize must be a boolean");
            }
            normalize = d["normalize"].get<bool>();
        }
    }

    try {
        return ControllerDocument{RuleBase(std::move(inputs), std::move(output), std::move(rules)),
                                  WablParams(c_left, c_right, m), normalize, 1};
    } catch (const ConfigError&) {
        throw;
    } catch (const UnknownTermError& e) {
        throw ConfigError(origin + ": " + e.what());
    } catch (const Error& e) {
        throw ConfigError(origin + ": " + e.what());
    }
}

ControllerDocument load_controller(const std::filesystem::path& path) {
    return parse_controller(slurp(path), path.string());
}

SimConfig parse_sim_config(const std::string& text, const std::string& origin) {
    const Json doc = parse_text(text, origin);
    if (!doc.is_object()) {
        throw ConfigError(origin + ": document must be an object");
    }
    reject_unknown_fields(doc,
                          {"version", "t_outside", "alpha", "beta", "dt", "horizon", "t_initial",
                           "thermostat_setpoint", "thermostat_hysteresis", "thermostat_speed"},
                          "");
    check_version(doc, origin);

    SimConfig cfg;
    cfg.t_outside = require_number(doc, "t_outside", "");
    cfg.alpha = require_number(doc, "alpha", "");
    cfg.beta = require_number(doc, "beta", "");
    cfg.dt = require_number(doc, "dt", "");
    cfg.horizon = require_number(doc, "horizon", "");
    cfg.t_initial = require_number(doc, "t_initial", "");
    cfg.thermostat_setpoint = require_number(doc, "thermostat_setpoint", "");
    cfg.thermostat_hysteresis = require_number(doc, "thermostat_hysteresis", "");
    cfg.thermostat_speed = require_number(doc, "thermostat_speed", "");
    try {
        cfg.validate();
    } catch (const Error& e) {
        throw ConfigError(origin + ": " + e.what());
    }
    return cfg;
}

SimConfig load_sim_config(const std::filesystem::path& path) {
    return parse_sim_config(slurp(path), path.string());
}

} // namespace wabl
