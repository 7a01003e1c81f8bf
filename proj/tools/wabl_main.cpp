// Command-line front end: defuzzify terms, run inference, emit response
// curves and simulation traces, and sweep the defuzzifier parameters.
//
// Exit codes: 0 ok, 2 config/validation error, 3 unknown term,
// 4 no rule fires under normalization, 5 I/O error, 6 metrics window error.

#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wabl/config_io.hpp"
#include "wabl/defuzz.hpp"
#include "wabl/emit.hpp"
#include "wabl/scenarios.hpp"
#include "wabl/thermal_sim.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitUnknownTerm = 3;
constexpr int kExitNoRuleFires = 4;
constexpr int kExitIo = 5;
constexpr int kExitWindow = 6;

struct GlobalOptions {
    std::string config_path;
    std::optional<double> c_left;
    std::optional<double> c_right;
    std::optional<double> m;
    std::optional<bool> normalize;
    bool json = false;
    bool svg = false;
    std::string out;
};

/// Document defaults overridden by whichever of --c-left/--c-right/--m
/// were given. A lone --c-left implies c_right = 1 - c_left.
wabl::WablParams effective_params(const wabl::ControllerDocument& doc, const GlobalOptions& g) {
    double c_left = doc.params.c_left;
    double c_right = doc.params.c_right;
    if (g.c_left && g.c_right) {
        c_left = *g.c_left;
        c_right = *g.c_right;
    } else if (g.c_left) {
        c_left = *g.c_left;
        c_right = 1.0 - c_left;
    } else if (g.c_right) {
        c_right = *g.c_right;
        c_left = 1.0 - c_right;
    }
    const double m = g.m.value_or(doc.params.m);
    return wabl::WablParams(c_left, c_right, m);
}

bool effective_normalize(const wabl::ControllerDocument& doc, const GlobalOptions& g) {
    return g.normalize.value_or(doc.normalize);
}

std::vector<double> parse_value_list(const std::string& text, const std::string& flag) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw wabl::ConfigError(flag + ": '" + item + "' is not a number");
        }
    }
    if (values.empty()) {
        throw wabl::ConfigError(flag + ": empty value list");
    }
    return values;
}

wabl::Inputs parse_assignments(const std::vector<std::string>& sets) {
    wabl::Inputs inputs;
    for (const std::string& s : sets) {
        const auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw wabl::ConfigError("--set expects VAR=VALUE, got '" + s + "'");
        }
        const std::string var = s.substr(0, eq);
        const std::string value = s.substr(eq + 1);
        try {
            std::size_t used = 0;
            inputs[var] = std::stod(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
        } catch (const std::exception&) {
            throw wabl::ConfigError("--set " + var + ": '" + value + "' is not a number");
        }
    }
    return inputs;
}

int run_defuzz(const GlobalOptions& g, const std::string& term_spec, bool compare) {
    const wabl::ControllerDocument doc = wabl::load_controller(g.config_path);
    const wabl::WablParams params = effective_params(doc, g);

    const auto dot = term_spec.find('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 == term_spec.size()) {
        throw wabl::ConfigError("--term expects VARIABLE.TERM, got '" + term_spec + "'");
    }
    const std::string var_name = term_spec.substr(0, dot);
    const std::string term_name = term_spec.substr(dot + 1);

    const wabl::LinguisticVariable* var = nullptr;
    if (doc.rule_base.output().name() == var_name) {
        var = &doc.rule_base.output();
    } else {
        for (const auto& lv : doc.rule_base.inputs()) {
            if (lv.name() == var_name) var = &lv;
        }
    }
    if (var == nullptr) {
        throw wabl::UnknownTermError("no variable named '" + var_name + "'");
    }

    const wabl::PiecewiseLinearMF& mf = var->term(term_name);
    const double wabl_value = wabl::wabl_analytic(wabl::to_level_rep(mf), params);
    if (!compare) {
        std::cout << wabl::format_number(wabl_value) << "\n";
        return kExitOk;
    }
    std::cout << "wabl " << wabl::format_number(wabl_value) << "\n";
    std::cout << "coa " << wabl::format_number(wabl::centroid(mf)) << "\n";
    std::cout << "mom " << wabl::format_number(wabl::median_of_maximum(mf)) << "\n";
    return kExitOk;
}

int run_infer(const GlobalOptions& g, const std::vector<std::string>& sets) {
    const wabl::ControllerDocument doc = wabl::load_controller(g.config_path);
    const wabl::WablParams params = effective_params(doc, g);
    const bool normalize = effective_normalize(doc, g);

    const wabl::Inputs inputs = parse_assignments(sets);
    const wabl::InferenceResult result =
        wabl::infer(doc.rule_base, inputs, params, normalize);

    if (g.json) {
        nlohmann::ordered_json j;
        j["crisp_output"] = result.crisp_output;
        j["firing"] = result.firing;
        nlohmann::ordered_json terms;
        for (const auto& [name, value] : result.term_wabl) terms[name] = value;
        j["term_wabl"] = terms;
        j["normalized"] = result.normalized;
        j["any_rule_fired"] = result.any_rule_fired;
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }

    std::cout << "crisp_output " << wabl::format_number(result.crisp_output) << "\n";
    const auto& rules = doc.rule_base.rules();
    for (std::size_t r = 0; r < rules.size(); ++r) {
        std::cout << "rule " << r << " (";
        for (std::size_t a = 0; a < rules[r].antecedents.size(); ++a) {
            if (a > 0) std::cout << " & ";
            std::cout << rules[r].antecedents[a].first << "=" << rules[r].antecedents[a].second;
        }
        std::cout << " -> " << rules[r].then_term
                  << "): " << wabl::format_number(result.firing[r]) << "\n";
    }
    if (!result.any_rule_fired) {
        std::cout << "warning: no rule fired; raw output is 0\n";
    }
    return kExitOk;
}

int run_curve(const GlobalOptions& g, std::optional<double> from, std::optional<double> to,
              int steps) {
    const wabl::ControllerDocument doc = wabl::load_controller(g.config_path);
    const wabl::WablParams params = effective_params(doc, g);
    if (doc.rule_base.inputs().size() != 1) {
        throw wabl::ConfigError("curve needs a controller with exactly one input variable");
    }
    const wabl::Interval u = doc.rule_base.inputs().front().universe();
    const std::vector<double> grid =
        wabl::uniform_grid(from.value_or(u.lo), to.value_or(u.hi), steps);
    const wabl::ResponseCurve curve =
        wabl::response_curve(doc.rule_base, params, grid, effective_normalize(doc, g));

    const std::string csv = wabl::curve_csv(curve);
    if (g.out.empty()) {
        if (g.svg) {
            throw wabl::ConfigError("--svg needs --out to derive the SVG file name");
        }
        std::cout << csv;
        return kExitOk;
    }
    wabl::write_file(g.out, csv);
    if (g.svg) {
        std::filesystem::path svg_path(g.out);
        svg_path.replace_extension(".svg");
        const auto& in = doc.rule_base.inputs().front();
        const auto& out_var = doc.rule_base.output();
        wabl::write_file(svg_path, wabl::curve_svg(curve, in.name() + " [" + in.units() + "]",
                                                   out_var.name() + " [" + out_var.units() + "]"));
    }
    return kExitOk;
}

int run_sweep(const GlobalOptions& g, const std::vector<std::string>& sets,
              const std::string& c_lefts, const std::string& ms) {
    const wabl::ControllerDocument doc = wabl::load_controller(g.config_path);
    const bool normalize = effective_normalize(doc, g);
    const wabl::Inputs inputs = parse_assignments(sets);

    std::vector<double> c_values = c_lefts.empty()
                                       ? std::vector<double>{effective_params(doc, g).c_left}
                                       : parse_value_list(c_lefts, "--c-lefts");
    std::vector<double> m_values = ms.empty()
                                       ? std::vector<double>{effective_params(doc, g).m}
                                       : parse_value_list(ms, "--ms");
    std::sort(c_values.begin(), c_values.end());
    std::sort(m_values.begin(), m_values.end());
    for (double c : c_values) {
        if (c < 0.0 || c > 1.0) {
            throw wabl::ConfigError("--c-lefts: value " + wabl::format_number(c) +
                                    " outside [0, 1]");
        }
    }
    for (double m : m_values) {
        if (!(m > 0.0)) {
            throw wabl::ConfigError("--ms: value " + wabl::format_number(m) +
                                    " must be positive");
        }
    }

    std::vector<wabl::SweepRow> rows;
    rows.reserve(c_values.size() * m_values.size());
    for (double c : c_values) {
        for (double m : m_values) {
            const wabl::WablParams params = wabl::WablParams::with_left_weight(c, m);
            const double out =
                wabl::infer(doc.rule_base, inputs, params, normalize).crisp_output;
            rows.push_back({c, m, out});
        }
    }

    const std::string csv = wabl::sweep_csv(rows);
    if (g.out.empty()) {
        std::cout << csv;
    } else {
        wabl::write_file(g.out, csv);
    }
    return kExitOk;
}

int run_simulate(const GlobalOptions& g, const std::string& sim_path, double window) {
    const wabl::ControllerDocument doc = wabl::load_controller(g.config_path);
    const wabl::SimConfig cfg = wabl::load_sim_config(sim_path);
    const wabl::InferenceEngine engine(doc.rule_base, effective_params(doc, g),
                                       effective_normalize(doc, g));

    const wabl::SimTrace fuzzy = wabl::run_fuzzy(cfg, engine);
    const wabl::SimTrace thermostat = wabl::run_thermostat(cfg);

    wabl::OscillationMetrics fuzzy_metrics, thermostat_metrics;
    try {
        fuzzy_metrics = wabl::oscillation_metric(fuzzy, window);
        thermostat_metrics = wabl::oscillation_metric(thermostat, window);
    } catch (const wabl::ArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitWindow;
    }

    const std::string prefix = g.out.empty() ? std::string("sim") : g.out;
    wabl::write_file(prefix + "_fuzzy.csv", wabl::trace_csv(fuzzy));
    wabl::write_file(prefix + "_thermostat.csv", wabl::trace_csv(thermostat));

    if (fuzzy.clamped_samples > 0) {
        std::cerr << "warning: " << fuzzy.clamped_samples
                  << " samples clamped to the controller universe\n";
    }
    std::cout << "fuzzy peak_to_peak=" << wabl::format_number(fuzzy_metrics.peak_to_peak)
              << " mean_abs_dev=" << wabl::format_number(fuzzy_metrics.mean_abs_dev)
              << " mean_fan_speed=" << wabl::format_number(fuzzy.mean_fan_speed()) << "\n";
    std::cout << "thermostat peak_to_peak="
              << wabl::format_number(thermostat_metrics.peak_to_peak)
              << " mean_abs_dev=" << wabl::format_number(thermostat_metrics.mean_abs_dev)
              << " mean_fan_speed=" << wabl::format_number(thermostat.mean_fan_speed()) << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fuzzy-inference toolkit built around level-weighted averaging"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("-c,--config", g.config_path, "Controller document (JSON)");
    app.add_option("--c-left", g.c_left, "Left side weight override");
    app.add_option("--c-right", g.c_right, "Right side weight override");
    app.add_option("--m", g.m, "Weight exponent override");
    auto* norm_flag = app.add_flag("--normalize,!--no-normalize",
                                   "Divide by the total firing degree");
    app.add_flag("--json", g.json, "Emit machine-readable JSON where supported");
    app.add_flag("--svg", g.svg, "Also emit an SVG chart (curve)");
    app.add_option("--out", g.out, "Output file (curve, sweep) or prefix (simulate)");

    auto* defuzz_cmd = app.add_subcommand("defuzz", "Defuzzify a named term");
    std::string term_spec;
    bool compare = false;
    defuzz_cmd->add_option("--term", term_spec, "VARIABLE.TERM to defuzzify")->required();
    defuzz_cmd->add_flag("--compare", compare, "Also print COA and MOM");

    auto* infer_cmd = app.add_subcommand("infer", "Run the deduction for crisp inputs");
    std::vector<std::string> infer_sets;
    infer_cmd->add_option("--set", infer_sets, "Input assignment VAR=VALUE")->required();

    auto* curve_cmd = app.add_subcommand("curve", "Emit the input-output response curve");
    std::optional<double> curve_from, curve_to;
    int curve_steps = 600;
    curve_cmd->add_option("--from", curve_from, "Grid start (default: universe lower bound)");
    curve_cmd->add_option("--to", curve_to, "Grid end (default: universe upper bound)");
    curve_cmd->add_option("--steps", curve_steps, "Number of grid intervals (default 600)");

    auto* sweep_cmd = app.add_subcommand("sweep", "Sweep defuzzifier parameters at a fixed input");
    std::vector<std::string> sweep_sets;
    std::string sweep_c_lefts, sweep_ms;
    sweep_cmd->add_option("--set", sweep_sets, "Input assignment VAR=VALUE")->required();
    sweep_cmd->add_option("--c-lefts", sweep_c_lefts, "Comma-separated c_left values");
    sweep_cmd->add_option("--ms", sweep_ms, "Comma-separated exponent values");

    auto* sim_cmd = app.add_subcommand("simulate", "Closed-loop fuzzy vs thermostat comparison");
    std::string sim_path;
    double sim_window = 60.0;
    sim_cmd->add_option("--sim", sim_path, "Simulation config (JSON)")->required();
    sim_cmd->add_option("--window", sim_window, "Tail metrics window in minutes (default 60)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e); // --help
        }
        app.exit(e);
        return kExitConfig;
    }

    if (norm_flag->count() > 0) {
        g.normalize = norm_flag->as<bool>();
    }

    try {
        if (g.config_path.empty()) {
            throw wabl::ConfigError("--config is required");
        }
        if (defuzz_cmd->parsed()) return run_defuzz(g, term_spec, compare);
        if (infer_cmd->parsed()) return run_infer(g, infer_sets);
        if (curve_cmd->parsed()) return run_curve(g, curve_from, curve_to, curve_steps);
        if (sweep_cmd->parsed()) return run_sweep(g, sweep_sets, sweep_c_lefts, sweep_ms);
        if (sim_cmd->parsed()) return run_simulate(g, sim_path, sim_window);
        return kExitConfig;
    } catch (const wabl::UnknownTermError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnknownTerm;
    } catch (const wabl::NoRuleFiresError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoRuleFires;
    } catch (const wabl::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const wabl::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
}
