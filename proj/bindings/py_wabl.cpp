// Python bindings: the main operations of the toolkit exposed 1:1.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "wabl/config_io.hpp"
#include "wabl/defuzz.hpp"
#include "wabl/emit.hpp"
#include "wabl/scenarios.hpp"
#include "wabl/thermal_sim.hpp"

namespace py = pybind11;
using namespace wabl;

namespace {

std::vector<std::pair<double, double>> side_points(const std::vector<LevelPoint>& pts) {
    std::vector<std::pair<double, double>> out;
    out.reserve(pts.size());
    for (const LevelPoint& p : pts) out.emplace_back(p.xi, p.value);
    return out;
}

} // namespace

PYBIND11_MODULE(wabl, m) {
    m.doc() = "Fuzzy-inference toolkit built around level-weighted averaging";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<UnknownTermError>(m, "UnknownTermError", PyExc_KeyError);
    py::register_exception<NoRuleFiresError>(m, "NoRuleFiresError", PyExc_RuntimeError);
    py::register_exception<RepresentationError>(m, "RepresentationError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<RangeError>(m, "RangeError", PyExc_ValueError);
    py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    py::class_<Interval>(m, "Interval")
        .def(py::init<double, double>(), py::arg("lo"), py::arg("hi"))
        .def_readonly("lo", &Interval::lo)
        .def_readonly("hi", &Interval::hi)
        .def("width", &Interval::width)
        .def("contains", &Interval::contains)
        .def("__repr__", [](const Interval& i) {
            return "Interval(" + std::to_string(i.lo) + ", " + std::to_string(i.hi) + ")";
        });

    py::class_<PiecewiseLinearMF>(m, "PiecewiseLinearMF")
        .def(py::init([](const std::vector<std::pair<double, double>>& points,
                         std::pair<double, double> universe) {
                 std::vector<MfPoint> pts;
                 pts.reserve(points.size());
                 for (const auto& [x, mu] : points) pts.push_back({x, mu});
                 return PiecewiseLinearMF(std::move(pts),
                                          Interval{universe.first, universe.second});
             }),
             py::arg("points"), py::arg("universe"),
             "Build from [(x, mu), ...] breakpoints over a (lo, hi) universe")
        .def("membership", &PiecewiseLinearMF::membership, py::arg("x"))
        .def_property_readonly("universe", &PiecewiseLinearMF::universe)
        .def_property_readonly("is_singleton", &PiecewiseLinearMF::is_singleton)
        .def_property_readonly("points", [](const PiecewiseLinearMF& mf) {
            std::vector<std::pair<double, double>> out;
            for (const MfPoint& p : mf.points()) out.emplace_back(p.x, p.mu);
            return out;
        });

    m.def("triangular_mf", [](double a, double peak, double b, std::pair<double, double> u) {
        return triangular_mf(a, peak, b, {u.first, u.second});
    });
    m.def("trapezoidal_mf",
          [](double a, double b, double c, double d, std::pair<double, double> u) {
              return trapezoidal_mf(a, b, c, d, {u.first, u.second});
          });
    m.def("singleton_mf", [](double x0, std::pair<double, double> u) {
        return singleton_mf(x0, {u.first, u.second});
    });

    py::class_<LevelRep>(m, "LevelRep")
        .def(py::init([](const std::vector<std::pair<double, double>>& left,
                         const std::vector<std::pair<double, double>>& right) {
                 std::vector<LevelPoint> l, r;
                 for (const auto& [xi, v] : left) l.push_back({xi, v});
                 for (const auto& [xi, v] : right) r.push_back({xi, v});
                 return LevelRep(std::move(l), std::move(r));
             }),
             py::arg("left"), py::arg("right"),
             "Build from [(level, value), ...] breakpoints per side")
        .def_static("singleton", &LevelRep::singleton, py::arg("x0"))
        .def("left", &LevelRep::left, py::arg("xi"))
        .def("right", &LevelRep::right, py::arg("xi"))
        .def("membership", &LevelRep::membership, py::arg("x"))
        .def_property_readonly("support", &LevelRep::support)
        .def_property_readonly("core", &LevelRep::core)
        .def_property_readonly(
            "left_points", [](const LevelRep& r) { return side_points(r.left_points()); })
        .def_property_readonly(
            "right_points", [](const LevelRep& r) { return side_points(r.right_points()); });

    m.def("to_level_rep", &to_level_rep, py::arg("mf"));
    m.def("level_add", &level_add, py::arg("a"), py::arg("b"));

    py::class_<WablParams>(m, "WablParams")
        .def(py::init<double, double, double>(), py::arg("c_left"), py::arg("c_right"),
             py::arg("m"))
        .def_static("symmetric", &WablParams::symmetric, py::arg("m"))
        .def_static("with_left_weight", &WablParams::with_left_weight, py::arg("c_left"),
                    py::arg("m"))
        .def_readonly("c_left", &WablParams::c_left)
        .def_readonly("c_right", &WablParams::c_right)
        .def_readonly("m", &WablParams::m)
        .def("__repr__", [](const WablParams& p) {
            return "WablParams(c_left=" + std::to_string(p.c_left) +
                   ", c_right=" + std::to_string(p.c_right) + ", m=" + std::to_string(p.m) + ")";
        });

    m.def("weight_density", &weight_density, py::arg("params"), py::arg("xi"));
    m.def("wabl_analytic", &wabl_analytic, py::arg("rep"), py::arg("params"));
    m.def("wabl_quadrature", &wabl_quadrature, py::arg("rep"), py::arg("params"),
          py::arg("nodes"));
    m.def("centroid", &centroid, py::arg("mf"));
    m.def("median_of_maximum", &median_of_maximum, py::arg("mf"));

    py::class_<LinguisticVariable>(m, "LinguisticVariable")
        .def(py::init([](const std::string& name, const std::string& units,
                         std::pair<double, double> universe,
                         const std::vector<std::pair<std::string, PiecewiseLinearMF>>& terms) {
                 return LinguisticVariable(name, units, {universe.first, universe.second}, terms);
             }),
             py::arg("name"), py::arg("units"), py::arg("universe"), py::arg("terms"))
        .def_property_readonly("name", &LinguisticVariable::name)
        .def_property_readonly("units", &LinguisticVariable::units)
        .def_property_readonly("universe", &LinguisticVariable::universe)
        .def("term", &LinguisticVariable::term, py::arg("term_name"))
        .def("term_names",
             [](const LinguisticVariable& lv) {
                 std::vector<std::string> names;
                 for (const auto& [n, mf] : lv.terms()) names.push_back(n);
                 return names;
             })
        .def("membership", &LinguisticVariable::membership, py::arg("term_name"), py::arg("x"));

    py::class_<Rule>(m, "Rule")
        .def(py::init([](const std::vector<std::pair<std::string, std::string>>& antecedents,
                         const std::string& then_term) {
                 return Rule{antecedents, then_term};
             }),
             py::arg("antecedents"), py::arg("then_term"))
        .def_readonly("antecedents", &Rule::antecedents)
        .def_readonly("then_term", &Rule::then_term);

    py::class_<RuleBase>(m, "RuleBase")
        .def(py::init<std::vector<LinguisticVariable>, LinguisticVariable, std::vector<Rule>>(),
             py::arg("inputs"), py::arg("output"), py::arg("rules"))
        .def_property_readonly("inputs", &RuleBase::inputs)
        .def_property_readonly("output", &RuleBase::output)
        .def_property_readonly("rules", &RuleBase::rules);

    py::class_<InferenceResult>(m, "InferenceResult")
        .def_readonly("crisp_output", &InferenceResult::crisp_output)
        .def_readonly("firing", &InferenceResult::firing)
        .def_readonly("term_wabl", &InferenceResult::term_wabl)
        .def_readonly("normalized", &InferenceResult::normalized)
        .def_readonly("any_rule_fired", &InferenceResult::any_rule_fired)
        .def("__repr__", [](const InferenceResult& r) {
            return "InferenceResult(crisp_output=" + std::to_string(r.crisp_output) + ")";
        });

    m.def("firing_degrees", &firing_degrees, py::arg("rule_base"), py::arg("inputs"));
    m.def("defuzzify_terms", &defuzzify_terms, py::arg("rule_base"), py::arg("params"));
    m.def("infer", &infer, py::arg("rule_base"), py::arg("inputs"), py::arg("params"),
          py::arg("normalize") = false);

    py::class_<InferenceEngine>(m, "InferenceEngine")
        .def(py::init<RuleBase, WablParams, bool>(), py::arg("rule_base"), py::arg("params"),
             py::arg("normalize") = false)
        .def("infer", &InferenceEngine::infer, py::arg("inputs"))
        .def("crisp", &InferenceEngine::crisp, py::arg("input_value"))
        .def_property_readonly("params", &InferenceEngine::params)
        .def_property_readonly("term_values", &InferenceEngine::term_values);

    m.def("build_conditioner", &build_conditioner);
    m.def("conditioner_default_params", &conditioner_default_params);

    py::class_<CurveSample>(m, "CurveSample")
        .def_readonly("t", &CurveSample::t)
        .def_readonly("v", &CurveSample::v);
    py::class_<ResponseCurve>(m, "ResponseCurve")
        .def_readonly("samples", &ResponseCurve::samples)
        .def_readonly("params", &ResponseCurve::params);

    m.def(
        "response_curve",
        [](const RuleBase& rb, const WablParams& params, const std::vector<double>& grid,
           bool normalize) { return response_curve(rb, params, grid, normalize); },
        py::arg("rule_base"), py::arg("params"), py::arg("t_grid"),
        py::arg("normalize") = false);
    m.def("uniform_grid", &uniform_grid, py::arg("from_value"), py::arg("to_value"),
          py::arg("steps"));

    py::class_<SimConfig>(m, "SimConfig")
        .def(py::init<>())
        .def_readwrite("t_outside", &SimConfig::t_outside)
        .def_readwrite("alpha", &SimConfig::alpha)
        .def_readwrite("beta", &SimConfig::beta)
        .def_readwrite("dt", &SimConfig::dt)
        .def_readwrite("horizon", &SimConfig::horizon)
        .def_readwrite("t_initial", &SimConfig::t_initial)
        .def_readwrite("thermostat_setpoint", &SimConfig::thermostat_setpoint)
        .def_readwrite("thermostat_hysteresis", &SimConfig::thermostat_hysteresis)
        .def_readwrite("thermostat_speed", &SimConfig::thermostat_speed)
        .def("validate", &SimConfig::validate);

    py::class_<TraceSample>(m, "TraceSample")
        .def_readonly("time", &TraceSample::time)
        .def_readonly("temperature", &TraceSample::temperature)
        .def_readonly("fan_speed", &TraceSample::fan_speed);
    py::class_<SimTrace>(m, "SimTrace")
        .def_readonly("samples", &SimTrace::samples)
        .def_readonly("controller", &SimTrace::controller)
        .def_readonly("clamped_samples", &SimTrace::clamped_samples)
        .def("mean_fan_speed", &SimTrace::mean_fan_speed);

    m.def("plant_step", &plant_step, py::arg("temperature"), py::arg("fan_speed"),
          py::arg("cfg"));
    m.def(
        "run_fuzzy",
        [](const SimConfig& cfg, const InferenceEngine& engine) { return run_fuzzy(cfg, engine); },
        py::arg("cfg"), py::arg("engine"));
    m.def("run_thermostat", &run_thermostat, py::arg("cfg"));

    py::class_<OscillationMetrics>(m, "OscillationMetrics")
        .def_readonly("peak_to_peak", &OscillationMetrics::peak_to_peak)
        .def_readonly("mean_abs_dev", &OscillationMetrics::mean_abs_dev);
    m.def("oscillation_metric", &oscillation_metric, py::arg("trace"), py::arg("window"));

    py::class_<ControllerDocument>(m, "ControllerDocument")
        .def_readonly("rule_base", &ControllerDocument::rule_base)
        .def_readonly("params", &ControllerDocument::params)
        .def_readonly("normalize", &ControllerDocument::normalize)
        .def_readonly("version", &ControllerDocument::version);

    m.def("parse_controller", &parse_controller, py::arg("text"),
          py::arg("origin") = "<string>");
    m.def("load_controller", &load_controller, py::arg("path"));
    m.def("parse_sim_config", &parse_sim_config, py::arg("text"),
          py::arg("origin") = "<string>");
    m.def("load_sim_config", &load_sim_config, py::arg("path"));

    m.def("curve_csv", &curve_csv, py::arg("curve"));
    m.def("trace_csv", &trace_csv, py::arg("trace"));

    m.attr("__version__") = "0.1.0";
}
