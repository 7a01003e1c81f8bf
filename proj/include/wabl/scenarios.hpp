#ifndef WABL_SCENARIOS_HPP_
#define WABL_SCENARIOS_HPP_

#include <span>
#include <vector>

#include "wabl/inference.hpp"

namespace wabl {

/// Built-in fan controller for a room conditioner: temperature in [0, 60]
/// degrees C with terms lower/middle/higher, fan speed in [0, 1000]
/// rot/min with terms lower/middle/higher, and the three rules
/// lower->lower, middle->middle, higher->higher.
RuleBase build_conditioner();

/// Parameters the conditioner scenario runs with unless a document
/// overrides them: equal side weights, exponent 2, no normalization.
WablParams conditioner_default_params();

struct CurveSample {
    double t = 0.0; // input value
    double v = 0.0; // crisp output
};

/// Input-to-output map of a single-input controller over a grid.
struct ResponseCurve {
    std::vector<CurveSample> samples;
    WablParams params;
};

/// Evaluates the controller at every grid point. The grid must be
/// strictly increasing and lie within the input universe.
ResponseCurve response_curve(const RuleBase& rb, const WablParams& params,
                             std::span<const double> t_grid, bool normalize = false);

/// `steps` equal intervals from `from` to `to` (steps + 1 points);
/// a single point when from == to. Throws ArgumentError for steps < 1
/// or from > to.
std::vector<double> uniform_grid(double from, double to, int steps);

} // namespace wabl

#endif
