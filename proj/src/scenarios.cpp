#include "wabl/scenarios.hpp"

#include <string>

namespace wabl {

RuleBase build_conditioner() {
    const Interval celsius{0.0, 60.0};
    LinguisticVariable temperature(
        "temperature", "C", celsius,
        {
            {"lower", PiecewiseLinearMF({{12.0, 1.0}, {20.0, 0.0}}, celsius)},
            {"middle", PiecewiseLinearMF({{12.0, 0.0}, {20.0, 1.0}, {30.0, 0.0}}, celsius)},
            {"higher", PiecewiseLinearMF({{20.0, 0.0}, {30.0, 1.0}}, celsius)},
        });

    const Interval rpm{0.0, 1000.0};
    LinguisticVariable speed(
        "speed", "rot/min", rpm,
        {
            {"lower", PiecewiseLinearMF({{200.0, 1.0}, {400.0, 0.0}}, rpm)},
            {"middle", PiecewiseLinearMF({{200.0, 0.0}, {400.0, 1.0}, {600.0, 0.0}}, rpm)},
            {"higher", PiecewiseLinearMF({{400.0, 0.0}, {600.0, 1.0}}, rpm)},
        });

    std::vector<Rule> rules = {
        {{{"temperature", "lower"}}, "lower"},
        {{{"temperature", "middle"}}, "middle"},
        {{{"temperature", "higher"}}, "higher"},
    };
    return RuleBase({temperature}, speed, std::move(rules));
}

WablParams conditioner_default_params() { return WablParams::symmetric(2.0); }

ResponseCurve response_curve(const RuleBase& rb, const WablParams& params,
                             std::span<const double> t_grid, bool normalize) {
    if (rb.inputs().size() != 1) {
        throw ArgumentError("response curve needs a rule base with exactly one input");
    }
    if (t_grid.empty()) {
        throw ArgumentError("response curve needs a nonempty grid");
    }
    const LinguisticVariable& in = rb.inputs().front();
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (i > 0 && t_grid[i] <= t_grid[i - 1]) {
            throw ArgumentError("grid values must be strictly increasing");
        }
        if (!in.universe().contains(t_grid[i])) {
            throw DomainError("grid point " + std::to_string(t_grid[i]) +
                              " outside the universe of '" + in.name() + "'");
        }
    }

    const InferenceEngine engine(rb, params, normalize);
    ResponseCurve curve{{}, params};
    curve.samples.reserve(t_grid.size());
    for (double t : t_grid) {
        try {
            curve.samples.push_back({t, engine.crisp(t)});
        } catch (const Error& e) {
            throw ArgumentError("at grid point " + std::to_string(t) + ": " + e.what());
        }
    }
    return curve;
}

std::vector<double> uniform_grid(double from, double to, int steps) {
    if (from > to) {
        throw ArgumentError("grid start exceeds grid end");
    }
    if (from == to) {
        return {from};
    }
    if (steps < 1) {
        throw ArgumentError("grid needs at least one step");
    }
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(steps) + 1);
    for (int j = 0; j <= steps; ++j) {
        grid.push_back(from + (to - from) * static_cast<double>(j) / steps);
    }
    grid.back() = to;
    return grid;
}

} // namespace wabl
