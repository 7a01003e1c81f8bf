#include "wabl/thermal_sim.hpp"

#include <algorithm>
#include <cmath>

namespace wabl {

void SimConfig::validate() const {
    if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
    // beta = 0 decouples the fan from the plant; degenerate but legal.
    if (!(beta >= 0.0)) throw DomainError("beta must be nonnegative");
    if (!(dt > 0.0)) throw DomainError("dt must be positive");
    if (!(dt * alpha < 1.0)) {
        throw DomainError("explicit stepping requires dt * alpha < 1");
    }
    if (!(horizon >= 0.0)) throw DomainError("horizon must be nonnegative");
    if (!(thermostat_hysteresis > 0.0)) throw DomainError("hysteresis must be positive");
    if (!(thermostat_speed >= 0.0)) throw DomainError("thermostat speed must be nonnegative");
}

double SimTrace::mean_fan_speed() const {
    if (samples.empty()) return 0.0;
    double total = 0.0;
    for (const TraceSample& s : samples) total += s.fan_speed;
    return total / static_cast<double>(samples.size());
}

double plant_step(double temperature, double fan_speed, const SimConfig& cfg) {
    return temperature +
           cfg.dt * (cfg.alpha * (cfg.t_outside - temperature) - cfg.beta * fan_speed);
}

namespace {

std::size_t step_count(const SimConfig& cfg) {
    return static_cast<std::size_t>(std::llround(cfg.horizon / cfg.dt));
}

} // namespace

SimTrace run_fuzzy(const SimConfig& cfg, const InferenceEngine& engine) {
    cfg.validate();
    const Interval universe = engine.rule_base().inputs().front().universe();

    SimTrace trace;
    trace.controller = "fuzzy";
    const std::size_t steps = step_count(cfg);
    trace.samples.reserve(steps + 1);

    double temperature = cfg.t_initial;
    for (std::size_t j = 0; j <= steps; ++j) {
        double sensed = temperature;
        if (sensed < universe.lo || sensed > universe.hi) {
            sensed = std::clamp(sensed, universe.lo, universe.hi);
            ++trace.clamped_samples;
        }
        const double fan = engine.crisp(sensed);
        trace.samples.push_back({static_cast<double>(j) * cfg.dt, temperature, fan});
        temperature = plant_step(temperature, fan, cfg);
    }
    return trace;
}

SimTrace run_fuzzy(const SimConfig& cfg, const RuleBase& rb, const WablParams& params,
                   bool normalize) {
    return run_fuzzy(cfg, InferenceEngine(rb, params, normalize));
}

SimTrace run_thermostat(const SimConfig& cfg) {
    cfg.validate();

    SimTrace trace;
    trace.controller = "thermostat";
    const std::size_t steps = step_count(cfg);
    trace.samples.reserve(steps + 1);

    double temperature = cfg.t_initial;
    bool fan_on = false;
    for (std::size_t j = 0; j <= steps; ++j) {
        if (temperature >= cfg.thermostat_setpoint + cfg.thermostat_hysteresis) {
            fan_on = true;
        } else if (temperature <= cfg.thermostat_setpoint - cfg.thermostat_hysteresis) {
            fan_on = false;
        }
        const double fan = fan_on ? cfg.thermostat_speed : 0.0;
        trace.samples.push_back({static_cast<double>(j) * cfg.dt, temperature, fan});
        temperature = plant_step(temperature, fan, cfg);
    }
    return trace;
}

OscillationMetrics oscillation_metric(const SimTrace& trace, double window) {
    if (trace.samples.empty()) {
        throw ArgumentError("trace is empty");
    }
    const double t_end = trace.samples.back().time;
    const double t_start = t_end - window;
    if (window <= 0.0 || t_start < trace.samples.front().time) {
        throw ArgumentError("metrics window (" + std::to_string(window) +
                            " min) does not fit inside the trace");
    }

    double lo = 0.0, hi = 0.0, sum = 0.0;
    std::size_t count = 0;
    for (const TraceSample& s : trace.samples) {
        if (s.time < t_start) continue;
        if (count == 0) {
            lo = hi = s.temperature;
        } else {
            lo = std::min(lo, s.temperature);
            hi = std::max(hi, s.temperature);
        }
        sum += s.temperature;
        ++count;
    }
    const double mean = sum / static_cast<double>(count);
    double dev = 0.0;
    for (const TraceSample& s : trace.samples) {
        if (s.time < t_start) continue;
        dev += std::abs(s.temperature - mean);
    }
    return {hi - lo, dev / static_cast<double>(count)};
}

} // namespace wabl
