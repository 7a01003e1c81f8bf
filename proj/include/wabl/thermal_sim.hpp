#ifndef WABL_THERMAL_SIM_HPP_
#define WABL_THERMAL_SIM_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "wabl/inference.hpp"

namespace wabl {

/// First-order room model dT/dt = alpha * (t_outside - T) - beta * v,
/// stepped explicitly with step dt, plus the bang-bang comparison
/// controller's parameters.
struct SimConfig {
    double t_outside = 35.0;            // degrees C
    double alpha = 0.1;                 // 1/min, leakage toward outside
    double beta = 0.002;                // degrees C per (min * rot/min)
    double dt = 0.1;                    // min
    double horizon = 600.0;             // min
    double t_initial = 30.0;            // degrees C
    double thermostat_setpoint = 24.0;  // degrees C
    double thermostat_hysteresis = 1.0; // degrees C
    double thermostat_speed = 800.0;    // rot/min when on

    /// Throws DomainError on parameter violations, including the explicit
    /// stability bound 0 < dt * alpha < 1.
    void validate() const;
};

struct TraceSample {
    double time = 0.0;        // min
    double temperature = 0.0; // degrees C
    double fan_speed = 0.0;   // rot/min
};

struct SimTrace {
    std::vector<TraceSample> samples;
    std::string controller;           // "fuzzy" or "thermostat"
    std::size_t clamped_samples = 0;  // inputs clamped to the rule-base universe

    double mean_fan_speed() const;
};

/// One explicit step: T + dt * (alpha * (t_outside - T) - beta * v).
double plant_step(double temperature, double fan_speed, const SimConfig& cfg);

/// Closed loop with the fuzzy controller choosing the fan speed each step.
/// Temperatures outside the rule-base universe are clamped for inference
/// and counted in clamped_samples.
SimTrace run_fuzzy(const SimConfig& cfg, const InferenceEngine& engine);
SimTrace run_fuzzy(const SimConfig& cfg, const RuleBase& rb, const WablParams& params,
                   bool normalize = false);

/// Closed loop with a bang-bang thermostat: fan on at thermostat_speed
/// once T >= setpoint + hysteresis, off once T <= setpoint - hysteresis,
/// previous state held in between. The fan starts off.
SimTrace run_thermostat(const SimConfig& cfg);

struct OscillationMetrics {
    double peak_to_peak = 0.0;  // degrees C
    double mean_abs_dev = 0.0;  // degrees C
};

/// Temperature swing over the trailing `window` minutes of the trace.
/// Throws ArgumentError when the window does not fit inside the trace.
OscillationMetrics oscillation_metric(const SimTrace& trace, double window);

} // namespace wabl

#endif
