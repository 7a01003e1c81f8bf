#ifndef WABL_EMIT_HPP_
#define WABL_EMIT_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "wabl/scenarios.hpp"
#include "wabl/thermal_sim.hpp"

namespace wabl {

/// Fixed 6-significant-digit decimal rendering used by every CSV and SVG
/// emitter; keeps files byte-stable across runs.
std::string format_number(double value);

/// "t,v" header, one row per sample, LF line endings.
std::string curve_csv(const ResponseCurve& curve);

/// "time,temperature,fan_speed" header.
std::string trace_csv(const SimTrace& trace);

struct SweepRow {
    double c_left = 0.0;
    double m = 0.0;
    double output = 0.0;
};

/// "c_left,m,output" header.
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Minimal standalone SVG line chart of the curve.
std::string curve_svg(const ResponseCurve& curve, const std::string& x_label,
                      const std::string& y_label);

/// Writes via a temporary file and rename, so failures leave no partial
/// output behind. Throws IoError.
void write_file(const std::filesystem::path& path, const std::string& content);

} // namespace wabl

#endif
