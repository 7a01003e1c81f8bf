#ifndef WABL_CONFIG_IO_HPP_
#define WABL_CONFIG_IO_HPP_

#include <filesystem>
#include <string>

#include "wabl/inference.hpp"
#include "wabl/thermal_sim.hpp"

namespace wabl {

/// Parsed controller document: the rule base plus the parameter defaults
/// the document carries (toolkit defaults where the section is absent).
struct ControllerDocument {
    RuleBase rule_base;
    WablParams params;
    bool normalize = false;
    int version = 1;
};

/// Parses a controller document. The schema is strict: unknown fields are
/// rejected with their path. `origin` names the source in error messages
/// (file name, "<string>", ...).
ControllerDocument parse_controller(const std::string& text, const std::string& origin);
ControllerDocument load_controller(const std::filesystem::path& path);

/// Simulation-config documents share the structured format: a flat object
/// with the SimConfig field names plus a version tag.
SimConfig parse_sim_config(const std::string& text, const std::string& origin);
SimConfig load_sim_config(const std::filesystem::path& path);

} // namespace wabl

#endif
