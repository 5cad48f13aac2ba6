#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "wsnsim/sim.hpp"

namespace wsnsim {

/// One layer of configuration: everything optional so layers can stack.
/// Precedence: command-line flags > config file > built-in defaults.
struct ConfigValues {
    std::optional<std::uint32_t> nodes;
    std::optional<std::uint32_t> events;
    std::optional<std::uint32_t> trials;
    std::optional<std::uint32_t> recluster_period;
    std::optional<std::uint32_t> k_dup;
    std::optional<std::string> protocol;
    std::optional<std::uint64_t> seed;
    std::optional<double> ch_fraction;
    std::optional<double> field_side;
    std::optional<double> comm_radius;
    std::optional<double> min_spacing;
    std::optional<double> sink_x;
    std::optional<double> sink_y;
    std::optional<double> initial_energy;
};

/// Parses flat `key = value` text. Blank lines and `#` comments allowed.
/// Unknown keys are errors (InvalidConfig).
ConfigValues parse_config_file(std::istream& in, const std::string& source_name);

struct ResolvedConfig {
    SimConfig sim;
    bool events_explicit = false;  // whether `events` was given anywhere
};

/// Layers flags over file values over defaults and validates the result.
ResolvedConfig resolve_config(const ConfigValues& flags, const ConfigValues& file);

/// Writes the resolved configuration in config-file syntax. Feeding the
/// manifest back through --config reproduces the run exactly; `events` is
/// only recorded when it was explicitly set.
void write_manifest(std::ostream& out, const ResolvedConfig& config);

} // namespace wsnsim
