#include "wsnsim/config.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "wsnsim/errors.hpp"

namespace wsnsim {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& value) {
    std::istringstream ss(value);
    T out;
    ss >> out;
    std::string rest;
    if (!ss || (ss >> rest && !rest.empty()))
        throw InvalidConfig(key + ": cannot parse value '" + value + "'");
    return out;
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

ConfigValues parse_config_file(std::istream& in, const std::string& source_name) {
    ConfigValues values;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line.substr(0, line.find('#')));
        if (stripped.empty()) continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw InvalidConfig(source_name + ":" + std::to_string(line_no) +
                                ": expected 'key = value'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));

        if (key == "nodes") values.nodes = parse_number<std::uint32_t>(key, value);
        else if (key == "events") values.events = parse_number<std::uint32_t>(key, value);
        else if (key == "trials") values.trials = parse_number<std::uint32_t>(key, value);
        else if (key == "recluster_period")
            values.recluster_period = parse_number<std::uint32_t>(key, value);
        else if (key == "k_dup") values.k_dup = parse_number<std::uint32_t>(key, value);
        else if (key == "protocol") values.protocol = value;
        else if (key == "seed") values.seed = parse_number<std::uint64_t>(key, value);
        else if (key == "ch_fraction") values.ch_fraction = parse_number<double>(key, value);
        else if (key == "field_side") values.field_side = parse_number<double>(key, value);
        else if (key == "comm_radius") values.comm_radius = parse_number<double>(key, value);
        else if (key == "min_spacing") values.min_spacing = parse_number<double>(key, value);
        else if (key == "sink_x") values.sink_x = parse_number<double>(key, value);
        else if (key == "sink_y") values.sink_y = parse_number<double>(key, value);
        else if (key == "initial_energy")
            values.initial_energy = parse_number<double>(key, value);
        else
            throw InvalidConfig(source_name + ":" + std::to_string(line_no) + ": unknown key '" +
                                key + "'");
    }
    return values;
}

ResolvedConfig resolve_config(const ConfigValues& flags, const ConfigValues& file) {
    auto pick = [](const auto& flag, const auto& from_file, auto fallback) {
        return flag.has_value() ? *flag : (from_file.has_value() ? *from_file : fallback);
    };

    ResolvedConfig out;
    SimConfig& cfg = out.sim;
    cfg.topology.node_count = pick(flags.nodes, file.nodes, 300u);
    cfg.topology.field_side = pick(flags.field_side, file.field_side, 100.0);
    cfg.topology.comm_radius = pick(flags.comm_radius, file.comm_radius, 10.0);
    cfg.topology.min_node_spacing = pick(flags.min_spacing, file.min_spacing, 5.0);
    cfg.topology.sink_position.x = pick(flags.sink_x, file.sink_x, 50.0);
    cfg.topology.sink_position.y = pick(flags.sink_y, file.sink_y, 0.0);
    cfg.ch_fraction = pick(flags.ch_fraction, file.ch_fraction, 0.05);
    cfg.recluster_period = pick(flags.recluster_period, file.recluster_period, 100u);
    cfg.total_events = pick(flags.events, file.events, 300u);
    cfg.k_dup = pick(flags.k_dup, file.k_dup, 3u);
    cfg.trials = pick(flags.trials, file.trials, 10u);
    cfg.master_seed = pick(flags.seed, file.seed, 1ull);
    cfg.initial_energy = pick(flags.initial_energy, file.initial_energy, 100.0);
    out.events_explicit = flags.events.has_value() || file.events.has_value();

    const std::string proto = pick(flags.protocol, file.protocol, std::string("rtbc"));
    const std::optional<Protocol> p = protocol_from_string(proto);
    if (!p.has_value()) throw InvalidConfig("protocol must be 'rtbc' or 'dd', got '" + proto + "'");
    cfg.protocol = *p;

    cfg.validate();
    return out;
}

void write_manifest(std::ostream& out, const ResolvedConfig& config) {
    const SimConfig& c = config.sim;
    out << "nodes = " << c.topology.node_count << "\n";
    if (config.events_explicit) out << "events = " << c.total_events << "\n";
    out << "trials = " << c.trials << "\n"
        << "recluster_period = " << c.recluster_period << "\n"
        << "k_dup = " << c.k_dup << "\n"
        << "protocol = " << to_string(c.protocol) << "\n"
        << "seed = " << c.master_seed << "\n"
        << "ch_fraction = " << fmt_double(c.ch_fraction) << "\n"
        << "field_side = " << fmt_double(c.topology.field_side) << "\n"
        << "comm_radius = " << fmt_double(c.topology.comm_radius) << "\n"
        << "min_spacing = " << fmt_double(c.topology.min_node_spacing) << "\n"
        << "sink_x = " << fmt_double(c.topology.sink_position.x) << "\n"
        << "sink_y = " << fmt_double(c.topology.sink_position.y) << "\n"
        << "initial_energy = " << fmt_double(c.initial_energy) << "\n";
}

} // namespace wsnsim
