// wsnsim: batch driver comparing the clustered routing protocol (rtbc)
// against a flat gradient baseline (dd) on random sensor deployments.

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "wsnsim/config.hpp"
#include "wsnsim/errors.hpp"
#include "wsnsim/experiments.hpp"
#include "wsnsim/rng.hpp"

namespace {

constexpr const char* kFooter = R"(Config file: flat `key = value` lines, '#' comments. Keys:
  nodes, events, trials, recluster_period, protocol (rtbc|dd), k_dup, seed,
  ch_fraction, field_side, comm_radius, min_spacing, sink_x, sink_y,
  initial_energy
Precedence: flags > config file > defaults (300 nodes, 100 m field, 10 m
radius, 5 m spacing, sink at (50,0), 100 energy units, 5% heads, 10 trials).

Outputs (written to --out, LF line endings, '#' lines are failure notes):
  results.csv   protocol,recluster_period,event_count,trial,interest_msgs,
                data_msgs,energy_total,duplicates_suppressed,delivered,
                undelivered
  summary.csv   per-group means of the same fields
  residuals.csv protocol,recluster_period,event_count,trial,node_id,residual
  manifest.cfg  resolved configuration; re-running with
                `--config <out>/manifest.cfg` reproduces the run exactly

`compare` sweeps rtbc at periods 50/100/200 plus dd (gradients refreshed at
period 100) over event counts 100..500 (or just --events when given).
Exit codes: 0 success, 1 runtime failure, 2 configuration error.)";

struct CommonOpts {
    wsnsim::ConfigValues flags;
    std::string config_file;
    std::string out_dir = "wsnsim-out";
    std::string dump_topology;
    std::string load_topology;
};

void add_common_options(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--nodes", o.flags.nodes, "Sensor node count");
    cmd->add_option("--events", o.flags.events, "Events per trial (restricts the compare sweep)");
    cmd->add_option("--trials", o.flags.trials, "Trials per batch");
    cmd->add_option("--recluster-period", o.flags.recluster_period,
                    "Events between reorganizations");
    cmd->add_option("--protocol", o.flags.protocol, "rtbc or dd (run subcommand)");
    cmd->add_option("--k-dup", o.flags.k_dup, "Co-detecting reporters per event");
    cmd->add_option("--seed", o.flags.seed, "Master seed");
    cmd->add_option("--ch-fraction", o.flags.ch_fraction, "Cluster-head fraction");
    cmd->add_option("--field-side", o.flags.field_side, "Field side, meters");
    cmd->add_option("--comm-radius", o.flags.comm_radius, "Radio/sensing radius, meters");
    cmd->add_option("--min-spacing", o.flags.min_spacing, "Minimum node spacing, meters");
    cmd->add_option("--sink-x", o.flags.sink_x, "Sink x position");
    cmd->add_option("--sink-y", o.flags.sink_y, "Sink y position");
    cmd->add_option("--initial-energy", o.flags.initial_energy, "Initial energy units per node");
    cmd->add_option("--config", o.config_file, "Config file (key = value)");
    cmd->add_option("--out", o.out_dir, "Output directory");
    cmd->add_option("--dump-topology", o.dump_topology, "Write the trial-0 deployment to FILE");
    cmd->add_option("--load-topology", o.load_topology,
                    "Use the deployment from FILE for every trial");
}

int dispatch(const CommonOpts& o, int (*runner)(const wsnsim::ResolvedConfig&,
                                                const std::filesystem::path&, std::ostream&,
                                                const wsnsim::Topology*)) {
    wsnsim::ConfigValues file_values;
    std::optional<wsnsim::Topology> loaded;
    wsnsim::ResolvedConfig resolved;
    try {
        if (!o.config_file.empty()) {
            std::ifstream in(o.config_file);
            if (!in) {
                std::cerr << "error: cannot open config file " << o.config_file << '\n';
                return 2;
            }
            file_values = wsnsim::parse_config_file(in, o.config_file);
        }
        resolved = wsnsim::resolve_config(o.flags, file_values);
        if (!o.load_topology.empty()) {
            std::ifstream in(o.load_topology);
            if (!in) {
                std::cerr << "error: cannot open topology file " << o.load_topology << '\n';
                return 2;
            }
            loaded = wsnsim::Topology::load(in);
        }
    } catch (const wsnsim::SimError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (!o.dump_topology.empty()) {
            const wsnsim::Topology topo =
                loaded.has_value()
                    ? *loaded
                    : wsnsim::generate_topology(
                          resolved.sim.topology,
                          wsnsim::mix_seed(wsnsim::trial_seed_for(resolved.sim, 0),
                                           wsnsim::kTopologyStream));
            std::ofstream out(o.dump_topology, std::ios::binary);
            if (!out) {
                std::cerr << "error: cannot write " << o.dump_topology << '\n';
                return 1;
            }
            topo.dump(out);
        }
        return runner(resolved, o.out_dir, std::cout, loaded.has_value() ? &*loaded : nullptr);
    } catch (const wsnsim::SimError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Random-deployment sensor network routing simulator"};
    app.footer(kFooter);
    app.require_subcommand(1);

    CommonOpts run_opts, compare_opts, stats_opts;
    CLI::App* run_cmd =
        app.add_subcommand("run", "One protocol variant over the trial set");
    add_common_options(run_cmd, run_opts);
    CLI::App* compare_cmd =
        app.add_subcommand("compare", "Full protocol comparison batch (rtbc 50/100/200 vs dd)");
    add_common_options(compare_cmd, compare_opts);
    CLI::App* stats_cmd =
        app.add_subcommand("cluster-stats", "Cluster formation statistics only");
    add_common_options(stats_cmd, stats_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (run_cmd->parsed()) return dispatch(run_opts, wsnsim::run_single);
    if (compare_cmd->parsed()) return dispatch(compare_opts, wsnsim::run_compare);
    return dispatch(stats_opts, wsnsim::run_cluster_stats);
}
