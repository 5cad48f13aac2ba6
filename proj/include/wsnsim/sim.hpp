#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wsnsim/metrics.hpp"
#include "wsnsim/topology.hpp"

namespace wsnsim {

enum class Protocol { Rtbc, Dd };

std::string to_string(Protocol p);
std::optional<Protocol> protocol_from_string(const std::string& s);

struct SimConfig {
    TopologyConfig topology;
    Protocol protocol = Protocol::Rtbc;
    double ch_fraction = 0.05;
    std::uint32_t recluster_period = 100;  // events between reorganizations
    std::uint32_t total_events = 300;
    std::uint32_t k_dup = 3;               // co-detectors per event
    std::uint32_t trials = 10;
    std::uint64_t master_seed = 1;
    double initial_energy = 100.0;

    void validate() const;  // throws InvalidConfig
};

/// One deterministic trial: reorganize (census, election, formation,
/// interest for RTBC; gradient flood for DD), then process events in order,
/// reorganizing again after every recluster_period events. The record is a
/// pure function of (config, trial_seed).
MetricsRecord run_trial(const SimConfig& config, std::uint64_t trial_seed);

/// Same, but on a caller-supplied deployment (paired comparisons, loaded
/// topology files). The per-trial topology seed is simply unused.
MetricsRecord run_trial_on(const SimConfig& config, std::uint64_t trial_seed,
                           const Topology& topology);

struct BatchResult {
    std::vector<MetricsRecord> trials;
    MetricsSummary means;
};

/// trials independent runs with seeds mix_seed(master_seed, trial_index).
/// fixed_topology, when given, is shared by every trial.
BatchResult run_batch(const SimConfig& config, const Topology* fixed_topology = nullptr);

/// The seed actually used for trial i of a batch.
std::uint64_t trial_seed_for(const SimConfig& config, std::uint32_t trial_index);

} // namespace wsnsim
