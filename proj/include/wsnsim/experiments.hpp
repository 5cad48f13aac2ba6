#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "wsnsim/config.hpp"
#include "wsnsim/sim.hpp"

namespace wsnsim {

/// The four comparison variants: the clustered protocol at each
/// reorganization period, and the flat baseline refreshing its gradients at
/// the middle period.
struct CompareVariant {
    Protocol protocol;
    std::uint32_t recluster_period;
};
std::vector<CompareVariant> compare_variants();

inline constexpr std::uint32_t kDefaultEventSweep[] = {100, 200, 300, 400, 500};

/// Full comparison batch. Writes results.csv, summary.csv, residuals.csv and
/// manifest.cfg into out_dir, prints an aligned summary table to `log`.
/// Returns 0, or 1 after flushing a failure note row into the CSV.
int run_compare(const ResolvedConfig& config, const std::filesystem::path& out_dir,
                std::ostream& log, const Topology* fixed_topology = nullptr);

/// Single-variant batch with the same output schema.
int run_single(const ResolvedConfig& config, const std::filesystem::path& out_dir,
               std::ostream& log, const Topology* fixed_topology = nullptr);

/// Formation-only statistics: one census + election + formation per trial on
/// a fresh network; emits clusters.csv (per-cluster member counts) and
/// cluster_summary.csv (per-trial totals and orphan counts).
int run_cluster_stats(const ResolvedConfig& config, const std::filesystem::path& out_dir,
                      std::ostream& log, const Topology* fixed_topology = nullptr);

} // namespace wsnsim
