#pragma once

#include <cstdint>
#include <vector>

#include "wsnsim/energy.hpp"

namespace wsnsim {

/// Per-trial counters. Message counters include the sink's transmissions;
/// the charged_* counters cover sensor-side events only (the sink is never
/// charged) and are what the energy ledger must reconcile against:
///   energy_total == 1 * (charged_data_tx + charged_data_rx)
///                 + 0.25 * (charged_interest_tx + charged_interest_rx)
struct MetricsRecord {
    std::uint64_t interest_msgs = 0;  // interest-kind transmissions
    std::uint64_t data_msgs = 0;      // data transmissions
    std::uint64_t control_msgs = 0;   // ADV / REP / census query + reply transmissions

    std::uint64_t charged_data_tx = 0;
    std::uint64_t charged_data_rx = 0;
    std::uint64_t charged_interest_tx = 0;  // interest-class: interest + control
    std::uint64_t charged_interest_rx = 0;

    /// Shortfall from charges floored at zero (a dying node pays only what
    /// it has). Zero in any run where no node dies mid-charge.
    Energy undercharge;

    Energy energy_total;

    std::uint64_t duplicates_suppressed = 0;
    std::uint64_t reports_reaching_heads = 0;
    std::uint64_t delivered = 0;
    std::uint64_t undelivered = 0;

    std::vector<std::vector<std::uint32_t>> cluster_sizes;  // member count per head, per reorganization
    std::vector<std::uint32_t> orphan_counts;               // per reorganization
    std::vector<Energy> per_node_residual;                  // final state

    /// Rate-weighted charged-event total, net of floored shortfall; must
    /// equal energy_total exactly.
    Energy expected_energy_from_counters() const {
        return Energy::from_millis(
                   1000 * static_cast<std::int64_t>(charged_data_tx + charged_data_rx) +
                   250 * static_cast<std::int64_t>(charged_interest_tx + charged_interest_rx)) -
               undercharge;
    }
};

/// Arithmetic means over a batch, for the summary table and CSV.
struct MetricsSummary {
    double interest_msgs = 0.0;
    double data_msgs = 0.0;
    double control_msgs = 0.0;
    double energy_total = 0.0;
    double duplicates_suppressed = 0.0;
    double delivered = 0.0;
    double undelivered = 0.0;

    static MetricsSummary of(const std::vector<MetricsRecord>& records);
};

} // namespace wsnsim
