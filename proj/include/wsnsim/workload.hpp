#pragma once

#include <cstdint>
#include <vector>

#include "wsnsim/topology.hpp"

namespace wsnsim {

/// One sensing event: the primary reporter plus the co-detecting neighbors
/// that file duplicate reports of the same event id.
struct EventRecord {
    std::uint32_t event_index;
    std::uint64_t event_id;
    std::vector<NodeId> reporters;  // sorted, non-empty
};

using EventWorkload = std::vector<EventRecord>;

/// Deterministic workload: each event picks a uniform random sensor as
/// reporter; its k_dup nearest in-range neighbors (clamped to what exists)
/// co-detect the event. Independent of protocol state, so paired runs see
/// identical workloads.
EventWorkload generate_workload(const Topology& topology, std::uint32_t total_events,
                                std::uint32_t k_dup, std::uint64_t seed);

} // namespace wsnsim
