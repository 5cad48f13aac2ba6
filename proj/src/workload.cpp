#include "wsnsim/workload.hpp"

#include <algorithm>

#include "wsnsim/rng.hpp"

namespace wsnsim {

EventWorkload generate_workload(const Topology& topology, std::uint32_t total_events,
                                std::uint32_t k_dup, std::uint64_t seed) {
    Rng rng(seed);
    EventWorkload workload;
    workload.reserve(total_events);
    for (std::uint32_t i = 0; i < total_events; ++i) {
        const NodeId reporter = static_cast<NodeId>(rng.below(topology.sensor_count()));

        // Co-detectors: nearest sensor neighbors within sensing (= radio) range.
        std::vector<NodeId> nearby;
        for (NodeId nb : topology.neighbors(reporter)) {
            if (!topology.is_sink(nb)) nearby.push_back(nb);
        }
        std::sort(nearby.begin(), nearby.end(), [&](NodeId a, NodeId b) {
            const double da = distance(topology.position(reporter), topology.position(a));
            const double db = distance(topology.position(reporter), topology.position(b));
            return da != db ? da < db : a < b;
        });
        if (nearby.size() > k_dup) nearby.resize(k_dup);

        nearby.push_back(reporter);
        std::sort(nearby.begin(), nearby.end());
        workload.push_back({i, i, std::move(nearby)});
    }
    return workload;
}

} // namespace wsnsim
