#pragma once

#include <map>
#include <vector>

#include "wsnsim/radio.hpp"
#include "wsnsim/rtbc.hpp"

namespace wsnsim {

/// Reverse gradients learned from the sink's interest flood: transmitting
/// neighbor -> that neighbor's hop distance to the sink.
struct GradientTable {
    std::map<NodeId, std::uint32_t> hop_to_sink;
};

/// One-shot gradient setup. Rides the same flood engine as the clustered
/// protocol's interest dissemination, so per-round flood costs are identical
/// by construction.
std::vector<GradientTable> dd_setup_gradients(Radio& radio);

/// Greedy min-hop forwarding to the sink (ties: lower id). Every report
/// travels independently; nothing is aggregated anywhere.
SinkRouteResult dd_route_event(Radio& radio, const std::vector<GradientTable>& gradients,
                               NodeId source, const DataMessage& data);

} // namespace wsnsim
