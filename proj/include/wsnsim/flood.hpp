#pragma once

#include <vector>

#include "wsnsim/radio.hpp"

namespace wsnsim {

/// One overheard copy of a sink-flood message.
struct FloodObservation {
    NodeId sender;
    std::uint32_t sender_hop;  // sender's own hop distance from the sink
    Energy sender_energy;      // sender's residual as the message left it
};

struct FloodNodeInfo {
    bool reached = false;
    std::uint32_t level = 0;      // hop distance at first reception
    NodeId first_sender = kNoNode;
    std::vector<FloodObservation> heard;  // every copy received, arrival order
};

struct FloodResult {
    std::vector<FloodNodeInfo> per_node;  // indexed by sensor id
};

/// Tick-synchronous sink-originated flood: the sink broadcasts at tick 0,
/// every node rebroadcasts exactly once at the tick after its first
/// reception (if still alive then). Within a tick senders go in ascending
/// id order, which fixes all ties. Both the interest dissemination and the
/// census query ride on this; `kind` selects billing counters only.
FloodResult run_sink_flood(Radio& radio, MessageKind kind);

} // namespace wsnsim
