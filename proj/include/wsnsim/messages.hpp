#pragma once

#include <cstdint>
#include <variant>

#include "wsnsim/energy.hpp"
#include "wsnsim/node_id.hpp"

namespace wsnsim {

enum class MessageKind { Adv, Rep, Interest, Data, Query, QueryReply };

/// Kind -> billing class. Only data reports ride at the full rate; ADV/REP
/// and the census query/reply are small control records priced like
/// interest messages.
constexpr MessageClass message_class(MessageKind k) {
    return k == MessageKind::Data ? MessageClass::Data : MessageClass::Interest;
}

/// Cluster-head advertisement. hop_cnt is the *sender's* hop distance from
/// the head; a joining node stores hop_cnt + 1.
struct AdvMessage {
    NodeId ch_id;           // head this advertisement originates from
    NodeId sn_id;           // node transmitting this copy
    std::uint32_t hop_cnt;  // sender's own hop count (0 iff sn_id == ch_id)
};

/// Membership reply relayed up the parent chain toward the head.
struct RepMessage {
    NodeId rn_id;           // node being responded to (the sender's parent)
    std::uint32_t hop_cnt;  // responder's own hop count, >= 1
};

/// Sink-originated flood record carrying the sender's distance-to-sink and
/// residual energy; receivers fold it into their neighbor tables.
struct InterestMessage {
    NodeId origin;
    std::uint32_t hop_from_sink;  // 0 iff sender is the sink
    NodeId sender_id;
    Energy sender_energy;
};

struct DataMessage {
    std::uint64_t event_id;
    NodeId source_id;
    bool is_aggregate = false;
    std::uint32_t suppressed_count = 0;  // duplicates folded in; 0 unless aggregate
};

/// Census query flood record.
struct QueryMessage {
    NodeId sender_id;
    std::uint32_t hop_from_sink;
};

/// One census record: a node's identity and hop distance from the sink.
struct CensusEntry {
    NodeId id;
    std::uint32_t hop_to_sink;
};

struct QueryReplyMessage {
    NodeId sender_id;
    // Aggregated convergecast payload: the sender's own entry plus every
    // entry collected from its query-tree children.
};

using Message = std::variant<AdvMessage, RepMessage, InterestMessage, DataMessage,
                             QueryMessage, QueryReplyMessage>;

} // namespace wsnsim
