#pragma once

#include <map>
#include <optional>
#include <vector>

#include "wsnsim/flood.hpp"
#include "wsnsim/messages.hpp"
#include "wsnsim/radio.hpp"
#include "wsnsim/rng.hpp"

namespace wsnsim {

enum class Role { Orphan, Member, ClusterHead };

struct NeighborInfo {
    std::uint32_t hop_to_sink;
    Energy last_known_energy;
};

/// Per-node protocol state. Role fields are rebuilt at every reorganization;
/// the neighbor table persists and is refreshed by interest floods.
struct NodeState {
    Role role = Role::Orphan;
    std::optional<NodeId> my_ch_id;
    std::optional<NodeId> dn_id;          // parent toward the cluster head
    std::optional<std::uint32_t> hop_cnt; // own hop distance to the head, 0 at the head
    std::map<NodeId, NeighborInfo> neighbor_table;
    std::uint32_t ch_service_history = 0; // reorganizations served as head
};

struct MemberInfo {
    NodeId my_ch_id;
    NodeId dn_id;
    std::uint32_t hop_cnt;
};

struct ClusterAssignment {
    std::vector<NodeId> heads;             // sorted
    std::map<NodeId, MemberInfo> members;  // assigned non-head sensors
    std::vector<NodeId> orphans;           // sensors no ADV ever reached, sorted
    std::map<NodeId, std::uint32_t> rep_registered;  // memberships each head learned via REP

    std::vector<std::uint32_t> member_counts_per_head() const;  // aligned with `heads`
};

/// Cluster-head rotation bookkeeping. A node serves at most once per epoch;
/// when fewer eligible nodes remain than an election needs, the epoch resets
/// and everyone becomes eligible again.
struct RotationHistory {
    explicit RotationHistory(std::uint32_t sensor_count)
        : served_this_epoch(sensor_count, false), service_counts(sensor_count, 0) {}
    std::vector<bool> served_this_epoch;
    std::vector<std::uint32_t> service_counts;
};

/// Census: sink-originated query flood, then an aggregated reply convergecast
/// along the reverse flood tree (each relay transmits exactly one reply
/// bundle). Returns (id, hop-to-sink) for every node whose reply made it
/// back, sorted by id. All traffic is interest-class control.
std::vector<CensusEntry> run_census(Radio& radio);

/// Draws ceil(fraction * census size) heads uniformly from the nodes that
/// have not served in the current rotation epoch. Deterministic given
/// (seed, round, history). Throws EmptyCensus / InvalidConfig.
std::vector<NodeId> select_cluster_heads(const std::vector<CensusEntry>& census, double fraction,
                                         std::uint32_t round, RotationHistory& history,
                                         std::uint64_t seed);

/// Tick-synchronous ADV flood from the heads. A node joins on its first
/// accepted ADV (earlier tick wins; same-tick ties go to the lower sender
/// id, then lower head id), replies with a REP that relays up the parent
/// chain, and rebroadcasts once on the next tick. Assigned nodes ignore all
/// later ADVs. Resets role fields in `states`; neighbor tables are kept.
ClusterAssignment form_clusters(Radio& radio, const std::vector<NodeId>& heads,
                                std::vector<NodeState>& states);

struct RepAction {
    enum Kind { Register, Forward } kind;
    RepMessage forward;  // valid when kind == Forward
};

/// Head: record the membership, stop. Member: forward REP(own parent, own
/// hop). Throws RepAtOrphan for nodes outside any cluster.
RepAction handle_rep(const NodeState& state, const RepMessage& rep);

enum class DeliveryStatus {
    Delivered,
    OrphanSource,  // source has no cluster this round
    DeadSource,    // source depleted before transmitting
    DeadRelay,     // chain or route hit a depleted node; partial energy spent
    RoutingLoop,   // stale tables steered the packet in a circle
    NoRoute,       // empty neighbor table / gradient: sink unreachable
};

struct IntraClusterResult {
    DeliveryStatus status;
    NodeId head = kNoNode;    // valid when Delivered
    std::uint32_t hops = 0;
};

/// Forwards a report up the dn chain to the cluster head: exactly
/// hop_cnt(source) data transmissions and receptions, no discovery traffic.
IntraClusterResult route_intra_cluster(Radio& radio, const std::vector<NodeState>& states,
                                       NodeId source, const DataMessage& data);

/// Collapses the window's reports per event id: one aggregate out per
/// distinct event, suppressed_count = duplicates folded away.
std::vector<DataMessage> aggregate_at_head(NodeId head, const std::vector<DataMessage>& reports);

/// Sink-originated interest flood; every node records each transmitting
/// neighbor's hop-to-sink and residual energy in its table (first copy sets
/// its own level, later copies only feed the table).
void disseminate_interest(Radio& radio, std::vector<NodeState>& states);

/// Neighbor minimizing hop_to_sink; ties broken by highest last-known
/// energy, then lowest id. Pure; nullopt on an empty table.
std::optional<NodeId> next_hop_to_sink(const NodeState& state);

struct SinkRouteResult {
    DeliveryStatus status;
    std::vector<NodeId> trace;  // nodes visited, starting at the source head
};

/// Greedy table-driven forwarding from a head to the sink. Any node relays.
/// A trace that would revisit a node aborts as RoutingLoop (stale tables).
SinkRouteResult route_to_sink(Radio& radio, const std::vector<NodeState>& states, NodeId head,
                              const DataMessage& data);

} // namespace wsnsim
