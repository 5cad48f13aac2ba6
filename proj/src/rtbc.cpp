#include "wsnsim/rtbc.hpp"

#include <algorithm>
#include <cmath>

#include "wsnsim/errors.hpp"

namespace wsnsim {

std::vector<std::uint32_t> ClusterAssignment::member_counts_per_head() const {
    std::vector<std::uint32_t> counts(heads.size(), 0);
    for (const auto& [id, info] : members) {
        const auto it = std::lower_bound(heads.begin(), heads.end(), info.my_ch_id);
        counts[static_cast<std::size_t>(it - heads.begin())] += 1;
    }
    return counts;
}

std::vector<CensusEntry> run_census(Radio& radio) {
    const Topology& topo = radio.topology();
    const FloodResult flood = run_sink_flood(radio, MessageKind::Query);

    // Reply convergecast: leaves first, each node sends one bundle (its own
    // record plus everything its query-tree children handed it) to the node
    // it first heard the query from.
    std::vector<NodeId> order;
    for (NodeId id = 0; id < topo.sensor_count(); ++id) {
        if (flood.per_node[id].reached) order.push_back(id);
    }
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        const auto la = flood.per_node[a].level, lb = flood.per_node[b].level;
        return la != lb ? la > lb : a < b;
    });

    std::vector<std::vector<CensusEntry>> pending(topo.sensor_count());
    std::vector<CensusEntry> census;
    for (NodeId id : order) {
        const FloodNodeInfo& info = flood.per_node[id];
        std::vector<CensusEntry>& bundle = pending[id];
        bundle.push_back({id, info.level});
        const UnicastStatus st = radio.unicast(id, info.first_sender, MessageKind::QueryReply);
        if (st != UnicastStatus::Delivered) continue;  // bundle lost with the subtree
        if (topo.is_sink(info.first_sender)) {
            census.insert(census.end(), bundle.begin(), bundle.end());
        } else {
            std::vector<CensusEntry>& up = pending[info.first_sender];
            up.insert(up.end(), bundle.begin(), bundle.end());
        }
    }
    std::sort(census.begin(), census.end(),
              [](const CensusEntry& a, const CensusEntry& b) { return a.id < b.id; });
    return census;
}

std::vector<NodeId> select_cluster_heads(const std::vector<CensusEntry>& census, double fraction,
                                         std::uint32_t round, RotationHistory& history,
                                         std::uint64_t seed) {
    if (census.empty()) throw EmptyCensus();
    if (!(fraction > 0.0 && fraction <= 1.0)) throw InvalidConfig("ch_fraction must be in (0, 1]");

    // ceil with a nudge against representation noise (0.05 * 300 must be 15).
    std::size_t k = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(census.size()) - 1e-9));
    k = std::min(std::max<std::size_t>(k, 1), census.size());

    std::vector<NodeId> eligible;
    for (const CensusEntry& e : census) {
        if (!history.served_this_epoch[e.id]) eligible.push_back(e.id);
    }
    if (eligible.size() < k) {
        // Rotation epoch exhausted: everyone becomes eligible again.
        std::fill(history.served_this_epoch.begin(), history.served_this_epoch.end(), false);
        eligible.clear();
        for (const CensusEntry& e : census) eligible.push_back(e.id);
    }

    Rng rng(mix_seed(seed, round));
    std::vector<NodeId> heads = rng.sample(std::move(eligible), k);
    std::sort(heads.begin(), heads.end());
    for (NodeId h : heads) {
        history.served_this_epoch[h] = true;
        history.service_counts[h] += 1;
    }
    return heads;
}

RepAction handle_rep(const NodeState& state, const RepMessage&) {
    if (!state.hop_cnt.has_value()) throw RepAtOrphan();
    if (*state.hop_cnt == 0) return {RepAction::Register, {}};
    return {RepAction::Forward, RepMessage{*state.dn_id, *state.hop_cnt}};
}

namespace {

// Relays a freshly assigned member's REP up the parent chain until the head
// registers it (or the chain breaks on a dead relay).
void send_rep_chain(Radio& radio, std::vector<NodeState>& states, NodeId member,
                    ClusterAssignment& assignment) {
    NodeId current = member;
    while (true) {
        const NodeId parent = *states[current].dn_id;
        if (radio.unicast(current, parent, MessageKind::Rep) != UnicastStatus::Delivered) return;
        const RepAction action = handle_rep(states[parent], RepMessage{parent, *states[current].hop_cnt});
        if (action.kind == RepAction::Register) {
            assignment.rep_registered[parent] += 1;
            return;
        }
        current = parent;
    }
}

} // namespace

ClusterAssignment form_clusters(Radio& radio, const std::vector<NodeId>& heads,
                                std::vector<NodeState>& states) {
    const Topology& topo = radio.topology();
    ClusterAssignment assignment;
    assignment.heads = heads;
    std::sort(assignment.heads.begin(), assignment.heads.end());

    for (NodeState& s : states) {
        s.role = Role::Orphan;
        s.my_ch_id.reset();
        s.dn_id.reset();
        s.hop_cnt.reset();
    }
    for (NodeId h : assignment.heads) {
        NodeState& s = states[h];
        s.role = Role::ClusterHead;
        s.my_ch_id = h;
        s.hop_cnt = 0;
        s.ch_service_history += 1;
        assignment.rep_registered[h] = 0;
    }

    std::vector<NodeId> frontier = assignment.heads;
    while (!frontier.empty()) {
        std::vector<NodeId> next;
        std::sort(frontier.begin(), frontier.end());
        for (NodeId sender : frontier) {
            const BroadcastResult br = radio.broadcast(sender, MessageKind::Adv);
            if (!br.sent) continue;
            for (const Reception& rec : br.receivers) {
                NodeState& ns = states[rec.id];
                if (ns.hop_cnt.has_value()) continue;  // assigned or head: pays rx, ignores
                if (!rec.alive) continue;              // spent its last energy listening
                ns.role = Role::Member;
                ns.my_ch_id = states[sender].my_ch_id;
                ns.dn_id = sender;
                ns.hop_cnt = *states[sender].hop_cnt + 1;
                assignment.members[rec.id] = {*ns.my_ch_id, sender, *ns.hop_cnt};
                send_rep_chain(radio, states, rec.id, assignment);
                next.push_back(rec.id);
            }
        }
        frontier = std::move(next);
    }

    for (NodeId id = 0; id < topo.sensor_count(); ++id) {
        if (!states[id].hop_cnt.has_value()) assignment.orphans.push_back(id);
    }
    return assignment;
}

IntraClusterResult route_intra_cluster(Radio& radio, const std::vector<NodeState>& states,
                                       NodeId source, const DataMessage& data) {
    (void)data;
    const NodeState& src = states[source];
    if (src.role == Role::Orphan) return {DeliveryStatus::OrphanSource};
    if (!radio.alive(source)) return {DeliveryStatus::DeadSource};
    if (src.role == Role::ClusterHead) return {DeliveryStatus::Delivered, source, 0};

    NodeId current = source;
    std::uint32_t hops = 0;
    while (*states[current].hop_cnt > 0) {
        const NodeId parent = *states[current].dn_id;
        if (radio.unicast(current, parent, MessageKind::Data) != UnicastStatus::Delivered)
            return {DeliveryStatus::DeadRelay};
        ++hops;
        current = parent;
    }
    return {DeliveryStatus::Delivered, current, hops};
}

std::vector<DataMessage> aggregate_at_head(NodeId head, const std::vector<DataMessage>& reports) {
    std::map<std::uint64_t, std::uint32_t> counts;
    for (const DataMessage& r : reports) counts[r.event_id] += 1;
    std::vector<DataMessage> out;
    out.reserve(counts.size());
    for (const auto& [event_id, n] : counts) {
        out.push_back(DataMessage{event_id, head, true, n - 1});
    }
    return out;
}

void disseminate_interest(Radio& radio, std::vector<NodeState>& states) {
    const FloodResult flood = run_sink_flood(radio, MessageKind::Interest);
    for (NodeId id = 0; id < radio.topology().sensor_count(); ++id) {
        for (const FloodObservation& obs : flood.per_node[id].heard) {
            states[id].neighbor_table[obs.sender] = {obs.sender_hop, obs.sender_energy};
        }
    }
}

std::optional<NodeId> next_hop_to_sink(const NodeState& state) {
    std::optional<NodeId> best;
    NeighborInfo best_info{0, Energy::zero()};
    for (const auto& [id, info] : state.neighbor_table) {
        const bool better =
            !best.has_value() || info.hop_to_sink < best_info.hop_to_sink ||
            (info.hop_to_sink == best_info.hop_to_sink &&
             info.last_known_energy > best_info.last_known_energy);
        // Equal hop and energy: the map iterates ascending, keep the first.
        if (better) {
            best = id;
            best_info = info;
        }
    }
    return best;
}

SinkRouteResult route_to_sink(Radio& radio, const std::vector<NodeState>& states, NodeId head,
                              const DataMessage& data) {
    (void)data;
    const Topology& topo = radio.topology();
    SinkRouteResult result{DeliveryStatus::Delivered, {head}};
    if (!radio.alive(head)) {
        result.status = DeliveryStatus::DeadSource;
        return result;
    }
    NodeId current = head;
    while (true) {
        const std::optional<NodeId> next = next_hop_to_sink(states[current]);
        if (!next.has_value()) {
            result.status = DeliveryStatus::NoRoute;
            return result;
        }
        if (topo.is_sink(*next)) {
            result.status = radio.unicast(current, *next, MessageKind::Data) ==
                                    UnicastStatus::Delivered
                                ? DeliveryStatus::Delivered
                                : DeliveryStatus::DeadRelay;
            if (result.status == DeliveryStatus::Delivered) result.trace.push_back(*next);
            return result;
        }
        if (std::find(result.trace.begin(), result.trace.end(), *next) != result.trace.end()) {
            result.status = DeliveryStatus::RoutingLoop;
            return result;
        }
        if (radio.unicast(current, *next, MessageKind::Data) != UnicastStatus::Delivered) {
            result.status = DeliveryStatus::DeadRelay;
            return result;
        }
        result.trace.push_back(*next);
        current = *next;
    }
}

} // namespace wsnsim
