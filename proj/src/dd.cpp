#include "wsnsim/dd.hpp"

#include <algorithm>

namespace wsnsim {

std::vector<GradientTable> dd_setup_gradients(Radio& radio) {
    const FloodResult flood = run_sink_flood(radio, MessageKind::Interest);
    std::vector<GradientTable> gradients(radio.topology().sensor_count());
    for (NodeId id = 0; id < radio.topology().sensor_count(); ++id) {
        for (const FloodObservation& obs : flood.per_node[id].heard) {
            gradients[id].hop_to_sink[obs.sender] = obs.sender_hop;
        }
    }
    return gradients;
}

namespace {

std::optional<NodeId> min_hop_neighbor(const GradientTable& table) {
    std::optional<NodeId> best;
    std::uint32_t best_hop = 0;
    for (const auto& [id, hop] : table.hop_to_sink) {
        if (!best.has_value() || hop < best_hop) {  // map ascending: first id wins ties
            best = id;
            best_hop = hop;
        }
    }
    return best;
}

} // namespace

SinkRouteResult dd_route_event(Radio& radio, const std::vector<GradientTable>& gradients,
                               NodeId source, const DataMessage& data) {
    (void)data;
    const Topology& topo = radio.topology();
    SinkRouteResult result{DeliveryStatus::Delivered, {source}};
    if (!radio.alive(source)) {
        result.status = DeliveryStatus::DeadSource;
        return result;
    }
    NodeId current = source;
    while (true) {
        const std::optional<NodeId> next = min_hop_neighbor(gradients[current]);
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
