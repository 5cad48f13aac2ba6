#include "wsnsim/flood.hpp"

#include <algorithm>

namespace wsnsim {

FloodResult run_sink_flood(Radio& radio, MessageKind kind) {
    const Topology& topo = radio.topology();
    FloodResult result;
    result.per_node.assign(topo.sensor_count(), {});

    std::vector<NodeId> frontier;  // nodes that broadcast this tick
    std::uint32_t tick_hop = 0;    // hop count carried by this tick's senders

    // Tick 0: the sink itself. Its advertised energy never competes (hop 0
    // is uniquely minimal), so the initial budget stands in for "unbounded".
    {
        const BroadcastResult br = radio.broadcast(topo.sink(), kind);
        for (const Reception& rec : br.receivers) {
            FloodNodeInfo& info = result.per_node[rec.id];
            info.heard.push_back({topo.sink(), 0, radio.ledger().initial_energy()});
            info.reached = true;
            info.level = 1;
            info.first_sender = topo.sink();
            if (rec.alive) frontier.push_back(rec.id);
        }
    }

    while (!frontier.empty()) {
        ++tick_hop;
        std::vector<NodeId> next;
        std::sort(frontier.begin(), frontier.end());
        for (NodeId sender : frontier) {
            const BroadcastResult br = radio.broadcast(sender, kind);
            if (!br.sent) continue;  // died since scheduling
            const Energy stamped = radio.ledger().residual(sender);
            for (const Reception& rec : br.receivers) {
                FloodNodeInfo& info = result.per_node[rec.id];
                info.heard.push_back({sender, tick_hop, stamped});
                if (!info.reached) {
                    info.reached = true;
                    info.level = tick_hop + 1;
                    info.first_sender = sender;
                    if (rec.alive) next.push_back(rec.id);
                }
            }
        }
        frontier = std::move(next);
    }
    return result;
}

} // namespace wsnsim
