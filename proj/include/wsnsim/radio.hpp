#pragma once

#include <vector>

#include "wsnsim/energy_ledger.hpp"
#include "wsnsim/messages.hpp"
#include "wsnsim/metrics.hpp"
#include "wsnsim/topology.hpp"

namespace wsnsim {

/// One neighbor's reception of a broadcast. `alive` is the state after the
/// rx charge; a node that spent its last energy receiving still heard the
/// message but cannot act on it afterwards.
struct Reception {
    NodeId id;
    bool alive;
};

struct BroadcastResult {
    bool sent = false;                 // false iff the sender was dead
    std::vector<Reception> receivers;  // live sensors in radio range, ascending id
};

enum class UnicastStatus { SenderDead, ReceiverDead, Delivered };

/// Single place where transmissions touch the ledger and the counters, so
/// the protocols cannot drift out of sync with the energy accounting.
/// Rules: the sink transmits/receives for free but its transmissions still
/// count as messages; dead nodes neither send, receive, nor get charged;
/// every live neighbor of a broadcast pays rx even if it discards the
/// content.
class Radio {
public:
    Radio(const Topology& topology, EnergyLedger& ledger, MetricsRecord& metrics)
        : topo_(topology), ledger_(ledger), metrics_(metrics) {}

    BroadcastResult broadcast(NodeId sender, MessageKind kind);
    UnicastStatus unicast(NodeId sender, NodeId receiver, MessageKind kind);

    const Topology& topology() const { return topo_; }
    EnergyLedger& ledger() { return ledger_; }
    const EnergyLedger& ledger() const { return ledger_; }
    MetricsRecord& metrics() { return metrics_; }

    bool alive(NodeId id) const { return topo_.is_sink(id) || ledger_.alive(id); }

private:
    bool charge_tx(NodeId sender, MessageKind kind);
    void count_tx(MessageKind kind);

    const Topology& topo_;
    EnergyLedger& ledger_;
    MetricsRecord& metrics_;
};

} // namespace wsnsim
