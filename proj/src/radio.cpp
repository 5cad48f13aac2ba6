#include "wsnsim/radio.hpp"

namespace wsnsim {

void Radio::count_tx(MessageKind kind) {
    switch (kind) {
        case MessageKind::Interest: ++metrics_.interest_msgs; break;
        case MessageKind::Data: ++metrics_.data_msgs; break;
        default: ++metrics_.control_msgs; break;
    }
}

bool Radio::charge_tx(NodeId sender, MessageKind kind) {
    if (topo_.is_sink(sender)) {
        count_tx(kind);
        return true;
    }
    const MessageClass cls = message_class(kind);
    const ChargeResult cr = ledger_.charge_tx(sender, cls);
    if (!cr.charged) return false;
    count_tx(kind);
    if (cls == MessageClass::Data)
        ++metrics_.charged_data_tx;
    else
        ++metrics_.charged_interest_tx;
    metrics_.undercharge += ledger_.costs().tx(cls) - cr.spent;
    return true;
}

BroadcastResult Radio::broadcast(NodeId sender, MessageKind kind) {
    BroadcastResult result;
    if (!charge_tx(sender, kind)) return result;
    result.sent = true;
    const MessageClass cls = message_class(kind);
    for (NodeId nb : topo_.neighbors(sender)) {
        if (topo_.is_sink(nb)) continue;  // the sink listens for free
        const ChargeResult cr = ledger_.charge_rx(nb, cls);
        if (!cr.charged) continue;  // dead neighbors hear nothing
        if (cls == MessageClass::Data)
            ++metrics_.charged_data_rx;
        else
            ++metrics_.charged_interest_rx;
        metrics_.undercharge += ledger_.costs().rx(cls) - cr.spent;
        result.receivers.push_back({nb, cr.alive});
    }
    return result;
}

UnicastStatus Radio::unicast(NodeId sender, NodeId receiver, MessageKind kind) {
    if (!charge_tx(sender, kind)) return UnicastStatus::SenderDead;
    if (topo_.is_sink(receiver)) return UnicastStatus::Delivered;
    // The transmission is spent either way; a dead receiver just never
    // hears it.
    const MessageClass cls = message_class(kind);
    const ChargeResult cr = ledger_.charge_rx(receiver, cls);
    if (!cr.charged) return UnicastStatus::ReceiverDead;
    if (cls == MessageClass::Data)
        ++metrics_.charged_data_rx;
    else
        ++metrics_.charged_interest_rx;
    metrics_.undercharge += ledger_.costs().rx(cls) - cr.spent;
    return UnicastStatus::Delivered;
}

} // namespace wsnsim
