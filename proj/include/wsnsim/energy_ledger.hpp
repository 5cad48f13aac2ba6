#pragma once

#include <cstdint>
#include <vector>

#include "wsnsim/energy.hpp"
#include "wsnsim/node_id.hpp"

namespace wsnsim {

struct ChargeResult {
    bool charged;  // false iff the node was already at zero (no event happened)
    bool alive;    // residual > 0 after the charge
    Energy spent;  // actual amount deducted; less than the cost when floored
};

struct EnergyCosts {
    Energy data_tx = Energy::from_millis(1000);
    Energy data_rx = Energy::from_millis(1000);
    Energy interest_tx = Energy::from_millis(250);
    Energy interest_rx = Energy::from_millis(250);

    Energy tx(MessageClass c) const { return c == MessageClass::Data ? data_tx : interest_tx; }
    Energy rx(MessageClass c) const { return c == MessageClass::Data ? data_rx : interest_rx; }
};

/// Per-sensor energy accounts. The sink is not in the ledger (it never
/// depletes). A node whose residual reaches zero is dead: it is never
/// charged again and callers must not let it transmit or receive.
/// Charges are floored at zero, so a node can spend its last fraction of a
/// unit on one final message.
class EnergyLedger {
public:
    EnergyLedger(std::uint32_t sensor_count, Energy initial, EnergyCosts costs = {});

    ChargeResult charge_tx(NodeId node, MessageClass cls);  // throws UnknownNode
    ChargeResult charge_rx(NodeId node, MessageClass cls);  // throws UnknownNode

    Energy residual(NodeId node) const;  // throws UnknownNode
    bool alive(NodeId node) const { return residual(node) > Energy::zero(); }

    /// Sum of (initial - residual) over all nodes; exact.
    Energy total_consumed() const { return total_consumed_; }

    Energy initial_energy() const { return initial_; }
    const EnergyCosts& costs() const { return costs_; }
    std::uint32_t sensor_count() const { return static_cast<std::uint32_t>(residual_.size()); }
    const std::vector<Energy>& residuals() const { return residual_; }

    /// Direct state seed (tests, scenario setup). Clamped to [0, initial].
    void set_residual(NodeId node, Energy value);

private:
    ChargeResult apply(NodeId node, Energy cost);

    Energy initial_;
    EnergyCosts costs_;
    std::vector<Energy> residual_;
    Energy total_consumed_;
};

} // namespace wsnsim
