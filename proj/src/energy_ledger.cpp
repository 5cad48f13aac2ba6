#include "wsnsim/energy_ledger.hpp"

#include "wsnsim/errors.hpp"

namespace wsnsim {

EnergyLedger::EnergyLedger(std::uint32_t sensor_count, Energy initial, EnergyCosts costs)
    : initial_(initial), costs_(costs), residual_(sensor_count, initial) {}

ChargeResult EnergyLedger::apply(NodeId node, Energy cost) {
    if (node >= residual_.size()) throw UnknownNode(node);
    Energy& r = residual_[node];
    if (r == Energy::zero()) return {false, false, Energy::zero()};
    const Energy spent = cost < r ? cost : r;  // floor at zero
    r -= spent;
    total_consumed_ += spent;
    return {true, r > Energy::zero(), spent};
}

ChargeResult EnergyLedger::charge_tx(NodeId node, MessageClass cls) {
    return apply(node, costs_.tx(cls));
}

ChargeResult EnergyLedger::charge_rx(NodeId node, MessageClass cls) {
    return apply(node, costs_.rx(cls));
}

Energy EnergyLedger::residual(NodeId node) const {
    if (node >= residual_.size()) throw UnknownNode(node);
    return residual_[node];
}

void EnergyLedger::set_residual(NodeId node, Energy value) {
    if (node >= residual_.size()) throw UnknownNode(node);
    if (value < Energy::zero()) value = Energy::zero();
    if (value > initial_) value = initial_;
    total_consumed_ += residual_[node] - value;
    residual_[node] = value;
}

} // namespace wsnsim
