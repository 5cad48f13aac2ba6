#pragma once

#include <cstdint>

namespace wsnsim {

/// Sensor nodes are 0..N-1; the sink of an N-sensor deployment is id N.
using NodeId = std::uint32_t;

inline constexpr NodeId kNoNode = static_cast<NodeId>(-1);

} // namespace wsnsim
