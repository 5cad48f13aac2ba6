#pragma once

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "wsnsim/node_id.hpp"

namespace wsnsim {

struct Position {
    double x = 0.0;
    double y = 0.0;
};

inline double distance(Position a, Position b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

struct TopologyConfig {
    std::uint32_t node_count = 300;   // sensors, excluding the sink
    double field_side = 100.0;        // square field, meters
    double comm_radius = 10.0;        // inclusive connectivity radius
    double min_node_spacing = 5.0;    // sensor-sensor only; the sink is exempt
    Position sink_position{50.0, 0.0};

    void validate() const;  // throws InvalidConfig
};

/// Immutable deployment: sensor positions, the sink, and the radius-induced
/// adjacency (symmetric, distance <= comm_radius, boundary inclusive).
/// Safe to share read-only across concurrent runs.
class Topology {
public:
    /// Builds adjacency and checks every structural invariant (bounds,
    /// sensor spacing). Throws InvalidTopologyFile on violations.
    Topology(TopologyConfig config, std::vector<Position> sensor_positions);

    std::uint32_t sensor_count() const { return static_cast<std::uint32_t>(positions_.size() - 1); }
    NodeId sink() const { return sensor_count(); }
    std::uint32_t node_count() const { return static_cast<std::uint32_t>(positions_.size()); }
    bool is_sink(NodeId id) const { return id == sink(); }

    const Position& position(NodeId id) const;                // throws UnknownNode
    const std::vector<NodeId>& neighbors(NodeId id) const;    // sorted ascending; throws UnknownNode
    const TopologyConfig& config() const { return config_; }

    /// Plain-text export: one header line with the config fields, then one
    /// `id x y` line per node (sink last). Positions round-trip exactly.
    void dump(std::ostream& out) const;
    static Topology load(std::istream& in);  // throws InvalidTopologyFile

    bool operator==(const Topology& other) const;

private:
    TopologyConfig config_;
    std::vector<Position> positions_;            // sensors 0..N-1, sink at N
    std::vector<std::vector<NodeId>> adjacency_; // sorted neighbor lists
};

/// Random deployment, deterministic per (config, seed). Placement is uniform
/// rejection sampling under the spacing constraint; if 1000 * node_count
/// consecutive rejections occur (the uniform sampler saturates near 300
/// nodes at 5 m spacing in a 100 m field), a seeded Poisson-disk pass with a
/// gap-fill sweep takes over and the requested count is subsampled from it.
/// Throws PlacementInfeasible when the density is genuinely unreachable.
Topology generate_topology(const TopologyConfig& config, std::uint64_t seed);

inline constexpr std::int64_t kUnreachable = -1;

/// Breadth-first hop distance from `source` to every node, kUnreachable for
/// nodes in other components. Independent of the protocol paths; tests use
/// it as the hop-count oracle.
std::vector<std::int64_t> hop_distance_oracle(const Topology& topology, NodeId source);

} // namespace wsnsim
