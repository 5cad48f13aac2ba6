// Test-side oracles, implemented independently of the library code paths
// they check: brute-force geometry, an iterative-deepening hop search, and
// a queue-based multi-source BFS.
#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <vector>

#include "wsnsim/topology.hpp"

namespace oracles {

using wsnsim::NodeId;
using wsnsim::Topology;

/// All pairs within comm_radius, by direct distance recomputation.
inline std::vector<std::set<NodeId>> brute_force_adjacency(const Topology& topo) {
    std::vector<std::set<NodeId>> adj(topo.node_count());
    for (NodeId a = 0; a < topo.node_count(); ++a) {
        for (NodeId b = 0; b < topo.node_count(); ++b) {
            if (a == b) continue;
            if (wsnsim::distance(topo.position(a), topo.position(b)) <=
                topo.config().comm_radius) {
                adj[a].insert(b);
            }
        }
    }
    return adj;
}

/// Depth-limited DFS reachability; hop distance found by iterative deepening.
/// Deliberately not a BFS, so it cross-checks the BFS-based oracle.
inline bool dls_reaches(const Topology& topo, NodeId from, NodeId target, std::int64_t limit,
                        std::vector<char>& on_path) {
    if (from == target) return true;
    if (limit == 0) return false;
    on_path[from] = 1;
    for (NodeId nb : topo.neighbors(from)) {
        if (!on_path[nb] && dls_reaches(topo, nb, target, limit - 1, on_path)) {
            on_path[from] = 0;
            return true;
        }
    }
    on_path[from] = 0;
    return false;
}

inline std::int64_t iddfs_hop_distance(const Topology& topo, NodeId source, NodeId target,
                                       std::int64_t max_depth) {
    for (std::int64_t d = 0; d <= max_depth; ++d) {
        std::vector<char> on_path(topo.node_count(), 0);
        if (dls_reaches(topo, source, target, d, on_path)) return d;
    }
    return wsnsim::kUnreachable;
}

/// Hop level of every node from the nearest of several sources.
inline std::vector<std::int64_t> multi_source_bfs(const Topology& topo,
                                                  const std::vector<NodeId>& sources) {
    std::vector<std::int64_t> level(topo.node_count(), wsnsim::kUnreachable);
    std::deque<NodeId> queue;
    for (NodeId s : sources) {
        level[s] = 0;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        const NodeId u = queue.front();
        queue.pop_front();
        for (NodeId v : topo.neighbors(u)) {
            if (level[v] == wsnsim::kUnreachable) {
                level[v] = level[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return level;
}

} // namespace oracles
