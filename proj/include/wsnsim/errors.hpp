#pragma once

#include <stdexcept>
#include <string>

namespace wsnsim {

struct SimError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Deployment could not satisfy the minimum-spacing constraint at the
/// requested density.
struct PlacementInfeasible : SimError {
    using SimError::SimError;
};

struct UnknownNode : SimError {
    explicit UnknownNode(unsigned long long id)
        : SimError("unknown node id " + std::to_string(id)) {}
};

struct EmptyCensus : SimError {
    EmptyCensus() : SimError("cluster-head election requires a non-empty census") {}
};

/// A REP was handed to a node that is neither a head nor a member.
struct RepAtOrphan : SimError {
    RepAtOrphan() : SimError("REP received at a node with no cluster assignment") {}
};

struct InvalidConfig : SimError {
    explicit InvalidConfig(const std::string& what) : SimError("invalid config: " + what) {}
};

struct InvalidTopologyFile : SimError {
    explicit InvalidTopologyFile(const std::string& what)
        : SimError("invalid topology file: " + what) {}
};

} // namespace wsnsim
