#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "oracles.hpp"
#include "wsnsim/errors.hpp"
#include "wsnsim/topology.hpp"

using namespace wsnsim;

namespace {

TopologyConfig table_defaults(std::uint32_t n) {
    TopologyConfig cfg;
    cfg.node_count = n;
    return cfg;
}

// Hand-built deployment: positions chosen by the test, sink from config.
Topology make(std::vector<Position> pts, TopologyConfig cfg) {
    cfg.node_count = static_cast<std::uint32_t>(pts.size());
    return Topology(cfg, std::move(pts));
}

} // namespace

TEST_CASE("full-density deployment honors count and spacing") {
    const Topology topo = generate_topology(table_defaults(300), 7);
    CHECK(topo.sensor_count() == 300);
    CHECK(topo.sink() == 300);
    double min_dist = 1e9;
    for (NodeId a = 0; a < 300; ++a) {
        const Position pa = topo.position(a);
        CHECK(pa.x >= 0.0);
        CHECK(pa.x <= 100.0);
        CHECK(pa.y >= 0.0);
        CHECK(pa.y <= 100.0);
        for (NodeId b = a + 1; b < 300; ++b)
            min_dist = std::min(min_dist, distance(pa, topo.position(b)));
    }
    CHECK(min_dist >= 5.0);
}

TEST_CASE("single node deployment has no sensor-sensor edges") {
    const Topology topo = generate_topology(table_defaults(1), 99);
    CHECK(topo.sensor_count() == 1);
    for (NodeId nb : topo.neighbors(0)) CHECK(topo.is_sink(nb));
}

TEST_CASE("adjacency equals brute-force distance recomputation and is symmetric") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        for (std::uint32_t n : {20u, 80u, 300u}) {
            const Topology topo = generate_topology(table_defaults(n), seed);
            const auto oracle = oracles::brute_force_adjacency(topo);
            for (NodeId a = 0; a < topo.node_count(); ++a) {
                const auto& nbs = topo.neighbors(a);
                CHECK(std::set<NodeId>(nbs.begin(), nbs.end()) == oracle[a]);
                for (NodeId b : nbs) {
                    const auto& back = topo.neighbors(b);
                    CHECK(std::find(back.begin(), back.end(), a) != back.end());
                    CHECK(b != a);
                }
            }
        }
    }
}

TEST_CASE("generation is deterministic per (config, seed)") {
    const Topology a = generate_topology(table_defaults(120), 42);
    const Topology b = generate_topology(table_defaults(120), 42);
    CHECK(a == b);
    std::ostringstream da, db;
    a.dump(da);
    b.dump(db);
    CHECK(da.str() == db.str());
    const Topology c = generate_topology(table_defaults(120), 43);
    CHECK_FALSE(a == c);
}

TEST_CASE("boundary distance exactly at the radius connects") {
    TopologyConfig cfg;
    cfg.sink_position = {90.0, 90.0};
    const Topology topo = make({{0.0, 0.0}, {10.0, 0.0}, {50.0, 50.0}}, cfg);
    const auto& n0 = topo.neighbors(0);
    CHECK(std::find(n0.begin(), n0.end(), NodeId{1}) != n0.end());
    CHECK(topo.neighbors(2).empty());  // isolated node: empty set
}

TEST_CASE("neighbors rejects unknown ids") {
    const Topology topo = generate_topology(table_defaults(5), 1);
    CHECK_THROWS_AS(topo.neighbors(topo.node_count()), UnknownNode);
    CHECK_THROWS_AS(topo.position(topo.node_count() + 7), UnknownNode);
}

TEST_CASE("hop distances: identity, direct neighbor, iterative-deepening cross-check") {
    const Topology topo = generate_topology(table_defaults(40), 5);
    const auto dist = hop_distance_oracle(topo, topo.sink());
    CHECK(dist[topo.sink()] == 0);
    for (NodeId nb : topo.neighbors(topo.sink())) CHECK(dist[nb] == 1);
    for (NodeId id = 0; id < topo.node_count(); ++id) {
        CHECK(dist[id] == oracles::iddfs_hop_distance(topo, topo.sink(), id, 12));
    }
    CHECK_THROWS_AS(hop_distance_oracle(topo, topo.node_count() + 1), UnknownNode);
}

TEST_CASE("infeasible densities fail with PlacementInfeasible") {
    TopologyConfig cfg;
    cfg.node_count = 30;
    cfg.field_side = 20.0;  // capacity at 5 m spacing is far below 30
    cfg.sink_position = {10.0, 0.0};
    CHECK_THROWS_AS(generate_topology(cfg, 3), PlacementInfeasible);
}

TEST_CASE("config invariants are enforced") {
    TopologyConfig cfg;
    cfg.node_count = 0;
    CHECK_THROWS_AS(cfg.validate(), InvalidConfig);
    cfg = {};
    cfg.min_node_spacing = 12.0;  // must stay below comm_radius
    CHECK_THROWS_AS(cfg.validate(), InvalidConfig);
    cfg = {};
    cfg.sink_position = {500.0, 0.0};
    CHECK_THROWS_AS(cfg.validate(), InvalidConfig);
}

TEST_CASE("dump/load round-trips exactly") {
    const Topology topo = generate_topology(table_defaults(150), 11);
    std::stringstream buf;
    topo.dump(buf);
    const Topology back = Topology::load(buf);
    CHECK(topo == back);

    std::stringstream again;
    back.dump(again);
    std::stringstream orig;
    topo.dump(orig);
    CHECK(again.str() == orig.str());
}

TEST_CASE("load rejects malformed input") {
    std::stringstream missing("nNo header here");
    CHECK_THROWS_AS(Topology::load(missing), InvalidTopologyFile);

    // Spacing violation smuggled into an otherwise well-formed file.
    std::stringstream tight(
        "nodes 2 field 100 radius 10 spacing 5 sink 50 0\n0 10 10\n1 11 10\n2 50 0\n");
    CHECK_THROWS_AS(Topology::load(tight), InvalidTopologyFile);

    std::stringstream truncated("nodes 3 field 100 radius 10 spacing 5 sink 50 0\n0 10 10\n");
    CHECK_THROWS_AS(Topology::load(truncated), InvalidTopologyFile);
}

TEST_CASE("sink is exempt from sensor spacing") {
    TopologyConfig cfg;
    const Topology topo = make({{50.0, 1.0}}, cfg);  // 1 m from the sink
    CHECK(topo.sensor_count() == 1);
    const auto& n0 = topo.neighbors(0);
    CHECK(std::find(n0.begin(), n0.end(), topo.sink()) != n0.end());
}
