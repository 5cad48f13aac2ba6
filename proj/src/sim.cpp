#include "wsnsim/sim.hpp"

#include <algorithm>
#include <map>

#include "wsnsim/dd.hpp"
#include "wsnsim/errors.hpp"
#include "wsnsim/radio.hpp"
#include "wsnsim/rng.hpp"
#include "wsnsim/rtbc.hpp"
#include "wsnsim/workload.hpp"

namespace wsnsim {

std::string to_string(Protocol p) { return p == Protocol::Rtbc ? "rtbc" : "dd"; }

std::optional<Protocol> protocol_from_string(const std::string& s) {
    if (s == "rtbc") return Protocol::Rtbc;
    if (s == "dd") return Protocol::Dd;
    return std::nullopt;
}

void SimConfig::validate() const {
    topology.validate();
    if (!(ch_fraction > 0.0 && ch_fraction <= 1.0))
        throw InvalidConfig("ch_fraction must be in (0, 1]");
    if (recluster_period < 1) throw InvalidConfig("recluster_period must be >= 1");
    if (total_events < 1) throw InvalidConfig("total_events must be >= 1");
    if (trials < 1) throw InvalidConfig("trials must be >= 1");
    if (initial_energy <= 0.0) throw InvalidConfig("initial_energy must be positive");
}

MetricsSummary MetricsSummary::of(const std::vector<MetricsRecord>& records) {
    MetricsSummary s;
    if (records.empty()) return s;
    const double n = static_cast<double>(records.size());
    for (const MetricsRecord& r : records) {
        s.interest_msgs += static_cast<double>(r.interest_msgs);
        s.data_msgs += static_cast<double>(r.data_msgs);
        s.control_msgs += static_cast<double>(r.control_msgs);
        s.energy_total += r.energy_total.units();
        s.duplicates_suppressed += static_cast<double>(r.duplicates_suppressed);
        s.delivered += static_cast<double>(r.delivered);
        s.undelivered += static_cast<double>(r.undelivered);
    }
    s.interest_msgs /= n;
    s.data_msgs /= n;
    s.control_msgs /= n;
    s.energy_total /= n;
    s.duplicates_suppressed /= n;
    s.delivered /= n;
    s.undelivered /= n;
    return s;
}

namespace {

struct TrialContext {
    const SimConfig& config;
    const Topology& topo;
    EnergyLedger ledger;
    MetricsRecord metrics;
    Radio radio;
    std::vector<NodeState> states;
    std::vector<GradientTable> gradients;
    RotationHistory history;
    std::uint64_t election_seed;
    std::uint32_t round = 0;

    TrialContext(const SimConfig& cfg, const Topology& t, std::uint64_t trial_seed)
        : config(cfg),
          topo(t),
          ledger(t.sensor_count(), Energy::from_units(cfg.initial_energy)),
          metrics(),
          radio(t, ledger, metrics),
          states(t.sensor_count()),
          history(t.sensor_count()),
          election_seed(mix_seed(trial_seed, kElectionStream)) {}
};

void reorganize(TrialContext& ctx) {
    if (ctx.config.protocol == Protocol::Dd) {
        ctx.gradients = dd_setup_gradients(ctx.radio);
    } else {
        const std::vector<CensusEntry> census = run_census(ctx.radio);
        if (census.empty()) {
            // Sink cut off from every live node: no clusters this round.
            for (NodeState& s : ctx.states) {
                s.role = Role::Orphan;
                s.my_ch_id.reset();
                s.dn_id.reset();
                s.hop_cnt.reset();
            }
            ctx.metrics.cluster_sizes.emplace_back();
            ctx.metrics.orphan_counts.push_back(ctx.topo.sensor_count());
        } else {
            const std::vector<NodeId> heads = select_cluster_heads(
                census, ctx.config.ch_fraction, ctx.round, ctx.history, ctx.election_seed);
            const ClusterAssignment assignment = form_clusters(ctx.radio, heads, ctx.states);
            ctx.metrics.cluster_sizes.push_back(assignment.member_counts_per_head());
            ctx.metrics.orphan_counts.push_back(
                static_cast<std::uint32_t>(assignment.orphans.size()));
        }
        disseminate_interest(ctx.radio, ctx.states);
    }
    ctx.round += 1;
}

void process_event_rtbc(TrialContext& ctx, const EventRecord& event) {
    // Window = one event: reports reaching the same head collapse there.
    std::map<NodeId, std::vector<DataMessage>> at_head;
    for (NodeId reporter : event.reporters) {
        const DataMessage report{event.event_id, reporter, false, 0};
        const IntraClusterResult res =
            route_intra_cluster(ctx.radio, ctx.states, reporter, report);
        if (res.status == DeliveryStatus::Delivered) {
            at_head[res.head].push_back(report);
            ctx.metrics.reports_reaching_heads += 1;
        } else {
            ctx.metrics.undelivered += 1;
        }
    }
    for (const auto& [head, reports] : at_head) {
        const std::vector<DataMessage> aggregates = aggregate_at_head(head, reports);
        ctx.metrics.duplicates_suppressed += reports.size() - aggregates.size();
        for (const DataMessage& agg : aggregates) {
            const std::uint64_t carried = agg.suppressed_count + 1;
            const SinkRouteResult res = route_to_sink(ctx.radio, ctx.states, head, agg);
            if (res.status == DeliveryStatus::Delivered)
                ctx.metrics.delivered += carried;
            else
                ctx.metrics.undelivered += carried;
        }
    }
}

void process_event_dd(TrialContext& ctx, const EventRecord& event) {
    for (NodeId reporter : event.reporters) {
        const DataMessage report{event.event_id, reporter, false, 0};
        const SinkRouteResult res = dd_route_event(ctx.radio, ctx.gradients, reporter, report);
        if (res.status == DeliveryStatus::Delivered)
            ctx.metrics.delivered += 1;
        else
            ctx.metrics.undelivered += 1;
    }
}

MetricsRecord run_on(const SimConfig& config, std::uint64_t trial_seed, const Topology& topo) {
    TrialContext ctx(config, topo, trial_seed);
    const EventWorkload workload = generate_workload(
        topo, config.total_events, config.k_dup, mix_seed(trial_seed, kWorkloadStream));

    reorganize(ctx);
    for (std::uint32_t i = 0; i < workload.size(); ++i) {
        if (i > 0 && i % config.recluster_period == 0) reorganize(ctx);
        if (config.protocol == Protocol::Rtbc)
            process_event_rtbc(ctx, workload[i]);
        else
            process_event_dd(ctx, workload[i]);
    }

    ctx.metrics.energy_total = ctx.ledger.total_consumed();
    ctx.metrics.per_node_residual = ctx.ledger.residuals();
    return ctx.metrics;
}

} // namespace

MetricsRecord run_trial(const SimConfig& config, std::uint64_t trial_seed) {
    const Topology topo =
        generate_topology(config.topology, mix_seed(trial_seed, kTopologyStream));
    return run_on(config, trial_seed, topo);
}

MetricsRecord run_trial_on(const SimConfig& config, std::uint64_t trial_seed,
                           const Topology& topology) {
    return run_on(config, trial_seed, topology);
}

std::uint64_t trial_seed_for(const SimConfig& config, std::uint32_t trial_index) {
    return mix_seed(config.master_seed, trial_index);
}

BatchResult run_batch(const SimConfig& config, const Topology* fixed_topology) {
    BatchResult batch;
    batch.trials.reserve(config.trials);
    for (std::uint32_t i = 0; i < config.trials; ++i) {
        const std::uint64_t seed = trial_seed_for(config, i);
        batch.trials.push_back(fixed_topology ? run_trial_on(config, seed, *fixed_topology)
                                              : run_trial(config, seed));
    }
    batch.means = MetricsSummary::of(batch.trials);
    return batch;
}

} // namespace wsnsim
