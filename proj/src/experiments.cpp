#include "wsnsim/experiments.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>

#include "wsnsim/csv.hpp"
#include "wsnsim/errors.hpp"
#include "wsnsim/radio.hpp"
#include "wsnsim/rng.hpp"
#include "wsnsim/rtbc.hpp"

namespace wsnsim {

namespace {

constexpr const char* kResultsHeader =
    "protocol,recluster_period,event_count,trial,interest_msgs,data_msgs,energy_total,"
    "duplicates_suppressed,delivered,undelivered";
constexpr const char* kSummaryHeader =
    "protocol,recluster_period,event_count,mean_interest_msgs,mean_data_msgs,mean_energy_total,"
    "mean_duplicates_suppressed,mean_delivered,mean_undelivered";
constexpr const char* kResidualsHeader =
    "protocol,recluster_period,event_count,trial,node_id,residual";

void write_run_manifest(const ResolvedConfig& config, const std::filesystem::path& out_dir) {
    std::ofstream out(out_dir / "manifest.cfg", std::ios::binary);
    if (!out) throw SimError("cannot write manifest in " + out_dir.string());
    write_manifest(out, config);
}

std::vector<Topology> pregenerate_topologies(const SimConfig& cfg) {
    std::vector<Topology> topos;
    topos.reserve(cfg.trials);
    for (std::uint32_t i = 0; i < cfg.trials; ++i) {
        topos.push_back(
            generate_topology(cfg.topology, mix_seed(trial_seed_for(cfg, i), kTopologyStream)));
    }
    return topos;
}

struct OutputFiles {
    CsvWriter results;
    CsvWriter summary;
    CsvWriter residuals;

    explicit OutputFiles(const std::filesystem::path& dir)
        : results(dir / "results.csv", kResultsHeader),
          summary(dir / "summary.csv", kSummaryHeader),
          residuals(dir / "residuals.csv", kResidualsHeader) {}
};

void print_table_header(std::ostream& log) {
    log << std::left << std::setw(9) << "protocol" << std::right << std::setw(8) << "period"
        << std::setw(8) << "events" << std::setw(12) << "interest" << std::setw(12) << "data"
        << std::setw(12) << "energy" << std::setw(12) << "suppressed" << std::setw(11)
        << "delivered" << std::setw(13) << "undelivered" << '\n';
}

void print_table_row(std::ostream& log, const std::string& proto, std::uint32_t period,
                     std::uint32_t events, const MetricsSummary& m) {
    log << std::left << std::setw(9) << proto << std::right << std::setw(8) << period
        << std::setw(8) << events << std::setw(12) << fmt_mean(m.interest_msgs) << std::setw(12)
        << fmt_mean(m.data_msgs) << std::setw(12) << fmt_mean(m.energy_total) << std::setw(12)
        << fmt_mean(m.duplicates_suppressed) << std::setw(11) << fmt_mean(m.delivered)
        << std::setw(13) << fmt_mean(m.undelivered) << '\n';
}

// Runs one (variant, event_count) batch and writes its rows; the caller owns
// iteration order so the CSV layout stays stable.
MetricsSummary run_group(const SimConfig& cfg, const std::vector<Topology>* topos,
                         const Topology* fixed, OutputFiles& files) {
    const std::string proto = to_string(cfg.protocol);
    std::vector<MetricsRecord> records;
    records.reserve(cfg.trials);
    for (std::uint32_t t = 0; t < cfg.trials; ++t) {
        const std::uint64_t seed = trial_seed_for(cfg, t);
        const Topology& topo = fixed ? *fixed : (*topos)[t];
        MetricsRecord rec = run_trial_on(cfg, seed, topo);
        files.results.row(proto, cfg.recluster_period, cfg.total_events, t, rec.interest_msgs,
                          rec.data_msgs, rec.energy_total, rec.duplicates_suppressed,
                          rec.delivered, rec.undelivered);
        for (std::size_t n = 0; n < rec.per_node_residual.size(); ++n) {
            files.residuals.row(proto, cfg.recluster_period, cfg.total_events, t, n,
                                rec.per_node_residual[n]);
        }
        records.push_back(std::move(rec));
    }
    const MetricsSummary means = MetricsSummary::of(records);
    files.summary.row(proto, cfg.recluster_period, cfg.total_events, fmt_mean(means.interest_msgs),
                      fmt_mean(means.data_msgs), fmt_mean(means.energy_total),
                      fmt_mean(means.duplicates_suppressed), fmt_mean(means.delivered),
                      fmt_mean(means.undelivered));
    files.results.flush();
    return means;
}

} // namespace

std::vector<CompareVariant> compare_variants() {
    return {{Protocol::Rtbc, 50}, {Protocol::Rtbc, 100}, {Protocol::Rtbc, 200},
            {Protocol::Dd, 100}};
}

int run_compare(const ResolvedConfig& config, const std::filesystem::path& out_dir,
                std::ostream& log, const Topology* fixed_topology) {
    std::filesystem::create_directories(out_dir);
    write_run_manifest(config, out_dir);
    OutputFiles files(out_dir);

    std::vector<std::uint32_t> event_counts;
    if (config.events_explicit)
        event_counts.push_back(config.sim.total_events);
    else
        event_counts.assign(std::begin(kDefaultEventSweep), std::end(kDefaultEventSweep));

    try {
        std::vector<Topology> topos;
        if (!fixed_topology) topos = pregenerate_topologies(config.sim);

        print_table_header(log);
        for (const CompareVariant& variant : compare_variants()) {
            for (std::uint32_t events : event_counts) {
                SimConfig cfg = config.sim;
                cfg.protocol = variant.protocol;
                cfg.recluster_period = variant.recluster_period;
                cfg.total_events = events;
                const MetricsSummary means =
                    run_group(cfg, &topos, fixed_topology, files);
                print_table_row(log, to_string(cfg.protocol), cfg.recluster_period, events, means);
            }
        }
    } catch (const SimError& e) {
        files.results.note(std::string("run aborted: ") + e.what());
        log << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

int run_single(const ResolvedConfig& config, const std::filesystem::path& out_dir,
               std::ostream& log, const Topology* fixed_topology) {
    std::filesystem::create_directories(out_dir);
    write_run_manifest(config, out_dir);
    OutputFiles files(out_dir);
    try {
        std::vector<Topology> topos;
        if (!fixed_topology) topos = pregenerate_topologies(config.sim);
        print_table_header(log);
        const MetricsSummary means = run_group(config.sim, &topos, fixed_topology, files);
        print_table_row(log, to_string(config.sim.protocol), config.sim.recluster_period,
                        config.sim.total_events, means);
    } catch (const SimError& e) {
        files.results.note(std::string("run aborted: ") + e.what());
        log << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

int run_cluster_stats(const ResolvedConfig& config, const std::filesystem::path& out_dir,
                      std::ostream& log, const Topology* fixed_topology) {
    std::filesystem::create_directories(out_dir);
    write_run_manifest(config, out_dir);
    CsvWriter clusters(out_dir / "clusters.csv", "trial,head_id,members");
    CsvWriter summary(out_dir / "cluster_summary.csv",
                      "trial,clusters,members_total,orphans,mean_members");
    try {
        const SimConfig& cfg = config.sim;
        double size_sum = 0.0;
        std::uint64_t size_n = 0;
        std::uint64_t orphan_sum = 0;
        std::uint64_t sensors_sum = 0;
        for (std::uint32_t t = 0; t < cfg.trials; ++t) {
            const std::uint64_t seed = trial_seed_for(cfg, t);
            const Topology topo =
                fixed_topology ? *fixed_topology
                               : generate_topology(cfg.topology, mix_seed(seed, kTopologyStream));
            sensors_sum += topo.sensor_count();
            EnergyLedger ledger(topo.sensor_count(), Energy::from_units(cfg.initial_energy));
            MetricsRecord metrics;
            Radio radio(topo, ledger, metrics);
            std::vector<NodeState> states(topo.sensor_count());
            RotationHistory history(topo.sensor_count());

            const std::vector<CensusEntry> census = run_census(radio);
            if (census.empty()) {
                summary.row(t, 0, 0, topo.sensor_count(), fmt_mean(0.0));
                orphan_sum += topo.sensor_count();
                continue;
            }
            const std::vector<NodeId> heads = select_cluster_heads(
                census, cfg.ch_fraction, 0, history, mix_seed(seed, kElectionStream));
            const ClusterAssignment assignment = form_clusters(radio, heads, states);
            const std::vector<std::uint32_t> counts = assignment.member_counts_per_head();

            std::uint64_t members_total = 0;
            for (std::size_t h = 0; h < assignment.heads.size(); ++h) {
                clusters.row(t, assignment.heads[h], counts[h]);
                members_total += counts[h];
            }
            size_sum += static_cast<double>(members_total);
            size_n += counts.size();
            orphan_sum += assignment.orphans.size();
            summary.row(t, counts.size(), members_total, assignment.orphans.size(),
                        fmt_mean(counts.empty()
                                     ? 0.0
                                     : static_cast<double>(members_total) /
                                           static_cast<double>(counts.size())));
        }
        const double mean_size = size_n ? size_sum / static_cast<double>(size_n) : 0.0;
        const double orphan_frac =
            sensors_sum ? static_cast<double>(orphan_sum) / static_cast<double>(sensors_sum) : 0.0;
        log << "clusters: mean members per head " << fmt_mean(mean_size) << ", orphan fraction "
            << fmt_mean(orphan_frac) << '\n';
    } catch (const SimError& e) {
        clusters.note(std::string("run aborted: ") + e.what());
        log << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace wsnsim
