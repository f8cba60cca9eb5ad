// vran-avail: availability of replicated CU/DU clusters and CU placements.

#include "vran/cluster.hpp"
#include "vran/config.hpp"
#include "vran/ctmc.hpp"
#include "vran/network.hpp"
#include "vran/simulation.hpp"
#include "vran/sweep.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace vran;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitStatistical = 1;
constexpr int kExitValidation = 2;
constexpr int kExitInternal = 3;

std::string num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Options {
    std::string config;
    std::string out;
    std::string format = "table";
    std::optional<std::uint64_t> seed;
    std::optional<std::string> horizon;
    std::optional<std::string> model_variant;
    bool dump_chain = false;
};

// Writes to --out when given, stdout otherwise.
class Output {
  public:
    explicit Output(const std::string& path)
    {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_)
                throw ValidationError("cannot write '" + path + "'");
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

  private:
    std::unique_ptr<std::ofstream> file_;
};

void check_format(const Options& o)
{
    if (o.format != "csv" && o.format != "table")
        throw ValidationError("`--format`: expected csv or table, got '" + o.format + "'");
}

ModelConfig load_model(const Options& o)
{
    ModelConfig c = parse_model_config(load_json_file(o.config));
    if (o.model_variant)
        c.variant = parse_variant(*o.model_variant);
    return c;
}

int cmd_solve(const Options& o)
{
    check_format(o);
    const ModelConfig c = load_model(o);
    const ClusterReport r = cluster_availability(c.params, c.spec, c.variant);

    Output out(o.out);
    std::ostream& os = out.stream();
    if (o.format == "csv") {
        os << provenance_line("csv-v1 durations-in-seconds") << '\n'
           << csv_header() << '\n'
           << csv_row(c, r) << '\n';
    } else {
        os << provenance_line("solve") << '\n'
           << "mode " << to_string(r.mode) << '\n'
           << "n_h " << r.n_h << '\n'
           << "n_s " << r.n_s << '\n'
           << "app_replicas " << r.effective_app_replicas << '\n'
           << "states " << r.platform_states << '\n'
           << "f_platform " << num(r.f_platform) << '\n'
           << "f_app " << num(r.f_app) << '\n'
           << "f_cluster " << num(r.f_cluster) << '\n'
           << "outage_platform " << num(r.outage_platform) << '\n'
           << "outage_app " << num(r.outage_app) << '\n'
           << "outage_cluster " << num(r.outage_cluster) << '\n'
           << "nines " << r.nines_cluster << ' ' << r.nines_platform << ' ' << r.nines_app << '\n'
           << "resolved_config " << resolved_config(c).dump() << '\n';
    }
    if (o.dump_chain) {
        os << "# chain " << to_string(c.spec.mode) << " n_h=" << c.spec.n_h << '\n';
        dump_chain(os, build_platform(c.params, c.spec.n_h, c.spec.mode, c.variant));
    }
    return kExitOk;
}

std::vector<SweepPoint> load_and_run_sweep(const Options& o, SweepSpec& spec)
{
    spec = parse_sweep_spec(load_json_file(o.config));
    if (o.model_variant)
        spec.base["model_variant"] = *o.model_variant;
    return run_sweep(spec);
}

int cmd_sweep(const Options& o)
{
    check_format(o);
    SweepSpec spec;
    const auto points = load_and_run_sweep(o, spec);
    Output out(o.out);
    if (o.format == "csv")
        write_csv(out.stream(), points);
    else
        write_aligned(out.stream(), points);
    return kExitOk;
}

int cmd_table(const Options& o)
{
    SweepSpec spec;
    const auto points = load_and_run_sweep(o, spec);
    const auto groups = group_by_nines(spec, points);
    std::cout << provenance_line("nines-table") << '\n';
    write_nines_table(std::cout, spec, groups);
    if (!o.out.empty()) {
        Output raw(o.out);
        write_csv(raw.stream(), points);
    } else {
        std::cout << '\n';
        write_csv(std::cout, points);
    }
    return kExitOk;
}

int cmd_network(const Options& o)
{
    check_format(o);
    const auto scenarios = parse_network_config(load_json_file(o.config));

    std::vector<std::vector<std::string>> rows{
        {"n_c", "du_outage", "cu_outage", "cell_outage", "all_down_centralized",
         "all_down_distributed", "none_down_centralized", "none_down_distributed",
         "mean_centralized", "mean_distributed", "expected_unavailable"}};
    std::ostringstream pmf_csv;
    pmf_csv << provenance_line("network-pmf") << '\n' << "scenario,k,p_centralized,p_distributed\n";
    for (std::size_t i = 0; i < scenarios.size(); ++i) {
        const auto& s = scenarios[i];
        const OutagePmf c = pmf_centralized(s);
        const OutagePmf d = pmf_distributed(s);
        rows.push_back({std::to_string(s.n_c()), num(s.du_outage()), num(s.cu_outage()),
                        num(cell_outage(s)), num(c.p_all_down), num(d.p_all_down),
                        num(c.pmf.front()), num(d.pmf.front()), num(c.mean), num(d.mean),
                        num(expected_unavailable(s))});
        for (std::size_t k = 0; k < c.pmf.size(); ++k)
            pmf_csv << i << ',' << k << ',' << num(c.pmf[k]) << ',' << num(d.pmf[k]) << '\n';
    }

    std::cout << provenance_line("network") << '\n';
    if (o.format == "csv") {
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c)
                std::cout << (c ? "," : "") << row[c];
            std::cout << '\n';
        }
    } else {
        std::vector<std::size_t> width(rows.front().size(), 0);
        for (const auto& row : rows)
            for (std::size_t c = 0; c < row.size(); ++c)
                width[c] = std::max(width[c], row[c].size());
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c)
                std::cout << row[c]
                          << (c + 1 < row.size() ? std::string(width[c] - row[c].size() + 2, ' ')
                                                 : "");
            std::cout << '\n';
        }
    }
    if (!o.out.empty()) {
        Output out(o.out);
        out.stream() << pmf_csv.str();
    }
    return kExitOk;
}

int cmd_simulate(const Options& o)
{
    SimulateConfig s = parse_simulate_config(load_json_file(o.config));
    if (o.model_variant)
        s.model.variant = parse_variant(*o.model_variant);
    if (o.seed)
        s.seed = *o.seed;
    if (o.horizon)
        s.horizon_seconds = parse_duration(*o.horizon).in_seconds();

    SimConfig cfg;
    cfg.rates = ReplicaRates::from(s.model.params);
    cfg.spec = s.model.spec;
    cfg.horizon = s.horizon_seconds;
    cfg.seed = s.seed;
    cfg.batches = s.batches;
    cfg.variant = s.model.variant;

    const SimResult sim = s.cluster_target ? simulate_cluster(cfg) : simulate_platform(cfg);
    const ClusterReport r = cluster_availability(s.model.params, s.model.spec, s.model.variant);
    const double analytic = s.cluster_target ? r.f_cluster : r.f_platform;
    const double diff = sim.availability_estimate - analytic;
    double z = 0.0;
    if (sim.std_error > 0.0)
        z = diff / sim.std_error;
    else if (diff != 0.0)
        z = std::copysign(INFINITY, diff);

    Output out(o.out);
    std::ostream& os = out.stream();
    os << provenance_line("simulate") << '\n'
       << "target " << (s.cluster_target ? "cluster" : "platform") << '\n'
       << "seed " << s.seed << '\n'
       << "horizon_s " << num(s.horizon_seconds) << '\n'
       << "batches " << s.batches << '\n'
       << "events " << sim.event_count << '\n'
       << "estimate " << num(sim.availability_estimate) << " +- " << num(sim.std_error) << '\n'
       << "analytic " << num(analytic) << '\n'
       << "z " << num(z) << '\n';
    if (sim.short_horizon)
        os << "warning horizon covers fewer than 100 expected failure events\n";
    return std::abs(z) <= 3.0 ? kExitOk : kExitStatistical;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Availability models for replicated vRAN CU/DU clusters"};
    app.require_subcommand(1);
    app.set_version_flag("--version", vran::kToolVersion);

    Options o;
    auto add_common = [&o](CLI::App* sub, bool with_format) {
        sub->add_option("-c,--config", o.config, "JSON config file")->required();
        sub->add_option("-o,--out", o.out, "Output path");
        if (with_format)
            sub->add_option("--format", o.format, "csv or table");
        sub->add_option("--model-variant", o.model_variant, "standard or drop-eq5");
    };

    auto* solve = app.add_subcommand("solve", "Solve one cluster configuration");
    add_common(solve, true);
    solve->add_flag("--dump-chain", o.dump_chain, "Append the platform state space and generator");

    auto* sweep = app.add_subcommand("sweep", "Evaluate a parameter grid");
    add_common(sweep, true);

    auto* table = app.add_subcommand("table", "Group a parameter grid into a nines table");
    add_common(table, false);

    auto* network = app.add_subcommand("network", "Centralized vs distributed CU outage statistics");
    network->add_option("-c,--config", o.config, "JSON config file")->required();
    network->add_option("-o,--out", o.out, "Path for the per-k PMF CSV");
    network->add_option("--format", o.format, "csv or table");

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo check against the analytic model");
    add_common(simulate, false);
    simulate->add_option("--seed", o.seed, "RNG seed");
    simulate->add_option("--horizon", o.horizon, "Simulated time, e.g. 5e9s");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    try {
        if (*solve)
            return cmd_solve(o);
        if (*sweep)
            return cmd_sweep(o);
        if (*table)
            return cmd_table(o);
        if (*network)
            return cmd_network(o);
        if (*simulate)
            return cmd_simulate(o);
    } catch (const vran::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitOk;
}
