// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "test_support.hpp"
#include "vran/app_model.hpp"
#include "vran/cluster.hpp"
#include "vran/network.hpp"
#include "vran/simulation.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

using namespace vran;
using testing::expand;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail)
{
    std::printf("criterion %d %s: %s (%s)\n", id, ok ? "PASS" : "FAIL", what.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!ok)
        ++failures;
}

void table3()
{
    const auto t0 = Clock::now();
    int points = 0, mismatches = 0;
    std::ostringstream bad;
    const auto rows = testing::table3_rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        for (const auto& pt : expand(row, ReplicationMode::kActiveActive)) {
            const ClusterReport r = cluster_availability(pt.params, pt.spec);
            ++points;
            if (r.nines_cluster != row.nines || r.nines_platform != row.nines_p ||
                r.nines_app != row.nines_s) {
                ++mismatches;
                bad << " row " << i + 1 << " got (" << r.nines_cluster << "," << r.nines_platform
                    << "," << r.nines_app << ")";
            }
        }
    }
    const double elapsed = seconds_since(t0);
    std::ostringstream d;
    d << points << " points, " << mismatches << " mismatches, " << elapsed << " s" << bad.str();
    report(1, mismatches == 0 && elapsed < 1.0, "active-active nines table", d.str());
}

void table4()
{
    int points = 0, mismatches = 0;
    std::ostringstream bad;
    const auto rows = testing::table4_rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        for (const auto& pt : expand(row, ReplicationMode::kActivePassive)) {
            const ClusterReport r = cluster_availability(pt.params, pt.spec);
            ++points;
            if (r.nines_cluster != row.nines || r.nines_platform != row.nines_p ||
                r.nines_app != row.computed_nines_s) {
                ++mismatches;
                bad << " row " << i + 1 << " got (" << r.nines_cluster << "," << r.nines_platform
                    << "," << r.nines_app << ")";
            }
        }
    }
    std::ostringstream d;
    d << points << " points, " << mismatches
      << " mismatches; software nines checked against the binomial form (6, 8, 8, 10), the "
         "printed (5, 7, 7, 8) is not reproducible"
      << bad.str();
    report(2, mismatches == 0, "active-passive cluster and platform nines", d.str());
}

void table5()
{
    struct Row {
        double du, cu, cell, all_down;
    };
    const Row rows[] = {{1e-5, 1e-5, 1.99e-5, 1e-5},
                        {1e-5, 1e-6, 1.10e-5, 1e-6},
                        {1e-5, 1e-7, 1.01e-5, 1e-7}};
    bool ok = true;
    std::ostringstream d;
    for (const auto& r : rows) {
        const auto s = NetworkScenario::from_outage(10, r.du, r.cu);
        const double cell = cell_outage(s);
        const double all = pmf_centralized(s).p_all_down;
        ok = ok && std::abs(cell - r.cell) <= 0.01 * r.cell &&
             std::abs(all - r.all_down) <= 0.01 * r.all_down;
        d << " cell " << cell << " all-down " << all << ";";
    }
    report(3, ok, "centralized-CU table", d.str());
}

void mean_identity()
{
    std::mt19937_64 rng(20240501);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<int> n(1, 50);
    double worst_mean = 0.0, worst_sum = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const int n_c = n(rng);
        const double f_du = u(rng), f_cu = u(rng);
        const auto s = NetworkScenario::from_availability(n_c, f_du, f_cu);
        const double expected = n_c * (1.0 - f_du * f_cu);
        for (const auto& pmf : {pmf_centralized(s), pmf_distributed(s)}) {
            double total = 0.0, mean = 0.0;
            for (std::size_t k = 0; k < pmf.pmf.size(); ++k) {
                total += pmf.pmf[k];
                mean += static_cast<double>(k) * pmf.pmf[k];
            }
            worst_sum = std::max(worst_sum, std::abs(total - 1.0));
            worst_mean = std::max(worst_mean, std::abs(mean - expected));
        }
    }
    std::ostringstream d;
    d << "1000 scenarios, max |mean error| " << worst_mean << ", max |sum - 1| " << worst_sum;
    report(4, worst_mean <= 1e-12 && worst_sum <= 1e-12, "placement-independent mean", d.str());
}

void solver_agreement()
{
    std::mt19937_64 rng(555);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const RateParams p = testing::random_table_params(rng);
        for (int n_h = 1; n_h <= 4; ++n_h) {
            for (auto mode : {ReplicationMode::kActiveActive, ReplicationMode::kActivePassive}) {
                const CtmcModel m = build_platform(p, n_h, mode);
                const auto a = solve_direct(m);
                const auto b = solve_embedded_dtmc(m);
                for (std::size_t k = 0; k < m.size(); ++k)
                    worst = std::max(worst, std::abs(a[k] - b[k]));
            }
        }
    }
    double worst_app = 0.0;
    for (int i = 0; i < 100; ++i) {
        const RateParams p = testing::random_table_params(rng);
        for (int n = 1; n <= 8; ++n) {
            const CtmcModel m = app_model_as_ctmc(p, n);
            const double chain = 1.0 - solve_direct(m)[m.index_of("0")];
            worst_app = std::max(worst_app, std::abs(chain - app_availability(p, n).availability));
        }
    }
    std::ostringstream d;
    d << "platform max diff " << worst << ", application max diff " << worst_app;
    report(5, worst <= 1e-10 && worst_app <= 1e-12, "solver cross-agreement", d.str());
}

void fast_failover()
{
    bool ok = true;
    std::ostringstream d;
    for (double mttf_o_days : {17.0, 70.0}) {
        auto params = [&](double mtfo) {
            RateParams p = testing::table_params(Duration::years(35), Duration::days(mttf_o_days),
                                                 Duration::hours(1.5), Duration::minutes(5),
                                                 Duration::seconds(mtfo));
            return p;
        };
        const auto two = platform_availability(params(100), 2, ReplicationMode::kActivePassive);
        const auto three = platform_availability(params(100), 3, ReplicationMode::kActivePassive);
        const auto fast = platform_availability(params(1), 2, ReplicationMode::kActivePassive);
        const double gap =
            std::abs(three.availability - two.availability) / two.outage_probability;
        const double ratio = two.outage_probability / fast.outage_probability;
        ok = ok && gap < 0.05 && ratio >= 10.0;
        d << " MTTF_o " << mttf_o_days << "d: gap " << gap << ", outage ratio " << ratio << ";";
    }
    report(6, ok, "failover speed dominates replication", d.str());
}

struct McOutcome {
    int agree = 0;
    double slowest = 0.0;
    int zero_downtime = 0;
};

McOutcome monte_carlo(const RateParams& p, ReplicationSpec spec, double horizon = 5e9)
{
    const double analytic = cluster_availability(p, spec).f_cluster;
    McOutcome out;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        SimConfig c;
        c.rates = ReplicaRates::from(p);
        c.spec = spec;
        c.horizon = horizon;
        c.seed = seed;
        const auto t0 = Clock::now();
        const SimResult s = simulate_cluster(c);
        out.slowest = std::max(out.slowest, seconds_since(t0));
        if (std::abs(s.availability_estimate - analytic) <= 3 * s.std_error)
            ++out.agree;
        if (s.availability_estimate == 1.0)
            ++out.zero_downtime;
    }
    return out;
}

void simulation()
{
    const RateParams row1 = testing::table_params(Duration::years(10), Duration::months(10),
                                                  Duration::minutes(90), Duration::minutes(30));
    const McOutcome aa = monte_carlo(row1, {2, 1, ReplicationMode::kActiveActive});
    RateParams p4 = testing::table_params(Duration::years(10), Duration::months(10),
                                          Duration::minutes(15), Duration::minutes(5),
                                          Duration::seconds(10));
    const McOutcome ap = monte_carlo(p4, {2, 2, ReplicationMode::kActivePassive});
    std::ostringstream d;
    d << "active-active row 1: " << aa.agree << "/20 within 3 SE, " << aa.zero_downtime
      << " seeds saw no outage; active-passive row 3: " << ap.agree << "/20, "
      << ap.zero_downtime << " without outage; slowest seed "
      << std::max(aa.slowest, ap.slowest) << " s";
    const bool ok = aa.agree >= 19 && ap.agree >= 19 && std::max(aa.slowest, ap.slowest) < 60.0;
    report(7, ok, "Monte Carlo agreement at 5e9 s", d.str());

    // Informational only: the same seeds with a thousandfold horizon, where
    // the rare long outages are sampled often enough for batch means.
    const McOutcome aa_long = monte_carlo(row1, {2, 1, ReplicationMode::kActiveActive}, 5e12);
    const McOutcome ap_long = monte_carlo(p4, {2, 2, ReplicationMode::kActivePassive}, 5e12);
    std::printf("criterion 7 note: at 5e12 s active-active %d/20, active-passive %d/20 within 3 SE\n",
                aa_long.agree, ap_long.agree);
}

void structure()
{
    bool counts = true;
    for (int n = 1; n <= 5; ++n) {
        const std::size_t sa = static_cast<std::size_t>((n + 1) * (n + 2) / 2);
        const std::size_t sp = sa + static_cast<std::size_t>(n * (n - 1));
        const RateParams p = testing::table_params(Duration::years(10), Duration::months(10),
                                                   Duration::minutes(90), Duration::minutes(30));
        counts = counts && build_active_active(p, n).size() == sa &&
                 build_active_passive(p, n).size() == sp;
    }

    std::mt19937_64 rng(808);
    double worst_row = 0.0;
    bool single_equal = true, monotone = true;
    for (int i = 0; i < 100; ++i) {
        const RateParams p = testing::random_table_params(rng);
        single_equal = single_equal &&
                       platform_availability(p, 1, ReplicationMode::kActiveActive).availability ==
                           platform_availability(p, 1, ReplicationMode::kActivePassive).availability;
        double previous = 0.0;
        for (int n = 1; n <= 5; ++n) {
            for (auto mode : {ReplicationMode::kActiveActive, ReplicationMode::kActivePassive}) {
                const CtmcModel m = build_platform(p, n, mode);
                for (std::size_t r = 0; r < m.size(); ++r) {
                    const auto row = m.generator().row(r);
                    const double s = std::accumulate(row.begin(), row.end(), 0.0);
                    worst_row = std::max(worst_row, std::abs(s) / m.max_abs_rate());
                }
            }
            const double a = platform_availability(p, n, ReplicationMode::kActiveActive).availability;
            monotone = monotone && a >= previous;
            previous = a;
        }
    }
    std::ostringstream d;
    d << "state counts " << (counts ? "ok" : "wrong") << ", max relative row sum " << worst_row
      << ", single-replica modes " << (single_equal ? "identical" : "differ")
      << ", active-active monotone " << (monotone ? "yes" : "no");
    report(8, counts && worst_row <= 1e-14 && single_equal && monotone, "structural properties",
           d.str());
}

}  // namespace

int main()
{
    table3();
    table4();
    table5();
    mean_identity();
    solver_agreement();
    fast_failover();
    simulation();
    structure();
    std::printf("%s: %d of 8 criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
