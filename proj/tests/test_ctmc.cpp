#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "vran/ctmc.hpp"
#include "vran/platform_model.hpp"

#include <cmath>
#include <random>
#include <sstream>

using namespace vran;

namespace {

CtmcModel two_state(double lambda, double mu)
{
    const std::vector<Transition> t{{"Up", "Down", lambda}, {"Down", "Up", mu}};
    return build_generator({"Up", "Down"}, t);
}

void check_distribution(const CtmcModel& m, const StationaryDistribution& pi)
{
    double total = 0.0;
    for (double p : pi.probabilities) {
        CHECK(p >= 0.0);
        total += p;
    }
    CHECK(std::abs(total - 1.0) <= 1e-12);
    CHECK(pi.residual <= 1e-10 * m.max_abs_rate());
    CHECK(balance_residual(m, pi.probabilities) == pi.residual);
}

void check_rows_sum_to_zero(const CtmcModel& m)
{
    const Matrix& q = m.generator();
    for (std::size_t i = 0; i < m.size(); ++i) {
        double sum = 0.0;
        double largest = 0.0;
        for (std::size_t j = 0; j < m.size(); ++j) {
            sum += q(i, j);
            largest = std::max(largest, std::abs(q(i, j)));
            if (i != j)
                CHECK(q(i, j) >= 0.0);
        }
        CHECK(std::abs(sum) <= 1e-12 * largest);
    }
}

}  // namespace

TEST_CASE("generator of a two-state chain")
{
    const CtmcModel m = two_state(0.25, 4.0);
    const Matrix& q = m.generator();
    CHECK(q(0, 0) == -0.25);
    CHECK(q(0, 1) == 0.25);
    CHECK(q(1, 0) == 4.0);
    CHECK(q(1, 1) == -4.0);
    CHECK(m.transition_count() == 2);
    check_rows_sum_to_zero(m);
}

TEST_CASE("parallel edges are summed")
{
    const std::vector<Transition> t{{"A", "B", 1.0}, {"A", "B", 1.0}, {"B", "A", 3.0}};
    const CtmcModel m = build_generator({"A", "B"}, t);
    CHECK(m.generator()(0, 1) == 2.0);
    CHECK(m.generator()(0, 0) == -2.0);
}

TEST_CASE("malformed chains are rejected with a useful message")
{
    const std::vector<Transition> unknown{{"A", "C", 1.0}, {"B", "A", 1.0}};
    CHECK_THROWS_WITH_AS(build_generator({"A", "B"}, unknown), doctest::Contains("'C'"), ModelError);

    const std::vector<Transition> zero{{"A", "B", 0.0}, {"B", "A", 1.0}};
    CHECK_THROWS_WITH_AS(build_generator({"A", "B"}, zero), doctest::Contains("A -> B"), ModelError);

    const std::vector<Transition> negative{{"A", "B", -1.0}, {"B", "A", 1.0}};
    CHECK_THROWS_AS(build_generator({"A", "B"}, negative), ModelError);

    const std::vector<Transition> loop{{"A", "A", 1.0}};
    CHECK_THROWS_AS(build_generator({"A", "B"}, loop), ModelError);

    // B is absorbing, so A cannot be reached from it.
    const std::vector<Transition> one_way{{"A", "B", 1.0}};
    CHECK_THROWS_WITH_AS(build_generator({"A", "B"}, one_way), doctest::Contains("reducible"),
                         ModelError);

    const std::vector<Transition> island{{"A", "B", 1.0}, {"B", "A", 1.0}};
    CHECK_THROWS_WITH_AS(build_generator({"A", "B", "C"}, island), doctest::Contains("C"),
                         ModelError);

    CHECK_THROWS_AS(build_generator({"A", "A"}, island), ModelError);
}

TEST_CASE("two-state stationary law")
{
    for (auto solve : {solve_direct, solve_embedded_dtmc}) {
        const CtmcModel sym = two_state(1.0, 1.0);
        const auto pi = solve(sym);
        CHECK(pi[0] == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(pi[1] == doctest::Approx(0.5).epsilon(1e-15));

        const double lambda = 1.0 / (60 * 86400.0);
        const double mu = 1.0 / 1800.0;
        const CtmcModel m = two_state(lambda, mu);
        const auto p = solve(m);
        CHECK(std::abs(p[0] - mu / (lambda + mu)) <= 1e-15);
        CHECK(std::abs(p[1] - lambda / (lambda + mu)) <= 1e-15);
        check_distribution(m, p);
    }
}

TEST_CASE("uniform three-cycle")
{
    const std::vector<Transition> t{{"x", "y", 2.0}, {"y", "z", 2.0}, {"z", "x", 2.0}};
    const CtmcModel m = build_generator({"x", "y", "z"}, t);
    for (auto solve : {solve_direct, solve_embedded_dtmc}) {
        const auto pi = solve(m);
        for (double p : pi.probabilities)
            CHECK(p == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    }
}

TEST_CASE("single-replica platform matches the hand-solved balance equations")
{
    // 10 months / 90 min OS, 10 years / 10 h hardware. Balance equations:
    //   pi_T (mu_o + lambda_h) = pi_U lambda_o
    //   pi_H mu_h = lambda_h (pi_U + pi_T)
    // solved in 40-digit arithmetic.
    const RateParams params{Duration::months(2), Duration::minutes(30), Duration::months(10),
                            Duration::minutes(90), Duration::years(10), Duration::hours(10),
                            Duration::seconds(10), Duration::seconds(10)};
    const CtmcModel m = build_active_active(params, 1);
    const double expected_up = 0.99967759517927043007;
    const double expected_temp = 0.00020826259952194523323;
    const double expected_perm = 0.00011414222120762470038;
    for (auto solve : {solve_direct, solve_embedded_dtmc}) {
        const auto pi = solve(m);
        CHECK(pi[m.index_of("1^0")] == doctest::Approx(expected_up).epsilon(1e-13));
        CHECK(pi[m.index_of("0^1")] == doctest::Approx(expected_temp).epsilon(1e-12));
        CHECK(pi[m.index_of("0^0")] == doctest::Approx(expected_perm).epsilon(1e-12));
    }
}

TEST_CASE("absorbing state is rejected by the jump-chain solver")
{
    // Larger absorbing chains are already refused as reducible; a lone
    // state with no exit is the remaining case.
    const CtmcModel single = build_generator({"only"}, {});
    CHECK(solve_direct(single)[0] == 1.0);
    CHECK_THROWS_WITH_AS(solve_embedded_dtmc(single), doctest::Contains("absorbing"), ModelError);
}

TEST_CASE("solvers agree and are invariant to rate scaling")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        const RateParams p = testing::random_wide_params(rng);
        for (int n_h = 1; n_h <= 4; ++n_h) {
            for (auto mode : {ReplicationMode::kActiveActive, ReplicationMode::kActivePassive}) {
                const CtmcModel m = build_platform(p, n_h, mode);
                check_rows_sum_to_zero(m);
                const auto direct = solve_direct(m);
                const auto embedded = solve_embedded_dtmc(m);
                check_distribution(m, direct);
                check_distribution(m, embedded);
                for (std::size_t i = 0; i < m.size(); ++i)
                    CHECK(std::abs(direct[i] - embedded[i]) <= 1e-10);

                const double c = testing::log_uniform(rng, 1e-3, 1e3);
                const auto rescaled = solve_direct(scaled(m, c));
                for (std::size_t i = 0; i < m.size(); ++i)
                    CHECK(std::abs(rescaled[i] - direct[i]) <= 1e-12);
            }
        }
    }
}

TEST_CASE("chain dump lists labels and rates")
{
    std::ostringstream os;
    dump_chain(os, two_state(0.5, 2.0));
    CHECK(os.str() == "state\tUp\tDown\nUp\t-0.5\t0.5\nDown\t2\t-2\n");
}
