#pragma once

#include "vran/platform_model.hpp"
#include "vran/units.hpp"

#include <cstdint>
#include <vector>

namespace vran {

/// Per-replica event rates (1/s). Failure rates may be zero to switch a
/// mechanism off; repair and failover rates must be positive.
struct ReplicaRates {
    double app_failure = 0.0;
    double app_repair = 0.0;
    double os_failure = 0.0;
    double os_repair = 0.0;
    double hw_failure = 0.0;
    double hw_repair = 0.0;
    double os_failover = 0.0;
    double hw_failover = 0.0;

    static ReplicaRates from(const RateParams& params);
};

struct SimConfig {
    ReplicaRates rates;
    ReplicationSpec spec;
    /// Simulated seconds.
    double horizon = 5e9;
    std::uint64_t seed = 1;
    int batches = 30;
    ModelVariant variant = ModelVariant::kStandard;

    void validate() const;
};

struct SimResult {
    double availability_estimate = 1.0;
    /// Batch-means standard error of the estimate.
    double std_error = 0.0;
    std::vector<double> batch_means;
    std::uint64_t event_count = 0;
    /// OS/CaaS failures of platform replicas, serving or not.
    std::uint64_t os_failure_count = 0;
    std::uint64_t failover_count = 0;
    /// Set when the horizon covers fewer than 100 expected events from the all-up state.
    bool short_horizon = false;
};

/**
 * Event-driven simulation of N_h platform replicas. Each functional replica
 * carries OS and hardware failure clocks, each temporarily failed replica a
 * restart clock and a hardware failure clock, and the site a single repair
 * clock that restores every hardware-failed replica at once. Active-passive
 * adds the serving-replica role and failover delays, during which no
 * platform event fires and the platform is down. Clocks are redrawn after
 * every event.
 *
 * The engine is std::mt19937_64 seeded with cfg.seed; exponential variates
 * come from 53-bit uniforms by inversion, so a given binary always produces
 * bit-identical results for a given config.
 */
SimResult simulate_platform(const SimConfig& cfg);

/// As simulate_platform, plus independent application replicas (n_s * n_h
/// active-active, n_s active-passive). The cluster is up while the platform
/// is up and at least one application replica is up.
SimResult simulate_cluster(const SimConfig& cfg);

}  // namespace vran
