#pragma once

#include "vran/ctmc.hpp"
#include "vran/units.hpp"

#include <string>
#include <vector>

namespace vran {

/**
 * A platform state a^b: a functional replicas, b with a temporary (OS/CaaS)
 * failure, and implicitly c = N_h - a - b with a permanent (hardware) failure.
 * Failover states a_o^b / a_h^b exist only in active-passive mode, only for
 * a >= 2, and are outages.
 */
struct PlatformState {
    enum class Kind { kNormal, kFailoverTemp, kFailoverPerm };

    int a = 0;
    int b = 0;
    Kind kind = Kind::kNormal;

    bool is_failover() const { return kind != Kind::kNormal; }
    bool is_outage() const { return a == 0 || is_failover(); }
    std::string label() const;

    friend bool operator==(const PlatformState&, const PlatformState&) = default;
};

/// kDropTempFailedHwFailure removes the b*lambda_h edge a^b -> a^(b-1) from
/// the active-passive chain. Sensitivity toggle only; active-active ignores it.
enum class ModelVariant { kStandard, kDropTempFailedHwFailure };

enum class SolverKind { kDirect, kEmbeddedDtmc };

/// S_A (active-active) or S_A followed by S_F (active-passive), full-up state first.
std::vector<PlatformState> platform_states(int n_h, ReplicationMode mode);

std::size_t active_active_state_count(int n_h);
std::size_t active_passive_state_count(int n_h);

CtmcModel build_active_active(const RateParams& params, int n_h);
CtmcModel build_active_passive(const RateParams& params, int n_h,
                               ModelVariant variant = ModelVariant::kStandard);
CtmcModel build_platform(const RateParams& params, int n_h, ReplicationMode mode,
                         ModelVariant variant = ModelVariant::kStandard);

struct PlatformResult {
    ReplicationMode mode = ReplicationMode::kActiveActive;
    int n_h = 0;
    double availability = 0.0;
    /// Sum of stationary mass on outage states; availability = 1 - this.
    double outage_probability = 0.0;
    StationaryDistribution stationary;
    std::vector<PlatformState> states;
    std::size_t state_count = 0;
};

PlatformResult platform_availability(const RateParams& params, int n_h, ReplicationMode mode,
                                     ModelVariant variant = ModelVariant::kStandard,
                                     SolverKind solver = SolverKind::kDirect);

}  // namespace vran
