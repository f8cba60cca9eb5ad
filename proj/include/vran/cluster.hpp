#pragma once

#include "vran/platform_model.hpp"
#include "vran/units.hpp"

namespace vran {

/// Platform and application factors of a cluster and their product, with the
/// nines of each layer.
struct ClusterReport {
    ReplicationMode mode = ReplicationMode::kActiveActive;
    int n_h = 0;
    int n_s = 0;
    /// Application replicas counted towards f_app: n_s * n_h active-active, n_s active-passive.
    int effective_app_replicas = 0;
    std::size_t platform_states = 0;

    double f_platform = 0.0;
    double f_app = 0.0;
    double f_cluster = 0.0;
    double outage_platform = 0.0;
    double outage_app = 0.0;
    double outage_cluster = 0.0;

    int nines_platform = 0;
    int nines_app = 0;
    int nines_cluster = 0;
};

/// Number of application replicas that serve under the given replication mode.
int effective_app_replicas(const ReplicationSpec& spec);

ClusterReport cluster_availability(const RateParams& params, const ReplicationSpec& spec,
                                   ModelVariant variant = ModelVariant::kStandard);

}  // namespace vran
