#include "vran/cluster.hpp"

#include "vran/app_model.hpp"

namespace vran {

int effective_app_replicas(const ReplicationSpec& spec)
{
    spec.validate();
    // Active-active app instances on every platform coordinate; active-passive
    // only counts the replicas on the serving platform.
    return spec.mode == ReplicationMode::kActiveActive ? spec.n_s * spec.n_h : spec.n_s;
}

ClusterReport cluster_availability(const RateParams& params, const ReplicationSpec& spec,
                                   ModelVariant variant)
{
    params.validate();
    spec.validate();

    const PlatformResult platform = platform_availability(params, spec.n_h, spec.mode, variant);
    const int replicas = effective_app_replicas(spec);
    const AppAvailability app = app_availability(params, replicas);

    ClusterReport r;
    r.mode = spec.mode;
    r.n_h = spec.n_h;
    r.n_s = spec.n_s;
    r.effective_app_replicas = replicas;
    r.platform_states = platform.state_count;

    r.f_platform = platform.availability;
    r.f_app = app.availability;
    r.f_cluster = r.f_platform * r.f_app;
    r.outage_platform = platform.outage_probability;
    r.outage_app = app.outage;
    // 1 - (1-p)(1-s) without cancellation.
    r.outage_cluster = r.outage_platform + r.outage_app - r.outage_platform * r.outage_app;

    r.nines_platform = nines_from_outage(r.outage_platform);
    r.nines_app = nines_from_outage(r.outage_app);
    r.nines_cluster = nines_from_outage(r.outage_cluster);
    return r;
}

}  // namespace vran
