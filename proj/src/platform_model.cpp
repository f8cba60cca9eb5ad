#include "vran/platform_model.hpp"

#include <algorithm>

namespace vran {

namespace {

void check_replication(int n_h)
{
    if (n_h < 1)
        throw ValidationError("n_h must be >= 1, got " + std::to_string(n_h));
}

std::string normal(int a, int b)
{
    return PlatformState{a, b, PlatformState::Kind::kNormal}.label();
}

std::vector<std::string> labels(const std::vector<PlatformState>& states)
{
    std::vector<std::string> out;
    out.reserve(states.size());
    for (const auto& s : states)
        out.push_back(s.label());
    return out;
}

// Edges shared by both modes: temporary repair, hardware failure of a
// temporarily failed replica, and the site-wide hardware repair.
void add_repairs(std::vector<Transition>& t, const RateParams& params, int n_h, int a, int b,
                 bool temp_failed_hw_failure)
{
    const std::string from = normal(a, b);
    if (b > 0) {
        t.push_back({from, normal(a + 1, b - 1), b * params.os_repair_rate()});
        if (temp_failed_hw_failure)
            t.push_back({from, normal(a, b - 1), b * params.hw_failure_rate()});
    }
    // One dispatched crew restores every permanently failed replica.
    if (a + b < n_h)
        t.push_back({from, normal(n_h - b, b), params.hw_repair_rate()});
}

}  // namespace

std::string PlatformState::label() const
{
    switch (kind) {
    case Kind::kNormal: return std::to_string(a) + "^" + std::to_string(b);
    case Kind::kFailoverTemp: return std::to_string(a) + "_o^" + std::to_string(b);
    case Kind::kFailoverPerm: return std::to_string(a) + "_h^" + std::to_string(b);
    }
    return {};
}

std::vector<PlatformState> platform_states(int n_h, ReplicationMode mode)
{
    check_replication(n_h);
    std::vector<PlatformState> out;
    for (int a = n_h; a >= 0; --a)
        for (int b = 0; a + b <= n_h; ++b)
            out.push_back({a, b, PlatformState::Kind::kNormal});
    if (mode == ReplicationMode::kActivePassive) {
        for (auto kind : {PlatformState::Kind::kFailoverTemp, PlatformState::Kind::kFailoverPerm})
            for (int a = n_h; a >= 2; --a)
                for (int b = 0; a + b <= n_h; ++b)
                    out.push_back({a, b, kind});
    }
    return out;
}

std::size_t active_active_state_count(int n_h)
{
    const auto n = static_cast<std::size_t>(n_h);
    return (n + 1) * (n + 2) / 2;
}

std::size_t active_passive_state_count(int n_h)
{
    const auto n = static_cast<std::size_t>(n_h);
    return active_active_state_count(n_h) + n * (n - 1);
}

CtmcModel build_active_active(const RateParams& params, int n_h)
{
    check_replication(n_h);
    const auto states = platform_states(n_h, ReplicationMode::kActiveActive);
    std::vector<Transition> t;
    for (const auto& s : states) {
        const std::string from = s.label();
        if (s.a > 0) {
            t.push_back({from, normal(s.a - 1, s.b + 1), s.a * params.os_failure_rate()});
            t.push_back({from, normal(s.a - 1, s.b), s.a * params.hw_failure_rate()});
        }
        add_repairs(t, params, n_h, s.a, s.b, true);
    }
    return build_generator(labels(states), t);
}

CtmcModel build_active_passive(const RateParams& params, int n_h, ModelVariant variant)
{
    check_replication(n_h);
    const auto states = platform_states(n_h, ReplicationMode::kActivePassive);
    const bool temp_failed_hw_failure = variant == ModelVariant::kStandard;
    std::vector<Transition> t;
    for (const auto& s : states) {
        const std::string from = s.label();
        switch (s.kind) {
        case PlatformState::Kind::kFailoverTemp:
            // Pure delay: the only exit is completion of the failover.
            t.push_back({from, normal(s.a - 1, s.b), params.os_failover_rate()});
            continue;
        case PlatformState::Kind::kFailoverPerm:
            t.push_back({from, normal(s.a - 1, s.b), params.hw_failover_rate()});
            continue;
        case PlatformState::Kind::kNormal:
            break;
        }
        if (s.a > 0) {
            // Passive replicas (or the lone serving one when a == 1).
            const int exposed = std::max(s.a - 1, 1);
            t.push_back({from, normal(s.a - 1, s.b + 1), exposed * params.os_failure_rate()});
            t.push_back({from, normal(s.a - 1, s.b), exposed * params.hw_failure_rate()});
        }
        if (s.a >= 2) {
            // Serving replica fails while a standby exists: failover outage.
            t.push_back({from, PlatformState{s.a, s.b, PlatformState::Kind::kFailoverTemp}.label(),
                         params.os_failure_rate()});
            t.push_back({from, PlatformState{s.a, s.b, PlatformState::Kind::kFailoverPerm}.label(),
                         params.hw_failure_rate()});
        }
        add_repairs(t, params, n_h, s.a, s.b, temp_failed_hw_failure);
    }
    return build_generator(labels(states), t);
}

CtmcModel build_platform(const RateParams& params, int n_h, ReplicationMode mode,
                         ModelVariant variant)
{
    return mode == ReplicationMode::kActiveActive ? build_active_active(params, n_h)
                                                  : build_active_passive(params, n_h, variant);
}

PlatformResult platform_availability(const RateParams& params, int n_h, ReplicationMode mode,
                                     ModelVariant variant, SolverKind solver)
{
    params.validate();
    const CtmcModel model = build_platform(params, n_h, mode, variant);

    PlatformResult r;
    r.mode = mode;
    r.n_h = n_h;
    r.states = platform_states(n_h, mode);
    r.state_count = model.size();
    r.stationary = solver == SolverKind::kDirect ? solve_direct(model) : solve_embedded_dtmc(model);

    double outage = 0.0;
    for (std::size_t i = 0; i < r.states.size(); ++i)
        if (r.states[i].is_outage())
            outage += r.stationary[i];
    r.outage_probability = outage;
    r.availability = 1.0 - outage;
    return r;
}

}  // namespace vran
