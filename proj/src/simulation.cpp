#include "vran/simulation.hpp"

#include "vran/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace vran {

namespace {

enum class ReplicaStatus { kUp, kTempDown, kHwDown };

enum class EventKind {
    kOsFailure,
    kHwFailure,
    kOsRestart,
    kTempFailedHwFailure,
    kSiteRepair,
    kFailoverDone,
    kAppFailure,
    kAppRepair,
};

struct Event {
    double at = std::numeric_limits<double>::infinity();
    EventKind kind = EventKind::kOsFailure;
    std::size_t target = 0;
};

class Simulator {
  public:
    Simulator(const SimConfig& cfg, bool with_apps)
        : cfg_(cfg),
          rng_(cfg.seed),
          replicas_(static_cast<std::size_t>(cfg.spec.n_h), ReplicaStatus::kUp),
          apps_(with_apps ? static_cast<std::size_t>(effective_app_replicas(cfg.spec)) : 0, true),
          downtime_(static_cast<std::size_t>(cfg.batches), 0.0),
          passive_mode_(cfg.spec.mode == ReplicationMode::kActivePassive)
    {
    }

    SimResult run()
    {
        const double horizon = cfg_.horizon;
        double now = 0.0;
        while (now < horizon) {
            const Event next = draw_next(now);
            const double until = std::min(next.at, horizon);
            if (!system_up())
                record_down(now, until);
            now = until;
            if (next.at >= horizon)
                break;
            apply(next);
            ++result_.event_count;
        }
        return summarize();
    }

  private:
    double exponential(double rate)
    {
        // 53-bit uniform in [0, 1); 1 - u lies in (0, 1].
        const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
        return -std::log1p(-u) / rate;
    }

    void race(Event& best, double now, double rate, EventKind kind, std::size_t target)
    {
        if (!(rate > 0.0))
            return;
        const double at = now + exponential(rate);
        if (at < best.at)
            best = {at, kind, target};
    }

    Event draw_next(double now)
    {
        const ReplicaRates& r = cfg_.rates;
        Event best;
        if (in_failover_) {
            race(best, now, failover_is_hw_ ? r.hw_failover : r.os_failover, EventKind::kFailoverDone,
                 0);
        } else {
            bool any_hw_down = false;
            for (std::size_t i = 0; i < replicas_.size(); ++i) {
                switch (replicas_[i]) {
                case ReplicaStatus::kUp:
                    race(best, now, r.os_failure, EventKind::kOsFailure, i);
                    race(best, now, r.hw_failure, EventKind::kHwFailure, i);
                    break;
                case ReplicaStatus::kTempDown:
                    race(best, now, r.os_repair, EventKind::kOsRestart, i);
                    if (!passive_mode_ || cfg_.variant == ModelVariant::kStandard)
                        race(best, now, r.hw_failure, EventKind::kTempFailedHwFailure, i);
                    break;
                case ReplicaStatus::kHwDown:
                    any_hw_down = true;
                    break;
                }
            }
            if (any_hw_down)
                race(best, now, r.hw_repair, EventKind::kSiteRepair, 0);
        }
        for (std::size_t i = 0; i < apps_.size(); ++i) {
            if (apps_[i])
                race(best, now, r.app_failure, EventKind::kAppFailure, i);
            else
                race(best, now, r.app_repair, EventKind::kAppRepair, i);
        }
        return best;
    }

    bool any_replica_up() const
    {
        return std::find(replicas_.begin(), replicas_.end(), ReplicaStatus::kUp) != replicas_.end();
    }

    bool platform_up() const
    {
        if (passive_mode_)
            return !in_failover_ && serving_ != kNone;
        return any_replica_up();
    }

    bool system_up() const
    {
        if (!platform_up())
            return false;
        if (apps_.empty())
            return true;
        return std::find(apps_.begin(), apps_.end(), true) != apps_.end();
    }

    void pick_serving()
    {
        serving_ = kNone;
        for (std::size_t i = 0; i < replicas_.size(); ++i) {
            if (replicas_[i] == ReplicaStatus::kUp) {
                serving_ = i;
                return;
            }
        }
    }

    void fail_replica(std::size_t i, ReplicaStatus into, bool hw)
    {
        if (passive_mode_ && i == serving_) {
            const auto up = std::count(replicas_.begin(), replicas_.end(), ReplicaStatus::kUp);
            if (up >= 2) {
                // Serving replica lost with a standby available: the platform
                // is down for the failover, after which the failed replica
                // waits for the site repair like a hardware failure.
                replicas_[i] = ReplicaStatus::kHwDown;
                serving_ = kNone;
                in_failover_ = true;
                failover_is_hw_ = hw;
                ++result_.failover_count;
                return;
            }
            replicas_[i] = into;
            serving_ = kNone;
            return;
        }
        replicas_[i] = into;
    }

    void replica_recovered()
    {
        if (passive_mode_ && serving_ == kNone && !in_failover_)
            pick_serving();
    }

    void apply(const Event& e)
    {
        switch (e.kind) {
        case EventKind::kOsFailure:
            ++result_.os_failure_count;
            fail_replica(e.target, ReplicaStatus::kTempDown, false);
            break;
        case EventKind::kHwFailure:
            fail_replica(e.target, ReplicaStatus::kHwDown, true);
            break;
        case EventKind::kOsRestart:
            replicas_[e.target] = ReplicaStatus::kUp;
            replica_recovered();
            break;
        case EventKind::kTempFailedHwFailure:
            replicas_[e.target] = ReplicaStatus::kHwDown;
            break;
        case EventKind::kSiteRepair:
            for (auto& s : replicas_)
                if (s == ReplicaStatus::kHwDown)
                    s = ReplicaStatus::kUp;
            replica_recovered();
            break;
        case EventKind::kFailoverDone:
            in_failover_ = false;
            pick_serving();
            break;
        case EventKind::kAppFailure:
            apps_[e.target] = false;
            break;
        case EventKind::kAppRepair:
            apps_[e.target] = true;
            break;
        }
    }

    void record_down(double from, double to)
    {
        const double width = cfg_.horizon / static_cast<double>(cfg_.batches);
        while (from < to) {
            auto batch = static_cast<std::size_t>(from / width);
            batch = std::min(batch, downtime_.size() - 1);
            const double batch_end =
                batch + 1 == downtime_.size() ? cfg_.horizon : (static_cast<double>(batch) + 1.0) * width;
            const double piece_end = std::min(to, batch_end);
            downtime_[batch] += piece_end - from;
            if (piece_end <= from)
                break;
            from = piece_end;
        }
    }

    SimResult summarize()
    {
        const double width = cfg_.horizon / static_cast<double>(cfg_.batches);
        double total_down = 0.0;
        result_.batch_means.clear();
        for (double d : downtime_) {
            total_down += d;
            result_.batch_means.push_back(1.0 - d / width);
        }
        result_.availability_estimate = std::clamp(1.0 - total_down / cfg_.horizon, 0.0, 1.0);

        const double b = static_cast<double>(downtime_.size());
        double mean = 0.0;
        for (double m : result_.batch_means)
            mean += m;
        mean /= b;
        double ss = 0.0;
        for (double m : result_.batch_means)
            ss += (m - mean) * (m - mean);
        result_.std_error = std::sqrt(ss / (b - 1.0) / b);

        const ReplicaRates& r = cfg_.rates;
        const double all_up_rate = cfg_.spec.n_h * (r.os_failure + r.hw_failure) +
                                   static_cast<double>(apps_.size()) * r.app_failure;
        result_.short_horizon = all_up_rate * cfg_.horizon < 100.0;
        return result_;
    }

    static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

    const SimConfig& cfg_;
    std::mt19937_64 rng_;
    std::vector<ReplicaStatus> replicas_;
    std::vector<bool> apps_;
    std::vector<double> downtime_;
    bool passive_mode_;
    std::size_t serving_ = 0;
    bool in_failover_ = false;
    bool failover_is_hw_ = false;
    SimResult result_;
};

}  // namespace

ReplicaRates ReplicaRates::from(const RateParams& params)
{
    params.validate();
    ReplicaRates r;
    r.app_failure = params.app_failure_rate();
    r.app_repair = params.app_repair_rate();
    r.os_failure = params.os_failure_rate();
    r.os_repair = params.os_repair_rate();
    r.hw_failure = params.hw_failure_rate();
    r.hw_repair = params.hw_repair_rate();
    r.os_failover = params.os_failover_rate();
    r.hw_failover = params.hw_failover_rate();
    return r;
}

void SimConfig::validate() const
{
    spec.validate();
    if (!(horizon > 0.0) || !std::isfinite(horizon))
        throw ValidationError("simulation horizon must be positive and finite");
    if (batches < 10)
        throw ValidationError("simulation needs at least 10 batches, got " + std::to_string(batches));
    const double failures[] = {rates.app_failure, rates.os_failure, rates.hw_failure};
    for (double f : failures)
        if (!(f >= 0.0) || !std::isfinite(f))
            throw ValidationError("failure rates must be finite and non-negative");
    const double positive[] = {rates.app_repair, rates.os_repair, rates.hw_repair,
                               rates.os_failover, rates.hw_failover};
    for (double p : positive)
        if (!(p > 0.0) || !std::isfinite(p))
            throw ValidationError("repair and failover rates must be positive and finite");
}

SimResult simulate_platform(const SimConfig& cfg)
{
    cfg.validate();
    return Simulator(cfg, false).run();
}

SimResult simulate_cluster(const SimConfig& cfg)
{
    cfg.validate();
    return Simulator(cfg, true).run();
}

}  // namespace vran
