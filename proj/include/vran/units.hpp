#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vran {

/// Raised for any parameter, config, or precondition violation. The CLI maps
/// this to exit code 2.
class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

enum class TimeUnit { kSecond, kMinute, kHour, kDay, kMonth, kYear };

/// Seconds per unit. A month is 30 days and a year is 365 days.
constexpr double seconds_per(TimeUnit unit)
{
    switch (unit) {
    case TimeUnit::kSecond: return 1.0;
    case TimeUnit::kMinute: return 60.0;
    case TimeUnit::kHour: return 3600.0;
    case TimeUnit::kDay: return 86400.0;
    case TimeUnit::kMonth: return 30.0 * 86400.0;
    case TimeUnit::kYear: return 365.0 * 86400.0;
    }
    return 1.0;
}

std::string_view unit_suffix(TimeUnit unit);

/**
 * A non-negative, finite span of time tagged with the unit it was written in.
 * Arithmetic happens on seconds(); the unit is kept only so configs can be
 * echoed the way a user wrote them.
 */
class Duration {
  public:
    Duration() = default;
    Duration(double value, TimeUnit unit);

    static Duration seconds(double v) { return {v, TimeUnit::kSecond}; }
    static Duration minutes(double v) { return {v, TimeUnit::kMinute}; }
    static Duration hours(double v) { return {v, TimeUnit::kHour}; }
    static Duration days(double v) { return {v, TimeUnit::kDay}; }
    static Duration months(double v) { return {v, TimeUnit::kMonth}; }
    static Duration years(double v) { return {v, TimeUnit::kYear}; }

    double value() const { return value_; }
    TimeUnit unit() const { return unit_; }
    double in_seconds() const { return value_ * seconds_per(unit_); }

    /// "<value><suffix>", e.g. "10months".
    std::string to_string() const;

    friend bool operator==(const Duration& a, const Duration& b)
    {
        return a.in_seconds() == b.in_seconds();
    }

  private:
    double value_ = 0.0;
    TimeUnit unit_ = TimeUnit::kSecond;
};

/**
 * Parse "<number><unit>" where unit is one of
 *   s | sec | min | h | hour | hours | d | day | days | month | months | year | years
 * A single space between number and unit is tolerated. The number is an
 * unsigned decimal (fixed or scientific notation). Anything else throws
 * ValidationError.
 */
Duration parse_duration(std::string_view text);

/// Events per second for a mean duration. Throws on a zero duration.
double to_rate(const Duration& d);

/// Inverse of to_rate, in seconds.
Duration from_rate(double rate_per_second);

/// Annualized failure rate (fraction per year, 0 < afr < 1) to MTTF = 1/afr years.
Duration afr_to_mttf(double afr);
double mttf_to_afr(const Duration& mttf);

/// Largest availability bucket reached; 1 - A < 1e-12 maps to kNinesCap.
constexpr int kNinesCap = 12;
int nines(double availability);
/// Same bucketing, taking the outage probability 1 - A directly. Preferred
/// when the outage is known more precisely than its complement.
int nines_from_outage(double outage);

enum class ReplicationMode { kActiveActive, kActivePassive };

std::string_view to_string(ReplicationMode mode);
ReplicationMode parse_mode(std::string_view text);

/**
 * Failure, recovery and failover means for the three layers of a cluster:
 * the CU/DU application (s), OS/CaaS temporary failures (o) and hardware
 * permanent failures (h). Rates are derived on demand.
 */
struct RateParams {
    Duration mttf_s, mttr_s;
    Duration mttf_o, mttr_o;
    Duration mttf_h, mttr_h;
    Duration mtfo_o, mtfo_h;

    double app_failure_rate() const { return to_rate(mttf_s); }
    double app_repair_rate() const { return to_rate(mttr_s); }
    double os_failure_rate() const { return to_rate(mttf_o); }
    double os_repair_rate() const { return to_rate(mttr_o); }
    double hw_failure_rate() const { return to_rate(mttf_h); }
    double hw_repair_rate() const { return to_rate(mttr_h); }
    double os_failover_rate() const { return to_rate(mtfo_o); }
    double hw_failover_rate() const { return to_rate(mtfo_h); }

    /// Throws ValidationError naming the first non-positive field.
    void validate() const;
};

struct ReplicationSpec {
    int n_h = 1;
    int n_s = 1;
    ReplicationMode mode = ReplicationMode::kActiveActive;

    void validate() const;
};

}  // namespace vran
