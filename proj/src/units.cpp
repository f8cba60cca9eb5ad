#include "vran/units.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <utility>

namespace vran {

namespace {

struct UnitName {
    std::string_view name;
    TimeUnit unit;
};

constexpr std::array<UnitName, 13> kUnitNames{{
    {"s", TimeUnit::kSecond},     {"sec", TimeUnit::kSecond},
    {"min", TimeUnit::kMinute},   {"h", TimeUnit::kHour},
    {"hour", TimeUnit::kHour},    {"hours", TimeUnit::kHour},
    {"d", TimeUnit::kDay},        {"day", TimeUnit::kDay},
    {"days", TimeUnit::kDay},     {"month", TimeUnit::kMonth},
    {"months", TimeUnit::kMonth}, {"year", TimeUnit::kYear},
    {"years", TimeUnit::kYear},
}};

std::string format_number(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    // Prefer the shortest representation that round-trips.
    for (int precision = 1; precision < 17; ++precision) {
        char shorter[32];
        std::snprintf(shorter, sizeof shorter, "%.*g", precision, v);
        if (std::strtod(shorter, nullptr) == v)
            return shorter;
    }
    return buf;
}

}  // namespace

std::string_view unit_suffix(TimeUnit unit)
{
    switch (unit) {
    case TimeUnit::kSecond: return "s";
    case TimeUnit::kMinute: return "min";
    case TimeUnit::kHour: return "h";
    case TimeUnit::kDay: return "days";
    case TimeUnit::kMonth: return "months";
    case TimeUnit::kYear: return "years";
    }
    return "s";
}

Duration::Duration(double value, TimeUnit unit) : value_(value), unit_(unit)
{
    if (!std::isfinite(value) || value < 0.0)
        throw ValidationError("duration must be finite and non-negative, got " +
                              std::to_string(value));
}

std::string Duration::to_string() const
{
    return format_number(value_) + std::string(unit_suffix(unit_));
}

Duration parse_duration(std::string_view text)
{
    const std::string quoted = "'" + std::string(text) + "'";
    if (text.empty())
        throw ValidationError("empty duration");

    double value = 0.0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value,
                                     std::chars_format::general);
    if (ec != std::errc() || text.front() == '-' || text.front() == '+')
        throw ValidationError("duration " + quoted + " does not start with an unsigned number");

    std::string_view rest(end, text.data() + text.size() - end);
    if (!rest.empty() && rest.front() == ' ')
        rest.remove_prefix(1);
    if (rest.empty())
        throw ValidationError("duration " + quoted + " is missing a unit");

    for (const auto& u : kUnitNames) {
        if (u.name == rest) {
            if (!std::isfinite(value))
                throw ValidationError("duration " + quoted + " is not finite");
            return Duration(value, u.unit);
        }
    }
    throw ValidationError("duration " + quoted + " has unknown unit '" + std::string(rest) +
                          "' (expected s, min, h, hours, d, days, months or years)");
}

double to_rate(const Duration& d)
{
    const double s = d.in_seconds();
    if (!(s > 0.0))
        throw ValidationError("cannot convert a zero duration to a rate");
    return 1.0 / s;
}

Duration from_rate(double rate_per_second)
{
    if (!(rate_per_second > 0.0) || !std::isfinite(rate_per_second))
        throw ValidationError("rate must be positive and finite");
    return Duration::seconds(1.0 / rate_per_second);
}

Duration afr_to_mttf(double afr)
{
    if (!(afr > 0.0 && afr < 1.0))
        throw ValidationError("annualized failure rate must lie in (0, 1)");
    return Duration::years(1.0 / afr);
}

double mttf_to_afr(const Duration& mttf)
{
    return seconds_per(TimeUnit::kYear) / mttf.in_seconds();
}

namespace {

constexpr double kPowersOfTen[kNinesCap] = {1e-1, 1e-2, 1e-3, 1e-4,  1e-5,  1e-6,
                                            1e-7, 1e-8, 1e-9, 1e-10, 1e-11, 1e-12};

}  // namespace

// Both functions compare against the rounded thresholds instead of taking a
// logarithm, so 1 - 10^-k (as a double) lands in bucket k exactly.
int nines_from_outage(double outage)
{
    if (!(outage >= 0.0 && outage <= 1.0))
        throw ValidationError("outage probability outside [0, 1]");
    int n = 0;
    while (n < kNinesCap && outage <= kPowersOfTen[n])
        ++n;
    return n;
}

int nines(double availability)
{
    if (!(availability >= 0.0 && availability <= 1.0))
        throw ValidationError("availability outside [0, 1]");
    int n = 0;
    while (n < kNinesCap && availability >= 1.0 - kPowersOfTen[n])
        ++n;
    return n;
}

std::string_view to_string(ReplicationMode mode)
{
    return mode == ReplicationMode::kActiveActive ? "active_active" : "active_passive";
}

ReplicationMode parse_mode(std::string_view text)
{
    if (text == "active_active" || text == "active-active" || text == "aa")
        return ReplicationMode::kActiveActive;
    if (text == "active_passive" || text == "active-passive" || text == "ap")
        return ReplicationMode::kActivePassive;
    throw ValidationError("mode must be active_active or active_passive, got '" +
                          std::string(text) + "'");
}

void RateParams::validate() const
{
    const std::array<std::pair<const char*, const Duration*>, 8> fields{{
        {"mttf_s", &mttf_s},
        {"mttr_s", &mttr_s},
        {"mttf_o", &mttf_o},
        {"mttr_o", &mttr_o},
        {"mttf_h", &mttf_h},
        {"mttr_h", &mttr_h},
        {"mtfo_o", &mtfo_o},
        {"mtfo_h", &mtfo_h},
    }};
    for (const auto& [name, d] : fields) {
        if (!(d->in_seconds() > 0.0))
            throw ValidationError(std::string(name) + " must be strictly positive");
    }
}

void ReplicationSpec::validate() const
{
    if (n_h < 1)
        throw ValidationError("n_h must be >= 1, got " + std::to_string(n_h));
    if (n_s < 1)
        throw ValidationError("n_s must be >= 1, got " + std::to_string(n_s));
}

}  // namespace vran
