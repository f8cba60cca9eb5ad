#include "vran/app_model.hpp"

#include "vran/binomial.hpp"

#include <cmath>
#include <string>

namespace vran {

double app_single_availability(const RateParams& params)
{
    const double lambda = params.app_failure_rate();
    const double mu = params.app_repair_rate();
    // Same expression as the n-replica form, so f_s(1) matches it bit for bit.
    return 1.0 - lambda / (lambda + mu);
}

AppAvailability app_availability(const RateParams& params, int n)
{
    if (n < 1)
        throw ValidationError("application replica count must be >= 1, got " + std::to_string(n));
    const double lambda = params.app_failure_rate();
    const double mu = params.app_repair_rate();
    const double up = mu / (lambda + mu);
    const double down = lambda / (lambda + mu);

    AppAvailability out;
    out.n = n;
    out.pmf = binomial_pmf(n, up, down);
    out.outage = std::pow(down, n);
    out.availability = 1.0 - out.outage;
    return out;
}

CtmcModel app_model_as_ctmc(const RateParams& params, int n)
{
    if (n < 1)
        throw ValidationError("application replica count must be >= 1, got " + std::to_string(n));
    const double lambda = params.app_failure_rate();
    const double mu = params.app_repair_rate();

    std::vector<std::string> states;
    std::vector<Transition> transitions;
    for (int i = 0; i <= n; ++i)
        states.push_back(std::to_string(i));
    for (int i = 0; i <= n; ++i) {
        if (i > 0)
            transitions.push_back({std::to_string(i), std::to_string(i - 1), i * lambda});
        if (i < n)
            transitions.push_back({std::to_string(i), std::to_string(i + 1), (n - i) * mu});
    }
    return build_generator(std::move(states), transitions);
}

}  // namespace vran
