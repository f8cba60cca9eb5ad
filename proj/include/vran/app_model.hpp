#pragma once

#include "vran/ctmc.hpp"
#include "vran/units.hpp"

#include <vector>

namespace vran {

/// Availability of N independently failing and recovering application replicas.
struct AppAvailability {
    int n = 0;
    /// pmf[i] = probability that exactly i replicas are up.
    std::vector<double> pmf;
    double availability = 0.0;
    /// (lambda / (lambda + mu))^n, computed without cancellation.
    double outage = 0.0;
};

/// mu_s / (lambda_s + mu_s).
double app_single_availability(const RateParams& params);

/// Binomial(n, mu_s / (lambda_s + mu_s)); availability is 1 - pmf[0].
AppAvailability app_availability(const RateParams& params, int n);

/// Birth-death chain on "0".."n" replicas up: i -> i-1 at i*lambda_s,
/// i -> i+1 at (n-i)*mu_s. Only used to cross-check the closed form.
CtmcModel app_model_as_ctmc(const RateParams& params, int n);

}  // namespace vran
