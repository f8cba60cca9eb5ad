#pragma once

#include <vector>

namespace vran {

/// log C(n, k) for 0 <= k <= n.
double log_binomial_coefficient(int n, int k);

/**
 * pmf[k] = C(n, k) q^k p^(n-k), k = 0..n, with p = 1 - q passed separately so
 * callers holding the small side exactly do not lose it to cancellation.
 * Coefficients are exact integers up to n = 62 and come from log-space
 * beyond that.
 */
std::vector<double> binomial_pmf(int n, double q, double p);

}  // namespace vran
