#include "vran/binomial.hpp"

#include "vran/units.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace vran {

namespace {

constexpr int kExactLimit = 62;

double exact_coefficient(int n, int k)
{
    k = std::min(k, n - k);
    std::uint64_t c = 1;
    for (int i = 1; i <= k; ++i)
        c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return static_cast<double>(c);
}

}  // namespace

double log_binomial_coefficient(int n, int k)
{
    if (k < 0 || k > n)
        return -std::numeric_limits<double>::infinity();
    if (n <= kExactLimit)
        return std::log(exact_coefficient(n, k));
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

std::vector<double> binomial_pmf(int n, double q, double p)
{
    if (n < 0)
        throw ValidationError("binomial trial count must be non-negative");
    if (!(q >= 0.0 && q <= 1.0 && p >= 0.0 && p <= 1.0))
        throw ValidationError("binomial probabilities must lie in [0, 1]");

    std::vector<double> pmf(static_cast<std::size_t>(n) + 1, 0.0);
    if (q == 0.0) {
        pmf.front() = 1.0;
        return pmf;
    }
    if (p == 0.0) {
        pmf.back() = 1.0;
        return pmf;
    }
    if (n <= kExactLimit) {
        for (int k = 0; k <= n; ++k)
            pmf[static_cast<std::size_t>(k)] =
                exact_coefficient(n, k) * std::pow(q, k) * std::pow(p, n - k);
        return pmf;
    }
    const double log_q = std::log(q);
    const double log_p = std::log(p);
    for (int k = 0; k <= n; ++k)
        pmf[static_cast<std::size_t>(k)] =
            std::exp(log_binomial_coefficient(n, k) + k * log_q + (n - k) * log_p);
    return pmf;
}

}  // namespace vran
