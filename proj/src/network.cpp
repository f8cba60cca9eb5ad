#include "vran/network.hpp"

#include "vran/binomial.hpp"
#include "vran/units.hpp"

#include <cmath>
#include <string>

namespace vran {

namespace {

void check_probability(const char* name, double v)
{
    if (!(v >= 0.0 && v <= 1.0))
        throw ValidationError(std::string(name) + " must lie in [0, 1], got " + std::to_string(v));
}

void check_sites(int n_c)
{
    if (n_c < 1)
        throw ValidationError("n_c must be >= 1, got " + std::to_string(n_c));
}

OutagePmf finish(CuPlacement placement, const NetworkScenario& s, std::vector<double> pmf)
{
    OutagePmf out;
    out.placement = placement;
    out.p_all_down = pmf.back();
    out.p_cell_outage = cell_outage(s);
    double mean = 0.0;
    for (std::size_t k = 0; k < pmf.size(); ++k)
        mean += static_cast<double>(k) * pmf[k];
    out.mean = mean;
    out.pmf = std::move(pmf);
    return out;
}

}  // namespace

NetworkScenario::NetworkScenario(int n_c, double f_du, double f_cu, double du_outage,
                                 double cu_outage)
    : n_c_(n_c), f_du_(f_du), f_cu_(f_cu), du_outage_(du_outage), cu_outage_(cu_outage)
{
}

NetworkScenario NetworkScenario::from_availability(int n_c, double f_du, double f_cu)
{
    check_sites(n_c);
    check_probability("f_du", f_du);
    check_probability("f_cu", f_cu);
    return {n_c, f_du, f_cu, 1.0 - f_du, 1.0 - f_cu};
}

NetworkScenario NetworkScenario::from_outage(int n_c, double du_outage, double cu_outage)
{
    check_sites(n_c);
    check_probability("du_outage", du_outage);
    check_probability("cu_outage", cu_outage);
    return {n_c, 1.0 - du_outage, 1.0 - cu_outage, du_outage, cu_outage};
}

NetworkScenario NetworkScenario::from_parts(int n_c, double f_du, double du_outage, double f_cu,
                                           double cu_outage)
{
    check_sites(n_c);
    check_probability("f_du", f_du);
    check_probability("f_cu", f_cu);
    check_probability("du_outage", du_outage);
    check_probability("cu_outage", cu_outage);
    if (std::abs(f_du + du_outage - 1.0) > 1e-12 || std::abs(f_cu + cu_outage - 1.0) > 1e-12)
        throw ValidationError("availability and outage must sum to 1");
    return {n_c, f_du, f_cu, du_outage, cu_outage};
}

double cell_outage(const NetworkScenario& s)
{
    return s.du_outage() + s.cu_outage() - s.du_outage() * s.cu_outage();
}

double expected_unavailable(const NetworkScenario& s)
{
    return s.n_c() * cell_outage(s);
}

OutagePmf pmf_centralized(const NetworkScenario& s)
{
    // DU-only failures are binomial; CU failure collapses onto k = N_c.
    std::vector<double> pmf = binomial_pmf(s.n_c(), s.du_outage(), s.f_du());
    for (double& p : pmf)
        p *= s.f_cu();
    pmf.back() += s.cu_outage();
    return finish(CuPlacement::kCentralized, s, std::move(pmf));
}

OutagePmf pmf_distributed(const NetworkScenario& s)
{
    const double down = cell_outage(s);
    return finish(CuPlacement::kDistributed, s, binomial_pmf(s.n_c(), down, s.f_du() * s.f_cu()));
}

}  // namespace vran
