#pragma once

#include <vector>

namespace vran {

/**
 * N_c cell sites, each needing its DU and a CU. Availabilities and their
 * complements are both stored so outages near 1e-7 survive arithmetic.
 */
class NetworkScenario {
  public:
    static NetworkScenario from_availability(int n_c, double f_du, double f_cu);
    static NetworkScenario from_outage(int n_c, double du_outage, double cu_outage);
    /// Both forms at once; each pair must sum to 1 within 1e-12.
    static NetworkScenario from_parts(int n_c, double f_du, double du_outage, double f_cu,
                                      double cu_outage);

    int n_c() const { return n_c_; }
    double f_du() const { return f_du_; }
    double f_cu() const { return f_cu_; }
    double du_outage() const { return du_outage_; }
    double cu_outage() const { return cu_outage_; }

  private:
    NetworkScenario(int n_c, double f_du, double f_cu, double du_outage, double cu_outage);

    int n_c_;
    double f_du_, f_cu_;
    double du_outage_, cu_outage_;
};

enum class CuPlacement { kCentralized, kDistributed };

/// Distribution of the number of unavailable cell sites.
struct OutagePmf {
    CuPlacement placement = CuPlacement::kCentralized;
    std::vector<double> pmf;
    double mean = 0.0;
    /// pmf[N_c].
    double p_all_down = 0.0;
    /// 1 - f_DU f_CU, identical for both placements.
    double p_cell_outage = 0.0;
};

/// One shared CU: it takes down every site when it fails, otherwise DUs fail independently.
OutagePmf pmf_centralized(const NetworkScenario& s);

/// One CU per site: Binomial(N_c, 1 - f_DU f_CU).
OutagePmf pmf_distributed(const NetworkScenario& s);

double cell_outage(const NetworkScenario& s);

/// N_c (1 - f_DU f_CU); the mean of both placements.
double expected_unavailable(const NetworkScenario& s);

}  // namespace vran
