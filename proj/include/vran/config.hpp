#pragma once

#include "vran/network.hpp"
#include "vran/platform_model.hpp"
#include "vran/units.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace vran {

inline constexpr const char* kToolVersion = "1.0.0";

/// "# vran-avail <version> <what> canonical-unit=s month=30d year=365d"
std::string provenance_line(const std::string& what);

/**
 * One cluster parameterization as read from JSON:
 *
 *   {"mode": "active_active", "n_h": 2, "n_s": 1,
 *    "mttf_s": "2months", "mttr_s": "30min",
 *    "mttf_o": "10months", "mttr_o": "90min",
 *    "mttf_h": "10years" | "3%", "mttr_h": "10h",
 *    "mtfo": "10s"  (or "mtfo_o" and "mtfo_h"),
 *    "model_variant": "standard" | "drop-eq5"}
 *
 * mode defaults to active_active, n_s to 1, the failover means to 10s and
 * model_variant to standard. Unknown keys are rejected.
 */
struct ModelConfig {
    RateParams params;
    ReplicationSpec spec;
    ModelVariant variant = ModelVariant::kStandard;
};

/// Keys a model config may carry; also the parameter names a sweep may vary.
const std::vector<std::string>& model_config_keys();

ModelConfig parse_model_config(const nlohmann::json& j);

/// Canonical form: every duration in seconds, both failover means explicit.
/// parse_model_config(resolved_config(c)) reproduces c's parameters exactly.
nlohmann::json resolved_config(const ModelConfig& c);

ModelVariant parse_variant(const std::string& text);
std::string to_string(ModelVariant variant);

nlohmann::json load_json_file(const std::string& path);

/// Simulation settings layered on a model config: optional "seed",
/// "horizon" (duration string), "batches" and "target" (cluster|platform).
struct SimulateConfig {
    ModelConfig model;
    std::uint64_t seed = 1;
    double horizon_seconds = 5e9;
    int batches = 30;
    bool cluster_target = true;
};

SimulateConfig parse_simulate_config(const nlohmann::json& j);

/**
 * {"n_c": 10, "scenarios": [ {...}, ... ]}. Each scenario gives the DU side
 * as an outage ("du_outage"), an availability ("f_du") or a nested model
 * config ("du") whose cluster availability is used; likewise for the CU.
 * A scenario may override n_c. A top-level object without "scenarios" is
 * read as a single scenario.
 */
std::vector<NetworkScenario> parse_network_config(const nlohmann::json& j);

}  // namespace vran
