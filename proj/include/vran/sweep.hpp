#pragma once

#include "vran/cluster.hpp"
#include "vran/config.hpp"

#include <json.hpp>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace vran {

/// Refuse grids larger than this many points.
inline constexpr std::size_t kMaxGridPoints = 1'000'000;

struct SweepAxis {
    std::string param;
    /// Values exactly as they would appear in a model config.
    std::vector<nlohmann::json> values;
};

/**
 * A cartesian grid over model-config fields:
 *
 *   {"base": { ...model config fields... },
 *    "grid": [ {"param": "n_h", "values": [1, 2, 3]},
 *              {"param": "mtfo", "logspace": {"from": "0.5s", "to": "10min", "count": 12}} ]}
 *
 * Points are enumerated with the first axis varying slowest.
 */
struct SweepSpec {
    nlohmann::json base = nlohmann::json::object();
    std::vector<SweepAxis> axes;

    std::size_t point_count() const;
};

SweepSpec parse_sweep_spec(const nlohmann::json& j);

struct SweepPoint {
    /// Index into each axis' values.
    std::vector<std::size_t> coordinates;
    ModelConfig config;
    ClusterReport report;
};

/// Evaluates every point, concurrently on up to `threads` workers (0 means
/// VRAN_AVAIL_THREADS or the hardware concurrency). Output order is the
/// enumeration order regardless of scheduling.
std::vector<SweepPoint> run_sweep(const SweepSpec& spec, unsigned threads = 0);

/// Worker count from VRAN_AVAIL_THREADS, falling back to hardware concurrency.
unsigned default_thread_count();

/// Fixed column layout shared by `solve --format csv`, `sweep` and `table`.
std::string csv_header();
std::string csv_row(const ModelConfig& config, const ClusterReport& report);
void write_csv(std::ostream& os, const std::vector<SweepPoint>& points);

/// Space-aligned rendering of the same columns.
void write_aligned(std::ostream& os, const std::vector<SweepPoint>& points);

/// A row of a nines table: every combination of the listed values reaches
/// the same (cluster, platform, app) nines.
struct NinesGroup {
    int nines = 0;
    int nines_platform = 0;
    int nines_app = 0;
    /// Per axis, the indices of the values covered by this row.
    std::vector<std::vector<std::size_t>> values;
    std::size_t point_count = 0;
};

/// Groups points by their nines triple and merges groups into cartesian
/// blocks; rows are ordered by triple, then by first appearance.
std::vector<NinesGroup> group_by_nines(const SweepSpec& spec, const std::vector<SweepPoint>& points);

void write_nines_table(std::ostream& os, const SweepSpec& spec, const std::vector<NinesGroup>& groups);

}  // namespace vran
