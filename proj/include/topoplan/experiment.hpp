#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "topoplan/blk.hpp"
#include "topoplan/rollout.hpp"

namespace topoplan {

struct GridCoord {
    int row = 0;
    int col = 0;
    bool operator==(const GridCoord&) const = default;
};

inline const std::vector<std::string> kAllAlgorithms = {"hstar", "rhstar", "prhstar", "blk"};

struct ExperimentConfig {
    std::string name;  // derived from the config file stem
    int rows = 0;
    int cols = 0;
    Rect bounds;
    std::vector<Rect> holes;
    GridCoord source;
    GridCoord dest;
    std::vector<GridCoord> keypoints;
    std::vector<double> alphas;
    std::optional<double> epsilon;        // pruning epsilon; auto-derived when unset
    std::vector<std::string> algorithms;  // canonical-order subset of kAllAlgorithms
    std::uint64_t seed = 0;
    std::string output_dir = "out";
};

// Strict parser: unknown fields are rejected, parse errors carry locations,
// and coordinates are validated against the grid and holes.
ExperimentConfig load_config(const std::filesystem::path& file);
ExperimentConfig parse_config_text(const std::string& text, const std::string& name);

struct ExperimentRow {
    std::string experiment_id;
    std::string algorithm;
    double alpha = 0.0;
    double path_length = 0.0;
    double proj_diff = 0.0;
    long long nodes_visited = 0;
    std::string class_key;
    double wall_time_seconds = 0.0;  // reported in timings.csv; rows.csv stays byte-stable
};

struct PreparedExperiment {
    SimplicialSurface surface;
    HarmonicBasis basis;
    Path reference;
    Eigen::VectorXd reference_projection;
    SignatureKey reference_key;
    int source = 0;
    int dest = 0;
    double epsilon = 0.0;
};

PreparedExperiment prepare_experiment(const ExperimentConfig& config);

struct AlgorithmTrace {
    std::string algorithm;
    double alpha = 0.0;
    std::vector<RolloutPop> pops;  // stage is 0 for plain searches
};

struct SweepRun {
    std::vector<ExperimentRow> rows;
    std::vector<ClassRecord> blk_records;
    std::vector<AlgorithmTrace> traces;
};

// One row per (algorithm, alpha), algorithms in canonical order, alphas in
// config order. The alpha-independent blk runs once and repeats across rows.
SweepRun run_alpha_sweep(const ExperimentConfig& config, const PreparedExperiment& prep,
                         bool capture_traces = false);
SweepRun run_alpha_sweep(const ExperimentConfig& config);

// Cumulative-hole family: entry k keeps the first k hole rectangles.
std::vector<ExperimentConfig> expand_hole_family(const ExperimentConfig& config);

struct HoleSurfaceSummary {
    int hole_count = 0;
    int vertex_count = 0;
    long long blk_class_count = 0;
    long long blk_visits = 0;
};

struct HoleScalingRun {
    std::vector<ExperimentRow> rows;
    std::vector<HoleSurfaceSummary> summaries;
};

// Per surface and search algorithm, reports the best reference-class path over
// the alpha grid (shortest homologous, first alpha on ties; closest projection
// when no alpha lands in the reference class) plus the exact blk run.
HoleScalingRun run_hole_scaling(const std::vector<ExperimentConfig>& family);

void write_rows_csv(const std::filesystem::path& file, const std::vector<ExperimentRow>& rows);
std::vector<ExperimentRow> read_rows_csv(const std::filesystem::path& file);
void write_timings_csv(const std::filesystem::path& file, const std::vector<ExperimentRow>& rows);
void write_class_records_csv(const std::filesystem::path& file,
                             const std::vector<ClassRecord>& records);
void write_hole_summaries_csv(const std::filesystem::path& file,
                              const std::vector<HoleSurfaceSummary>& summaries);
void write_traces_csv(const std::filesystem::path& file, const std::vector<AlgorithmTrace>& traces);

// rows.csv derived charts.
void write_sweep_plots(const std::filesystem::path& dir, const std::vector<ExperimentRow>& rows);
void write_holes_plots(const std::filesystem::path& dir, const std::vector<ExperimentRow>& rows);

}  // namespace topoplan
