#pragma once

// End-to-end experiments: independent GP training runs per configuration,
// cross-configuration test matrices with significance markers, persistence
// and report rendering.

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dfjss/gp.hpp"
#include "dfjss/scenarios.hpp"
#include "dfjss/stats.hpp"

namespace dfjss {

struct ExperimentSpec {
    std::string name;
    std::string axis;  // jobs | machines | ratio | utilisation | due-date | batch-size | distribution
    std::vector<ScenarioConfig> configs;  // train set = test set
    GPConfig gp;
    int n_runs = 10;
    int n_test_seeds = 30;
    std::uint64_t root_seed = 1;
    std::filesystem::path output_dir;
};

void validate(const ExperimentSpec& spec);

// Experiment presets per axis ("jobs", "utilisation", "desk-jobs", ...) under
// a profile: "full" (pop 500, 100 generations, 30 runs) or "desk" (pop 50,
// 20 generations, 10 runs, jobs scaled so the largest config has 1000).
ExperimentSpec experiment_preset(std::string_view family, std::string_view profile = "desk");
void apply_profile(ExperimentSpec& spec, std::string_view profile);

ExperimentSpec load_experiment_spec(const std::filesystem::path& file);
void save_experiment_spec(const std::filesystem::path& file, const ExperimentSpec& spec);

// Seed plumbing: root -> per (config, run) GP seed; root -> per test config
// held-out seeds. GP and evaluation seeds live in the training half of the
// seed space, test seeds in the other half.
std::uint64_t training_run_seed(const ExperimentSpec& spec, std::size_t config_index, int run);
std::vector<std::uint64_t> test_seeds(const ExperimentSpec& spec, std::size_t test_index);

struct TrainedRun {
    int run = 0;
    std::uint64_t gp_seed = 0;
    RulePair best;
    double best_fitness = 0;
    bool ok = false;
    std::string error;
};

struct TrainedRules {
    std::map<std::string, std::vector<TrainedRun>> by_config;  // keyed by config label
    long simulations = 0;                                      // simulations run (not resumed)
};

struct RunOptions {
    int workers = 1;
    bool persist = true;  // write artifacts under spec.output_dir
    bool verbose = false;
};

// n_runs independent evolve() calls per configuration. Completed runs found on
// disk are loaded instead of rerun; interrupted runs resume from their latest
// checkpoint. Failed runs are kept with ok = false and reported on stderr.
TrainedRules run_training(const ExperimentSpec& spec, const RunOptions& options = {});

struct MatrixCell {
    std::vector<double> samples;  // one mean test objective per surviving GP run
    double mean = 0;
    double std = 0;
    double p_value = 1;
    Marker marker = Marker::Reference;

    friend bool operator==(const MatrixCell&, const MatrixCell&) = default;
};

struct ComparisonMatrix {
    std::string name;
    std::vector<std::string> test_labels;   // rows
    std::vector<std::string> train_labels;  // columns
    std::vector<std::vector<MatrixCell>> cells;

    friend bool operator==(const ComparisonMatrix&, const ComparisonMatrix&) = default;
};

// Builds a matrix from raw per-run samples: cells[r][c] compared against the
// reference cell of row r (the column with the same label).
ComparisonMatrix assemble_matrix(std::string name, std::vector<std::string> test_labels,
                                 std::vector<std::string> train_labels,
                                 const std::vector<std::vector<std::vector<double>>>& samples);

// Every trained pair is evaluated on each test config's held-out seeds; the
// cell sample is the per-run mean objective. Throws when a train config has
// no trained pairs, or fewer than two successful runs.
ComparisonMatrix run_test_matrix(const ExperimentSpec& spec, const TrainedRules& trained, const RunOptions& options = {});

// "297.64(14.54)" style cell text, with " (↑)" etc. appended off-diagonal.
std::string format_cell(const MatrixCell& cell);
std::string render_text_table(const ComparisonMatrix& m);
std::string render_csv(const ComparisonMatrix& m);
ComparisonMatrix parse_matrix_csv(std::string_view csv);
std::string row_bar_chart_svg(const ComparisonMatrix& m, std::size_t row);

// Writes matrix.csv, matrix.txt and one bar chart per row into `dir`.
void render_report(const ComparisonMatrix& m, const std::filesystem::path& dir);

// Serialises file writes from concurrent workers.
class ArtifactWriter {
public:
    void write(const std::filesystem::path& file, std::string_view content);

private:
    std::mutex mutex_;
};

}  // namespace dfjss
