#pragma once

// Decision-point profiling: machine workload at each post-warm-up sequencing
// decision under a fixed rule pair, pooled over several instances, compared
// across configurations by histogram overlap.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "dfjss/rules.hpp"
#include "dfjss/scenarios.hpp"
#include "dfjss/simulator.hpp"
#include "dfjss/stats.hpp"

namespace dfjss {

struct DecisionProfile {
    std::string label;
    SampleSet workloads;                    // pooled post-warm-up WIQ samples
    std::vector<DecisionRecord> records;    // the same samples with time/machine
    std::vector<long> counts;               // post-warm-up sequencing decisions per instance
    double mean_count = 0;
};

struct ProfileOptions {
    int n_instances = 10;
    std::uint64_t first_seed = 0;  // instances use seeds first_seed .. first_seed + n - 1
    RulePair pair = baseline_pair();
    int workers = 1;
};

DecisionProfile collect_decision_points(const ScenarioConfig& config, const ProfileOptions& options = {});

struct OverlapMatrix {
    std::vector<std::string> labels;
    std::vector<std::vector<double>> values;  // symmetric
    std::vector<double> mean_counts;
    std::vector<DecisionProfile> profiles;    // seeds 0..n-1 per config
};

// Off-diagonal entries compare the seed set {0..n-1} of each config; diagonal
// entries compare {0..n-1} against the disjoint set {n..2n-1} of the same config.
OverlapMatrix overlap_matrix(const std::vector<ScenarioConfig>& configs, int n_instances = 10, int workers = 1,
                             const RulePair& pair = baseline_pair());

struct Correlation {
    double pearson = 0;
    double spearman = 0;
};

// Correlation between one test config's overlaps with every training config
// and the mean test objectives of rules trained on those configs.
Correlation overlap_performance_correlation(std::span<const double> overlaps, std::span<const double> performance);

// CSV: time,machine,workload
void write_workload_csv(std::ostream& os, const DecisionProfile& profile);
// CSV: label,<labels...> then one row per config, plus a decision-count row.
void write_overlap_csv(std::ostream& os, const OverlapMatrix& m);
// Stacked workload histograms (one panel per config) and an annotated heatmap.
std::string workload_distribution_svg(const OverlapMatrix& m);
std::string overlap_heatmap_svg(const OverlapMatrix& m);

}  // namespace dfjss
