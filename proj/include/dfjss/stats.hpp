#pragma once

// Nonparametric statistics for the experiment tables and decision-point
// analytics: Wilcoxon rank-sum, Pearson/Spearman correlation, histograms and
// histogram-intersection overlap.

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dfjss {

struct SampleSet {
    std::vector<double> values;
    std::string label;
};

double mean(std::span<const double> v);
// Sample standard deviation (n - 1 denominator); 0 for a single value.
double stddev(std::span<const double> v);
double median(std::span<const double> v);

// 1-based ranks with ties replaced by their average rank.
std::vector<double> average_ranks(std::span<const double> v);

// Two-sided p-value from the exact permutation distribution of the rank sum
// of `a` (midranks for ties). Cost grows as C(|a|+|b|, |a|).
double wilcoxon_exact(std::span<const double> a, std::span<const double> b);
// Two-sided p-value from the normal approximation with tie and continuity
// corrections.
double wilcoxon_normal(std::span<const double> a, std::span<const double> b);
// Exact when |a| + |b| <= 12, normal approximation otherwise. Requires at
// least two values per sample; an all-equal pooled sample yields p = 1.
double wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b);
inline double wilcoxon_rank_sum(const SampleSet& a, const SampleSet& b) { return wilcoxon_rank_sum(a.values, b.values); }

inline constexpr std::size_t kExactRankSumLimit = 12;
inline constexpr double kSignificance = 0.05;

enum class Marker { Better, Worse, Similar, Reference };

// Symbol used in rendered tables: ↑, ↓, ≈, or empty for the reference.
std::string marker_symbol(Marker m);
Marker parse_marker(std::string_view s);

enum class CentralTendency { Mean, Median };

// Objective is minimised: ↑ when `other` is significantly lower than
// `reference`, ↓ when significantly higher, ≈ otherwise.
Marker significance_marker(std::span<const double> reference, std::span<const double> other,
                           CentralTendency by = CentralTendency::Mean);

// Throw std::invalid_argument("zero variance") on constant input and on
// length mismatch / fewer than two points.
double pearson(std::span<const double> x, std::span<const double> y);
double spearman(std::span<const double> x, std::span<const double> y);

struct Histogram {
    double lo = 0;
    double width = 1;
    std::vector<double> counts;

    std::size_t bins() const { return counts.size(); }
    double edge(std::size_t i) const { return lo + width * static_cast<double>(i); }
    std::vector<double> masses() const;  // counts normalised to sum to 1
    bool same_binning(const Histogram& o) const;
};

// Counts values into `bins` bins of `width` starting at `lo`; values on or
// beyond the last edge land in the final bin.
Histogram make_histogram(std::span<const double> values, double lo, double width, std::size_t bins);

// Freedman-Diaconis width on the pooled sample, capped so the pooled range
// spans at least `min_bins` bins.
double freedman_diaconis_width(std::span<const double> pooled, std::size_t min_bins = 30);

// Bins both samples on a shared grid covering their union range.
std::pair<Histogram, Histogram> joint_histograms(std::span<const double> a, std::span<const double> b,
                                                 std::size_t min_bins = 30);

// Sum over bins of min(mass1, mass2). Throws std::invalid_argument when the
// two histograms do not share bin edges.
double overlap_ratio(const Histogram& h1, const Histogram& h2);
// Overlap of two raw samples on a joint grid.
double overlap_ratio(std::span<const double> a, std::span<const double> b, std::size_t min_bins = 30);

}  // namespace dfjss
