#pragma once

// Instance families for the dynamic flexible job shop: scale, shop parameters
// and processing-time distributions, plus the utilisation calibration.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dfjss/domain.hpp"
#include "dfjss/random.hpp"

namespace dfjss {

enum class PtFamily { Uniform, Normal, Exponential, Gamma, LogNormal };

std::string_view family_name(PtFamily f);
PtFamily parse_family(std::string_view name);

// Processing-time distribution. Every family is parameterised to mean 50 and
// every draw is clamped to [1, 99] and rounded to an integer:
//   uniform     integer-uniform on [1, 99]
//   normal      mu = 50, sigma = 49/3
//   exponential mean 50
//   gamma       shape 4, scale 12.5
//   lognormal   mean 50, sd 25
struct DistributionSpec {
    PtFamily family = PtFamily::Uniform;
    friend bool operator==(const DistributionSpec&, const DistributionSpec&) = default;
};

inline constexpr double kPtMin = 1.0;
inline constexpr double kPtMax = 99.0;
inline constexpr int kMachineSpread = 5;  // per-machine offset drawn from [-5, +5]

int sample_pt(const DistributionSpec& spec, Rng& rng);

// Exact mean of the clamped, rounded distribution (computed from the CDF).
double effective_mean_pt(const DistributionSpec& spec);
// Cumulative distribution of the underlying (unclamped) continuous family.
double family_cdf(const DistributionSpec& spec, double x);

struct ScenarioConfig {
    std::string label;
    int machines = 10;
    int jobs = 5000;  // evaluated jobs; warm-up jobs are generated in addition
    int batch_min = 1;
    int batch_max = 9;
    double utilisation = 0.85;
    double due_date_factor = 1.2;
    DistributionSpec pt;
    std::array<double, 3> weight_mix{0.2, 0.6, 0.2};  // P(weight = 1, 2, 4)
    double warmup_fraction = 1.0 / 6.0;
    std::uint64_t seed = 0;

    friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

// Throws std::invalid_argument describing the first violated invariant.
void validate(const ScenarioConfig& config);

double expected_batch_size(const ScenarioConfig& config);
double expected_ops_per_job(const ScenarioConfig& config);

// Mean of the exponential batch inter-arrival time that yields utilisation u:
// E[batch] * E[ops per job] * E[PT] / (m * u).
double mean_interarrival(const ScenarioConfig& config);

// arrival + dd * sum of per-operation median processing times.
Time due_date(const Job& job, double due_date_factor);

// Number of warm-up jobs generated ahead of the evaluated horizon.
int warmup_job_target(const ScenarioConfig& config);

// Batch stream: warm-up batches (flagged) until warmup_job_target jobs exist,
// then evaluated batches until at least `jobs` evaluated jobs exist. The first
// batch arrives at t = 0; later gaps are exponential(mean_interarrival).
std::vector<Batch> generate_batches(const ScenarioConfig& config, std::uint64_t seed);

// Named instance configurations: one per cell header of the experiment tables
// (e.g. "jobs-10-100", "util-0.95", "dist-gamma") plus "default".
std::vector<std::string> scenario_preset_names();
ScenarioConfig scenario_preset(std::string_view name);

// Ordered configuration lists for each experiment axis: "jobs", "machines",
// "ratio", "utilisation", "due-date", "batch-size", "distribution", and the
// reduced-scale "desk-jobs" / "desk-utilisation".
std::vector<std::string> scenario_family_names();
std::vector<ScenarioConfig> scenario_family(std::string_view name);

}  // namespace dfjss
