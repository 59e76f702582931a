#pragma once

// Multi-tree genetic programming over (sequencing, routing) rule pairs.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dfjss/random.hpp"
#include "dfjss/rules.hpp"
#include "dfjss/scenarios.hpp"

namespace dfjss {

struct GPConfig {
    int pop_size = 500;
    int generations = 100;
    int tournament_size = 7;
    int elites = 10;
    double p_crossover = 0.80;
    double p_mutation = 0.15;
    double p_reproduction = 0.05;
    int init_depth_min = 2;
    int init_depth_max = 6;
    int max_depth = kMaxTreeDepth;
    int mutation_depth = 4;
    double internal_node_bias = 0.9;  // crossover point is an internal node with this probability
    bool rotate_seed = true;          // fresh evaluation instance each generation
    int workers = 1;
    std::uint64_t seed = 0;

    friend bool operator==(const GPConfig&, const GPConfig&) = default;
};

void validate(const GPConfig& config);

struct Individual {
    RulePair pair;
    std::optional<double> fitness;
    std::uint64_t id = 0;
};

enum class TreeSlot { Sequencing, Routing };

ExprTree& slot_of(RulePair& pair, TreeSlot slot);
const ExprTree& slot_of(const RulePair& pair, TreeSlot slot);

// Full method: every branch reaches exactly `depth`.
ExprTree full_tree(int depth, Rng& rng);
// Grow method: depth at most `max_depth`; each non-bottom node is drawn
// uniformly from functions and terminals. `function_root` forces a function
// at the root (used by initialisation so no tree is shallower than 2).
ExprTree grow_tree(int max_depth, Rng& rng, bool function_root = false);

// Ramped half-and-half: individual i targets depth init_depth_min + (i mod span)
// and alternates full/grow per block of depths; both trees of a pair are drawn
// independently. Ids are assigned from `next_id`.
std::vector<Individual> init_population(const GPConfig& config, Rng& rng, std::uint64_t& next_id);

// One simulation of the training scenario.
double evaluate(const Individual& ind, const ScenarioConfig& train, std::uint64_t seed);

// Fitness-based tournament with replacement; lower fitness wins, ties by lower
// id. Every individual must have fitness set.
const Individual& tournament_select(std::span<const Individual> pop, Rng& rng, int size = 7);

// Subtree crossover on one uniformly chosen slot. A child deeper than
// max_depth is replaced by a copy of its primary parent.
std::pair<RulePair, RulePair> crossover(const RulePair& a, const RulePair& b, Rng& rng, const GPConfig& config);
// Deterministic core: swap the subtrees at node indices ia / ib of `slot`.
std::pair<RulePair, RulePair> crossover_at(const RulePair& a, const RulePair& b, TreeSlot slot, std::size_t ia,
                                           std::size_t ib, int max_depth = kMaxTreeDepth);

// Subtree mutation on one uniformly chosen slot: a uniformly chosen node is
// replaced by a grow subtree of depth <= min(mutation_depth, max_depth - level).
RulePair mutate(const RulePair& parent, Rng& rng, const GPConfig& config);
RulePair mutate_at(const RulePair& parent, TreeSlot slot, std::size_t node, int grow_depth, Rng& rng,
                   int max_depth = kMaxTreeDepth);

struct GenerationStats {
    int generation = 0;
    std::uint64_t eval_seed = 0;
    double best = 0;
    double mean = 0;
    double mean_sequencing_size = 0;
    double mean_routing_size = 0;
    int max_depth = 0;
    int elites = 0;
    int crossover_children = 0;
    int mutants = 0;
    int reproductions = 0;
};

struct EvolveResult {
    RulePair best;
    double best_fitness = 0;
    std::uint64_t best_id = 0;
    std::vector<GenerationStats> log;
    long simulations = 0;  // simulations run by this call (excludes resumed work)
};

struct EvolveHooks {
    // Called after each generation is evaluated, with the full population.
    std::function<void(int generation, std::span<const Individual> population, const EvolveResult& so_far)> on_generation;
    // Directory for per-generation JSON checkpoints; resumes from the latest one.
    std::optional<std::filesystem::path> checkpoint_dir;
};

// Seed of the evaluation instance used in generation g.
std::uint64_t generation_eval_seed(const GPConfig& config, int generation);

// Generational loop: evaluate, keep elites, fill the rest by the
// crossover/mutation/reproduction roulette over tournament-selected parents.
// Returns the best individual of the last evaluated generation.
EvolveResult evolve(const GPConfig& config, const ScenarioConfig& train, const EvolveHooks& hooks = {});

// Checkpoint (de)serialisation, exposed for tests and the CLI.
struct Checkpoint {
    int generation = 0;
    std::uint64_t next_id = 0;
    std::vector<Individual> population;
    std::vector<GenerationStats> log;
};
void write_checkpoint(const std::filesystem::path& file, const GPConfig& config, const Checkpoint& cp);
Checkpoint read_checkpoint(const std::filesystem::path& file);
std::optional<std::filesystem::path> latest_checkpoint(const std::filesystem::path& dir);

}  // namespace dfjss
