#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "dagsched/schedule.hpp"
#include "dagsched/task_graph.hpp"

namespace dagsched {

/// One GA individual: mapping[t-1] = processor of task t. Execution order is
/// fixed to the graph's priority order, so every gene vector in 1..m decodes
/// to a feasible schedule and crossover never needs repair.
using Chromosome = std::vector<ProcessorId>;

enum class Seeding {
    RoundRobinPermutations,  // each individual from a random processor permutation
    EligibleProcessor,       // one eligible-processor individual, rest round-robin
    Random,                  // uniform genes
};

struct GAParams {
    int population_size = 50;
    int max_generations = 200;
    int stagnation_limit = 50;    // stop after this many generations without improvement
    double crossover_rate = 0.8;
    double mutation_rate = 0.02;  // per-gene resampling probability
    int elite_count = 2;          // best individuals copied unchanged
    Seeding seeding = Seeding::RoundRobinPermutations;
    std::uint64_t rng_seed = 0;
};

struct FitnessResult {
    Time makespan = 0;
    double cost = 0.0;  // 1 / makespan
};

struct GenerationStats {
    Time best_makespan = 0;
    double avg_makespan = 0.0;
    long long evaluations = 0;  // cumulative fitness calls after this generation

    bool operator==(const GenerationStats&) const = default;
};

struct GARunResult {
    Chromosome best_chromosome;
    Time best_makespan = 0;
    double best_cost = 0.0;
    long long evaluations = 0;  // total fitness calls
    int generations = 0;        // generations evaluated, == history.size()
    std::vector<GenerationStats> history;

    bool operator==(const GARunResult&) const = default;
};

// Decodes the chromosome under the fixed priority order and reports makespan
// plus its reciprocal cost. Decode errors propagate.
FitnessResult fitness(const TaskGraph& graph, int processor_count, const Chromosome& chromosome);

std::vector<Chromosome> init_population(const TaskGraph& graph, int processor_count,
                                        const GAParams& params, std::mt19937_64& rng);

// Single-point crossover at 1 <= cut < n: children swap tails.
std::pair<Chromosome, Chromosome> crossover(const Chromosome& parent_a, const Chromosome& parent_b,
                                            int cut);

// Independently resamples each gene uniformly over 1..m with probability rate.
Chromosome mutate(const Chromosome& chromosome, double rate, int processor_count,
                  std::mt19937_64& rng);

/// Elitist generational GA: evaluate everyone, copy the elite unchanged, fill
/// the rest by binary tournament + crossover + mutation. Terminates at
/// max_generations or after stagnation_limit generations without improving
/// the best makespan. Fully deterministic for a given rng_seed.
GARunResult evolve(const TaskGraph& graph, int processor_count, const GAParams& params);

}  // namespace dagsched
