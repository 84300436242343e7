#include "dagsched/genetic.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "dagsched/heuristics.hpp"
#include "dagsched/rng.hpp"

namespace dagsched {

namespace {

void check_params(const GAParams& params) {
    if (params.population_size < 2) throw Error("population_size must be >= 2");
    if (params.elite_count < 1 || params.elite_count >= params.population_size) {
        throw Error("elite_count must satisfy 1 <= elite < population_size");
    }
    if (params.max_generations < 1) throw Error("max_generations must be >= 1");
    if (params.stagnation_limit < 1) throw Error("stagnation_limit must be >= 1");
    if (params.crossover_rate < 0.0 || params.crossover_rate > 1.0) {
        throw Error("crossover_rate must be in [0,1]");
    }
    if (params.mutation_rate < 0.0 || params.mutation_rate > 1.0) {
        throw Error("mutation_rate must be in [0,1]");
    }
}

std::vector<ProcessorId> random_permutation(int m, std::mt19937_64& rng) {
    std::vector<ProcessorId> perm = identity_permutation(m);
    shuffle_portable(perm, rng);
    return perm;
}

}  // namespace

FitnessResult fitness(const TaskGraph& graph, int processor_count, const Chromosome& chromosome) {
    const Time makespan =
        decode(graph, processor_count, chromosome, graph.priority_order()).makespan();
    const double cost =
        makespan > 0 ? 1.0 / static_cast<double>(makespan) : std::numeric_limits<double>::infinity();
    return FitnessResult{makespan, cost};
}

std::vector<Chromosome> init_population(const TaskGraph& graph, int processor_count,
                                        const GAParams& params, std::mt19937_64& rng) {
    check_params(params);
    const int n = graph.task_count();
    std::vector<Chromosome> population;
    population.reserve(params.population_size);

    if (params.seeding == Seeding::EligibleProcessor) {
        // The heuristic is deterministic, so it contributes exactly one
        // individual; the remainder keeps the population diverse.
        population.push_back(eligible_processor(graph, processor_count).mapping);
    }
    while (static_cast<int>(population.size()) < params.population_size) {
        if (params.seeding == Seeding::Random) {
            Chromosome genes(n);
            for (auto& g : genes) g = static_cast<ProcessorId>(draw_int(rng, 1, processor_count));
            population.push_back(std::move(genes));
        } else {
            population.push_back(
                round_robin(graph, processor_count, random_permutation(processor_count, rng))
                    .mapping);
        }
    }
    return population;
}

std::pair<Chromosome, Chromosome> crossover(const Chromosome& parent_a, const Chromosome& parent_b,
                                            int cut) {
    const int n = static_cast<int>(parent_a.size());
    if (parent_b.size() != parent_a.size()) throw Error("crossover parents differ in length");
    if (cut < 1 || cut >= n) {
        throw Error("cut " + std::to_string(cut) + " outside 1.." + std::to_string(n - 1));
    }
    Chromosome child_a = parent_a;
    Chromosome child_b = parent_b;
    for (int i = cut; i < n; ++i) std::swap(child_a[i], child_b[i]);
    return {std::move(child_a), std::move(child_b)};
}

Chromosome mutate(const Chromosome& chromosome, double rate, int processor_count,
                  std::mt19937_64& rng) {
    if (rate < 0.0 || rate > 1.0) throw Error("mutation rate must be in [0,1]");
    Chromosome out = chromosome;
    for (auto& g : out) {
        if (draw_unit(rng) < rate) g = static_cast<ProcessorId>(draw_int(rng, 1, processor_count));
    }
    return out;
}

GARunResult evolve(const TaskGraph& graph, int processor_count, const GAParams& params) {
    check_params(params);
    const int n = graph.task_count();
    const int pop_size = params.population_size;

    std::mt19937_64 rng(params.rng_seed);
    std::vector<Chromosome> population = init_population(graph, processor_count, params, rng);

    GARunResult result;
    std::vector<Time> makespans(pop_size);
    std::vector<int> ranking(pop_size);

    auto evaluate = [&] {
        for (int i = 0; i < pop_size; ++i) {
            makespans[i] = fitness(graph, processor_count, population[i]).makespan;
            ++result.evaluations;
        }
        std::iota(ranking.begin(), ranking.end(), 0);
        std::stable_sort(ranking.begin(), ranking.end(),
                         [&](int a, int b) { return makespans[a] < makespans[b]; });
        const double avg = static_cast<double>(std::accumulate(makespans.begin(), makespans.end(),
                                                               Time{0})) /
                           static_cast<double>(pop_size);
        result.history.push_back(
            GenerationStats{makespans[ranking.front()], avg, result.evaluations});
    };

    evaluate();
    result.best_chromosome = population[ranking.front()];
    result.best_makespan = makespans[ranking.front()];

    auto tournament = [&] {
        const int i = static_cast<int>(draw_below(rng, pop_size));
        const int j = static_cast<int>(draw_below(rng, pop_size));
        return makespans[j] < makespans[i] ? j : i;
    };

    int stagnation = 0;
    while (static_cast<int>(result.history.size()) < params.max_generations &&
           stagnation < params.stagnation_limit) {
        std::vector<Chromosome> next;
        next.reserve(pop_size);
        for (int e = 0; e < params.elite_count; ++e) next.push_back(population[ranking[e]]);

        while (static_cast<int>(next.size()) < pop_size) {
            const Chromosome& parent_a = population[tournament()];
            const Chromosome& parent_b = population[tournament()];
            Chromosome child_a, child_b;
            if (n >= 2 && draw_unit(rng) < params.crossover_rate) {
                const int cut = static_cast<int>(draw_int(rng, 1, n - 1));
                std::tie(child_a, child_b) = crossover(parent_a, parent_b, cut);
            } else {
                child_a = parent_a;
                child_b = parent_b;
            }
            next.push_back(mutate(child_a, params.mutation_rate, processor_count, rng));
            if (static_cast<int>(next.size()) < pop_size) {
                next.push_back(mutate(child_b, params.mutation_rate, processor_count, rng));
            }
        }

        population = std::move(next);
        evaluate();

        const Time generation_best = makespans[ranking.front()];
        if (generation_best < result.best_makespan) {
            result.best_makespan = generation_best;
            result.best_chromosome = population[ranking.front()];
            stagnation = 0;
        } else {
            ++stagnation;
        }
    }

    result.generations = static_cast<int>(result.history.size());
    result.best_cost = result.best_makespan > 0
                           ? 1.0 / static_cast<double>(result.best_makespan)
                           : std::numeric_limits<double>::infinity();
    return result;
}

}  // namespace dagsched
