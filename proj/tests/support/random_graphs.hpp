#pragma once

// Seeded generators and the exhaustive mapping oracle shared by property
// tests and the acceptance suite. Everything here stays independent of the
// heuristic/GA code paths it is used to check, and draws only through the
// portable RNG helpers so frozen expectations survive stdlib changes.

#include <algorithm>
#include <limits>
#include <random>
#include <vector>

#include "dagsched/rng.hpp"
#include "dagsched/schedule.hpp"
#include "dagsched/task_graph.hpp"

namespace dagsched::testsupport {

// Random DAG with forward edges over a shuffled relabeling, so task ids carry
// no topological information. Zero exec times are allowed by default.
inline TaskGraph random_dag(std::mt19937_64& rng, int n, double edge_prob, Time min_exec = 0,
                            Time max_exec = 30) {
    std::vector<TaskId> label(n);
    for (int i = 0; i < n; ++i) label[i] = i + 1;
    shuffle_portable(label, rng);

    std::vector<Task> tasks;
    tasks.reserve(n);
    for (int i = 0; i < n; ++i) tasks.push_back(Task{label[i], draw_int(rng, min_exec, max_exec)});

    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (draw_unit(rng) < edge_prob) edges.push_back(Edge{label[i], label[j]});
        }
    }
    return TaskGraph::validate(tasks, std::move(edges));
}

inline std::vector<ProcessorId> random_mapping(std::mt19937_64& rng, int n, int m) {
    std::vector<ProcessorId> mapping(n);
    for (auto& g : mapping) g = static_cast<ProcessorId>(draw_int(rng, 1, m));
    return mapping;
}

// Exhaustive optimum over all m^n mappings decoded with the fixed priority
// order. Only sane for tiny n.
inline Time brute_force_optimum(const TaskGraph& graph, int m) {
    const int n = graph.task_count();
    std::vector<ProcessorId> mapping(n, 1);
    Time best = std::numeric_limits<Time>::max();
    while (true) {
        best = std::min(best, decode(graph, m, mapping, graph.priority_order()).makespan());
        int i = 0;
        while (i < n && mapping[i] == m) {
            mapping[i] = 1;
            ++i;
        }
        if (i == n) break;
        ++mapping[i];
    }
    return best;
}

}  // namespace dagsched::testsupport
