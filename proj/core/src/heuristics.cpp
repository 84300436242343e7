#include "dagsched/heuristics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dagsched {

namespace {

void check_processor_count(int m) {
    if (m < 1) throw Error("processor count must be >= 1, got " + std::to_string(m));
}

// Lowest id among the minimum-weight processors.
int min_weight_processor(const std::vector<ProcessorState>& states) {
    int best = 0;
    for (std::size_t k = 1; k < states.size(); ++k) {
        if (states[k].weight < states[best].weight) best = static_cast<int>(k);
    }
    return best;
}

}  // namespace

void ReadyList::push(TaskId t) {
    // Ascending (b_level, -id): the best candidate (highest b-level, lowest
    // id) ends up at the back, so pop() is O(1).
    auto key = [this](TaskId x) { return std::pair(graph_->b_level(x), -x); };
    auto it = std::lower_bound(entries_.begin(), entries_.end(), key(t),
                               [&](TaskId x, auto k) { return key(x) < k; });
    entries_.insert(it, t);
}

TaskId ReadyList::pop() {
    if (entries_.empty()) throw std::logic_error("pop on empty ready list");
    const TaskId t = entries_.back();
    entries_.pop_back();
    return t;
}

Schedule hlfet(const TaskGraph& graph, int processor_count) {
    check_processor_count(processor_count);
    const int n = graph.task_count();

    ReadyList ready(graph);
    std::vector<int> unscheduled_preds(n);
    for (TaskId t = 1; t <= n; ++t) {
        unscheduled_preds[t - 1] = static_cast<int>(graph.predecessors(t).size());
        if (unscheduled_preds[t - 1] == 0) ready.push(t);
    }

    std::vector<Time> available(processor_count, 0);
    std::vector<Time> finish(n, 0);
    std::vector<Assignment> assignments;
    assignments.reserve(n);

    while (!ready.empty()) {
        const TaskId t = ready.pop();
        Time ready_time = 0;
        for (TaskId p : graph.predecessors(t)) ready_time = std::max(ready_time, finish[p - 1]);

        int proc = 0;
        Time start = std::max(available[0], ready_time);
        for (int k = 1; k < processor_count; ++k) {
            const Time candidate = std::max(available[k], ready_time);
            if (candidate < start) {
                start = candidate;
                proc = k;
            }
        }

        const Time end = start + graph.exec_time(t);
        available[proc] = end;
        finish[t - 1] = end;
        assignments.push_back(Assignment{t, static_cast<ProcessorId>(proc + 1), start, end});

        for (TaskId s : graph.successors(t)) {
            if (--unscheduled_preds[s - 1] == 0) ready.push(s);
        }
    }
    return Schedule(processor_count, std::move(assignments));
}

std::vector<ProcessorId> identity_permutation(int processor_count) {
    std::vector<ProcessorId> perm(processor_count);
    for (int k = 0; k < processor_count; ++k) perm[k] = k + 1;
    return perm;
}

SeededSchedule round_robin(const TaskGraph& graph, int processor_count,
                           const std::vector<ProcessorId>& perm) {
    check_processor_count(processor_count);
    if (static_cast<int>(perm.size()) != processor_count) {
        throw Error("permutation lists " + std::to_string(perm.size()) + " of " +
                    std::to_string(processor_count) + " processors");
    }
    std::vector<bool> used(processor_count, false);
    for (ProcessorId p : perm) {
        if (p < 1 || p > processor_count || used[p - 1]) {
            throw Error("not a permutation of 1.." + std::to_string(processor_count));
        }
        used[p - 1] = true;
    }

    const auto& order = graph.priority_order();
    std::vector<ProcessorId> mapping(graph.task_count());
    for (std::size_t i = 0; i < order.size(); ++i) {
        mapping[order[i] - 1] = perm[i % perm.size()];
    }
    Schedule schedule = decode(graph, processor_count, mapping, order);
    return SeededSchedule{std::move(mapping), std::move(schedule)};
}

EligibleResult eligible_processor(const TaskGraph& graph, int processor_count) {
    check_processor_count(processor_count);
    const int n = graph.task_count();

    std::vector<ProcessorState> states(processor_count);
    for (int k = 0; k < processor_count; ++k) states[k].processor = k + 1;

    std::vector<ProcessorId> mapping(n, 0);
    std::vector<AssignBranch> branches(n, AssignBranch::EntryMinWeight);
    std::vector<int> task_processor(n, 0);  // index of the owning state

    for (TaskId t : graph.priority_order()) {
        const auto& preds = graph.predecessors(t);
        const Time exec = graph.exec_time(t);
        int chosen;
        if (preds.empty()) {
            chosen = min_weight_processor(states);
            states[chosen].weight += exec;
            branches[t - 1] = AssignBranch::EntryMinWeight;
        } else {
            // Heaviest-finishing predecessor; ties to the lower task id
            // (predecessors are scanned in ascending id order).
            TaskId heaviest = preds.front();
            Time heaviest_finish = states[task_processor[heaviest - 1]].weight_at_assignment.at(heaviest);
            for (std::size_t i = 1; i < preds.size(); ++i) {
                const TaskId p = preds[i];
                const Time f = states[task_processor[p - 1]].weight_at_assignment.at(p);
                if (f > heaviest_finish) {
                    heaviest = p;
                    heaviest_finish = f;
                }
            }
            const int candidate = task_processor[heaviest - 1];
            if (states[candidate].last_task == heaviest) {
                chosen = candidate;
                states[chosen].weight += exec;
                branches[t - 1] = AssignBranch::LastTaskMatch;
            } else {
                chosen = min_weight_processor(states);
                // The predecessor may finish after this processor frees up;
                // the weight advances from whichever is later.
                states[chosen].weight = std::max(heaviest_finish, states[chosen].weight) + exec;
                branches[t - 1] = AssignBranch::MinWeightWait;
            }
        }
        states[chosen].last_task = t;
        states[chosen].weight_at_assignment[t] = states[chosen].weight;
        task_processor[t - 1] = chosen;
        mapping[t - 1] = static_cast<ProcessorId>(chosen + 1);
    }

    Schedule schedule = decode(graph, processor_count, mapping, graph.priority_order());

    // The weight bookkeeping above must agree with the decoded timeline.
    for (const auto& row : schedule.timelines()) {
        if (!row.empty()) {
            const Assignment& last = row.back();
            if (states[last.processor - 1].weight != last.finish) {
                throw std::logic_error("processor weight diverged from decoded finish time");
            }
        }
    }

    return EligibleResult{std::move(mapping), std::move(schedule), std::move(states),
                          std::move(branches)};
}

}  // namespace dagsched
