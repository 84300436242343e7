#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "dagsched/errors.hpp"

namespace dagsched {

// Task ids are dense and 1-based (1..n); processor ids are 1-based (1..m).
// All costs and times are integer time units.
using TaskId = std::int32_t;
using ProcessorId = std::int32_t;
using Time = std::int64_t;

struct Task {
    TaskId id = 0;
    Time exec_time = 0;

    bool operator==(const Task&) const = default;
};

// Precedence edge: pred must finish before succ may start.
struct Edge {
    TaskId pred = 0;
    TaskId succ = 0;

    auto operator<=>(const Edge&) const = default;
};

/// Immutable precedence DAG with cached priority metrics.
///
/// height:  0 for entry tasks, else 1 + max height over predecessors.
/// b_level: exec_time for exit tasks, else exec_time + max b_level over
///          successors (communication costs are zero in this model).
/// priority_order: ascending height, then descending b_level, then
///          descending id on full ties; always a topological order.
class TaskGraph {
public:
    // Validates the task list and edge set and builds the graph, computing
    // every cached metric. Throws InvalidTaskId / DuplicateTaskId if the ids
    // are not exactly 1..n, NegativeExecTime, DanglingEdge, DuplicateEdge
    // (self-edges count as cycles), or CycleDetected naming a task on the
    // cycle.
    static TaskGraph validate(const std::vector<Task>& tasks, std::vector<Edge> edges);

    int task_count() const { return static_cast<int>(exec_.size()); }
    Time exec_time(TaskId t) const;
    // Zero-cost tasks are legal (STG dummy nodes); schedulers may want to
    // treat them specially.
    bool zero_exec(TaskId t) const { return exec_time(t) == 0; }
    Time total_exec_time() const { return total_exec_; }

    const std::vector<TaskId>& predecessors(TaskId t) const;
    const std::vector<TaskId>& successors(TaskId t) const;

    int height(TaskId t) const;
    Time b_level(TaskId t) const;

    // Longest weighted path through the graph = max b_level; a lower bound
    // on the makespan of any schedule.
    Time critical_path_length() const { return critical_path_; }

    const std::vector<TaskId>& priority_order() const { return priority_order_; }
    const std::vector<TaskId>& topological_order() const { return topo_order_; }

    const std::vector<Edge>& edges() const { return edges_; }
    std::vector<Task> tasks() const;

    bool operator==(const TaskGraph& other) const {
        return exec_ == other.exec_ && edges_ == other.edges_;
    }

private:
    TaskGraph() = default;

    void check_task(TaskId t) const;
    void compute_metrics();

    std::vector<Time> exec_;                  // index t-1
    std::vector<std::vector<TaskId>> preds_;  // sorted ascending
    std::vector<std::vector<TaskId>> succs_;  // sorted ascending
    std::vector<Edge> edges_;                 // sorted
    std::vector<int> height_;
    std::vector<Time> b_level_;
    std::vector<TaskId> topo_order_;
    std::vector<TaskId> priority_order_;
    Time total_exec_ = 0;
    Time critical_path_ = 0;
};

}  // namespace dagsched
