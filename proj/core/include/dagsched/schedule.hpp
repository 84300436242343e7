#pragma once

#include <string>
#include <vector>

#include "dagsched/task_graph.hpp"

namespace dagsched {

struct Assignment {
    TaskId task = 0;
    ProcessorId processor = 0;
    Time start = 0;
    Time finish = 0;  // start + exec_time(task)

    bool operator==(const Assignment&) const = default;
};

/// Placement of every task of a graph onto processors 1..m. The container is
/// deliberately permissive so tests can build broken schedules; feasibility
/// is checked by validate_schedule.
class Schedule {
public:
    Schedule() = default;
    Schedule(int processor_count, std::vector<Assignment> assignments)
        : processor_count_(processor_count), assignments_(std::move(assignments)) {}

    int processor_count() const { return processor_count_; }
    const std::vector<Assignment>& assignments() const { return assignments_; }

    // Assignment of task t; throws UnknownTask if t never appears.
    const Assignment& assignment_of(TaskId t) const;

    // Per-processor assignment lists (index p-1), each ordered by start time.
    // Idle processors yield empty timelines.
    std::vector<std::vector<Assignment>> timelines() const;

    // Maximum finish time over all assignments; 0 for an empty schedule.
    Time makespan() const;

    bool operator==(const Schedule&) const = default;

private:
    int processor_count_ = 0;
    std::vector<Assignment> assignments_;
};

/// List-places the tasks in `order` onto their mapped processors. Each task
/// starts at max(processor available time, latest predecessor finish); the
/// processor then advances to the finish time. Earlier idle gaps are never
/// back-filled (non-insertion).
///
/// mapping[t-1] names the processor of task t. Throws IncompleteMapping if
/// the mapping misses a task or names a processor outside 1..m, and
/// OrderNotTopological if `order` is not a topological permutation of the
/// graph's tasks.
Schedule decode(const TaskGraph& graph, int processor_count,
                const std::vector<ProcessorId>& mapping, const std::vector<TaskId>& order);

enum class ViolationKind {
    Overlap,             // two assignments share time on one processor
    PrecedenceViolated,  // successor starts before a predecessor finishes
    MissingTask,         // graph task absent from the schedule
    DuplicateTask,       // task assigned more than once
    FinishMismatch,      // finish != start + exec_time
    InvalidAssignment,   // negative start or processor outside 1..m
};

const char* to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::vector<TaskId> tasks;
    std::string detail;
};

// Checks every schedule invariant against the graph. An empty result means
// the schedule is feasible; each violation names the offending task(s).
std::vector<Violation> validate_schedule(const TaskGraph& graph, const Schedule& schedule);

// Text Gantt chart: one "P<k> | T<i>[start,finish] ..." row per processor and
// a trailing makespan line. Output is deterministic for equal schedules.
std::string render_gantt(const Schedule& schedule);

// JSON-lines dump, one object per assignment in task-id order:
//   {"task":1,"processor":1,"start":0,"finish":50}
std::string schedule_to_jsonl(const Schedule& schedule);

}  // namespace dagsched
