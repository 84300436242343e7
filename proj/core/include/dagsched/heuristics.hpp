#pragma once

#include <map>
#include <optional>
#include <vector>

#include "dagsched/schedule.hpp"
#include "dagsched/task_graph.hpp"

namespace dagsched {

/// Per-processor bookkeeping for the eligible-processor heuristic. weight is
/// the cumulative execution plus waiting time, i.e. the finish time of the
/// last task assigned here; weight_at_assignment records that value for each
/// task at the moment it was assigned.
struct ProcessorState {
    ProcessorId processor = 0;
    Time weight = 0;
    std::optional<TaskId> last_task;
    std::map<TaskId, Time> weight_at_assignment;
};

// Which rule of the eligible-processor heuristic placed a task.
enum class AssignBranch {
    LastTaskMatch,   // heaviest predecessor is still the last task on its processor
    MinWeightWait,   // otherwise: least-loaded processor, waiting until the predecessor finishes
    EntryMinWeight,  // no predecessors: least-loaded processor
};

// Queue of tasks whose predecessors are all scheduled, ordered by descending
// static b-level (ties to the lower task id).
class ReadyList {
public:
    explicit ReadyList(const TaskGraph& graph) : graph_(&graph) {}

    void push(TaskId t);
    TaskId pop();
    bool empty() const { return entries_.empty(); }

private:
    const TaskGraph* graph_;
    std::vector<TaskId> entries_;  // kept sorted, best candidate last
};

/// HLFET list scheduling: repeatedly pop the ready task with the highest
/// static b-level and place it on the processor giving the earliest start
/// time, non-insertion. Equal starts go to the lower processor id.
Schedule hlfet(const TaskGraph& graph, int processor_count);

struct SeededSchedule {
    std::vector<ProcessorId> mapping;  // mapping[t-1] = processor of task t
    Schedule schedule;
};

std::vector<ProcessorId> identity_permutation(int processor_count);

/// Cyclic seeding: the i-th task of the priority order goes to perm[i mod m].
/// perm must be a permutation of 1..m. Returns the raw mapping (for GA
/// seeding) alongside the decoded schedule.
SeededSchedule round_robin(const TaskGraph& graph, int processor_count,
                           const std::vector<ProcessorId>& perm);

struct EligibleResult {
    std::vector<ProcessorId> mapping;
    Schedule schedule;
    std::vector<ProcessorState> processors;  // final states, index p-1
    std::vector<AssignBranch> branches;      // rule that placed each task, index t-1
};

/// The eligible-processor heuristic. Tasks are taken in priority order; each
/// task goes to the processor of its heaviest-finishing predecessor when that
/// predecessor is still the processor's last task, otherwise to the
/// minimum-weight processor, whose weight then advances by any waiting time
/// for the predecessor plus the task's execution time. Ties (minimum weight,
/// equal predecessor weights) resolve to the lower processor / task id.
EligibleResult eligible_processor(const TaskGraph& graph, int processor_count);

}  // namespace dagsched
