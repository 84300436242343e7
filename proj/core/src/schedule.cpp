#include "dagsched/schedule.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

namespace dagsched {

const Assignment& Schedule::assignment_of(TaskId t) const {
    for (const Assignment& a : assignments_) {
        if (a.task == t) return a;
    }
    throw UnknownTask("T" + std::to_string(t) + " has no assignment");
}

std::vector<std::vector<Assignment>> Schedule::timelines() const {
    std::vector<std::vector<Assignment>> rows(std::max(processor_count_, 0));
    for (const Assignment& a : assignments_) {
        if (a.processor >= 1 && a.processor <= processor_count_) {
            rows[a.processor - 1].push_back(a);
        }
    }
    for (auto& row : rows) {
        std::stable_sort(row.begin(), row.end(), [](const Assignment& x, const Assignment& y) {
            return x.start < y.start;
        });
    }
    return rows;
}

Time Schedule::makespan() const {
    Time latest = 0;
    for (const Assignment& a : assignments_) latest = std::max(latest, a.finish);
    return latest;
}

Schedule decode(const TaskGraph& graph, int processor_count,
                const std::vector<ProcessorId>& mapping, const std::vector<TaskId>& order) {
    const int n = graph.task_count();
    if (static_cast<int>(mapping.size()) != n) {
        throw IncompleteMapping("mapping covers " + std::to_string(mapping.size()) +
                                " of " + std::to_string(n) + " tasks");
    }
    for (TaskId t = 1; t <= n; ++t) {
        if (mapping[t - 1] < 1 || mapping[t - 1] > processor_count) {
            throw IncompleteMapping("T" + std::to_string(t) + " mapped to processor " +
                                    std::to_string(mapping[t - 1]) + " outside 1.." +
                                    std::to_string(processor_count));
        }
    }

    if (static_cast<int>(order.size()) != n) {
        throw OrderNotTopological("order lists " + std::to_string(order.size()) + " of " +
                                  std::to_string(n) + " tasks");
    }
    std::vector<int> position(n, -1);
    for (int i = 0; i < n; ++i) {
        const TaskId t = order[i];
        if (t < 1 || t > n || position[t - 1] != -1) {
            throw OrderNotTopological("order is not a permutation of the tasks");
        }
        position[t - 1] = i;
    }
    for (const Edge& e : graph.edges()) {
        if (position[e.pred - 1] > position[e.succ - 1]) {
            throw OrderNotTopological("T" + std::to_string(e.succ) + " ordered before its predecessor T" +
                                      std::to_string(e.pred));
        }
    }

    std::vector<Time> available(processor_count, 0);
    std::vector<Time> finish(n, 0);
    std::vector<Assignment> assignments;
    assignments.reserve(n);
    for (TaskId t : order) {
        Time ready = 0;
        for (TaskId p : graph.predecessors(t)) ready = std::max(ready, finish[p - 1]);
        const ProcessorId proc = mapping[t - 1];
        const Time start = std::max(available[proc - 1], ready);
        const Time end = start + graph.exec_time(t);
        available[proc - 1] = end;
        finish[t - 1] = end;
        assignments.push_back(Assignment{t, proc, start, end});
    }
    return Schedule(processor_count, std::move(assignments));
}

const char* to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::Overlap: return "Overlap";
        case ViolationKind::PrecedenceViolated: return "PrecedenceViolated";
        case ViolationKind::MissingTask: return "MissingTask";
        case ViolationKind::DuplicateTask: return "DuplicateTask";
        case ViolationKind::FinishMismatch: return "FinishMismatch";
        case ViolationKind::InvalidAssignment: return "InvalidAssignment";
    }
    return "?";
}

std::vector<Violation> validate_schedule(const TaskGraph& graph, const Schedule& schedule) {
    std::vector<Violation> violations;
    const int n = graph.task_count();

    std::vector<int> seen(n, 0);
    for (const Assignment& a : schedule.assignments()) {
        if (a.task < 1 || a.task > n) {
            violations.push_back({ViolationKind::InvalidAssignment,
                                  {a.task},
                                  "assignment names unknown task T" + std::to_string(a.task)});
            continue;
        }
        if (++seen[a.task - 1] == 2) {
            violations.push_back({ViolationKind::DuplicateTask,
                                  {a.task},
                                  "T" + std::to_string(a.task) + " assigned more than once"});
        }
        if (a.start < 0 || a.processor < 1 || a.processor > schedule.processor_count()) {
            violations.push_back({ViolationKind::InvalidAssignment,
                                  {a.task},
                                  "T" + std::to_string(a.task) + " has start " +
                                      std::to_string(a.start) + " on processor " +
                                      std::to_string(a.processor)});
        }
        if (a.finish != a.start + graph.exec_time(a.task)) {
            violations.push_back({ViolationKind::FinishMismatch,
                                  {a.task},
                                  "T" + std::to_string(a.task) + " finish " +
                                      std::to_string(a.finish) + " != start + exec"});
        }
    }
    for (TaskId t = 1; t <= n; ++t) {
        if (seen[t - 1] == 0) {
            violations.push_back({ViolationKind::MissingTask,
                                  {t},
                                  "T" + std::to_string(t) + " is not scheduled"});
        }
    }

    // Overlap: half-open intervals per processor; zero-length tasks never
    // collide. Keyed by raw processor id so malformed ids still compare.
    std::map<ProcessorId, std::vector<const Assignment*>> by_proc;
    for (const Assignment& a : schedule.assignments()) by_proc[a.processor].push_back(&a);
    for (auto& [proc, row] : by_proc) {
        std::sort(row.begin(), row.end(), [](const Assignment* x, const Assignment* y) {
            return std::pair(x->start, x->finish) < std::pair(y->start, y->finish);
        });
        for (std::size_t i = 1; i < row.size(); ++i) {
            if (row[i]->start < row[i - 1]->finish) {
                violations.push_back({ViolationKind::Overlap,
                                      {row[i - 1]->task, row[i]->task},
                                      "T" + std::to_string(row[i - 1]->task) + " and T" +
                                          std::to_string(row[i]->task) + " overlap on P" +
                                          std::to_string(proc)});
            }
        }
    }

    // Precedence, zero communication cost: succ.start >= pred.finish.
    std::vector<const Assignment*> first(n, nullptr);
    for (const Assignment& a : schedule.assignments()) {
        if (a.task >= 1 && a.task <= n && first[a.task - 1] == nullptr) first[a.task - 1] = &a;
    }
    for (const Edge& e : graph.edges()) {
        const Assignment* pred = first[e.pred - 1];
        const Assignment* succ = first[e.succ - 1];
        if (pred && succ && succ->start < pred->finish) {
            violations.push_back({ViolationKind::PrecedenceViolated,
                                  {e.pred, e.succ},
                                  "T" + std::to_string(e.succ) + " starts at " +
                                      std::to_string(succ->start) + " before T" +
                                      std::to_string(e.pred) + " finishes at " +
                                      std::to_string(pred->finish)});
        }
    }
    return violations;
}

std::string render_gantt(const Schedule& schedule) {
    std::ostringstream out;
    const auto rows = schedule.timelines();
    for (int p = 1; p <= schedule.processor_count(); ++p) {
        out << 'P' << p << " |";
        for (const Assignment& a : rows[p - 1]) {
            out << " T" << a.task << '[' << a.start << ',' << a.finish << ']';
        }
        out << '\n';
    }
    out << "makespan " << schedule.makespan() << '\n';
    return out.str();
}

std::string schedule_to_jsonl(const Schedule& schedule) {
    std::vector<Assignment> sorted = schedule.assignments();
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const Assignment& x, const Assignment& y) { return x.task < y.task; });
    std::string out;
    for (const Assignment& a : sorted) {
        nlohmann::ordered_json line = {
            {"task", a.task},
            {"processor", a.processor},
            {"start", a.start},
            {"finish", a.finish},
        };
        out += line.dump();
        out += '\n';
    }
    return out;
}

}  // namespace dagsched
