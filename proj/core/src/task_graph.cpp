#include "dagsched/task_graph.hpp"

#include <algorithm>
#include <string>

namespace dagsched {

namespace {

std::string task_name(TaskId t) { return "T" + std::to_string(t); }

// Any node left unvisited by Kahn's algorithm sits on or behind a cycle.
// Walking backwards through still-unvisited predecessors must revisit a node
// within n steps; that node lies on a cycle.
TaskId find_task_on_cycle(const std::vector<std::vector<TaskId>>& preds,
                          const std::vector<bool>& emitted) {
    const int n = static_cast<int>(preds.size());
    TaskId current = 0;
    for (TaskId t = 1; t <= n; ++t) {
        if (!emitted[t - 1]) {
            current = t;
            break;
        }
    }
    std::vector<bool> seen(n, false);
    while (!seen[current - 1]) {
        seen[current - 1] = true;
        for (TaskId p : preds[current - 1]) {
            if (!emitted[p - 1]) {
                current = p;
                break;
            }
        }
    }
    return current;
}

}  // namespace

TaskGraph TaskGraph::validate(const std::vector<Task>& tasks, std::vector<Edge> edges) {
    TaskGraph g;
    const int n = static_cast<int>(tasks.size());
    g.exec_.resize(n);

    std::vector<bool> id_seen(n, false);
    for (const Task& task : tasks) {
        if (task.id < 1 || task.id > n) {
            throw InvalidTaskId("task id " + std::to_string(task.id) +
                                " outside 1.." + std::to_string(n));
        }
        if (id_seen[task.id - 1]) {
            throw DuplicateTaskId("duplicate task id " + std::to_string(task.id));
        }
        id_seen[task.id - 1] = true;
        if (task.exec_time < 0) {
            throw NegativeExecTime(task_name(task.id) + " has negative exec time " +
                                   std::to_string(task.exec_time));
        }
        g.exec_[task.id - 1] = task.exec_time;
        g.total_exec_ += task.exec_time;
    }

    std::sort(edges.begin(), edges.end());
    g.preds_.resize(n);
    g.succs_.resize(n);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (e.pred < 1 || e.pred > n || e.succ < 1 || e.succ > n) {
            throw DanglingEdge("edge " + task_name(e.pred) + "->" + task_name(e.succ) +
                               " references a task outside 1.." + std::to_string(n));
        }
        if (e.pred == e.succ) {
            throw CycleDetected("self-edge on " + task_name(e.pred));
        }
        if (i > 0 && edges[i - 1] == e) {
            throw DuplicateEdge("duplicate edge " + task_name(e.pred) + "->" + task_name(e.succ));
        }
        g.preds_[e.succ - 1].push_back(e.pred);
        g.succs_[e.pred - 1].push_back(e.succ);
    }
    g.edges_ = std::move(edges);
    for (auto& v : g.preds_) std::sort(v.begin(), v.end());
    for (auto& v : g.succs_) std::sort(v.begin(), v.end());

    // Kahn's algorithm; a deterministic FIFO over ascending ids.
    std::vector<int> remaining(n);
    std::vector<TaskId> queue;
    queue.reserve(n);
    for (TaskId t = 1; t <= n; ++t) {
        remaining[t - 1] = static_cast<int>(g.preds_[t - 1].size());
        if (remaining[t - 1] == 0) queue.push_back(t);
    }
    std::vector<bool> emitted(n, false);
    g.topo_order_.reserve(n);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const TaskId t = queue[head];
        emitted[t - 1] = true;
        g.topo_order_.push_back(t);
        for (TaskId s : g.succs_[t - 1]) {
            if (--remaining[s - 1] == 0) queue.push_back(s);
        }
    }
    if (static_cast<int>(g.topo_order_.size()) != n) {
        throw CycleDetected("cycle through " + task_name(find_task_on_cycle(g.preds_, emitted)));
    }

    g.compute_metrics();
    return g;
}

void TaskGraph::compute_metrics() {
    const int n = task_count();
    height_.assign(n, 0);
    b_level_.assign(n, 0);

    for (TaskId t : topo_order_) {
        int h = 0;
        for (TaskId p : preds_[t - 1]) h = std::max(h, height_[p - 1] + 1);
        height_[t - 1] = h;
    }
    for (auto it = topo_order_.rbegin(); it != topo_order_.rend(); ++it) {
        const TaskId t = *it;
        Time deepest = 0;
        for (TaskId s : succs_[t - 1]) deepest = std::max(deepest, b_level_[s - 1]);
        b_level_[t - 1] = exec_[t - 1] + deepest;
        critical_path_ = std::max(critical_path_, b_level_[t - 1]);
    }

    priority_order_.resize(n);
    for (TaskId t = 1; t <= n; ++t) priority_order_[t - 1] = t;
    std::sort(priority_order_.begin(), priority_order_.end(), [this](TaskId a, TaskId b) {
        if (height_[a - 1] != height_[b - 1]) return height_[a - 1] < height_[b - 1];
        if (b_level_[a - 1] != b_level_[b - 1]) return b_level_[a - 1] > b_level_[b - 1];
        return a > b;
    });
}

void TaskGraph::check_task(TaskId t) const {
    if (t < 1 || t > task_count()) {
        throw UnknownTask(task_name(t) + " not in graph of " + std::to_string(task_count()) +
                          " tasks");
    }
}

Time TaskGraph::exec_time(TaskId t) const {
    check_task(t);
    return exec_[t - 1];
}

const std::vector<TaskId>& TaskGraph::predecessors(TaskId t) const {
    check_task(t);
    return preds_[t - 1];
}

const std::vector<TaskId>& TaskGraph::successors(TaskId t) const {
    check_task(t);
    return succs_[t - 1];
}

int TaskGraph::height(TaskId t) const {
    check_task(t);
    return height_[t - 1];
}

Time TaskGraph::b_level(TaskId t) const {
    check_task(t);
    return b_level_[t - 1];
}

std::vector<Task> TaskGraph::tasks() const {
    std::vector<Task> out(task_count());
    for (TaskId t = 1; t <= task_count(); ++t) out[t - 1] = Task{t, exec_[t - 1]};
    return out;
}

}  // namespace dagsched
