#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "dagsched/task_graph.hpp"

namespace dagsched {

// One node record of an STG file: "index proc_time pred_count pred...".
// Trailing extra fields on a line (deadline/release variants) are ignored.
struct StgRecord {
    int node_index = 0;
    Time proc_time = 0;
    int pred_count = 0;
    std::vector<int> pred_indices;

    bool operator==(const StgRecord&) const = default;
};

// A parsed STG file before dummy stripping. Files either bracket the graph
// with zero-cost dummy nodes (index 0 entry, index task_count+1 exit, giving
// task_count + 2 records) or list exactly task_count real nodes.
struct StgDocument {
    int task_count = 0;
    std::vector<StgRecord> records;
    std::string source_name;

    bool has_dummies() const {
        return records.size() == static_cast<std::size_t>(task_count) + 2;
    }
};

// Tokenizes STG text: the first non-comment line carries the task count, each
// following line one node record. Lines whose first non-blank character is
// '#' are ignored. Throws MalformedRecord (with the line number) or
// InconsistentPredCount.
StgDocument parse_stg_document(std::string_view text, std::string source_name = "");

// Parses STG text into a validated TaskGraph. Dummy entry/exit nodes are
// removed with their incident edges and the remaining nodes are reindexed
// densely to 1..n preserving order. Cycle and edge errors are delegated to
// TaskGraph::validate.
TaskGraph parse_stg(std::string_view text, std::string source_name = "");

// Reads and parses a .stg file; throws FileNotFound if it cannot be opened.
TaskGraph load_stg_file(const std::filesystem::path& path);

// Serializes a graph in STG form, bracketing the real tasks with dummy entry
// node 0 (predecessor of every entry task) and dummy exit node n+1. The
// output round-trips: parse_stg(write_stg(g)) == g. Throws EmptyGraph for a
// graph with no tasks.
std::string write_stg(const TaskGraph& graph);

// The built-in 11-task example graph (CLI name "figure1"): exec times
// 50,1,10,20,20,2,20,1,20,19,20 over a fork-join structure with critical
// path 72. Used as the reference instance throughout tests and docs.
TaskGraph figure1_graph();

}  // namespace dagsched
