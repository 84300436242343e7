#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dagsched/genetic.hpp"
#include "dagsched/heuristics.hpp"
#include "dagsched/stg_io.hpp"

namespace dagsched {

enum class Algorithm { Hlfet, RoundRobin, Eligible, GaElitism, GaProposed };

const char* algorithm_name(Algorithm a);
Algorithm parse_algorithm(std::string_view name);  // throws ParseError

struct ExperimentSpec {
    std::string graph = "figure1";  // STG file path or the builtin name
    int processors = 3;
    Algorithm algorithm = Algorithm::Eligible;
    int repeats = 1;
    GAParams ga;                    // seeding is derived from `algorithm`
    std::vector<ProcessorId> perm;  // round-robin permutation; empty = identity
    std::string output;             // CSV path used by the CLI ("" = stdout)
    std::uint64_t seed = 0;
};

struct RunRecord {
    int run = 0;
    Time makespan = 0;
    double cost = 0.0;
    long long evaluations = 0;
    int generations = 0;
    double wall_seconds = 0.0;
    std::vector<GenerationStats> history;  // single point for the one-shot heuristics
};

struct Aggregates {
    double avg_cost = 0.0;
    double best_cost = 0.0;  // cost of the best-makespan run
    double avg_makespan = 0.0;
    Time best_makespan = 0;
    double avg_evaluations = 0.0;
    long long best_evaluations = 0;  // minimum over runs

    bool operator==(const Aggregates&) const = default;
};

struct ExperimentReport {
    ExperimentSpec spec;
    std::vector<RunRecord> runs;
    Aggregates aggregates;
};

// Resolves "figure1" to the builtin graph, anything else to an STG file.
TaskGraph load_graph(const std::string& graph);

Aggregates compute_aggregates(const std::vector<RunRecord>& runs);

/// Runs spec.algorithm spec.repeats times. Run i uses seed spec.seed + i, so
/// any single run is independently reproducible. Deterministic apart from
/// wall-clock measurements.
ExperimentReport run_experiment(const ExperimentSpec& spec);

// Aggregate CSV schema (stable, one row per experiment):
//   problem,algorithm,processors,repeats,avg_cost,best_cost,avg_makespan,
//   best_makespan,avg_evaluations,best_evaluations,seed
std::string report_csv_header();
std::string report_csv_row(const ExperimentReport& report);
std::string report_csv(const std::vector<ExperimentReport>& reports);

struct ReportCsvRow {
    std::string problem;
    std::string algorithm;
    int processors = 0;
    int repeats = 0;
    Aggregates aggregates;
    std::uint64_t seed = 0;

    bool operator==(const ReportCsvRow&) const = default;
};

// Parses text produced by report_csv; throws ParseError on anything else.
std::vector<ReportCsvRow> parse_report_csv(std::string_view text);

// Convergence trace CSV, one row per (run, generation):
//   run,generation,evaluations,best_makespan,avg_makespan
// where evaluations is the cumulative fitness-call count.
std::string trace_csv(const ExperimentReport& report);

struct ComparisonResult {
    ExperimentReport a;
    ExperimentReport b;
    std::string table_csv;  // header plus one aggregate row per side
    std::string trace_a_csv;
    std::string trace_b_csv;
};

/// Side-by-side runs of two specs over the same graph and processor count;
/// throws MismatchedSpecs when they differ.
ComparisonResult compare(const ExperimentSpec& a, const ExperimentSpec& b);

}  // namespace dagsched
