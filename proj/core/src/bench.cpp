#include "dagsched/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace dagsched {

namespace {

double reciprocal(Time makespan) {
    return makespan > 0 ? 1.0 / static_cast<double>(makespan)
                        : std::numeric_limits<double>::infinity();
}

// Shortest decimal form that parses back to the same double.
std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::vector<std::string> split(std::string_view line, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t next = line.find(sep, pos);
        out.emplace_back(line.substr(pos, next == std::string_view::npos ? std::string_view::npos
                                                                         : next - pos));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return out;
}

long long parse_ll(const std::string& s) {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw ParseError("bad integer field '" + s + "'");
    return v;
}

double parse_double(const std::string& s) {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw ParseError("bad numeric field '" + s + "'");
    return v;
}

}  // namespace

const char* algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::Hlfet: return "hlfet";
        case Algorithm::RoundRobin: return "roundrobin";
        case Algorithm::Eligible: return "eligible";
        case Algorithm::GaElitism: return "ga-elitism";
        case Algorithm::GaProposed: return "ga-proposed";
    }
    return "?";
}

Algorithm parse_algorithm(std::string_view name) {
    if (name == "hlfet") return Algorithm::Hlfet;
    if (name == "roundrobin") return Algorithm::RoundRobin;
    if (name == "eligible") return Algorithm::Eligible;
    if (name == "ga-elitism") return Algorithm::GaElitism;
    if (name == "ga-proposed") return Algorithm::GaProposed;
    throw ParseError("unknown algorithm '" + std::string(name) +
                     "' (expected hlfet|roundrobin|eligible|ga-elitism|ga-proposed)");
}

TaskGraph load_graph(const std::string& graph) {
    if (graph == "figure1") return figure1_graph();
    return load_stg_file(graph);
}

Aggregates compute_aggregates(const std::vector<RunRecord>& runs) {
    Aggregates agg;
    if (runs.empty()) return agg;
    const RunRecord* best = &runs.front();
    agg.best_evaluations = runs.front().evaluations;
    for (const RunRecord& r : runs) {
        agg.avg_cost += r.cost;
        agg.avg_makespan += static_cast<double>(r.makespan);
        agg.avg_evaluations += static_cast<double>(r.evaluations);
        if (r.makespan < best->makespan) best = &r;
        agg.best_evaluations = std::min(agg.best_evaluations, r.evaluations);
    }
    const double count = static_cast<double>(runs.size());
    agg.avg_cost /= count;
    agg.avg_makespan /= count;
    agg.avg_evaluations /= count;
    agg.best_makespan = best->makespan;
    agg.best_cost = best->cost;
    return agg;
}

ExperimentReport run_experiment(const ExperimentSpec& spec) {
    if (spec.repeats < 1) throw Error("repeats must be >= 1");
    if (spec.processors < 1) throw Error("processors must be >= 1");

    const TaskGraph graph = load_graph(spec.graph);
    const std::vector<ProcessorId> perm =
        spec.perm.empty() ? identity_permutation(spec.processors) : spec.perm;

    ExperimentReport report;
    report.spec = spec;
    report.runs.reserve(spec.repeats);

    for (int run = 0; run < spec.repeats; ++run) {
        RunRecord record;
        record.run = run;
        const auto t0 = std::chrono::steady_clock::now();
        switch (spec.algorithm) {
            case Algorithm::Hlfet:
                record.makespan = hlfet(graph, spec.processors).makespan();
                break;
            case Algorithm::RoundRobin:
                record.makespan = round_robin(graph, spec.processors, perm).schedule.makespan();
                break;
            case Algorithm::Eligible:
                record.makespan = eligible_processor(graph, spec.processors).schedule.makespan();
                break;
            case Algorithm::GaElitism:
            case Algorithm::GaProposed: {
                GAParams params = spec.ga;
                params.seeding = spec.algorithm == Algorithm::GaElitism
                                     ? Seeding::RoundRobinPermutations
                                     : Seeding::EligibleProcessor;
                params.rng_seed = spec.seed + static_cast<std::uint64_t>(run);
                const GARunResult result = evolve(graph, spec.processors, params);
                record.makespan = result.best_makespan;
                record.evaluations = result.evaluations;
                record.generations = result.generations;
                record.history = result.history;
                break;
            }
        }
        const auto t1 = std::chrono::steady_clock::now();
        record.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
        record.cost = reciprocal(record.makespan);
        if (record.history.empty()) {
            record.evaluations = 1;
            record.generations = 1;
            record.history = {GenerationStats{record.makespan,
                                              static_cast<double>(record.makespan), 1}};
        }
        report.runs.push_back(std::move(record));
    }
    report.aggregates = compute_aggregates(report.runs);
    return report;
}

std::string report_csv_header() {
    return "problem,algorithm,processors,repeats,avg_cost,best_cost,avg_makespan,"
           "best_makespan,avg_evaluations,best_evaluations,seed";
}

std::string report_csv_row(const ExperimentReport& report) {
    const Aggregates& agg = report.aggregates;
    std::ostringstream out;
    out << report.spec.graph << ',' << algorithm_name(report.spec.algorithm) << ','
        << report.spec.processors << ',' << report.spec.repeats << ','
        << format_double(agg.avg_cost) << ',' << format_double(agg.best_cost) << ','
        << format_double(agg.avg_makespan) << ',' << agg.best_makespan << ','
        << format_double(agg.avg_evaluations) << ',' << agg.best_evaluations << ','
        << report.spec.seed;
    return out.str();
}

std::string report_csv(const std::vector<ExperimentReport>& reports) {
    std::string out = report_csv_header() + "\n";
    for (const ExperimentReport& r : reports) out += report_csv_row(r) + "\n";
    return out;
}

std::vector<ReportCsvRow> parse_report_csv(std::string_view text) {
    std::vector<ReportCsvRow> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    bool saw_header = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (!saw_header) {
            if (line != report_csv_header()) {
                throw ParseError("unexpected CSV header: " + line);
            }
            saw_header = true;
            continue;
        }
        const std::vector<std::string> f = split(line, ',');
        if (f.size() != 11) {
            throw ParseError("expected 11 CSV fields, got " + std::to_string(f.size()));
        }
        ReportCsvRow row;
        row.problem = f[0];
        row.algorithm = f[1];
        row.processors = static_cast<int>(parse_ll(f[2]));
        row.repeats = static_cast<int>(parse_ll(f[3]));
        row.aggregates.avg_cost = parse_double(f[4]);
        row.aggregates.best_cost = parse_double(f[5]);
        row.aggregates.avg_makespan = parse_double(f[6]);
        row.aggregates.best_makespan = parse_ll(f[7]);
        row.aggregates.avg_evaluations = parse_double(f[8]);
        row.aggregates.best_evaluations = parse_ll(f[9]);
        row.seed = static_cast<std::uint64_t>(parse_ll(f[10]));
        rows.push_back(std::move(row));
    }
    if (!saw_header) throw ParseError("empty CSV");
    return rows;
}

std::string trace_csv(const ExperimentReport& report) {
    std::string out = "run,generation,evaluations,best_makespan,avg_makespan\n";
    for (const RunRecord& record : report.runs) {
        for (std::size_t g = 0; g < record.history.size(); ++g) {
            const GenerationStats& stats = record.history[g];
            out += std::to_string(record.run) + "," + std::to_string(g) + "," +
                   std::to_string(stats.evaluations) + "," +
                   std::to_string(stats.best_makespan) + "," +
                   format_double(stats.avg_makespan) + "\n";
        }
    }
    return out;
}

ComparisonResult compare(const ExperimentSpec& a, const ExperimentSpec& b) {
    if (a.graph != b.graph || a.processors != b.processors) {
        throw MismatchedSpecs("comparison requires the same graph and processor count (" +
                              a.graph + "/" + std::to_string(a.processors) + " vs " + b.graph +
                              "/" + std::to_string(b.processors) + ")");
    }
    ComparisonResult result;
    result.a = run_experiment(a);
    result.b = run_experiment(b);
    result.table_csv = report_csv({result.a, result.b});
    result.trace_a_csv = trace_csv(result.a);
    result.trace_b_csv = trace_csv(result.b);
    return result;
}

}  // namespace dagsched
