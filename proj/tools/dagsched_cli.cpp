// dagsched: schedule DAG task graphs, benchmark the schedulers, and compare
// GA variants. See README.md for the file formats.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dagsched/bench.hpp"

namespace {

using namespace dagsched;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("DAGSCHED_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw Error(std::string("DAGSCHED_SEED is not an integer: ") + env);
        }
    }
    return 0;
}

std::vector<ProcessorId> parse_perm(const std::string& text, char sep) {
    std::vector<ProcessorId> perm;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t next = text.find(sep, pos);
        const std::string tok = text.substr(pos, next == std::string::npos ? std::string::npos
                                                                           : next - pos);
        try {
            perm.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw ParseError("bad processor id '" + tok + "' in permutation");
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return perm;
}

// Parses "graph=g.stg,procs=4,algo=ga-proposed,repeats=10,seed=7,..." into a
// spec. GA keys: pop, generations, stagnation, crossover, mutation, elite.
// A round-robin permutation uses colons: perm=2:1:3.
ExperimentSpec parse_spec(const std::string& text) {
    ExperimentSpec spec;
    spec.seed = default_seed();
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t next = text.find(',', pos);
        const std::string item = text.substr(pos, next == std::string::npos ? std::string::npos
                                                                            : next - pos);
        if (!item.empty()) {
            const std::size_t eq = item.find('=');
            if (eq == std::string::npos) {
                throw ParseError("expected key=value in spec, got '" + item + "'");
            }
            const std::string key = item.substr(0, eq);
            const std::string value = item.substr(eq + 1);
            try {
                if (key == "graph") spec.graph = value;
                else if (key == "procs") spec.processors = std::stoi(value);
                else if (key == "algo") spec.algorithm = parse_algorithm(value);
                else if (key == "repeats") spec.repeats = std::stoi(value);
                else if (key == "seed") spec.seed = std::stoull(value);
                else if (key == "pop") spec.ga.population_size = std::stoi(value);
                else if (key == "generations") spec.ga.max_generations = std::stoi(value);
                else if (key == "stagnation") spec.ga.stagnation_limit = std::stoi(value);
                else if (key == "crossover") spec.ga.crossover_rate = std::stod(value);
                else if (key == "mutation") spec.ga.mutation_rate = std::stod(value);
                else if (key == "elite") spec.ga.elite_count = std::stoi(value);
                else if (key == "perm") spec.perm = parse_perm(value, ':');
                else throw ParseError("unknown spec key '" + key + "'");
            } catch (const ParseError&) {
                throw;
            } catch (const std::exception&) {
                throw ParseError("bad value for spec key '" + key + "': " + value);
            }
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return spec;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << content;
}

struct ScheduleArgs {
    std::string graph = "figure1";
    int procs = 3;
    std::string algo = "eligible";
    std::string perm;
    bool gantt = false;
    std::uint64_t seed = 0;
};

void run_schedule(const ScheduleArgs& args) {
    const TaskGraph graph = load_graph(args.graph);
    const Algorithm algorithm = parse_algorithm(args.algo);
    const std::vector<ProcessorId> perm =
        args.perm.empty() ? identity_permutation(args.procs) : parse_perm(args.perm, ',');

    Schedule schedule;
    switch (algorithm) {
        case Algorithm::Hlfet:
            schedule = hlfet(graph, args.procs);
            break;
        case Algorithm::RoundRobin:
            schedule = round_robin(graph, args.procs, perm).schedule;
            break;
        case Algorithm::Eligible:
            schedule = eligible_processor(graph, args.procs).schedule;
            break;
        case Algorithm::GaElitism:
        case Algorithm::GaProposed: {
            GAParams params;
            params.seeding = algorithm == Algorithm::GaElitism ? Seeding::RoundRobinPermutations
                                                               : Seeding::EligibleProcessor;
            params.rng_seed = args.seed;
            const GARunResult result = evolve(graph, args.procs, params);
            schedule = decode(graph, args.procs, result.best_chromosome, graph.priority_order());
            break;
        }
    }

    if (args.gantt) {
        std::cout << render_gantt(schedule);
    } else {
        std::cout << schedule_to_jsonl(schedule);
    }
}

struct BenchArgs {
    ExperimentSpec spec;
    std::string perm;
};

void run_bench(BenchArgs& args) {
    if (!args.perm.empty()) args.spec.perm = parse_perm(args.perm, ',');
    const ExperimentReport report = run_experiment(args.spec);
    const std::string csv = report_csv({report});
    if (args.spec.output.empty()) {
        std::cout << csv;
    } else {
        write_file(args.spec.output, csv);
        std::cout << "wrote " << args.spec.output << "\n"
                  << "avg_makespan=" << report.aggregates.avg_makespan
                  << " best_makespan=" << report.aggregates.best_makespan
                  << " avg_evaluations=" << report.aggregates.avg_evaluations << "\n";
    }
}

struct CompareArgs {
    std::string a;
    std::string b;
    std::string out;
    std::string trace_a = "compare_a_trace.csv";
    std::string trace_b = "compare_b_trace.csv";
};

void run_compare(const CompareArgs& args) {
    const ExperimentSpec spec_a = parse_spec(args.a);
    const ExperimentSpec spec_b = parse_spec(args.b);
    const ComparisonResult result = compare(spec_a, spec_b);
    if (args.out.empty()) {
        std::cout << result.table_csv;
    } else {
        write_file(args.out, result.table_csv);
        std::cout << "wrote " << args.out << "\n";
    }
    write_file(args.trace_a, result.trace_a_csv);
    write_file(args.trace_b, result.trace_b_csv);
    std::cout << "wrote " << args.trace_a << "\n" << "wrote " << args.trace_b << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dagsched: list scheduling and GA search for task DAGs on m processors"};
    app.require_subcommand(1);

    ScheduleArgs sched_args;
    CLI::App* sched = app.add_subcommand("schedule", "Schedule one graph and print the result");
    sched->add_option("--graph", sched_args.graph, "STG file path or 'figure1'");
    sched->add_option("--procs", sched_args.procs, "number of processors")->check(CLI::PositiveNumber);
    sched->add_option("--algo", sched_args.algo,
                      "hlfet|roundrobin|eligible|ga-elitism|ga-proposed");
    sched->add_option("--perm", sched_args.perm, "round-robin permutation, e.g. 2,1,3");
    sched->add_flag("--gantt", sched_args.gantt, "print a Gantt chart instead of JSON lines");
    sched->add_option("--seed", sched_args.seed, "RNG seed for the GA algorithms");

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand("bench", "Run an algorithm repeatedly and aggregate");
    std::string bench_algo = "eligible";
    bench->add_option("--graph", bench_args.spec.graph, "STG file path or 'figure1'");
    bench->add_option("--procs", bench_args.spec.processors, "number of processors")
        ->check(CLI::PositiveNumber);
    bench->add_option("--algo", bench_algo, "hlfet|roundrobin|eligible|ga-elitism|ga-proposed");
    bench->add_option("--repeats", bench_args.spec.repeats, "independent runs")
        ->check(CLI::PositiveNumber);
    bench->add_option("--seed", bench_args.spec.seed, "base seed; run i uses seed+i");
    bench->add_option("--out", bench_args.spec.output, "CSV output path (default: stdout)");
    bench->add_option("--perm", bench_args.perm, "round-robin permutation, e.g. 2,1,3");
    bench->add_option("--pop", bench_args.spec.ga.population_size, "GA population size");
    bench->add_option("--generations", bench_args.spec.ga.max_generations, "GA generation cap");
    bench->add_option("--stagnation", bench_args.spec.ga.stagnation_limit,
                      "GA stagnation limit (generations without improvement)");
    bench->add_option("--crossover", bench_args.spec.ga.crossover_rate, "GA crossover rate");
    bench->add_option("--mutation", bench_args.spec.ga.mutation_rate, "GA per-gene mutation rate");
    bench->add_option("--elite", bench_args.spec.ga.elite_count, "GA elite count");

    CompareArgs compare_args;
    CLI::App* cmp = app.add_subcommand("compare", "Run two specs side by side");
    cmp->add_option("--a", compare_args.a, "first spec as key=val,... (see README)")->required();
    cmp->add_option("--b", compare_args.b, "second spec as key=val,...")->required();
    cmp->add_option("--out", compare_args.out, "aggregate CSV path (default: stdout)");
    cmp->add_option("--trace-a", compare_args.trace_a, "per-generation trace CSV for spec a");
    cmp->add_option("--trace-b", compare_args.trace_b, "per-generation trace CSV for spec b");

    try {
        sched_args.seed = default_seed();
        bench_args.spec.seed = default_seed();
        app.parse(argc, argv);
        if (*sched) run_schedule(sched_args);
        if (*bench) {
            bench_args.spec.algorithm = parse_algorithm(bench_algo);
            run_bench(bench_args);
        }
        if (*cmp) run_compare(compare_args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
