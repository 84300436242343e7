#include <doctest.h>

#include <algorithm>
#include <string>

#include "dagsched/bench.hpp"

using namespace dagsched;

namespace {
const std::string kDataDir = DAGSCHED_TEST_DATA_DIR;
}

TEST_SUITE_BEGIN("bench");

TEST_CASE("algorithm names round-trip") {
    for (Algorithm a : {Algorithm::Hlfet, Algorithm::RoundRobin, Algorithm::Eligible,
                        Algorithm::GaElitism, Algorithm::GaProposed}) {
        CHECK(parse_algorithm(algorithm_name(a)) == a);
    }
    CHECK_THROWS_AS(parse_algorithm("annealing"), ParseError);
}

TEST_CASE("deterministic heuristics repeat identically") {
    ExperimentSpec spec;
    spec.graph = "figure1";
    spec.processors = 3;
    spec.algorithm = Algorithm::Eligible;
    spec.repeats = 10;
    const ExperimentReport report = run_experiment(spec);
    REQUIRE(report.runs.size() == 10);
    for (const RunRecord& r : report.runs) CHECK(r.makespan == 79);
    CHECK(report.aggregates.avg_makespan == 79.0);
    CHECK(report.aggregates.best_makespan == 79);
    CHECK(report.aggregates.avg_cost == doctest::Approx(report.aggregates.best_cost));

    spec.algorithm = Algorithm::RoundRobin;
    const ExperimentReport rr = run_experiment(spec);
    for (const RunRecord& r : rr.runs) CHECK(r.makespan == 92);
}

TEST_CASE("explicit round-robin permutation is honored") {
    ExperimentSpec spec;
    spec.algorithm = Algorithm::RoundRobin;
    spec.perm = {3, 2, 1};
    const ExperimentReport report = run_experiment(spec);
    const auto direct = round_robin(load_graph("figure1"), 3, {3, 2, 1});
    CHECK(report.runs.front().makespan == direct.schedule.makespan());
}

TEST_CASE("harness is transparent for a single GA run") {
    ExperimentSpec spec;
    spec.algorithm = Algorithm::GaProposed;
    spec.repeats = 1;
    spec.seed = 77;
    const ExperimentReport report = run_experiment(spec);

    GAParams params = spec.ga;
    params.seeding = Seeding::EligibleProcessor;
    params.rng_seed = 77;
    const GARunResult direct = evolve(load_graph("figure1"), 3, params);

    REQUIRE(report.runs.size() == 1);
    CHECK(report.runs[0].makespan == direct.best_makespan);
    CHECK(report.runs[0].evaluations == direct.evaluations);
    CHECK(report.runs[0].generations == direct.generations);
    CHECK(report.runs[0].history == direct.history);
}

TEST_CASE("ga seeds are derived per run") {
    ExperimentSpec spec;
    spec.algorithm = Algorithm::GaElitism;
    spec.repeats = 3;
    spec.seed = 100;
    spec.ga.max_generations = 10;
    const ExperimentReport report = run_experiment(spec);

    GAParams params = spec.ga;
    params.seeding = Seeding::RoundRobinPermutations;
    params.rng_seed = 102;
    const GARunResult third = evolve(load_graph("figure1"), 3, params);
    CHECK(report.runs[2].makespan == third.best_makespan);
    CHECK(report.runs[2].history == third.history);
}

TEST_CASE("aggregates recompute from per-run records") {
    std::vector<RunRecord> runs(3);
    runs[0] = {0, 100, 1.0 / 100.0, 500, 10, 0.0, {}};
    runs[1] = {1, 80, 1.0 / 80.0, 700, 14, 0.0, {}};
    runs[2] = {2, 90, 1.0 / 90.0, 300, 6, 0.0, {}};
    const Aggregates agg = compute_aggregates(runs);
    CHECK(agg.best_makespan == 80);
    CHECK(agg.best_cost == 1.0 / 80.0);
    CHECK(agg.best_evaluations == 300);
    CHECK(agg.avg_makespan == doctest::Approx(90.0));
    CHECK(agg.avg_evaluations == doctest::Approx(500.0));
    CHECK(agg.avg_cost == doctest::Approx((1.0 / 100 + 1.0 / 80 + 1.0 / 90) / 3));
}

TEST_CASE("csv header is stable and rows round-trip") {
    CHECK(report_csv_header() ==
          "problem,algorithm,processors,repeats,avg_cost,best_cost,avg_makespan,"
          "best_makespan,avg_evaluations,best_evaluations,seed");

    ExperimentSpec spec;
    spec.algorithm = Algorithm::GaProposed;
    spec.repeats = 4;
    spec.seed = 9;
    spec.ga.max_generations = 12;
    const ExperimentReport report = run_experiment(spec);

    const std::string csv = report_csv({report});
    const auto rows = parse_report_csv(csv);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].problem == "figure1");
    CHECK(rows[0].algorithm == "ga-proposed");
    CHECK(rows[0].processors == 3);
    CHECK(rows[0].repeats == 4);
    CHECK(rows[0].seed == 9);
    CHECK(rows[0].aggregates == report.aggregates);

    CHECK_THROWS_AS(parse_report_csv(""), ParseError);
    CHECK_THROWS_AS(parse_report_csv("nonsense,header\n1,2\n"), ParseError);
    CHECK_THROWS_AS(parse_report_csv(report_csv_header() + "\nfigure1,hlfet,3\n"), ParseError);
}

TEST_CASE("trace csv lists every generation of every run") {
    ExperimentSpec spec;
    spec.algorithm = Algorithm::GaElitism;
    spec.repeats = 2;
    spec.ga.max_generations = 5;
    spec.ga.stagnation_limit = 5;
    const ExperimentReport report = run_experiment(spec);
    const std::string trace = trace_csv(report);

    std::size_t expected_rows = 0;
    for (const RunRecord& r : report.runs) expected_rows += r.history.size();
    CHECK(static_cast<std::size_t>(std::count(trace.begin(), trace.end(), '\n')) ==
          expected_rows + 1);
    CHECK(trace.rfind("run,generation,evaluations,best_makespan,avg_makespan\n", 0) == 0);
    CHECK(trace.find("0,0,50,") != std::string::npos);  // gen 0 after pop-size evaluations
}

TEST_CASE("compare requires matching graph and processors") {
    ExperimentSpec a;
    a.algorithm = Algorithm::Eligible;
    ExperimentSpec b = a;
    b.processors = 4;
    CHECK_THROWS_AS(compare(a, b), MismatchedSpecs);
    b.processors = a.processors;
    b.graph = "other.stg";
    CHECK_THROWS_AS(compare(a, b), MismatchedSpecs);
}

TEST_CASE("compare on figure1 shows the seeding gap") {
    ExperimentSpec a;
    a.algorithm = Algorithm::Eligible;
    a.repeats = 3;
    ExperimentSpec b = a;
    b.algorithm = Algorithm::RoundRobin;
    const ComparisonResult result = compare(a, b);
    CHECK(result.a.aggregates.avg_makespan == 79.0);
    CHECK(result.b.aggregates.avg_makespan == 92.0);

    const auto rows = parse_report_csv(result.table_csv);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].algorithm == "eligible");
    CHECK(rows[1].algorithm == "roundrobin");
}

TEST_CASE("identical specs compare identically") {
    ExperimentSpec a;
    a.algorithm = Algorithm::GaProposed;
    a.repeats = 2;
    a.seed = 4;
    a.ga.max_generations = 8;
    const ComparisonResult result = compare(a, a);
    CHECK(report_csv_row(result.a) == report_csv_row(result.b));
    CHECK(result.trace_a_csv == result.trace_b_csv);
}

TEST_CASE("experiment errors surface as typed exceptions") {
    ExperimentSpec spec;
    spec.graph = kDataDir + "/absent.stg";
    CHECK_THROWS_AS(run_experiment(spec), FileNotFound);
    spec.graph = "figure1";
    spec.repeats = 0;
    CHECK_THROWS_AS(run_experiment(spec), Error);
    spec.repeats = 1;
    spec.processors = 0;
    CHECK_THROWS_AS(run_experiment(spec), Error);
}

TEST_CASE("stg corpus runs end to end") {
    ExperimentSpec spec;
    spec.graph = kDataDir + "/r50_0002.stg";
    spec.processors = 4;
    spec.algorithm = Algorithm::Eligible;
    spec.repeats = 2;
    const ExperimentReport report = run_experiment(spec);
    CHECK(report.aggregates.best_makespan > 0);
    CHECK(report.runs[0].makespan == report.runs[1].makespan);
}

TEST_SUITE_END();
