#include <doctest.h>

#include <random>
#include <string>

#include "dagsched/heuristics.hpp"
#include "dagsched/schedule.hpp"
#include "dagsched/stg_io.hpp"
#include "support/random_graphs.hpp"

using namespace dagsched;

TEST_SUITE_BEGIN("schedule");

TEST_CASE("decode reproduces the round-robin reference timeline") {
    const TaskGraph g = figure1_graph();
    // identity round-robin over the priority order
    const std::vector<ProcessorId> mapping = {1, 1, 3, 2, 1, 3, 2, 2, 3, 1, 2};
    const Schedule s = decode(g, 3, mapping, g.priority_order());
    CHECK(s.makespan() == 92);
    CHECK(s.assignment_of(1) == Assignment{1, 1, 0, 50});
    CHECK(s.assignment_of(7) == Assignment{7, 2, 51, 71});
    CHECK(s.assignment_of(8) == Assignment{8, 2, 91, 92});
    CHECK(validate_schedule(g, s).empty());
}

TEST_CASE("decode places a single task at time zero") {
    const TaskGraph g = TaskGraph::validate({{1, 7}}, {});
    const Schedule s = decode(g, 1, {1}, {1});
    REQUIRE(s.assignments().size() == 1);
    CHECK(s.assignments()[0] == Assignment{1, 1, 0, 7});
    CHECK(s.makespan() == 7);
}

TEST_CASE("decode makes a cross-processor successor wait") {
    const TaskGraph g = TaskGraph::validate({{1, 3}, {2, 4}}, {{1, 2}});
    const Schedule s = decode(g, 2, {1, 2}, {1, 2});
    CHECK(s.assignment_of(2).start == 3);
    CHECK(s.makespan() == 7);
}

TEST_CASE("decode rejects bad mappings and orders") {
    const TaskGraph g = TaskGraph::validate({{1, 3}, {2, 4}}, {{1, 2}});
    CHECK_THROWS_AS(decode(g, 2, {1}, {1, 2}), IncompleteMapping);
    CHECK_THROWS_AS(decode(g, 2, {1, 3}, {1, 2}), IncompleteMapping);
    CHECK_THROWS_AS(decode(g, 2, {1, 0}, {1, 2}), IncompleteMapping);
    CHECK_THROWS_AS(decode(g, 2, {1, 2}, {2, 1}), OrderNotTopological);
    CHECK_THROWS_AS(decode(g, 2, {1, 2}, {1, 1}), OrderNotTopological);
    CHECK_THROWS_AS(decode(g, 2, {1, 2}, {1}), OrderNotTopological);
}

TEST_CASE("makespan ignores idle processors") {
    const TaskGraph g = TaskGraph::validate({{1, 5}}, {});
    const Schedule s = decode(g, 2, {1}, {1});
    CHECK(s.makespan() == 5);
    CHECK(s.timelines()[1].empty());
    CHECK(Schedule(3, {}).makespan() == 0);
}

TEST_CASE("validate_schedule flags each violation kind") {
    const TaskGraph g = TaskGraph::validate({{1, 3}, {2, 4}}, {{1, 2}});

    SUBCASE("feasible") {
        CHECK(validate_schedule(g, decode(g, 2, {1, 2}, {1, 2})).empty());
    }
    SUBCASE("precedence") {
        const Schedule s(2, {{1, 1, 0, 3}, {2, 2, 1, 5}});
        const auto violations = validate_schedule(g, s);
        REQUIRE(violations.size() == 1);
        CHECK(violations[0].kind == ViolationKind::PrecedenceViolated);
        CHECK(violations[0].tasks == std::vector<TaskId>{1, 2});
    }
    SUBCASE("overlap") {
        const TaskGraph independent = TaskGraph::validate({{1, 3}, {2, 4}}, {});
        const Schedule s(1, {{1, 1, 0, 3}, {2, 1, 2, 6}});
        const auto violations = validate_schedule(independent, s);
        REQUIRE(violations.size() == 1);
        CHECK(violations[0].kind == ViolationKind::Overlap);
        CHECK(violations[0].tasks == std::vector<TaskId>{1, 2});
    }
    SUBCASE("missing task") {
        const Schedule s(2, {{1, 1, 0, 3}});
        const auto violations = validate_schedule(g, s);
        REQUIRE(violations.size() == 1);
        CHECK(violations[0].kind == ViolationKind::MissingTask);
        CHECK(violations[0].tasks == std::vector<TaskId>{2});
    }
    SUBCASE("duplicate task") {
        const Schedule s(2, {{1, 1, 0, 3}, {2, 2, 3, 7}, {2, 1, 3, 7}});
        const auto violations = validate_schedule(g, s);
        REQUIRE(violations.size() == 1);
        CHECK(violations[0].kind == ViolationKind::DuplicateTask);
    }
    SUBCASE("finish mismatch") {
        const Schedule s(2, {{1, 1, 0, 4}, {2, 2, 4, 8}});
        const auto violations = validate_schedule(g, s);
        REQUIRE(violations.size() == 1);
        CHECK(violations[0].kind == ViolationKind::FinishMismatch);
        CHECK(violations[0].tasks == std::vector<TaskId>{1});
    }
    SUBCASE("invalid assignment") {
        const Schedule s(2, {{1, 1, -1, 2}, {2, 5, 3, 7}});
        const auto violations = validate_schedule(g, s);
        REQUIRE(violations.size() == 2);
        CHECK(violations[0].kind == ViolationKind::InvalidAssignment);
        CHECK(violations[1].kind == ViolationKind::InvalidAssignment);
    }
}

TEST_CASE("zero-length tasks may share a timestamp") {
    const TaskGraph g = TaskGraph::validate({{1, 0}, {2, 5}}, {});
    const Schedule s = decode(g, 1, {1, 1}, g.priority_order());
    CHECK(validate_schedule(g, s).empty());
    CHECK(s.makespan() == 5);
}

TEST_CASE("render_gantt lists spans per processor") {
    const TaskGraph g = figure1_graph();
    const std::string gantt = render_gantt(eligible_processor(g, 3).schedule);
    CHECK(gantt.find("P1 | T1[0,50] T6[50,52] T9[52,72]") != std::string::npos);
    CHECK(gantt.find("makespan 79") != std::string::npos);

    const TaskGraph single = TaskGraph::validate({{1, 5}}, {});
    CHECK(render_gantt(decode(single, 2, {1}, {1})) ==
          "P1 | T1[0,5]\nP2 |\nmakespan 5\n");
}

TEST_CASE("jsonl dump uses exact field names in task order") {
    const TaskGraph g = TaskGraph::validate({{1, 3}, {2, 4}}, {{1, 2}});
    const Schedule s = decode(g, 2, {2, 1}, {1, 2});
    CHECK(schedule_to_jsonl(s) ==
          "{\"task\":1,\"processor\":2,\"start\":0,\"finish\":3}\n"
          "{\"task\":2,\"processor\":1,\"start\":3,\"finish\":7}\n");
}

TEST_CASE("single-processor makespan equals total work") {
    std::mt19937_64 rng(42);
    for (int iter = 0; iter < 30; ++iter) {
        std::uniform_int_distribution<int> size(1, 15);
        const TaskGraph g = testsupport::random_dag(rng, size(rng), 0.3);
        const std::vector<ProcessorId> mapping(g.task_count(), 1);
        CHECK(decode(g, 1, mapping, g.priority_order()).makespan() == g.total_exec_time());
    }
}

TEST_CASE("decoded schedules are valid, bounded and deterministic") {
    std::mt19937_64 rng(4242);
    for (int iter = 0; iter < 150; ++iter) {
        std::uniform_int_distribution<int> size(1, 20);
        std::uniform_int_distribution<int> procs(1, 8);
        std::uniform_real_distribution<double> density(0.0, 0.5);
        const TaskGraph g = testsupport::random_dag(rng, size(rng), density(rng));
        const int m = procs(rng);
        const auto mapping = testsupport::random_mapping(rng, g.task_count(), m);

        const Schedule s = decode(g, m, mapping, g.priority_order());
        CHECK(validate_schedule(g, s).empty());
        CHECK(s.makespan() >= g.critical_path_length());
        CHECK(s.makespan() >= (g.total_exec_time() + m - 1) / m);
        CHECK(decode(g, m, mapping, g.priority_order()) == s);
    }
}

TEST_SUITE_END();
