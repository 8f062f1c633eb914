#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "fixtures.hpp"
#include "rainbow_planar/codec.hpp"
#include "rainbow_planar/extremal.hpp"
#include "rainbow_planar/planarity.hpp"
#include "rainbow_planar/rainbow.hpp"

using namespace rpt;
using namespace rpt::testing;

namespace {

nlohmann::json golden() {
    std::ifstream in(RPT_TEST_DATA "/golden.json");
    return nlohmann::json::parse(in);
}

std::size_t reduced_planar_count(int n, int m) {
    return golden()["atlas_counts"].at(std::to_string(n) + "," + std::to_string(m)).at("reduced_planar");
}

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& contents)
        : path(std::filesystem::temp_directory_path() / ("rpt_" + std::to_string(std::rand()) + ".g6")) {
        std::ofstream(path) << contents;
    }
    ~TempFile() { std::filesystem::remove(path); }
};

void check_achiever(const ExtremalReport& report) {
    REQUIRE(report.achiever);
    const ColoredGraph& cg = *report.achiever;
    CHECK(cg.graph().order() == report.n);
    CHECK(static_cast<int>(cg.graph().size()) == report.value);
    CHECK(is_proper(cg));
    CHECK(is_planar(cg.graph()).planar);
    CHECK_FALSE(find_rainbow_path(cg, PathSpec(report.k)).has_value());
}

}  // namespace

TEST_CASE("reduced graph examples") {
    CHECK(is_reduced(Graph::complete(4)));
    CHECK_FALSE(is_reduced(path(3)));
    CHECK_FALSE(is_reduced(cycle(4)));
    CHECK(is_reduced(complete_bipartite(2, 3)));
}

TEST_CASE("candidate stream examples") {
    auto k4 = enumerate_candidates(4, 6, {});
    REQUIRE(k4.size() == 1);
    CHECK(k4[0] == Graph::complete(4));
    CHECK(enumerate_candidates(4, 7, {}).empty());
    CHECK(enumerate_candidates(5, 8, {.reduced = true, .planar = true}).size() == reduced_planar_count(5, 8));
    CHECK(enumerate_candidates(4, 6, {}).source() == "built-in");
    CHECK_THROWS_AS(enumerate_candidates(9, 13, {}), EnumerationError);
}

TEST_CASE("graph6 file source") {
    std::string lines = ">>graph6<<C~\n";
    for (const Graph& g : enumerate_candidates(6, 10, {})) {
        lines += encode_graph6(g) + "\n";
    }
    TempFile file(lines);
    CandidateSource source{file.path.string()};
    CHECK(enumerate_candidates(6, 10, {}, source).size() == enumerate_candidates(6, 10, {}).size());
    CHECK(enumerate_candidates(4, 6, {}, source).size() == 1);
    CHECK(enumerate_candidates(6, 10, {.reduced = true, .planar = true}, source).size() == reduced_planar_count(6, 10));
    CHECK(enumerate_candidates(6, 10, {}, source).source() == "graph6:" + file.path.string());

    ExtremalOptions options;
    options.source = source;
    auto from_file = refute_level(6, 10, 5, options);
    auto builtin = refute_level(6, 10, 5, {});
    CHECK(from_file.pass());
    CHECK(from_file.unsat == builtin.unsat);

    TempFile bad("C~\nC\x7f\n");
    CHECK_THROWS_AS(enumerate_candidates(4, 6, {}, CandidateSource{bad.path.string()}), EnumerationError);
    CHECK_THROWS_AS(enumerate_candidates(4, 6, {}, CandidateSource{"/nonexistent/file.g6"}), EnumerationError);
}

TEST_CASE("refute_level examples") {
    auto vacuous = refute_level(4, 7, 5, {});
    CHECK(vacuous.pass());
    CHECK(vacuous.candidates == 0);

    for (auto [n, m] : {std::pair{5, 8}, std::pair{6, 10}, std::pair{7, 11}}) {
        auto level = refute_level(n, m, 5, {});
        CAPTURE(n);
        CHECK(level.pass());
        CHECK(level.exhaustive);
        CHECK(level.reductions_applied);
        CHECK(level.unsat == reduced_planar_count(n, m));
        CHECK(level.planar == level.unsat);
    }

    auto sat = refute_level(6, 9, 5, {}, false);
    CHECK_FALSE(sat.pass());
    CHECK(sat.sat > 0);
    REQUIRE(sat.first_sat);
    CHECK_FALSE(find_rainbow_path(*sat.first_sat, PathSpec(5)).has_value());
}

TEST_CASE("budget overruns fail the level") {
    ExtremalOptions options;
    options.budget_nodes = 1;
    auto level = refute_level(6, 10, 5, options);
    CHECK(level.budget_exceeded > 0);
    CHECK_FALSE(level.pass());
    auto report = compute_extremal(6, 5, options);
    CHECK_FALSE(report.complete);
}

// The reduced-graph filter must never change a verdict above the bound.
TEST_CASE("reduction filter agrees with the unfiltered search") {
    for (int n = 4; n <= 6; ++n) {
        for (int m = 3 * n / 2 + 1; m <= 3 * n - 6; ++m) {
            for (int k : {4, 5}) {
                auto with = refute_level(n, m, k, {}, true);
                auto without = refute_level(n, m, k, {}, false);
                CAPTURE(n);
                CAPTURE(m);
                CAPTURE(k);
                CHECK(with.pass() == without.pass());
                CHECK(with.planar <= without.planar);
            }
        }
    }
}

TEST_CASE("a SAT level implies a SAT level one edge lower") {
    for (int n = 3; n <= 6; ++n) {
        for (int k : {3, 4, 5}) {
            for (int m = 1; m <= 3 * n - 6; ++m) {
                if (!find_level_witness(n, m, k, {}, false).first_sat) {
                    continue;
                }
                CAPTURE(n);
                CAPTURE(m);
                CHECK(find_level_witness(n, m - 1, k, {}, false).first_sat);
            }
        }
    }
}

TEST_CASE("reports do not depend on the worker count") {
    ExtremalOptions serial;
    ExtremalOptions parallel;
    parallel.jobs = 8;
    CHECK(to_json(refute_level(7, 11, 5, serial)).dump() == to_json(refute_level(7, 11, 5, parallel)).dump());
    CHECK(to_json(refute_level(7, 11, 4, serial, false)).dump() ==
          to_json(refute_level(7, 11, 4, parallel, false)).dump());
    CHECK(to_json(find_level_witness(7, 10, 5, serial, false)).dump() ==
          to_json(find_level_witness(7, 10, 5, parallel, false)).dump());
    CHECK(to_json(compute_extremal(7, 5, serial)).dump() == to_json(compute_extremal(7, 5, parallel)).dump());
}

TEST_CASE("extremal values") {
    for (int n = 4; n <= 7; ++n) {
        auto report = compute_extremal(n, 5);
        CAPTURE(n);
        CHECK(report.complete);
        CHECK(report.value == 3 * n / 2);
        check_achiever(report);
        if (report.value == 3 * n - 6) {
            CHECK_FALSE(report.refuted);
            continue;
        }
        REQUIRE(report.refuted);
        CHECK(report.refuted->pass());
        CHECK(report.refuted->m == report.value + 1);
    }
    for (int n = 3; n <= 6; ++n) {
        auto report = compute_extremal(n, 3);
        CHECK(report.value == n / 2);
        check_achiever(report);
    }
    auto p4 = compute_extremal(4, 4);
    CHECK(p4.value == 6);
    check_achiever(p4);
    REQUIRE(p4.achiever);
    CHECK(p4.achiever->colors_used() == 3);
    CHECK(p4.vacuous_reason.size() > 0);
    CHECK_FALSE(p4.refuted);

    auto k4 = compute_extremal(4, 5);
    REQUIRE(k4.achiever);
    CHECK(k4.achiever->graph() == Graph::complete(4));
    auto five = compute_extremal(5, 5);
    CHECK(five.value == 7);
    check_achiever(five);

    auto json = to_json(compute_extremal(5, 5));
    CHECK(json["value"] == 7);
    CHECK(json["refuted_level"]["counts"]["unsat"] == reduced_planar_count(5, 8));
}

TEST_CASE("eight vertices, thirteen edges") {
    auto level = refute_level(8, 13, 5, {});
    CHECK(level.pass());
    CHECK(level.exhaustive);
    CHECK(level.candidates == 1557);
    CHECK(level.unsat == level.planar);
}
