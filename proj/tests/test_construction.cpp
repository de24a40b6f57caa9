#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "walker/construction.hpp"

using namespace walker;
using namespace walker::construction;
using geometry::Point2;

namespace {

Point2 P(long x, long y) { return {Rat(x), Rat(y)}; }

// Expected labeled points, recomputed here by direct vector arithmetic as an
// oracle independent of run_construction.
std::map<std::string, Point2> expected_points() {
    std::map<std::string, Point2> e;
    e["0"] = P(0, 0);
    e["t"] = P(0, 5);
    e["1"] = P(-5, -5);
    e["2"] = P(5, -5);
    e["a"] = {(e["1"].x + e["2"].x) / 2, (e["1"].y + e["2"].y) / 2};
    e["b"] = {(e["t"].x + e["1"].x) / 2, (e["t"].y + e["1"].y) / 2};
    e["c"] = {(e["t"].x + e["2"].x) / 2, (e["t"].y + e["2"].y) / 2};
    auto dbl = [](Point2 f, Point2 thru) {
        return Point2{f.x + 2 * (thru.x - f.x), f.y + 2 * (thru.y - f.y)};
    };
    e["3"] = dbl(e["t"], e["a"]);
    e["5"] = dbl(e["1"], e["c"]);
    e["4"] = dbl(e["2"], e["b"]);
    e["m"] = {(e["t"].x + e["1"].x + e["2"].x) / 3, (e["t"].y + e["1"].y + e["2"].y) / 3};
    return e;
}

}  // namespace

TEST_CASE("default construction reproduces the canonical labeled points") {
    auto [result, trace] = run_construction();
    auto want = expected_points();
    REQUIRE(result.labeled_points.size() == 11);
    for (const auto& [label, p] : want) {
        INFO("label ", label);
        CHECK(result.labeled_points.at(label) == p);
    }
    CHECK(result.labeled_points.at("c").x == Rat(5, 2));
    CHECK(result.labeled_points.at("b").x == Rat(-5, 2));
    CHECK(result.labeled_points.at("3") == P(0, -15));
    CHECK(result.labeled_points.at("5") == P(10, 5));
    CHECK(result.labeled_points.at("4") == P(-10, 5));
    CHECK(result.labeled_points.at("m") == Point2{Rat(0), Rat(-5, 3)});
}

TEST_CASE("saved distances") {
    auto [result, trace] = run_construction();
    CHECK(result.d4_sq == 400); // d4 = 20 units
    CHECK(result.d5_sq == 325); // d5 = sqrt(325)
    CHECK(result.d6_sq == 325);
    CHECK(result.d5_sq == result.d6_sq);
}

TEST_CASE("m lies on all three rays and both centroids") {
    auto [result, trace] = run_construction();
    const Point2 m = result.labeled_points.at("m");
    for (const auto& ray : result.rays) CHECK(geometry::on_segment(m, ray));
    CHECK(geometry::polygon_centroid({result.labeled_points.at("t"),
                                      result.labeled_points.at("1"),
                                      result.labeled_points.at("2")}) == m);
    CHECK(geometry::polygon_centroid({result.labeled_points.at("3"),
                                      result.labeled_points.at("4"),
                                      result.labeled_points.at("5")}) == m);
}

TEST_CASE("circles are annotations with diameter 2") {
    auto [result, trace] = run_construction();
    REQUIRE(result.circles.size() == 2);
    CHECK(result.circles[0].diameter == 2);
    CHECK(result.circles[0].center == result.labeled_points.at("1"));
    CHECK(result.circles[1].center == result.labeled_points.at("2"));
}

TEST_CASE("labeled arrangement") {
    auto [result, trace] = run_construction();
    auto arr = arrangement_from(result);
    CHECK(arr.vertices.size() == 11);
    CHECK(arr.edges.size() == 22);
    CHECK(arr.faces.size() == 12);
    for (const auto& label : canonical_label_order()) CHECK(arr.label_index(label) >= 0);
}

TEST_CASE("determinism: identical config, identical outputs") {
    auto [r1, t1] = run_construction();
    auto [r2, t2] = run_construction();
    CHECK(export_trace(t1) == export_trace(t2));
    CHECK(r1.labeled_points == r2.labeled_points);
    CHECK(r1.d4_sq == r2.d4_sq);
}

TEST_CASE("scale covariance") {
    Config cfg;
    cfg.scale = Rat(3, 2);
    auto [scaled, st] = run_construction(cfg);
    auto [unit, ut] = run_construction();
    for (const auto& [label, p] : unit.labeled_points) {
        CHECK(scaled.labeled_points.at(label).x == p.x * Rat(3, 2));
        CHECK(scaled.labeled_points.at(label).y == p.y * Rat(3, 2));
    }
    CHECK(scaled.d4_sq == unit.d4_sq * Rat(9, 4));
    CHECK(scaled.d5_sq == unit.d5_sq * Rat(9, 4));
    auto arr = arrangement_from(scaled);
    CHECK(arr.vertices.size() == 11);
    CHECK(arr.edges.size() == 22);
    CHECK(arr.faces.size() == 12);
    CHECK(st.moves.size() == ut.moves.size());
}

TEST_CASE("construction trace passes the traversal rule") {
    auto [result, trace] = run_construction();
    auto arr = arrangement_from(result);
    auto verdict = verify_trace(trace, arr);
    for (const auto& p : verdict.problems) INFO(p);
    CHECK(verdict.accepted);
    for (const auto& [e, count] : verdict.edge_counts) {
        CHECK(count >= 1);
        CHECK(count <= 2);
    }
}

TEST_CASE("verify_trace rejects an empty trace") {
    auto [result, trace] = run_construction();
    auto arr = arrangement_from(result);
    auto verdict = verify_trace(Trace{}, arr);
    CHECK(!verdict.accepted);
    int zero_edges = 0;
    for (const auto& [e, count] : verdict.edge_counts)
        if (count == 0) ++zero_edges;
    CHECK(zero_edges == 22);
}

TEST_CASE("verify_trace rejects a triple traversal and names the edge") {
    auto [result, trace] = run_construction();
    auto arr = arrangement_from(result);
    const Point2 t = result.labeled_points.at("t");
    const Point2 b = result.labeled_points.at("b");
    Trace bad = trace;
    bad.moves.push_back({4, Action::Walk, t, b});
    bad.moves.push_back({4, Action::Walk, b, t});
    auto verdict = verify_trace(bad, arr);
    CHECK(!verdict.accepted);
    bool named = false;
    for (const auto& p : verdict.problems)
        if (p.find("count 3") != std::string::npos && p.find("b") != std::string::npos)
            named = true;
    CHECK(named);
}

TEST_CASE("verify_trace flags off-structure moves") {
    auto [result, trace] = run_construction();
    auto arr = arrangement_from(result);
    Trace bad;
    bad.moves.push_back({1, Action::Walk, P(0, 0), P(7, 7)});
    CHECK_THROWS_AS(verify_trace(bad, arr), std::invalid_argument);
}

TEST_CASE("three agents draw every edge exactly once") {
    auto [result, trace] = run_construction();
    auto arr = arrangement_from(result);
    auto trails = plan_routes(arr, 3);
    REQUIRE(trails.size() == 3);
    std::map<std::pair<int, int>, int> counts;
    std::size_t traversals = 0;
    for (const auto& trail : trails)
        for (std::size_t i = 0; i + 1 < trail.size(); ++i) {
            REQUIRE(arr.has_edge(trail[i], trail[i + 1]));
            counts[{std::min(trail[i], trail[i + 1]), std::max(trail[i], trail[i + 1])}]++;
            ++traversals;
        }
    CHECK(traversals == arr.edges.size());
    for (const auto& e : arr.edges) CHECK(counts[e] == 1);
}

TEST_CASE("one agent needs a minimal doubled walk") {
    auto [result, trace] = run_construction();
    auto arr = arrangement_from(result);
    auto trails = plan_routes(arr, 1);
    REQUIRE(trails.size() == 1);
    const auto& walk = trails[0];
    std::map<std::pair<int, int>, int> counts;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
        REQUIRE(arr.has_edge(walk[i], walk[i + 1]));
        counts[{std::min(walk[i], walk[i + 1]), std::max(walk[i], walk[i + 1])}]++;
    }
    std::size_t traversals = walk.size() - 1;
    // The figure has six odd-degree vertices; an open walk must double at
    // least two disjoint odd-pair paths. Frozen from the exhaustive search.
    CHECK(traversals == 24);
    for (const auto& e : arr.edges) {
        CHECK(counts[e] >= 1);
        CHECK(counts[e] <= 2);
    }
}

TEST_CASE("plan_routes corner cases") {
    auto tri = geometry::build_arrangement(
        {{P(0, 0), P(2, 0)}, {P(2, 0), P(0, 2)}, {P(0, 2), P(0, 0)}});
    SUBCASE("triangle with one agent is an Eulerian circuit") {
        auto trails = plan_routes(tri, 1);
        REQUIRE(trails.size() == 1);
        CHECK(trails[0].size() == 4);
        CHECK(trails[0].front() == trails[0].back());
    }
    SUBCASE("too many odd vertices for the agent count") {
        auto [result, trace] = run_construction();
        auto arr = arrangement_from(result);
        CHECK_THROWS_WITH_AS(plan_routes(arr, 2),
                             "insufficient agents for single-pass drawing",
                             std::invalid_argument);
    }
}

TEST_CASE("trace export format") {
    auto [result, trace] = run_construction();
    auto text = export_trace(trace);
    CHECK(text.find("1\tposition\t0,0\t0,5\n") == 0);
    CHECK(text.find("\tcast\t0,5\t0,-15\n") != std::string::npos);
    CHECK(text.find("-5/3") != std::string::npos); // m printed as exact rational
}

TEST_CASE("text label aliases map onto canonical labels") {
    const auto& alias = text_label_aliases();
    CHECK(alias.at("1") == "t");
    CHECK(alias.at("4") == "3");
    CHECK(alias.at("6") == "4");
}
