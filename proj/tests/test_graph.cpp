#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "walker/graph.hpp"

using namespace walker;
using namespace walker::construction;
using namespace walker::graph;

namespace {

LabeledGraph walker_graph() {
    auto [result, trace] = run_construction();
    return LabeledGraph::from_construction(arrangement_from(result));
}

// Full-enumeration dominating-set oracle over all subsets; independent of
// the increasing-size search in the implementation.
std::size_t dominating_oracle_min_size(const LabeledGraph& g) {
    const auto& labels = g.labels();
    const int n = static_cast<int>(labels.size());
    std::vector<uint32_t> closed(n);
    for (int v = 0; v < n; ++v) {
        closed[v] = 1u << v;
        for (const auto& w : g.undirected_neighbors(labels[v])) {
            auto it = std::find(labels.begin(), labels.end(), w);
            closed[v] |= 1u << (it - labels.begin());
        }
    }
    const uint32_t all = (1u << n) - 1;
    std::size_t best = n;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        uint32_t covered = 0;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) covered |= closed[v];
        if (covered == all)
            best = std::min<std::size_t>(best, __builtin_popcount(mask));
    }
    return best;
}

}  // namespace

TEST_CASE("walker graph node and edge counts are derived, not hardcoded") {
    auto g = walker_graph();
    CHECK(g.node_count() == 11);
    CHECK(g.edge_count() == 22);
}

TEST_CASE("directed structure around the venter") {
    auto g = walker_graph();
    CHECK(g.out_neighbors("m") == std::vector<std::string>{"a", "b", "c"});
    CHECK(g.in_neighbors("m") == std::vector<std::string>{"0", "1", "2"});
    CHECK(g.has_edge("m", "a"));
    CHECK(!g.has_edge("a", "m"));
    CHECK(g.has_edge("0", "m"));
    CHECK(!g.has_edge("m", "0"));
}

TEST_CASE("node shapes") {
    auto g = walker_graph();
    for (const auto& l : {"a", "b", "c", "m", "0"})
        CHECK(g.kind(l) == NodeKind::Diamond);
    for (const auto& l : {"1", "2", "3", "4", "5", "t"})
        CHECK(g.kind(l) == NodeKind::Circle);
}

TEST_CASE("has_edge examples") {
    auto g = walker_graph();
    CHECK(!g.has_edge("0", "3"));
    for (const auto& l : g.labels()) CHECK(!g.has_edge(l, l));
    CHECK_THROWS_AS(g.has_edge("z", "m"), std::invalid_argument);
}

TEST_CASE("matrix and list stay coherent") {
    auto g = walker_graph();
    for (const auto& u : g.labels())
        for (const auto& v : g.labels()) {
            auto row = g.adjacency_list(u);
            bool in_list = std::find(row.begin(), row.end(), v) != row.end();
            CHECK(g.has_edge(u, v) == in_list);
        }
}

TEST_CASE("traversals visit everything within the counter bounds") {
    auto g = walker_graph();
    const std::size_t n = g.node_count(), m = g.edge_count();
    for (const auto& start : g.labels())
        for (auto mode : {TraversalMode::BreadthFirst, TraversalMode::DepthFirst}) {
            auto report = g.traverse(start, mode);
            CHECK(report.visit_order.size() == n);
            CHECK(report.node_inspections <= n);
            CHECK(report.edge_inspections <= 2 * m);
            CHECK(report.visit_order.front() == start);
        }
}

TEST_CASE("traversal corner cases") {
    auto single = LabeledGraph::with_nodes({"v"});
    auto report = single.traverse("v", TraversalMode::BreadthFirst);
    CHECK(report.visit_order == std::vector<std::string>{"v"});
    CHECK(report.edge_inspections == 0);
}

TEST_CASE("add_edge") {
    auto g = walker_graph();
    CHECK(g.undirected_degree("0") == 2);
    g.add_edge("0", "a", false);
    CHECK(g.undirected_degree("0") == 3);
    CHECK_THROWS_WITH_AS(g.add_edge("m", "m", false), "self-loop rejected",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(g.add_edge("0", "a", false), "edge exists", std::invalid_argument);
    g.add_edge("4", "5", false);
    CHECK(g.has_edge("4", "5"));
    CHECK(g.has_edge("5", "4"));
}

TEST_CASE("hamiltonian path witness exists and re-validates") {
    auto g = walker_graph();
    auto path = g.hamiltonian_path();
    REQUIRE(path.has_value());
    CHECK(path->size() == g.node_count());
    std::set<std::string> uniq(path->begin(), path->end());
    CHECK(uniq.size() == path->size());
    for (std::size_t i = 0; i + 1 < path->size(); ++i) {
        auto nbrs = g.undirected_neighbors((*path)[i]);
        CHECK(std::find(nbrs.begin(), nbrs.end(), (*path)[i + 1]) != nbrs.end());
    }
}

TEST_CASE("hamiltonian path corner cases") {
    SUBCASE("path graph endpoints to endpoint") {
        auto g = LabeledGraph::with_nodes({"p", "q", "r"});
        g.add_edge("p", "q", false);
        g.add_edge("q", "r", false);
        auto path = g.hamiltonian_path();
        REQUIRE(path.has_value());
        CHECK(*path == std::vector<std::string>{"p", "q", "r"});
    }
    SUBCASE("star with four leaves has none") {
        auto g = LabeledGraph::with_nodes({"hub", "l1", "l2", "l3", "l4"});
        for (const auto& leaf : {"l1", "l2", "l3", "l4"}) g.add_edge("hub", leaf, false);
        CHECK(!g.hamiltonian_path().has_value());
    }
}

TEST_CASE("minimum dominating set is {a,t}") {
    auto g = walker_graph();
    auto dom = g.min_dominating_set();
    CHECK(dom == std::vector<std::string>{"a", "t"});
    CHECK(dominating_oracle_min_size(g) == 2);
    // Re-validate: every node is in the set or adjacent to a member.
    for (const auto& v : g.labels()) {
        bool dominated = false;
        for (const auto& d : dom) {
            if (d == v) dominated = true;
            auto nbrs = g.undirected_neighbors(d);
            if (std::find(nbrs.begin(), nbrs.end(), v) != nbrs.end()) dominated = true;
        }
        CHECK(dominated);
    }
}

TEST_CASE("dominating set corner cases") {
    SUBCASE("complete graph") {
        auto g = LabeledGraph::with_nodes({"k1", "k2", "k3", "k4"});
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j)
                g.add_edge("k" + std::to_string(i), "k" + std::to_string(j), false);
        CHECK(g.min_dominating_set().size() == 1);
    }
    SUBCASE("edgeless graph") {
        auto g = LabeledGraph::with_nodes({"x", "y", "z"});
        CHECK(g.min_dominating_set().size() == 3);
    }
}

TEST_CASE("shortest paths") {
    auto g = walker_graph();
    // Three hops; canonical tie-breaking picks the path through vertex 1.
    CHECK(g.shortest_path("0", "3") == std::vector<std::string>{"0", "m", "1", "3"});
    CHECK(g.shortest_path("m", "m") == std::vector<std::string>{"m"});
    CHECK(g.shortest_path("4", "5") == std::vector<std::string>{"4", "t", "5"});
    auto lonely = LabeledGraph::with_nodes({"x", "y"});
    CHECK_THROWS_WITH_AS(lonely.shortest_path("x", "y"), "disconnected",
                         std::invalid_argument);
}

TEST_CASE("completeness check stays within the pairwise bound") {
    auto [result, trace] = run_construction();
    auto arr = arrangement_from(result);
    auto g = LabeledGraph::from_construction(arr);
    auto verdict = verify_trace(trace, arr);
    auto report = g.completeness_check(verdict, arr);
    CHECK(report.complete);
    CHECK(report.pair_inspections <= g.node_count() * g.node_count());
}

TEST_CASE("graph export format") {
    auto g = walker_graph();
    auto text = g.export_text();
    CHECK(text.find("m: >a,>b,>c\n") != std::string::npos);
    CHECK(text.find("0: >m,t\n") != std::string::npos);
    // Stable: exporting twice is byte-identical.
    CHECK(text == g.export_text());
}

TEST_CASE("unlabeled arrangement is rejected") {
    auto arr = geometry::build_arrangement(
        {{{Rat(0), Rat(0)}, {Rat(1), Rat(0)}}, {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}});
    CHECK_THROWS_AS(LabeledGraph::from_construction(arr), std::invalid_argument);
}
