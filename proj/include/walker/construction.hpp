#pragma once

#include <map>
#include <string>
#include <vector>

#include "walker/geometry.hpp"

namespace walker::construction {

using geometry::Arrangement;
using geometry::Circle;
using geometry::Point2;
using geometry::Segment;

// Canonical vertex labels in tie-breaking order.
const std::vector<std::string>& canonical_label_order();
int label_rank(const std::string& label);

struct Config {
    Point2 anchor{Rat(0), Rat(0)};
    Rat scale{1};
    Rat theta{1}; // compass fill quantity carried on the scribed circles
};

enum class Action { Position, Walk, Draw, Cast };

struct Move {
    int agent;
    Action action;
    Point2 from;
    Point2 to;
};

struct Trace {
    std::vector<Move> moves;
};

struct ConstructionResult {
    std::map<std::string, Point2> labeled_points; // the 11 canonical labels
    std::vector<Segment> inner_string;            // first pinned triangle
    std::vector<Segment> outer_string;            // second pinned triangle
    std::vector<Segment> rays;                    // three doubled medians
    std::vector<Circle> circles;                  // annotations only
    Rat d4_sq;                                    // saved distances, squared
    Rat d5_sq;
    Rat d6_sq;

    std::vector<Segment> all_segments() const;
};

// Executes the agent script deterministically. Three identically programmed
// agents start at the anchor, pin the inner triangle, scribe the circles,
// cast the three rays and pin the outer triangle, marking m last.
std::pair<ConstructionResult, Trace> run_construction(const Config& config = {});

std::map<std::string, Point2> canonical_labels(const ConstructionResult& result);

// Construction-text numbering (1,2,3 inner / 4,5,6 outer) kept as an alias
// table onto the canonical labels.
const std::map<std::string, std::string>& text_label_aliases();

Arrangement arrangement_from(const ConstructionResult& result);

// Open (or closed) trails over arrangement edges, one per agent. For k
// agents a single-pass drawing needs at most 2k odd-degree vertices; throws
// std::invalid_argument("insufficient agents for single-pass drawing")
// otherwise. k == 1 returns one minimal walk covering every edge at least
// once and at most twice, found by exhaustive search over duplication sets.
std::vector<std::vector<int>> plan_routes(const Arrangement& arr, int k);

struct Verdict {
    bool accepted = false;
    std::vector<std::string> problems;
    std::map<std::pair<int, int>, int> edge_counts;
    std::vector<int> vertex_counts;
};

// Checks the at-least-once, at-most-twice rule. Position moves place agents
// before anything is drawn and count for vertex visits only; walk, draw and
// cast moves traverse edges. A move not decomposable into arrangement edges
// throws std::invalid_argument("off-structure move").
Verdict verify_trace(const Trace& trace, const Arrangement& arr);

// Line-oriented export: agent<TAB>action<TAB>x1,y1<TAB>x2,y2 with exact
// rationals; bit-stable for golden files.
std::string export_trace(const Trace& trace);

}  // namespace walker::construction
