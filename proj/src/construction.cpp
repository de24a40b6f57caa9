#include "walker/construction.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace walker::construction {

const std::vector<std::string>& canonical_label_order() {
    static const std::vector<std::string> order = {"0", "1", "2", "3", "4", "5",
                                                   "a", "b", "c", "m", "t"};
    return order;
}

int label_rank(const std::string& label) {
    const auto& order = canonical_label_order();
    auto it = std::find(order.begin(), order.end(), label);
    if (it == order.end()) throw std::invalid_argument("unknown label: " + label);
    return static_cast<int>(it - order.begin());
}

std::vector<Segment> ConstructionResult::all_segments() const {
    std::vector<Segment> out;
    out.insert(out.end(), inner_string.begin(), inner_string.end());
    out.insert(out.end(), outer_string.begin(), outer_string.end());
    out.insert(out.end(), rays.begin(), rays.end());
    return out;
}

std::pair<ConstructionResult, Trace> run_construction(const Config& config) {
    if (config.scale <= 0) throw std::invalid_argument("scale must be positive");

    auto at = [&](long ux_num, long ux_den, long uy_num, long uy_den) -> Point2 {
        return {config.anchor.x + config.scale * Rat(ux_num, ux_den),
                config.anchor.y + config.scale * Rat(uy_num, uy_den)};
    };
    const Point2 p0 = at(0, 1, 0, 1);
    const Point2 pt = at(0, 1, 5, 1);
    const Point2 p1 = at(-5, 1, -5, 1);
    const Point2 p2 = at(5, 1, -5, 1);
    const Point2 pa = geometry::midpoint({p1, p2});
    const Point2 pb = geometry::midpoint({pt, p1});
    const Point2 pc = geometry::midpoint({pt, p2});
    const Point2 p3 = geometry::extend_double(pt, pa);
    const Point2 p5 = geometry::extend_double(p1, pc);
    const Point2 p4 = geometry::extend_double(p2, pb);
    const Point2 pm = geometry::polygon_centroid({pt, p1, p2});

    ConstructionResult r;
    r.labeled_points = {{"0", p0}, {"1", p1}, {"2", p2}, {"3", p3}, {"4", p4},
                        {"5", p5}, {"a", pa}, {"b", pb}, {"c", pc}, {"m", pm},
                        {"t", pt}};
    r.inner_string = {{pt, p1}, {p1, p2}, {p2, pt}};
    r.outer_string = {{p3, p4}, {p4, p5}, {p5, p3}};
    r.rays = {{pt, p3}, {p1, p5}, {p2, p4}};
    r.circles = {{p1, 2 * config.scale, config.theta}, {p2, 2 * config.scale, config.theta}};
    r.d4_sq = geometry::squared_distance(pt, p3);
    r.d5_sq = geometry::squared_distance(p1, p5);
    r.d6_sq = geometry::squared_distance(p2, p4);

    // Choreography: agent 1 walks the strings and casts the rays, agents 2
    // and 3 place the lower pins, mark the midpoints b and c, and agent 2
    // marks m. Every figure edge ends up traversed once or twice.
    Trace tr;
    auto move = [&](int agent, Action act, const Point2& from, const Point2& to) {
        tr.moves.push_back({agent, act, from, to});
    };
    move(1, Action::Position, p0, pt);
    move(2, Action::Position, p0, pa);
    move(2, Action::Position, pa, p1);
    move(3, Action::Position, p0, pa);
    move(3, Action::Position, pa, p2);
    // first string, pinned at t, 1, 2
    move(1, Action::Draw, pt, p1);
    move(1, Action::Draw, p1, p2);
    move(1, Action::Draw, p2, pt);
    // ray through a, doubled to 3
    move(1, Action::Cast, pt, p3);
    // midpoints marked while walking along the string
    move(3, Action::Walk, p2, pc);
    move(2, Action::Walk, p1, pb);
    // rays through c and b, doubled to 5 and 4
    move(1, Action::Walk, p3, p1);
    move(1, Action::Cast, p1, p5);
    move(1, Action::Walk, p5, p2);
    move(1, Action::Cast, p2, p4);
    // second string, pinned at 3, 4, 5
    move(1, Action::Draw, p4, p5);
    move(1, Action::Draw, p5, p3);
    move(1, Action::Draw, p3, p4);
    // mark the venter
    move(2, Action::Walk, pb, pm);

    return {std::move(r), std::move(tr)};
}

std::map<std::string, Point2> canonical_labels(const ConstructionResult& result) {
    return result.labeled_points;
}

const std::map<std::string, std::string>& text_label_aliases() {
    // Construction-text numbering -> canonical label.
    static const std::map<std::string, std::string> aliases = {
        {"1", "t"}, {"2", "1"}, {"3", "2"}, {"4", "3"}, {"5", "5"}, {"6", "4"}};
    return aliases;
}

Arrangement arrangement_from(const ConstructionResult& result) {
    std::map<std::string, Point2> labels(result.labeled_points.begin(),
                                         result.labeled_points.end());
    return geometry::build_arrangement(result.all_segments(),
                                       {result.labeled_points.at("0")}, labels);
}

namespace {

struct Multigraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;   // may contain duplicates
    std::vector<std::vector<int>> incidence;  // vertex -> edge ids

    explicit Multigraph(int vertices) : n(vertices), incidence(vertices) {}

    void add(int u, int v) {
        incidence[u].push_back(static_cast<int>(edges.size()));
        incidence[v].push_back(static_cast<int>(edges.size()));
        edges.push_back({u, v});
    }

    std::vector<int> odd_vertices() const {
        std::vector<int> odd;
        for (int v = 0; v < n; ++v)
            if (incidence[v].size() % 2 == 1) odd.push_back(v);
        return odd;
    }

    // Euler circuit/trail as a vertex-and-edge walk from `start`.
    // Precondition: 0 or 2 odd vertices, connected edge set.
    std::vector<std::pair<int, int>> euler_walk(int start) const {
        std::vector<bool> used(edges.size(), false);
        std::vector<std::size_t> next(n, 0);
        std::vector<std::pair<int, int>> walk; // (vertex, edge taken to reach it)
        std::vector<std::pair<int, int>> stack{{start, -1}};
        while (!stack.empty()) {
            auto [v, via] = stack.back();
            if (next[v] < incidence[v].size()) {
                int e = incidence[v][next[v]++];
                if (used[e]) continue;
                used[e] = true;
                int w = edges[e].first == v ? edges[e].second : edges[e].first;
                stack.push_back({w, e});
            } else {
                walk.push_back({v, via});
                stack.pop_back();
            }
        }
        std::reverse(walk.begin(), walk.end());
        return walk;
    }
};

Multigraph to_multigraph(const Arrangement& arr) {
    Multigraph g(static_cast<int>(arr.vertices.size()));
    for (const auto& [u, v] : arr.edges) g.add(u, v);
    return g;
}

std::vector<int> minimal_duplication(const Arrangement& arr) {
    // Smallest set of doubled edges whose addition leaves at most two
    // odd-degree vertices; searched exhaustively by increasing size.
    const auto base = to_multigraph(arr);
    const int m = static_cast<int>(base.edges.size());
    std::vector<int> degree(base.n);
    for (const auto& [u, v] : base.edges) {
        degree[u]++;
        degree[v]++;
    }
    std::vector<int> chosen;
    std::vector<int> best;
    bool found = false;
    auto feasible = [&](const std::vector<int>& dup) {
        std::vector<int> deg = degree;
        for (int e : dup) {
            deg[base.edges[e].first]++;
            deg[base.edges[e].second]++;
        }
        int odd = 0;
        for (int v = 0; v < base.n; ++v) odd += deg[v] % 2;
        return odd <= 2;
    };
    for (int size = 0; size <= m && !found; ++size) {
        std::vector<int> pick;
        auto rec = [&](auto&& self, int from) -> void {
            if (found) return;
            if (static_cast<int>(pick.size()) == size) {
                if (feasible(pick)) {
                    best = pick;
                    found = true;
                }
                return;
            }
            for (int e = from; e < m && !found; ++e) {
                pick.push_back(e);
                self(self, e + 1);
                pick.pop_back();
            }
        };
        rec(rec, 0);
    }
    return best;
}

}  // namespace

std::vector<std::vector<int>> plan_routes(const Arrangement& arr, int k) {
    if (k < 1) throw std::invalid_argument("agent count must be positive");
    if (to_multigraph(arr).n > 0 && arr.connected_components() != 1)
        throw std::invalid_argument("arrangement not connected");

    Multigraph g = to_multigraph(arr);
    auto odd = g.odd_vertices();

    if (k == 1) {
        Multigraph doubled = g;
        for (int e : minimal_duplication(arr))
            doubled.add(g.edges[e].first, g.edges[e].second);
        auto odd2 = doubled.odd_vertices();
        int start = odd2.empty() ? 0 : odd2.front();
        auto walk = doubled.euler_walk(start);
        std::vector<int> trail;
        for (const auto& [v, via] : walk) trail.push_back(v);
        return {trail};
    }

    if (static_cast<int>(odd.size()) > 2 * k)
        throw std::invalid_argument("insufficient agents for single-pass drawing");

    // Pair odd vertices with virtual edges; the Euler circuit of the
    // augmented graph splits at the virtual edges into open trails. Paired
    // vertices are distinct, so no two virtual edges are circuit-adjacent.
    const int real_edges = static_cast<int>(g.edges.size());
    for (std::size_t i = 0; i + 1 < odd.size(); i += 2) g.add(odd[i], odd[i + 1]);
    auto walk = g.euler_walk(odd.empty() ? 0 : odd.front());

    if (odd.empty()) {
        std::vector<int> trail;
        for (const auto& [v, via] : walk) trail.push_back(v);
        return {trail};
    }
    std::vector<std::vector<int>> trails;
    std::vector<int> current;
    for (const auto& [v, via] : walk) {
        if (via >= real_edges) {
            if (current.size() > 1) trails.push_back(current);
            current.clear();
        }
        current.push_back(v);
    }
    if (current.size() > 1) trails.push_back(current);
    // The walk is a circuit; the tail wraps around to the head trail.
    if (!trails.empty() && walk.front().first == trails.back().back() &&
        trails.size() > static_cast<std::size_t>(odd.size() / 2)) {
        auto tail = trails.back();
        trails.pop_back();
        tail.insert(tail.end(), trails.front().begin() + 1, trails.front().end());
        trails.front() = tail;
    }
    return trails;
}

namespace {

// Splits a straight move into consecutive arrangement vertices along it.
std::vector<int> decompose_move(const Move& mv, const Arrangement& arr) {
    if (mv.from == mv.to) {
        int v = arr.vertex_index(mv.from);
        if (v < 0) throw std::invalid_argument("off-structure move");
        return {v};
    }
    Segment s{mv.from, mv.to};
    std::vector<int> chain;
    for (std::size_t i = 0; i < arr.vertices.size(); ++i)
        if (geometry::on_segment(arr.vertices[i], s)) chain.push_back(static_cast<int>(i));
    const Point2 dir{s.b.x - s.a.x, s.b.y - s.a.y};
    std::sort(chain.begin(), chain.end(), [&](int l, int r) {
        const Point2 &pl = arr.vertices[l], &pr = arr.vertices[r];
        return (pl.x - s.a.x) * dir.x + (pl.y - s.a.y) * dir.y <
               (pr.x - s.a.x) * dir.x + (pr.y - s.a.y) * dir.y;
    });
    if (chain.size() < 2 || arr.vertices[chain.front()] != mv.from ||
        arr.vertices[chain.back()] != mv.to)
        throw std::invalid_argument("off-structure move");
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        if (!arr.has_edge(chain[i], chain[i + 1]))
            throw std::invalid_argument("off-structure move");
    return chain;
}

}  // namespace

Verdict verify_trace(const Trace& trace, const Arrangement& arr) {
    Verdict verdict;
    verdict.vertex_counts.assign(arr.vertices.size(), 0);
    for (const auto& e : arr.edges) verdict.edge_counts[e] = 0;

    std::map<int, Point2> agent_position;
    for (const auto& mv : trace.moves) {
        auto it = agent_position.find(mv.agent);
        if (it != agent_position.end() && !(it->second == mv.from))
            verdict.problems.push_back("agent " + std::to_string(mv.agent) +
                                       " discontinuity at " + geometry::to_string(mv.from));
        agent_position[mv.agent] = mv.to;

        auto chain = decompose_move(mv, arr);
        for (int v : chain) verdict.vertex_counts[v]++;
        if (mv.action != Action::Position)
            for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
                int u = std::min(chain[i], chain[i + 1]);
                int v = std::max(chain[i], chain[i + 1]);
                verdict.edge_counts[{u, v}]++;
            }
    }

    auto vertex_name = [&](int v) {
        return arr.labels[v].empty() ? geometry::to_string(arr.vertices[v]) : arr.labels[v];
    };
    for (const auto& [e, count] : verdict.edge_counts)
        if (count == 0 || count > 2)
            verdict.problems.push_back("edge " + vertex_name(e.first) + "-" +
                                       vertex_name(e.second) + " count " +
                                       std::to_string(count));
    for (std::size_t v = 0; v < verdict.vertex_counts.size(); ++v)
        if (verdict.vertex_counts[v] == 0)
            verdict.problems.push_back("vertex " + vertex_name(static_cast<int>(v)) +
                                       " unvisited");
    verdict.accepted = verdict.problems.empty();
    return verdict;
}

std::string export_trace(const Trace& trace) {
    static const char* names[] = {"position", "walk", "draw", "cast"};
    std::ostringstream out;
    for (const auto& mv : trace.moves)
        out << mv.agent << '\t' << names[static_cast<int>(mv.action)] << '\t'
            << geometry::to_string(mv.from) << '\t' << geometry::to_string(mv.to) << '\n';
    return out.str();
}

}  // namespace walker::construction
