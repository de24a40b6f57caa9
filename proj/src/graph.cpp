#include "walker/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace walker::graph {

namespace {

// Canonical labels sort by canonical rank; anything else after, by text.
int soft_rank(const std::string& label) {
    const auto& order = construction::canonical_label_order();
    auto it = std::find(order.begin(), order.end(), label);
    return it == order.end() ? static_cast<int>(order.size())
                             : static_cast<int>(it - order.begin());
}

bool label_less(const std::string& l, const std::string& r) {
    const int rl = soft_rank(l), rr = soft_rank(r);
    if (rl != rr) return rl < rr;
    return l < r;
}

}  // namespace

int LabeledGraph::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw std::invalid_argument("unknown label: " + label);
    return static_cast<int>(it - labels_.begin());
}

LabeledGraph LabeledGraph::from_construction(const geometry::Arrangement& arr) {
    LabeledGraph g;
    for (std::size_t i = 0; i < arr.vertices.size(); ++i)
        if (arr.labels[i].empty())
            throw std::invalid_argument("unlabeled vertex at " +
                                        geometry::to_string(arr.vertices[i]));

    g.labels_ = arr.labels;
    std::sort(g.labels_.begin(), g.labels_.end(), label_less);
    const int n = static_cast<int>(g.labels_.size());
    g.kinds_.resize(n);
    for (int i = 0; i < n; ++i) {
        const std::string& l = g.labels_[i];
        // Derived vertices are diamonds, endpoints and scribes circles.
        g.kinds_[i] = (l == "a" || l == "b" || l == "c" || l == "m" || l == "0")
                          ? NodeKind::Diamond
                          : NodeKind::Circle;
    }
    g.matrix_.assign(n, std::vector<uint8_t>(n, 0));
    g.adjacency_.assign(n, {});
    g.undirected_adj_.assign(n, {});

    // Median edges around m carry direction: into m from 0, 1, 2 and out of
    // m toward a, b, c. Everything else is undirected.
    const std::set<std::string> into_m = {"0", "1", "2"};
    const std::set<std::string> out_of_m = {"a", "b", "c"};
    for (const auto& [ui, vi] : arr.edges) {
        std::string u = arr.labels[ui], v = arr.labels[vi];
        if (u == "m" || v == "m") {
            std::string other = u == "m" ? v : u;
            if (into_m.count(other)) {
                g.add_edge(other, "m", true);
                continue;
            }
            if (out_of_m.count(other)) {
                g.add_edge("m", other, true);
                continue;
            }
        }
        g.add_edge(std::min(u, v, label_less), std::max(u, v, label_less), false);
    }
    return g;
}

LabeledGraph LabeledGraph::with_nodes(std::vector<std::string> labels) {
    LabeledGraph g;
    std::sort(labels.begin(), labels.end(), label_less);
    g.labels_ = std::move(labels);
    const int n = static_cast<int>(g.labels_.size());
    g.kinds_.assign(n, NodeKind::Circle);
    g.matrix_.assign(n, std::vector<uint8_t>(n, 0));
    g.adjacency_.assign(n, {});
    g.undirected_adj_.assign(n, {});
    return g;
}

NodeKind LabeledGraph::kind(const std::string& label) const {
    return kinds_[index_of(label)];
}

bool LabeledGraph::has_edge(const std::string& u, const std::string& v) const {
    return matrix_[index_of(u)][index_of(v)] != 0;
}

std::vector<std::string> LabeledGraph::undirected_neighbors(const std::string& v) const {
    std::vector<std::string> out;
    for (int w : undirected_adj_[index_of(v)]) out.push_back(labels_[w]);
    return out;
}

std::vector<std::string> LabeledGraph::adjacency_list(const std::string& v) const {
    std::vector<std::string> out;
    for (int w : adjacency_[index_of(v)]) out.push_back(labels_[w]);
    return out;
}

std::vector<std::string> LabeledGraph::out_neighbors(const std::string& v) const {
    std::vector<std::string> out;
    const int i = index_of(v);
    for (int w : undirected_adj_[i])
        if (matrix_[i][w] && !matrix_[w][i]) out.push_back(labels_[w]);
    return out;
}

std::vector<std::string> LabeledGraph::in_neighbors(const std::string& v) const {
    std::vector<std::string> out;
    const int i = index_of(v);
    for (int w : undirected_adj_[i])
        if (matrix_[w][i] && !matrix_[i][w]) out.push_back(labels_[w]);
    return out;
}

int LabeledGraph::undirected_degree(const std::string& v) const {
    return static_cast<int>(undirected_adj_[index_of(v)].size());
}

void LabeledGraph::add_edge(const std::string& u, const std::string& v, bool directed) {
    const int ui = index_of(u), vi = index_of(v);
    if (ui == vi) throw std::invalid_argument("self-loop rejected");
    if (matrix_[ui][vi] || matrix_[vi][ui]) throw std::invalid_argument("edge exists");
    auto insert_sorted = [](std::vector<int>& list, int w) {
        list.insert(std::upper_bound(list.begin(), list.end(), w), w);
    };
    matrix_[ui][vi] = 1;
    insert_sorted(adjacency_[ui], vi);
    if (!directed) {
        matrix_[vi][ui] = 1;
        insert_sorted(adjacency_[vi], ui);
    }
    insert_sorted(undirected_adj_[ui], vi);
    insert_sorted(undirected_adj_[vi], ui);
    ++edge_count_;
}

LabeledGraph::TraversalReport LabeledGraph::traverse(const std::string& start,
                                                     TraversalMode mode) const {
    TraversalReport report;
    const int n = static_cast<int>(labels_.size());
    report.parent.assign(n, -1);
    std::vector<bool> seen(n, false);

    const int root = index_of(start);
    if (mode == TraversalMode::BreadthFirst) {
        std::deque<int> queue{root};
        seen[root] = true;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            report.node_inspections++;
            report.visit_order.push_back(labels_[v]);
            for (int w : undirected_adj_[v]) {
                report.edge_inspections++;
                if (!seen[w]) {
                    seen[w] = true;
                    report.parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
    } else {
        // Iterative depth-first with canonical neighbor order.
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (seen[v]) continue;
            seen[v] = true;
            report.node_inspections++;
            report.visit_order.push_back(labels_[v]);
            for (auto it = undirected_adj_[v].rbegin(); it != undirected_adj_[v].rend(); ++it) {
                report.edge_inspections++;
                if (!seen[*it]) {
                    if (report.parent[*it] == -1 && *it != root) report.parent[*it] = v;
                    stack.push_back(*it);
                }
            }
        }
    }
    return report;
}

std::optional<std::vector<std::string>> LabeledGraph::hamiltonian_path() const {
    const int n = static_cast<int>(labels_.size());
    if (n == 0) return std::nullopt;
    std::vector<int> path;
    std::vector<bool> used(n, false);
    std::optional<std::vector<std::string>> witness;

    auto extend = [&](auto&& self, int v) -> bool {
        path.push_back(v);
        used[v] = true;
        if (static_cast<int>(path.size()) == n) return true;
        for (int w : undirected_adj_[v])
            if (!used[w] && self(self, w)) return true;
        path.pop_back();
        used[v] = false;
        return false;
    };
    for (int s = 0; s < n; ++s) {
        if (extend(extend, s)) {
            std::vector<std::string> out;
            for (int v : path) out.push_back(labels_[v]);
            return out;
        }
    }
    return std::nullopt;
}

std::vector<std::string> LabeledGraph::min_dominating_set() const {
    const int n = static_cast<int>(labels_.size());
    if (n > 20) throw std::invalid_argument("brute-force regime is <= 20 nodes");
    std::vector<uint32_t> closed(n, 0);
    for (int v = 0; v < n; ++v) {
        closed[v] = 1u << v;
        for (int w : undirected_adj_[v]) closed[v] |= 1u << w;
    }
    const uint32_t all = n == 32 ? ~0u : (1u << n) - 1;

    std::vector<int> pick;
    std::vector<int> best;
    auto search = [&](auto&& self, int from, int remaining, uint32_t covered) -> bool {
        if (covered == all) {
            best = pick;
            return true;
        }
        if (remaining == 0) return false;
        for (int v = from; v < n; ++v) {
            pick.push_back(v);
            if (self(self, v + 1, remaining - 1, covered | closed[v])) return true;
            pick.pop_back();
        }
        return false;
    };
    for (int size = 0; size <= n; ++size)
        if (search(search, 0, size, 0)) break;
    std::vector<std::string> out;
    for (int v : best) out.push_back(labels_[v]);
    return out;
}

std::vector<std::string> LabeledGraph::shortest_path(const std::string& u,
                                                     const std::string& v) const {
    const int from = index_of(u), to = index_of(v);
    std::vector<int> parent(labels_.size(), -2);
    parent[from] = -1;
    std::deque<int> queue{from};
    while (!queue.empty() && parent[to] == -2) {
        int w = queue.front();
        queue.pop_front();
        for (int x : undirected_adj_[w])
            if (parent[x] == -2) {
                parent[x] = w;
                queue.push_back(x);
            }
    }
    if (parent[to] == -2) throw std::invalid_argument("disconnected");
    std::vector<std::string> path;
    for (int w = to; w != -1; w = parent[w]) path.push_back(labels_[w]);
    std::reverse(path.begin(), path.end());
    return path;
}

LabeledGraph::CompletenessReport LabeledGraph::completeness_check(
    const construction::Verdict& verdict, const geometry::Arrangement& arr) const {
    CompletenessReport report;
    report.complete = true;
    // Pairwise scan: for every vertex pair, if they share an edge it must
    // have been visited; every vertex must have been reached.
    for (std::size_t i = 0; i < arr.vertices.size(); ++i) {
        if (verdict.vertex_counts[i] == 0) report.complete = false;
        for (std::size_t j = i + 1; j < arr.vertices.size(); ++j) {
            report.pair_inspections++;
            auto it = verdict.edge_counts.find({static_cast<int>(i), static_cast<int>(j)});
            if (it != verdict.edge_counts.end() && it->second == 0) report.complete = false;
        }
    }
    return report;
}

std::string LabeledGraph::export_text() const {
    std::ostringstream out;
    for (std::size_t v = 0; v < labels_.size(); ++v) {
        out << labels_[v] << ":";
        bool first = true;
        for (int w : undirected_adj_[v]) {
            const bool out_edge = matrix_[v][w] && !matrix_[w][v];
            const bool in_edge = matrix_[w][v] && !matrix_[v][w];
            if (in_edge) continue; // listed on the source side with '>'
            out << (first ? " " : ",") << (out_edge ? ">" : "") << labels_[w];
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace walker::graph
