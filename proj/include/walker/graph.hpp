#pragma once

#include <optional>
#include <string>
#include <vector>

#include "walker/construction.hpp"

namespace walker::graph {

enum class NodeKind { Diamond, Circle };
enum class TraversalMode { BreadthFirst, DepthFirst };

// Mixed directed/undirected graph over the canonical labels. The adjacency
// matrix and adjacency list always describe the same edge set: undirected
// edges appear symmetrically, directed ones asymmetrically.
class LabeledGraph {
public:
    static LabeledGraph from_construction(const geometry::Arrangement& arr);
    // Ad-hoc graph over the given node labels, no edges yet.
    static LabeledGraph with_nodes(std::vector<std::string> labels);

    const std::vector<std::string>& labels() const { return labels_; }
    NodeKind kind(const std::string& label) const;
    std::size_t node_count() const { return labels_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    // O(1) matrix lookup; respects direction.
    bool has_edge(const std::string& u, const std::string& v) const;
    // Neighbors in the undirected sense, canonical label order.
    std::vector<std::string> undirected_neighbors(const std::string& v) const;
    // Row of the adjacency list proper: out-edges and undirected edges.
    std::vector<std::string> adjacency_list(const std::string& v) const;
    std::vector<std::string> out_neighbors(const std::string& v) const;
    std::vector<std::string> in_neighbors(const std::string& v) const;
    int undirected_degree(const std::string& v) const;

    // Touches only the endpoint adjacency lists plus two matrix bits.
    // Throws on self-loops, unknown labels and duplicate edges.
    void add_edge(const std::string& u, const std::string& v, bool directed);

    struct TraversalReport {
        std::vector<std::string> visit_order;
        std::vector<int> parent; // -1 for roots/unreached
        std::size_t node_inspections = 0;
        std::size_t edge_inspections = 0;
    };
    TraversalReport traverse(const std::string& start, TraversalMode mode) const;

    // Exhaustive backtracking, direction ignored; deterministic witness.
    std::optional<std::vector<std::string>> hamiltonian_path() const;

    // Smallest dominating set by exhaustive search over increasing sizes,
    // lexicographically smallest witness in canonical label order.
    std::vector<std::string> min_dominating_set() const;

    // Minimum-hop undirected path, breadth-first, tie-break by label order.
    // Throws std::invalid_argument("disconnected") when unreachable.
    std::vector<std::string> shortest_path(const std::string& u, const std::string& v) const;

    // Pair-inspection count for the completeness check below; at most n^2.
    struct CompletenessReport {
        bool complete = false;
        std::size_t pair_inspections = 0;
    };
    // Every vertex explored and every incident edge visited by the counters.
    CompletenessReport completeness_check(const construction::Verdict& verdict,
                                          const geometry::Arrangement& arr) const;

    // One line per node: label: neighbor[,neighbor...] with '>' marking
    // directed out-edges; stable ordering.
    std::string export_text() const;

private:
    int index_of(const std::string& label) const;

    std::vector<std::string> labels_;
    std::vector<NodeKind> kinds_;
    std::vector<std::vector<uint8_t>> matrix_;      // matrix_[u][v]: edge u->v or undirected
    std::vector<std::vector<int>> adjacency_;       // mirrors matrix rows
    std::vector<std::vector<int>> undirected_adj_;  // symmetric closure, sorted
    std::size_t edge_count_ = 0;
};

}  // namespace walker::graph
