#pragma once

#include <string>

#include "walker/partition.hpp"

namespace walker::svg {

// Deterministic SVG renderings: same inputs, identical bytes. Coordinates
// are scaled by 6 so every canonical vertex lands on an integer pixel; the
// y axis is flipped into screen orientation.

// The drawn figure: nine strings, the two scribed circles, vertex labels.
std::string render_construction(const construction::ConstructionResult& result);

// Bounded faces shaded and tagged with their partition name and block total.
std::string render_partitions(const geometry::Arrangement& arr,
                              const partition::PartitionTable& table,
                              const partition::Resolution& theta);

// Node-link view: diamonds for a,b,c,m,0, circles for the numbered vertices
// and t, arrowheads on the directed edges around m.
std::string render_graph(const geometry::Arrangement& arr);

}  // namespace walker::svg
