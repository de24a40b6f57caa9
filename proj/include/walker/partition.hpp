#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "walker/construction.hpp"

namespace walker::partition {

using geometry::Arrangement;

struct Resolution {
    Rat theta{1}; // grid units per block edge

    explicit Resolution(Rat t = Rat(1)) : theta(std::move(t)) {
        if (theta <= 0) throw std::invalid_argument("theta must be positive");
    }
};

struct BlockLayout {
    std::vector<long> rows; // block counts from the base edge inward
    long total = 0;
};

using Name = std::array<std::string, 3>;

std::string name_to_string(const Name& name);
Name parse_name(const std::string& text);

struct Partition {
    Name name;
    std::optional<std::string> alias; // partition name as written with the
                                      // axis vertex read as '0'
    std::size_t face;                 // index into Arrangement::faces
    std::pair<int, int> base_edge;    // vertex indices of the row-layout edge
    Rat base_length_sq;
    std::size_t mirror;               // index of the reflection partner
};

// One partition per bounded face, named by three boundary labels chosen by
// precedence (numbered endpoint > anchor 0 > letter > m > t), mirror
// partners linked across the vertical ray axis. Base edge is the longest
// boundary edge, ties broken toward the outer triangle.
struct PartitionTable {
    std::vector<Partition> partitions; // sorted by canonical name

    const Partition& by_name(const Name& name) const;
    std::optional<std::size_t> index_of(const Name& name) const;
    // Resolves paper-style aliases ("5,0,c") as well as canonical names.
    std::optional<std::size_t> resolve_name(const std::string& text) const;
};

PartitionTable enumerate_partitions(const Arrangement& arr);

// Row layout for a base edge of squared length len_sq at resolution theta:
// rows[0] = floor(len/theta) + 1, then descending even rows 2j.
BlockLayout block_layout(const Rat& base_length_sq, const Resolution& theta);

BlockLayout partition_blocks(const Partition& p, const Resolution& theta);

struct BlockAddress {
    Name name;
    long index = 0; // zero-based block index x
};

std::string address_to_string(const BlockAddress& addr);
BlockAddress parse_address(const std::string& text);

struct BlockRef {
    std::size_t partition;
    int row;
    long offset;
};

// Row-major from the base edge inward. Throws "invalid block index" when x
// is out of range and "unknown partition" for an unknown name.
BlockRef resolve_address(const PartitionTable& table, const BlockAddress& addr,
                         const Resolution& theta);

struct RefineResult {
    BlockLayout layout; // at theta/2
    // Remap of occupied indices, rank-preserving; identity on the index.
    std::vector<std::pair<long, long>> remap;
};

// Halving refinement theta -> theta/2 for one partition.
RefineResult refine(const Partition& p, const Resolution& theta,
                    const std::vector<long>& occupied_indices);

// Configware table export: one line per partition,
// i,j,k<TAB>alias<TAB>theta=p/q<TAB>rows=...<TAB>total=N.
std::string export_table(const PartitionTable& table, const Resolution& theta);

}  // namespace walker::partition
