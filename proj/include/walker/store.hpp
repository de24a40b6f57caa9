#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "walker/graph.hpp"
#include "walker/partition.hpp"

namespace walker::store {

// Everything the data plane needs about the drawn figure.
struct Figure {
    construction::ConstructionResult result;
    construction::Trace trace;
    geometry::Arrangement arrangement;
    graph::LabeledGraph graph;
    partition::PartitionTable partitions;
};

Figure build_figure(const construction::Config& config = {});

struct Record {
    std::string payload;
    long sequence = 0;
};

struct AccessPoint {
    std::string v_x = "m"; // the venter interacts with all vertices
};

struct StoreFullError : std::runtime_error {
    StoreFullError() : std::runtime_error("capacity exhausted; refine theta") {}
};

// Occupancy map plus the ingest schedule: mirror-alternating partition
// order (left partner then right partner), blocks in index order. One
// record per block; the payload limit scales with theta.
class BlockStore {
public:
    BlockStore(const Figure& figure, partition::Resolution theta, AccessPoint access);

    const partition::Resolution& resolution() const { return theta_; }
    const AccessPoint& access() const { return access_; }
    const std::vector<std::size_t>& flow_order() const { return flow_order_; }

    long capacity() const;
    long occupied() const;
    long payload_limit() const;

    // Next free address in flowware order; throws StoreFullError when no
    // block is free and std::invalid_argument when the payload is too big.
    partition::BlockAddress ingest(const std::string& payload);

    const Record& read(const partition::BlockAddress& addr) const;
    std::vector<partition::BlockAddress> search(const std::string& pattern) const;
    int access_cost(const partition::BlockAddress& addr) const;

    // Global theta halving; existing blocks keep their indices.
    void refine();

    const std::map<std::string, long>& vertex_counters() const { return vertex_counters_; }
    const std::map<std::pair<std::string, std::string>, long>& edge_counters() const {
        return edge_counters_;
    }

    // Append-only binary log: magic WCDS, version byte 1, then per record a
    // 4-byte little-endian payload length, a length-prefixed address and
    // the payload bytes. Errors carry the failing byte offset.
    void save_log(std::ostream& out) const;
    void load_log(std::istream& in);

    // Text manifest, sorted keys, one key=value per line.
    std::string export_manifest() const;

private:
    const Figure* figure_;
    partition::Resolution theta_;
    AccessPoint access_;
    std::vector<std::size_t> flow_order_;
    std::map<std::pair<std::size_t, long>, Record> occupancy_;
    long next_sequence_ = 0;
    std::map<std::string, long> vertex_counters_;
    std::map<std::pair<std::string, std::string>, long> edge_counters_;

    void count_ingest_path(const partition::Partition& target);
    void place(std::size_t part, long index, std::string payload);
};

// Rebuilds a store skeleton (theta, access vertex, empty occupancy) from a
// manifest; the record log replays the contents.
BlockStore import_manifest(const Figure& figure, const std::string& manifest);

}  // namespace walker::store
