#include "walker/store.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace walker::store {

using partition::BlockAddress;
using partition::Partition;
using partition::Resolution;

Figure build_figure(const construction::Config& config) {
    Figure fig;
    auto [result, trace] = construction::run_construction(config);
    fig.result = std::move(result);
    fig.trace = std::move(trace);
    fig.arrangement = construction::arrangement_from(fig.result);
    fig.graph = graph::LabeledGraph::from_construction(fig.arrangement);
    fig.partitions = partition::enumerate_partitions(fig.arrangement);
    return fig;
}

BlockStore::BlockStore(const Figure& figure, Resolution theta, AccessPoint access)
    : figure_(&figure), theta_(std::move(theta)), access_(std::move(access)) {
    const auto& labels = figure_->graph.labels();
    if (std::find(labels.begin(), labels.end(), access_.v_x) == labels.end())
        throw std::invalid_argument("unknown access vertex: " + access_.v_x);

    // Flowware order: walk the table in canonical name order, emitting each
    // unvisited partition together with its mirror, left of the axis first.
    const auto& parts = figure_->partitions.partitions;
    std::vector<bool> done(parts.size(), false);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (done[i]) continue;
        std::size_t j = parts[i].mirror;
        std::size_t left = i, right = j;
        const auto& faces = figure_->arrangement.faces;
        const Rat xi = geometry::face_centroid(figure_->arrangement, faces[parts[i].face]).x;
        const Rat xj = geometry::face_centroid(figure_->arrangement, faces[parts[j].face]).x;
        if (xj < xi) std::swap(left, right);
        flow_order_.push_back(left);
        done[left] = true;
        if (right != left) {
            flow_order_.push_back(right);
            done[right] = true;
        }
    }
}

long BlockStore::capacity() const {
    long total = 0;
    for (const auto& p : figure_->partitions.partitions)
        total += partition::partition_blocks(p, theta_).total;
    return total;
}

long BlockStore::occupied() const { return static_cast<long>(occupancy_.size()); }

long BlockStore::payload_limit() const {
    const Rat limit = Rat(64) * theta_.theta;
    return (numerator(limit) / denominator(limit)).convert_to<long>();
}

void BlockStore::count_ingest_path(const Partition& target) {
    const auto path = figure_->graph.shortest_path(access_.v_x, target.name[0]);
    for (const auto& v : path) ++vertex_counters_[v];
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        ++edge_counters_[{std::min(path[i], path[i + 1]), std::max(path[i], path[i + 1])}];
}

void BlockStore::place(std::size_t part, long index, std::string payload) {
    occupancy_[{part, index}] = Record{std::move(payload), next_sequence_++};
    count_ingest_path(figure_->partitions.partitions[part]);
}

BlockAddress BlockStore::ingest(const std::string& payload) {
    if (static_cast<long>(payload.size()) > payload_limit())
        throw std::invalid_argument("payload exceeds block limit of " +
                                    std::to_string(payload_limit()) + " bytes");
    for (std::size_t part : flow_order_) {
        const auto& p = figure_->partitions.partitions[part];
        const long total = partition::partition_blocks(p, theta_).total;
        for (long x = 0; x < total; ++x) {
            if (occupancy_.count({part, x})) continue;
            place(part, x, payload);
            return {p.name, x};
        }
    }
    throw StoreFullError{};
}

const Record& BlockStore::read(const BlockAddress& addr) const {
    const auto ref = partition::resolve_address(figure_->partitions, addr, theta_);
    auto it = occupancy_.find({ref.partition, addr.index});
    if (it == occupancy_.end())
        throw std::invalid_argument("unoccupied: " + partition::address_to_string(addr));
    return it->second;
}

std::vector<BlockAddress> BlockStore::search(const std::string& pattern) const {
    std::vector<BlockAddress> hits;
    for (std::size_t part : flow_order_) {
        const auto& p = figure_->partitions.partitions[part];
        auto it = occupancy_.lower_bound({part, 0});
        for (; it != occupancy_.end() && it->first.first == part; ++it)
            if (it->second.payload.find(pattern) != std::string::npos)
                hits.push_back({p.name, it->first.second});
    }
    return hits;
}

int BlockStore::access_cost(const BlockAddress& addr) const {
    const auto ref = partition::resolve_address(figure_->partitions, addr, theta_);
    const auto& p = figure_->partitions.partitions[ref.partition];
    int best = -1;
    for (const auto& label : p.name) {
        const int hops =
            static_cast<int>(figure_->graph.shortest_path(access_.v_x, label).size()) - 1;
        if (best < 0 || hops < best) best = hops;
    }
    return best;
}

void BlockStore::refine() { theta_ = Resolution(theta_.theta / 2); }

namespace {

constexpr char kMagic[4] = {'W', 'C', 'D', 'S'};
constexpr uint8_t kVersion = 1;

[[noreturn]] void truncated(std::size_t offset) {
    throw std::runtime_error("truncated log at byte " + std::to_string(offset));
}

std::string read_exact(std::istream& in, std::size_t n, std::size_t& offset) {
    std::string buf(n, '\0');
    in.read(buf.data(), static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(in.gcount()) != n) truncated(offset + in.gcount());
    offset += n;
    return buf;
}

}  // namespace

void BlockStore::save_log(std::ostream& out) const {
    out.write(kMagic, 4);
    out.put(static_cast<char>(kVersion));
    std::vector<std::pair<long, std::pair<std::string, const Record*>>> entries;
    for (const auto& [key, rec] : occupancy_) {
        const auto& p = figure_->partitions.partitions[key.first];
        entries.push_back({rec.sequence,
                           {partition::address_to_string({p.name, key.second}), &rec}});
    }
    std::sort(entries.begin(), entries.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    for (const auto& [seq, addressed] : entries) {
        const auto& [addr, rec] = addressed;
        const uint32_t len = static_cast<uint32_t>(rec->payload.size());
        for (int shift = 0; shift < 32; shift += 8)
            out.put(static_cast<char>((len >> shift) & 0xff));
        out.put(static_cast<char>(addr.size()));
        out.write(addr.data(), static_cast<std::streamsize>(addr.size()));
        out.write(rec->payload.data(), static_cast<std::streamsize>(rec->payload.size()));
    }
}

void BlockStore::load_log(std::istream& in) {
    std::size_t offset = 0;
    const std::string magic = read_exact(in, 4, offset);
    if (magic != std::string(kMagic, 4)) throw std::runtime_error("bad log magic");
    const std::string version = read_exact(in, 1, offset);
    if (static_cast<uint8_t>(version[0]) != kVersion)
        throw std::runtime_error("unsupported log version " +
                                 std::to_string(static_cast<uint8_t>(version[0])));
    while (true) {
        if (in.peek() == std::char_traits<char>::eof()) break;
        const std::string len_bytes = read_exact(in, 4, offset);
        uint32_t len = 0;
        for (int i = 0; i < 4; ++i)
            len |= static_cast<uint32_t>(static_cast<uint8_t>(len_bytes[i])) << (8 * i);
        const std::string addr_len = read_exact(in, 1, offset);
        const std::string addr_text =
            read_exact(in, static_cast<uint8_t>(addr_len[0]), offset);
        const std::string payload = read_exact(in, len, offset);
        const BlockAddress addr = partition::parse_address(addr_text);
        const auto ref = partition::resolve_address(figure_->partitions, addr, theta_);
        if (occupancy_.count({ref.partition, addr.index}))
            throw std::runtime_error("duplicate block address: " + addr_text);
        place(ref.partition, addr.index, payload);
    }
}

std::string BlockStore::export_manifest() const {
    std::vector<std::string> lines;
    lines.push_back("access_vertex=" + access_.v_x);
    lines.push_back("capacity=" + std::to_string(capacity()));
    lines.push_back("occupied=" + std::to_string(occupied()));
    for (std::size_t part = 0; part < figure_->partitions.partitions.size(); ++part) {
        const auto& p = figure_->partitions.partitions[part];
        const auto layout = partition::partition_blocks(p, theta_);
        long used = 0;
        auto it = occupancy_.lower_bound({part, 0});
        for (; it != occupancy_.end() && it->first.first == part; ++it) ++used;
        std::ostringstream line;
        line << "partition." << partition::name_to_string(p.name) << '=';
        for (std::size_t i = 0; i < layout.rows.size(); ++i)
            line << (i ? "," : "") << layout.rows[i];
        line << ';' << layout.total << ';' << used;
        lines.push_back(line.str());
    }
    lines.push_back("theta=" + rat_to_string(theta_.theta));
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto& line : lines) out += line + "\n";
    return out;
}

BlockStore import_manifest(const Figure& figure, const std::string& manifest) {
    std::istringstream in(manifest);
    std::string line, access = "m";
    std::optional<Rat> theta;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("malformed manifest line: " + line);
        const std::string key = line.substr(0, eq), value = line.substr(eq + 1);
        if (key == "access_vertex") {
            access = value;
        } else if (key == "theta") {
            theta = parse_rational(value);
        } else if (key.rfind("partition.", 0) == 0) {
            if (!figure.partitions.resolve_name(key.substr(10)))
                throw std::invalid_argument("unknown partition in manifest: " +
                                            key.substr(10));
        } else if (key != "capacity" && key != "occupied") {
            throw std::invalid_argument("unknown manifest key: " + key);
        }
    }
    if (!theta) throw std::invalid_argument("manifest missing theta");
    return BlockStore(figure, Resolution(*theta), AccessPoint{access});
}

}  // namespace walker::store
