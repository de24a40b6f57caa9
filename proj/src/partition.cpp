#include "walker/partition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace walker::partition {

using geometry::Point2;

namespace {

// Ordering of labels inside a partition name: numbered endpoints first,
// then the axis vertices 0, t, then m, then the midpoint letters.
int name_order_rank(const std::string& l) {
    if (l == "1" || l == "2" || l == "3" || l == "4" || l == "5") return l[0] - '1';
    if (l == "0") return 5;
    if (l == "t") return 6;
    if (l == "m") return 7;
    if (l == "a") return 8;
    if (l == "b") return 9;
    if (l == "c") return 10;
    throw std::invalid_argument("unknown label: " + l);
}

// Precedence when picking three of more than three boundary labels.
int pick_rank(const std::string& l) {
    if (l >= "1" && l <= "5" && l.size() == 1) return 0;
    if (l == "0") return 1;
    if (l == "a" || l == "b" || l == "c") return 2;
    if (l == "m") return 3;
    return 4; // t
}

bool name_less(const Name& l, const Name& r) {
    for (int i = 0; i < 3; ++i) {
        const int rl = construction::label_rank(l[i]), rr = construction::label_rank(r[i]);
        if (rl != rr) return rl < rr;
    }
    return false;
}

}  // namespace

std::string name_to_string(const Name& name) {
    return name[0] + "," + name[1] + "," + name[2];
}

Name parse_name(const std::string& text) {
    Name name;
    std::istringstream in(text);
    std::string part;
    int i = 0;
    while (std::getline(in, part, ',')) {
        if (i == 3 || part.empty()) throw std::invalid_argument("malformed partition name");
        name[i++] = part;
    }
    if (i != 3) throw std::invalid_argument("malformed partition name");
    return name;
}

const Partition& PartitionTable::by_name(const Name& name) const {
    auto idx = index_of(name);
    if (!idx) throw std::invalid_argument("unknown partition: " + name_to_string(name));
    return partitions[*idx];
}

std::optional<std::size_t> PartitionTable::index_of(const Name& name) const {
    for (std::size_t i = 0; i < partitions.size(); ++i)
        if (partitions[i].name == name) return i;
    return std::nullopt;
}

std::optional<std::size_t> PartitionTable::resolve_name(const std::string& text) const {
    for (std::size_t i = 0; i < partitions.size(); ++i) {
        if (name_to_string(partitions[i].name) == text) return i;
        if (partitions[i].alias && *partitions[i].alias == text) return i;
    }
    return std::nullopt;
}

PartitionTable enumerate_partitions(const Arrangement& arr) {
    PartitionTable table;
    const int venter = arr.label_index("m");
    const Point2 center = venter >= 0 ? arr.vertices[venter] : Point2{Rat(0), Rat(0)};
    const int axis_vertex = arr.label_index("0");
    const Rat axis_x = axis_vertex >= 0 ? arr.vertices[axis_vertex].x : Rat(0);

    struct Prelim {
        Partition p;
        std::set<Point2> points;
    };
    std::vector<Prelim> prelims;

    for (std::size_t f = 0; f < arr.faces.size(); ++f) {
        const auto& face = arr.faces[f];
        std::vector<std::string> face_labels;
        for (int v : face)
            if (!arr.labels[v].empty()) face_labels.push_back(arr.labels[v]);
        if (face_labels.size() < 3)
            throw std::invalid_argument("unnameable face (fewer than 3 labeled vertices)");

        std::sort(face_labels.begin(), face_labels.end(), [](const auto& l, const auto& r) {
            if (pick_rank(l) != pick_rank(r)) return pick_rank(l) < pick_rank(r);
            return construction::label_rank(l) < construction::label_rank(r);
        });
        Name name{face_labels[0], face_labels[1], face_labels[2]};
        std::sort(name.begin(), name.end(), [](const auto& l, const auto& r) {
            return name_order_rank(l) < name_order_rank(r);
        });

        // Base edge: longest boundary edge; ties toward the outer boundary
        // (larger midpoint distance from the venter), then by vertex order.
        std::pair<int, int> base{-1, -1};
        Rat best_len(-1), best_out(-1);
        for (std::size_t i = 0; i < face.size(); ++i) {
            int u = face[i], v = face[(i + 1) % face.size()];
            const Rat len = geometry::squared_distance(arr.vertices[u], arr.vertices[v]);
            const Point2 mid = geometry::midpoint({arr.vertices[u], arr.vertices[v]});
            const Rat out = geometry::squared_distance(mid, center);
            auto key = std::tuple(len, out, -std::min(u, v), -std::max(u, v));
            auto best = std::tuple(best_len, best_out, -std::min(base.first, base.second),
                                   -std::max(base.first, base.second));
            if (base.first < 0 || key > best) {
                base = {std::min(u, v), std::max(u, v)};
                best_len = len;
                best_out = out;
            }
        }

        Prelim pre;
        pre.p.name = name;
        pre.p.face = f;
        pre.p.base_edge = base;
        pre.p.base_length_sq = best_len;
        pre.p.mirror = 0; // fixed up below
        for (int v : face) pre.points.insert(arr.vertices[v]);
        const std::string joined = name_to_string(name);
        if (joined.find('t') != std::string::npos) {
            std::string alias = joined;
            std::replace(alias.begin(), alias.end(), 't', '0');
            pre.p.alias = alias;
        }
        prelims.push_back(std::move(pre));
    }

    std::sort(prelims.begin(), prelims.end(),
              [](const Prelim& l, const Prelim& r) { return name_less(l.p.name, r.p.name); });

    // Link mirror partners across the vertical axis through vertex 0.
    for (std::size_t i = 0; i < prelims.size(); ++i) {
        std::set<Point2> reflected;
        for (const auto& p : prelims[i].points)
            reflected.insert({2 * axis_x - p.x, p.y});
        bool linked = false;
        for (std::size_t j = 0; j < prelims.size(); ++j)
            if (prelims[j].points == reflected) {
                prelims[i].p.mirror = j;
                linked = true;
                break;
            }
        if (!linked) throw std::invalid_argument("partition without mirror partner: " +
                                                 name_to_string(prelims[i].p.name));
    }

    for (auto& pre : prelims) table.partitions.push_back(std::move(pre.p));
    return table;
}

BlockLayout block_layout(const Rat& base_length_sq, const Resolution& theta) {
    if (base_length_sq <= 0) throw std::invalid_argument("base edge length must be positive");
    BlockLayout layout;
    const Rat ratio_sq = base_length_sq / (theta.theta * theta.theta);
    const long edge = floor_sqrt(ratio_sq).convert_to<long>() + 1;
    layout.rows.push_back(edge);
    for (long row = 2 * ((edge - 1) / 2); row >= 2; row -= 2) layout.rows.push_back(row);
    for (long row : layout.rows) layout.total += row;
    return layout;
}

BlockLayout partition_blocks(const Partition& p, const Resolution& theta) {
    return block_layout(p.base_length_sq, theta);
}

std::string address_to_string(const BlockAddress& addr) {
    return name_to_string(addr.name) + ":" + std::to_string(addr.index);
}

BlockAddress parse_address(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("malformed address");
    BlockAddress addr;
    addr.name = parse_name(text.substr(0, colon));
    try {
        addr.index = std::stol(text.substr(colon + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed address");
    }
    return addr;
}

BlockRef resolve_address(const PartitionTable& table, const BlockAddress& addr,
                         const Resolution& theta) {
    auto idx = table.index_of(addr.name);
    if (!idx) throw std::invalid_argument("unknown partition: " + name_to_string(addr.name));
    const BlockLayout layout = partition_blocks(table.partitions[*idx], theta);
    if (addr.index < 0 || addr.index >= layout.total)
        throw std::invalid_argument("invalid block index");
    long before = 0;
    for (std::size_t row = 0; row < layout.rows.size(); ++row) {
        if (addr.index < before + layout.rows[row])
            return {*idx, static_cast<int>(row), addr.index - before};
        before += layout.rows[row];
    }
    throw std::logic_error("unreachable");
}

RefineResult refine(const Partition& p, const Resolution& theta,
                    const std::vector<long>& occupied_indices) {
    RefineResult out;
    out.layout = partition_blocks(p, Resolution(theta.theta / 2));
    std::vector<long> sorted = occupied_indices;
    std::sort(sorted.begin(), sorted.end());
    // Rank-preserving remap; totals strictly grow, so identity is injective.
    for (long idx : sorted) out.remap.push_back({idx, idx});
    return out;
}

std::string export_table(const PartitionTable& table, const Resolution& theta) {
    std::ostringstream out;
    for (const auto& p : table.partitions) {
        const BlockLayout layout = partition_blocks(p, theta);
        out << name_to_string(p.name) << '\t' << (p.alias ? *p.alias : "-") << '\t'
            << "theta=" << rat_to_string(theta.theta) << '\t' << "rows=";
        for (std::size_t i = 0; i < layout.rows.size(); ++i)
            out << (i ? "," : "") << layout.rows[i];
        out << '\t' << "total=" << layout.total << '\n';
    }
    return out.str();
}

}  // namespace walker::partition
