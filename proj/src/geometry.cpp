#include "walker/geometry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace walker::geometry {

Point2 midpoint(const Segment& s) {
    return {(s.a.x + s.b.x) / 2, (s.a.y + s.b.y) / 2};
}

Point2 extend_double(const Point2& from, const Point2& through) {
    if (from == through) throw std::invalid_argument("zero-length ray");
    return {from.x + 2 * (through.x - from.x), from.y + 2 * (through.y - from.y)};
}

Rat cross(const Point2& o, const Point2& p, const Point2& q) {
    return (p.x - o.x) * (q.y - o.y) - (p.y - o.y) * (q.x - o.x);
}

Rat squared_distance(const Point2& p, const Point2& q) {
    return (p.x - q.x) * (p.x - q.x) + (p.y - q.y) * (p.y - q.y);
}

bool on_segment(const Point2& p, const Segment& s) {
    if (cross(s.a, s.b, p) != 0) return false;
    return std::min(s.a.x, s.b.x) <= p.x && p.x <= std::max(s.a.x, s.b.x) &&
           std::min(s.a.y, s.b.y) <= p.y && p.y <= std::max(s.a.y, s.b.y);
}

Intersection segment_intersection(const Segment& s1, const Segment& s2) {
    Intersection out;
    const Rat d1 = cross(s2.a, s2.b, s1.a);
    const Rat d2 = cross(s2.a, s2.b, s1.b);
    const Rat d3 = cross(s1.a, s1.b, s2.a);
    const Rat d4 = cross(s1.a, s1.b, s2.b);

    if (d1 == 0 && d2 == 0) {
        // Collinear: project onto the dominant axis and intersect intervals.
        auto key = [&](const Point2& p) -> Rat {
            return (s1.a.x != s1.b.x || s2.a.x != s2.b.x) ? p.x : p.y;
        };
        Point2 lo1 = s1.a, hi1 = s1.b, lo2 = s2.a, hi2 = s2.b;
        if (key(hi1) < key(lo1)) std::swap(lo1, hi1);
        if (key(hi2) < key(lo2)) std::swap(lo2, hi2);
        if (cross(s1.a, s1.b, s2.a) != 0 || key(hi1) < key(lo2) || key(hi2) < key(lo1))
            return out;
        Point2 lo = key(lo1) < key(lo2) ? lo2 : lo1;
        Point2 hi = key(hi1) < key(hi2) ? hi1 : hi2;
        if (lo == hi) {
            out.kind = Intersection::Kind::Point;
            out.point = lo;
        } else {
            out.kind = Intersection::Kind::Overlap;
            out.overlap = {lo, hi};
        }
        return out;
    }

    const bool straddle1 = (d1 <= 0 && d2 >= 0) || (d1 >= 0 && d2 <= 0);
    const bool straddle2 = (d3 <= 0 && d4 >= 0) || (d3 >= 0 && d4 <= 0);
    if (!straddle1 || !straddle2) return out;

    // Proper or touching crossing; solve the 2x2 linear system exactly.
    const Rat denom = d1 - d2;
    if (denom == 0) return out; // parallel, non-collinear
    const Rat t = d1 / denom;
    out.kind = Intersection::Kind::Point;
    out.point = {s1.a.x + t * (s1.b.x - s1.a.x), s1.a.y + t * (s1.b.y - s1.a.y)};
    return out;
}

int Arrangement::vertex_index(const Point2& p) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), p);
    if (it == vertices.end() || !(*it == p)) return -1;
    return static_cast<int>(it - vertices.begin());
}

int Arrangement::label_index(const std::string& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<int>(i);
    return -1;
}

bool Arrangement::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::vector<int> Arrangement::neighbors(int v) const {
    std::vector<int> out;
    for (const auto& [a, b] : edges) {
        if (a == v) out.push_back(b);
        if (b == v) out.push_back(a);
    }
    return out;
}

std::size_t Arrangement::connected_components() const {
    std::vector<int> parent(vertices.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& [u, v] : edges) parent[find(u)] = find(v);
    std::set<int> roots;
    for (std::size_t i = 0; i < parent.size(); ++i) roots.insert(find(static_cast<int>(i)));
    return roots.size();
}

namespace {

// Counterclockwise angular order starting at the +x axis.
bool angle_less(const Point2& d1, const Point2& d2) {
    auto half = [](const Point2& d) { return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1; };
    if (half(d1) != half(d2)) return half(d1) < half(d2);
    return d1.x * d2.y - d1.y * d2.x > 0;
}

}  // namespace

Arrangement build_arrangement(const std::vector<Segment>& segments,
                              const std::vector<Point2>& extra_points,
                              const std::map<std::string, Point2>& point_labels) {
    if (segments.empty()) throw std::invalid_argument("no segments");

    std::vector<Segment> segs;
    for (const auto& s : segments) {
        if (s.a == s.b) throw std::invalid_argument("degenerate segment");
        segs.push_back(s.b < s.a ? Segment{s.b, s.a} : s);
    }
    std::sort(segs.begin(), segs.end(), [](const Segment& l, const Segment& r) {
        if (l.a != r.a) return l.a < r.a;
        return l.b < r.b;
    });
    segs.erase(std::unique(segs.begin(), segs.end(),
                           [](const Segment& l, const Segment& r) {
                               return l.a == r.a && l.b == r.b;
                           }),
               segs.end());

    std::set<Point2> verts;
    for (const auto& s : segs) {
        verts.insert(s.a);
        verts.insert(s.b);
    }
    for (std::size_t i = 0; i < segs.size(); ++i) {
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            Intersection x = segment_intersection(segs[i], segs[j]);
            if (x.kind == Intersection::Kind::Point) {
                verts.insert(x.point);
            } else if (x.kind == Intersection::Kind::Overlap) {
                verts.insert(x.overlap.a);
                verts.insert(x.overlap.b);
            }
        }
    }
    for (const auto& p : extra_points)
        for (const auto& s : segs)
            if (on_segment(p, s)) {
                verts.insert(p);
                break;
            }

    Arrangement arr;
    arr.vertices.assign(verts.begin(), verts.end());
    arr.labels.assign(arr.vertices.size(), "");
    for (const auto& [label, p] : point_labels) {
        int idx = arr.vertex_index(p);
        if (idx >= 0) arr.labels[idx] = label;
    }

    std::set<std::pair<int, int>> edge_set;
    for (const auto& s : segs) {
        std::vector<int> chain;
        for (std::size_t i = 0; i < arr.vertices.size(); ++i)
            if (on_segment(arr.vertices[i], s)) chain.push_back(static_cast<int>(i));
        const Point2 dir{s.b.x - s.a.x, s.b.y - s.a.y};
        std::sort(chain.begin(), chain.end(), [&](int l, int r) {
            const Point2 &pl = arr.vertices[l], &pr = arr.vertices[r];
            return (pl.x - s.a.x) * dir.x + (pl.y - s.a.y) * dir.y <
                   (pr.x - s.a.x) * dir.x + (pr.y - s.a.y) * dir.y;
        });
        for (std::size_t i = 0; i + 1 < chain.size(); ++i)
            edge_set.insert({std::min(chain[i], chain[i + 1]),
                             std::max(chain[i], chain[i + 1])});
    }
    arr.edges.assign(edge_set.begin(), edge_set.end());

    // Face extraction by leftmost-turn boundary walk over half-edges.
    const int n = static_cast<int>(arr.vertices.size());
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : arr.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (int v = 0; v < n; ++v)
        std::sort(adj[v].begin(), adj[v].end(), [&](int l, int r) {
            Point2 dl{arr.vertices[l].x - arr.vertices[v].x,
                      arr.vertices[l].y - arr.vertices[v].y};
            Point2 dr{arr.vertices[r].x - arr.vertices[v].x,
                      arr.vertices[r].y - arr.vertices[v].y};
            return angle_less(dl, dr);
        });

    std::set<std::pair<int, int>> visited;
    for (const auto& [eu, ev] : arr.edges) {
        for (auto [u, v] : {std::pair{eu, ev}, std::pair{ev, eu}}) {
            if (visited.count({u, v})) continue;
            std::vector<int> cycle;
            int cu = u, cv = v;
            do {
                visited.insert({cu, cv});
                cycle.push_back(cu);
                const auto& ring = adj[cv];
                auto it = std::find(ring.begin(), ring.end(), cu);
                std::size_t idx = static_cast<std::size_t>(it - ring.begin());
                int cw = ring[(idx + ring.size() - 1) % ring.size()];
                cu = cv;
                cv = cw;
            } while (!(cu == u && cv == v));
            Rat area = 0;
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                const Point2& p = arr.vertices[cycle[i]];
                const Point2& q = arr.vertices[cycle[(i + 1) % cycle.size()]];
                area += p.x * q.y - q.x * p.y;
            }
            if (area > 0) {
                // Rotate so the smallest vertex index leads; deterministic.
                auto mn = std::min_element(cycle.begin(), cycle.end());
                std::rotate(cycle.begin(), mn, cycle.end());
                arr.faces.push_back(std::move(cycle));
            }
        }
    }
    std::sort(arr.faces.begin(), arr.faces.end());
    return arr;
}

Point2 polygon_centroid(const std::vector<Point2>& polygon) {
    Rat area2 = 0, cx = 0, cy = 0;
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        const Point2& p = polygon[i];
        const Point2& q = polygon[(i + 1) % polygon.size()];
        const Rat w = p.x * q.y - q.x * p.y;
        area2 += w;
        cx += (p.x + q.x) * w;
        cy += (p.y + q.y) * w;
    }
    if (area2 == 0) throw std::invalid_argument("degenerate face");
    return {cx / (3 * area2), cy / (3 * area2)};
}

Point2 face_centroid(const Arrangement& arr, const std::vector<int>& face) {
    std::vector<Point2> poly;
    for (int v : face) poly.push_back(arr.vertices[v]);
    return polygon_centroid(poly);
}

Rat face_signed_area(const Arrangement& arr, const std::vector<int>& face) {
    Rat area2 = 0;
    for (std::size_t i = 0; i < face.size(); ++i) {
        const Point2& p = arr.vertices[face[i]];
        const Point2& q = arr.vertices[face[(i + 1) % face.size()]];
        area2 += p.x * q.y - q.x * p.y;
    }
    return area2 / 2;
}

}  // namespace walker::geometry
