#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "walker/rational.hpp"

namespace walker::geometry {

struct Point2 {
    Rat x;
    Rat y;

    bool operator==(const Point2& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point2& o) const { return !(*this == o); }
    // Lexicographic (x, y); used for deterministic vertex ordering.
    bool operator<(const Point2& o) const {
        if (x != o.x) return x < o.x;
        return y < o.y;
    }
};

inline std::string to_string(const Point2& p) {
    return rat_to_string(p.x) + "," + rat_to_string(p.y);
}

struct Segment {
    Point2 a;
    Point2 b;
};

// Scribed circle annotation. Circles carry the block-resolution quantity
// theta but contribute no vertices or edges to the arrangement.
struct Circle {
    Point2 center;
    Rat diameter;
    Rat fill_theta;
};

Point2 midpoint(const Segment& s);

// Point at twice the walked distance: from + 2*(through - from).
// Throws std::invalid_argument("zero-length ray") when from == through.
Point2 extend_double(const Point2& from, const Point2& through);

Rat cross(const Point2& o, const Point2& p, const Point2& q);
Rat squared_distance(const Point2& p, const Point2& q);
bool on_segment(const Point2& p, const Segment& s);

struct Intersection {
    enum class Kind { None, Point, Overlap } kind = Kind::None;
    Point2 point;    // valid when kind == Point
    Segment overlap; // valid when kind == Overlap
};

Intersection segment_intersection(const Segment& s1, const Segment& s2);

// Planar subdivision of a segment set. Vertices are endpoints, pairwise
// intersection points and any injected labeled points lying on a segment.
// Edges are the uncut pieces between consecutive vertices along a segment.
// Bounded faces are counterclockwise boundary cycles of vertex indices.
struct Arrangement {
    std::vector<Point2> vertices;           // sorted lexicographically
    std::vector<std::string> labels;        // parallel to vertices, "" if none
    std::vector<std::pair<int, int>> edges; // u < v, sorted
    std::vector<std::vector<int>> faces;    // CCW cycles, bounded faces only

    int vertex_index(const Point2& p) const;
    int label_index(const std::string& label) const;
    bool has_edge(int u, int v) const;
    std::vector<int> neighbors(int v) const;
    std::size_t connected_components() const;
};

Arrangement build_arrangement(const std::vector<Segment>& segments,
                              const std::vector<Point2>& extra_points = {},
                              const std::map<std::string, Point2>& point_labels = {});

// Area-weighted polygon centroid. Throws on zero-area input.
Point2 polygon_centroid(const std::vector<Point2>& polygon);
Point2 face_centroid(const Arrangement& arr, const std::vector<int>& face);
Rat face_signed_area(const Arrangement& arr, const std::vector<int>& face);

}  // namespace walker::geometry
