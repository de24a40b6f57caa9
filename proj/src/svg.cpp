#include "walker/svg.hpp"

#include <algorithm>
#include <sstream>

#include "walker/graph.hpp"

namespace walker::svg {

using geometry::Arrangement;
using geometry::Point2;

namespace {

constexpr int kScale = 6;
constexpr int kMargin = 24;

// Screen coordinates: scaled by 6, y flipped.
Rat sx(const Rat& x) { return x * kScale; }
Rat sy(const Rat& y) { return -y * kScale; }

std::string coord(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return rat_to_fixed(r, 2);
}

struct Canvas {
    std::ostringstream body;
    Rat min_x, min_y, max_x, max_y;
    bool seen = false;

    void grow(const Point2& p) {
        const Rat x = sx(p.x), y = sy(p.y);
        if (!seen) {
            min_x = max_x = x;
            min_y = max_y = y;
            seen = true;
            return;
        }
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    }

    void line(const Point2& a, const Point2& b, const std::string& style) {
        grow(a);
        grow(b);
        body << "  <line x1=\"" << coord(sx(a.x)) << "\" y1=\"" << coord(sy(a.y))
             << "\" x2=\"" << coord(sx(b.x)) << "\" y2=\"" << coord(sy(b.y)) << "\" "
             << style << "/>\n";
    }

    void text(const Point2& at, const std::string& content, const std::string& style) {
        body << "  <text x=\"" << coord(sx(at.x)) << "\" y=\"" << coord(sy(at.y)) << "\" "
             << style << ">" << content << "</text>\n";
    }

    std::string finish(const std::string& defs = "") const {
        std::ostringstream out;
        const Rat x0 = min_x - kMargin, y0 = min_y - kMargin;
        const Rat w = max_x - min_x + 2 * kMargin, h = max_y - min_y + 2 * kMargin;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << coord(x0) << " "
            << coord(y0) << " " << coord(w) << " " << coord(h) << "\">\n";
        if (!defs.empty()) out << defs;
        out << body.str() << "</svg>\n";
        return out.str();
    }
};

void draw_labels(Canvas& c, const std::map<std::string, Point2>& labels) {
    for (const auto& [label, p] : labels) {
        c.grow(p);
        c.text({p.x + Rat(1, 2), p.y + Rat(1, 2)}, label,
               "font-size=\"9\" font-family=\"monospace\" fill=\"#111\"");
    }
}

}  // namespace

std::string render_construction(const construction::ConstructionResult& result) {
    Canvas c;
    for (const auto& group : {&result.inner_string, &result.rays, &result.outer_string}) {
        const char* style = group == &result.rays
                                ? "stroke=\"#888\" stroke-width=\"1\" stroke-dasharray=\"4 2\""
                                : "stroke=\"#222\" stroke-width=\"1.5\"";
        for (const auto& s : *group) c.line(s.a, s.b, style);
    }
    for (const auto& circle : result.circles) {
        c.grow({circle.center.x - circle.diameter / 2, circle.center.y - circle.diameter / 2});
        c.grow({circle.center.x + circle.diameter / 2, circle.center.y + circle.diameter / 2});
        c.body << "  <circle cx=\"" << coord(sx(circle.center.x)) << "\" cy=\""
               << coord(sy(circle.center.y)) << "\" r=\""
               << coord(circle.diameter * kScale / 2)
               << "\" fill=\"none\" stroke=\"#55a\" stroke-width=\"0.75\"/>\n";
    }
    draw_labels(c, result.labeled_points);
    return c.finish();
}

std::string render_partitions(const Arrangement& arr, const partition::PartitionTable& table,
                              const partition::Resolution& theta) {
    Canvas c;
    // Alternate two fills so adjacent faces read apart; order is the stable
    // canonical partition order.
    const char* fills[2] = {"#dce9f7", "#f7ecd9"};
    for (std::size_t i = 0; i < table.partitions.size(); ++i) {
        const auto& p = table.partitions[i];
        const auto& face = arr.faces[p.face];
        c.body << "  <polygon points=\"";
        for (std::size_t k = 0; k < face.size(); ++k) {
            const Point2& v = arr.vertices[face[k]];
            c.grow(v);
            c.body << (k ? " " : "") << coord(sx(v.x)) << "," << coord(sy(v.y));
        }
        c.body << "\" fill=\"" << fills[i % 2]
               << "\" stroke=\"#333\" stroke-width=\"0.75\"/>\n";
    }
    for (const auto& p : table.partitions) {
        const Point2 at = geometry::face_centroid(arr, arr.faces[p.face]);
        const long total = partition::partition_blocks(p, theta).total;
        c.text(at, partition::name_to_string(p.name) + " (" + std::to_string(total) + ")",
               "font-size=\"5\" font-family=\"monospace\" text-anchor=\"middle\" "
               "fill=\"#222\"");
    }
    draw_labels(c, [&] {
        std::map<std::string, Point2> labels;
        for (std::size_t v = 0; v < arr.vertices.size(); ++v)
            if (!arr.labels[v].empty()) labels[arr.labels[v]] = arr.vertices[v];
        return labels;
    }());
    return c.finish();
}

std::string render_graph(const Arrangement& arr) {
    const auto g = graph::LabeledGraph::from_construction(arr);
    Canvas c;
    const std::string defs =
        "  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
        "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto-start-reverse\">"
        "<path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#333\"/></marker></defs>\n";

    auto position = [&](const std::string& label) {
        return arr.vertices[arr.label_index(label)];
    };
    for (const auto& u : g.labels())
        for (const auto& v : g.labels()) {
            if (!g.has_edge(u, v)) continue;
            const bool directed = !g.has_edge(v, u);
            if (!directed && u > v) continue; // draw undirected edges once
            c.line(position(u), position(v),
                   directed ? "stroke=\"#333\" stroke-width=\"1\" marker-end=\"url(#arrow)\""
                            : "stroke=\"#333\" stroke-width=\"1\"");
        }
    for (const auto& label : g.labels()) {
        const Point2 p = position(label);
        c.grow(p);
        const Rat x = sx(p.x), y = sy(p.y);
        if (g.kind(label) == graph::NodeKind::Diamond) {
            c.body << "  <polygon points=\"" << coord(x) << "," << coord(y - 5) << " "
                   << coord(x + 5) << "," << coord(y) << " " << coord(x) << ","
                   << coord(y + 5) << " " << coord(x - 5) << "," << coord(y)
                   << "\" fill=\"#fff\" stroke=\"#06c\" stroke-width=\"1.25\"/>\n";
        } else {
            c.body << "  <circle cx=\"" << coord(x) << "\" cy=\"" << coord(y)
                   << "\" r=\"5\" fill=\"#fff\" stroke=\"#c33\" stroke-width=\"1.25\"/>\n";
        }
        c.text({p.x + Rat(7, kScale), p.y + Rat(7, kScale)}, label,
               "font-size=\"8\" font-family=\"monospace\" fill=\"#111\"");
    }
    return c.finish(defs);
}

}  // namespace walker::svg
