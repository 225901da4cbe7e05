#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "wrep/error.hpp"
#include "wrep/polyomino.hpp"

namespace wrep {

namespace {

using Wide = long long;

Wide cross(LatticePoint o, LatticePoint a, LatticePoint b) {
    return static_cast<Wide>(a.x - o.x) * (b.y - o.y) - static_cast<Wide>(a.y - o.y) * (b.x - o.x);
}

int sign(Wide v) { return (v > 0) - (v < 0); }

// r on the closed segment pq.
bool on_segment(LatticePoint p, LatticePoint q, LatticePoint r) {
    return cross(p, q, r) == 0 && std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) &&
           std::min(p.y, q.y) <= r.y && r.y <= std::max(p.y, q.y);
}

// Interiors cross at a single point.
bool properly_cross(LatticePoint p, LatticePoint q, LatticePoint a, LatticePoint b) {
    const int d1 = sign(cross(p, q, a)), d2 = sign(cross(p, q, b));
    const int d3 = sign(cross(a, b, p)), d4 = sign(cross(a, b, q));
    return d1 * d2 < 0 && d3 * d4 < 0;
}

// Strictly inside, for a point given in doubled coordinates.
bool strictly_inside_doubled(std::span<const LatticePoint> poly, Wide x2, Wide y2) {
    bool inside = false;
    const std::size_t m = poly.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Wide ax = 2 * Wide{poly[i].x}, ay = 2 * Wide{poly[i].y};
        const Wide bx = 2 * Wide{poly[(i + 1) % m].x}, by = 2 * Wide{poly[(i + 1) % m].y};
        const Wide c = (bx - ax) * (y2 - ay) - (by - ay) * (x2 - ax);
        if (c == 0 && std::min(ax, bx) <= x2 && x2 <= std::max(ax, bx) && std::min(ay, by) <= y2 &&
            y2 <= std::max(ay, by))
            return false;
        if ((ay > y2) != (by > y2)) {
            // x coordinate of the crossing compared without division.
            const Wide lhs = (x2 - ax) * (by - ay);
            const Wide rhs = (bx - ax) * (y2 - ay);
            if ((by > ay) ? lhs < rhs : lhs > rhs) inside = !inside;
        }
    }
    return inside;
}

std::size_t index_of(std::span<const LatticePoint> poly, LatticePoint p) {
    const auto it = std::find(poly.begin(), poly.end(), p);
    return static_cast<std::size_t>(it - poly.begin());
}

class TriangulationEnumerator {
   public:
    explicit TriangulationEnumerator(std::span<const LatticePoint> poly) : poly_(poly) {}

    // Triangulations of the sub-polygon i, i+1, ..., j closed by the edge j-i.
    std::vector<DiagonalSet> run(std::size_t i, std::size_t j) {
        if (j - i < 2) return {DiagonalSet{}};
        std::vector<DiagonalSet> out;
        for (std::size_t k = i + 1; k < j; ++k) {
            if (!triangle_ok(i, k, j)) continue;
            const auto left = run(i, k);
            if (left.empty()) continue;
            const auto right = run(k, j);
            for (const auto& l : left)
                for (const auto& r : right) {
                    DiagonalSet d = l;
                    d.insert(d.end(), r.begin(), r.end());
                    if (k != i + 1) d.emplace_back(poly_[i], poly_[k]);
                    if (j != k + 1) d.emplace_back(poly_[k], poly_[j]);
                    std::sort(d.begin(), d.end());
                    out.push_back(std::move(d));
                }
        }
        return out;
    }

   private:
    bool side_ok(std::size_t a, std::size_t b) const {
        return b == a + 1 || is_interior_diagonal(poly_, poly_[a], poly_[b]);
    }

    bool triangle_ok(std::size_t i, std::size_t k, std::size_t j) const {
        if (cross(poly_[i], poly_[k], poly_[j]) <= 0) return false;
        return side_ok(i, k) && side_ok(k, j);
    }

    std::span<const LatticePoint> poly_;
};

}  // namespace

std::vector<LatticePoint> boundary_polygon(std::span<const Cell> cells) {
    if (cells.empty()) throw invalid_parameter("no cells");
    std::set<Cell> in(cells.begin(), cells.end());
    std::map<LatticePoint, LatticePoint> next;
    auto add = [&](LatticePoint a, LatticePoint b) {
        if (!next.emplace(a, b).second)
            throw unsupported_input("tile boundary touches itself at (" + std::to_string(a.x) + ", " +
                                    std::to_string(a.y) + ")");
    };
    for (const Cell c : in) {
        const int x = c.x, y = c.y;
        if (!in.count({x, y - 1})) add({x, y}, {x + 1, y});
        if (!in.count({x + 1, y})) add({x + 1, y}, {x + 1, y + 1});
        if (!in.count({x, y + 1})) add({x + 1, y + 1}, {x, y + 1});
        if (!in.count({x - 1, y})) add({x, y + 1}, {x, y});
    }
    std::vector<LatticePoint> out;
    const LatticePoint start = next.begin()->first;
    LatticePoint at = start;
    do {
        out.push_back(at);
        at = next.at(at);
    } while (at != start && out.size() <= next.size());
    if (out.size() != next.size()) throw unsupported_input("tile boundary is not a single cycle");
    return out;
}

std::vector<LatticePoint> tile_boundary_polygon(const Polyomino& p, std::size_t t) { return boundary_polygon(p.tile(t)); }

bool is_interior_diagonal(std::span<const LatticePoint> polygon, LatticePoint p, LatticePoint q) {
    const std::size_t m = polygon.size();
    const std::size_t i = index_of(polygon, p), j = index_of(polygon, q);
    if (i == m || j == m || i == j) return false;
    if ((i + 1) % m == j || (j + 1) % m == i) return false;
    for (const auto r : polygon)
        if (r != p && r != q && on_segment(p, q, r)) return false;
    for (std::size_t e = 0; e < m; ++e)
        if (properly_cross(p, q, polygon[e], polygon[(e + 1) % m])) return false;
    return strictly_inside_doubled(polygon, Wide{p.x} + q.x, Wide{p.y} + q.y);
}

bool is_polygon_triangulation(std::span<const LatticePoint> polygon, const DiagonalSet& diagonals) {
    if (polygon.size() < 3 || diagonals.size() + 3 != polygon.size()) return false;
    for (std::size_t a = 0; a < diagonals.size(); ++a) {
        if (!is_interior_diagonal(polygon, diagonals[a].a, diagonals[a].b)) return false;
        for (std::size_t b = 0; b < a; ++b) {
            if (diagonals[a] == diagonals[b]) return false;
            if (properly_cross(diagonals[a].a, diagonals[a].b, diagonals[b].a, diagonals[b].b)) return false;
        }
    }
    return true;
}

std::vector<DiagonalSet> enumerate_tile_triangulations(std::span<const LatticePoint> polygon, const Limits& limits) {
    if (polygon.size() < 3) throw invalid_parameter("polygon needs at least three points");
    if (static_cast<int>(polygon.size()) > limits.tile_points)
        throw resource_limit("tile has " + std::to_string(polygon.size()) + " boundary points, cap is " +
                             std::to_string(limits.tile_points));
    TriangulationEnumerator en(polygon);
    return en.run(0, polygon.size() - 1);
}

PolyominoTriangulation::PolyominoTriangulation(Polyomino base, std::vector<DiagonalSet> diagonals, const Limits& limits)
    : base_(std::move(base)), diagonals_(std::move(diagonals)) {
    if (diagonals_.size() != base_.tile_count())
        throw invalid_parameter("expected diagonals for " + std::to_string(base_.tile_count()) + " tiles, got " +
                                std::to_string(diagonals_.size()));
    for (std::size_t t = 0; t < diagonals_.size(); ++t) {
        const auto poly = tile_boundary_polygon(base_, t);
        if (static_cast<int>(poly.size()) > limits.tile_points)
            throw resource_limit("tile " + std::to_string(t) + " exceeds the boundary point cap");
        std::sort(diagonals_[t].begin(), diagonals_[t].end());
        if (!is_polygon_triangulation(poly, diagonals_[t]))
            throw invalid_parameter("diagonals do not triangulate tile " + std::to_string(t));
    }
}

int LatticeEmbedding::vertex_at(LatticePoint p) const {
    const auto it = std::lower_bound(points.begin(), points.end(), p);
    if (it == points.end() || *it != p) return 0;
    return static_cast<int>(it - points.begin()) + 1;
}

LatticeEmbedding to_graph(const PolyominoTriangulation& t) {
    std::set<LatticePoint> points;
    std::set<Segment> segments;
    for (std::size_t k = 0; k < t.base().tile_count(); ++k) {
        const auto poly = tile_boundary_polygon(t.base(), k);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            points.insert(poly[i]);
            segments.emplace(poly[i], poly[(i + 1) % poly.size()]);
        }
        segments.insert(t.diagonals()[k].begin(), t.diagonals()[k].end());
    }
    LatticeEmbedding out;
    out.points.assign(points.begin(), points.end());
    std::vector<Edge> edges;
    for (const auto& s : segments) edges.push_back({out.vertex_at(s.a), out.vertex_at(s.b)});
    std::vector<std::pair<double, double>> coords;
    for (const auto p : out.points) coords.emplace_back(p.x, p.y);
    out.embedding = Embedding::from_coordinates(Graph(static_cast<int>(out.points.size()), edges), coords);
    return out;
}

PolyominoTriangulation random_triangulation(const Polyomino& p, std::uint64_t seed, const Limits& limits) {
    std::mt19937_64 rng(seed);
    std::vector<DiagonalSet> chosen;
    for (std::size_t t = 0; t < p.tile_count(); ++t) {
        const auto poly = tile_boundary_polygon(p, t);
        const auto all = enumerate_tile_triangulations(poly, limits);
        if (all.empty()) throw invariant_violation("tile " + std::to_string(t) + " has no triangulation");
        chosen.push_back(all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)]);
    }
    return PolyominoTriangulation(p, std::move(chosen), limits);
}

std::vector<PolyominoTriangulation> enumerate_triangulations(const Polyomino& p, std::size_t max_count,
                                                            const Limits& limits) {
    std::vector<std::vector<DiagonalSet>> per_tile;
    std::size_t total = 1;
    for (std::size_t t = 0; t < p.tile_count(); ++t) {
        per_tile.push_back(enumerate_tile_triangulations(tile_boundary_polygon(p, t), limits));
        total *= per_tile.back().size();
        if (total > max_count)
            throw resource_limit("more than " + std::to_string(max_count) + " triangulations");
    }
    std::vector<PolyominoTriangulation> out;
    std::vector<std::size_t> pick(per_tile.size(), 0);
    for (std::size_t n = 0; n < total; ++n) {
        std::vector<DiagonalSet> d;
        for (std::size_t t = 0; t < per_tile.size(); ++t) d.push_back(per_tile[t][pick[t]]);
        out.emplace_back(p, std::move(d), limits);
        for (std::size_t t = per_tile.size(); t-- > 0;) {
            if (++pick[t] < per_tile[t].size()) break;
            pick[t] = 0;
        }
    }
    return out;
}

PolyominoTriangulation parse_triangulation_lines(std::span<const TextLine> lines, const Limits& limits) {
    std::size_t grid_end = 0;
    while (grid_end < lines.size() && !starts_with_keyword(lines[grid_end].text, "diag")) ++grid_end;
    const Polyomino p = parse_polyomino_lines(lines.subspan(0, grid_end));
    std::vector<std::vector<LatticePoint>> polys;
    for (std::size_t t = 0; t < p.tile_count(); ++t) polys.push_back(tile_boundary_polygon(p, t));
    std::vector<DiagonalSet> diagonals(p.tile_count());
    for (std::size_t i = grid_end; i < lines.size(); ++i) {
        const auto& line = lines[i];
        if (!starts_with_keyword(line.text, "diag")) throw parse_error("expected a diag line", line.number);
        const auto colon = line.text.find(':');
        if (colon == std::string::npos) throw parse_error("diag line needs ':'", line.number);
        const auto tokens = split_ws(std::string_view(line.text).substr(colon + 1));
        if (tokens.size() != 4) throw parse_error("diag line needs four coordinates", line.number);
        const LatticePoint a{parse_int(tokens[0], line.number), parse_int(tokens[1], line.number)};
        const LatticePoint b{parse_int(tokens[2], line.number), parse_int(tokens[3], line.number)};
        bool placed = false;
        for (std::size_t t = 0; t < polys.size() && !placed; ++t)
            if (is_interior_diagonal(polys[t], a, b)) {
                diagonals[t].emplace_back(a, b);
                placed = true;
            }
        if (!placed) throw parse_error("segment is not an interior diagonal of any tile", line.number);
    }
    try {
        return PolyominoTriangulation(p, std::move(diagonals), limits);
    } catch (const invalid_parameter& e) {
        throw parse_error(e.what(), lines.empty() ? 0 : lines.front().number);
    }
}

PolyominoTriangulation parse_triangulation(std::string_view text, const Limits& limits) {
    const auto lines = data_lines(text);
    return parse_triangulation_lines(lines, limits);
}

std::string format_triangulation(const PolyominoTriangulation& t) {
    std::ostringstream out;
    out << format_polyomino(t.base());
    for (const auto& set : t.diagonals())
        for (const auto& s : set) out << "diag: " << s.a.x << ' ' << s.a.y << ' ' << s.b.x << ' ' << s.b.y << '\n';
    return out.str();
}

}  // namespace wrep
