#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wrep/limits.hpp"
#include "wrep/planar.hpp"

namespace wrep {

/// Unit square [x, x+1] x [y, y+1]; x grows right, y grows up.
struct Cell {
    int x = 0;
    int y = 0;

    auto operator<=>(const Cell&) const = default;
};

struct LatticePoint {
    int x = 0;
    int y = 0;

    auto operator<=>(const LatticePoint&) const = default;
};

/// Segment between lattice points, normalised so that a < b.
struct Segment {
    LatticePoint a;
    LatticePoint b;

    Segment() = default;
    Segment(LatticePoint p, LatticePoint q) : a(p < q ? p : q), b(p < q ? q : p) {}

    auto operator<=>(const Segment&) const = default;
};

/// Edge-connected set of cells partitioned into edge-connected tiles.
class Polyomino {
   public:
    Polyomino() = default;
    /// Throws invalid_parameter unless the tiles are non-empty, disjoint,
    /// individually edge-connected and jointly edge-connected.
    explicit Polyomino(std::vector<std::vector<Cell>> tiles);

    /// Every cell its own tile.
    static Polyomino monominoes(std::vector<Cell> cells);

    /// Sorted.
    const std::vector<Cell>& cells() const noexcept { return cells_; }
    std::size_t tile_count() const noexcept { return tiles_.size(); }
    /// Sorted cells of tile t; tiles are ordered by their least cell.
    const std::vector<Cell>& tile(std::size_t t) const { return tiles_.at(t); }
    const std::vector<std::vector<Cell>>& tiles() const noexcept { return tiles_; }
    bool contains(Cell c) const;
    /// Tile index of c, or -1.
    int tile_of(Cell c) const;

    /// Same shape and tiling shifted so the least x and least y are 0.
    Polyomino normalised() const;

    friend bool operator==(const Polyomino& a, const Polyomino& b) { return a.tiles_ == b.tiles_; }

   private:
    std::vector<Cell> cells_;
    std::vector<std::vector<Cell>> tiles_;
    std::vector<int> tile_index_;  // parallel to cells_
};

/// Rectangular character grid, top row first; `.` is empty and each maximal
/// edge-connected region of one character is a tile. The bottom row is y = 0.
Polyomino parse_polyomino(std::string_view text);
Polyomino parse_polyomino_lines(std::span<const TextLine> lines);
/// Letters chosen so that edge-adjacent tiles differ.
std::string format_polyomino(const Polyomino& p);

/// An empty cell enclosed by the polyomino, if any.
std::optional<Cell> find_internal_hole(const Polyomino& p);
bool has_internal_hole(const Polyomino& p);

bool is_row_convex(const Polyomino& p);
bool is_column_convex(const Polyomino& p);
bool is_convex(const Polyomino& p);

/// All lattice points on the boundary of tile t, counter-clockwise from the
/// least point. Throws unsupported_input when the boundary is not a single
/// simple cycle (a tile with a hole or a pinch).
std::vector<LatticePoint> tile_boundary_polygon(const Polyomino& p, std::size_t t);
/// Same for an arbitrary non-empty cell set.
std::vector<LatticePoint> boundary_polygon(std::span<const Cell> cells);

using DiagonalSet = std::vector<Segment>;

/// Every triangulation of a simple lattice polygon that uses only its
/// vertices. Each diagonal set is sorted; the sets come out in a fixed
/// recursive order.
std::vector<DiagonalSet> enumerate_tile_triangulations(std::span<const LatticePoint> polygon,
                                                       const Limits& limits = {});

/// True iff `diagonals` triangulates the polygon: |polygon| - 3 pairwise
/// non-crossing interior diagonals.
bool is_polygon_triangulation(std::span<const LatticePoint> polygon, const DiagonalSet& diagonals);

/// True iff the open segment pq is a proper interior diagonal of the polygon.
bool is_interior_diagonal(std::span<const LatticePoint> polygon, LatticePoint p, LatticePoint q);

/// A polyomino with a triangulation of every tile.
class PolyominoTriangulation {
   public:
    PolyominoTriangulation() = default;
    /// diagonals[t] triangulates tile t; throws invalid_parameter otherwise.
    PolyominoTriangulation(Polyomino base, std::vector<DiagonalSet> diagonals, const Limits& limits = {});

    const Polyomino& base() const noexcept { return base_; }
    const std::vector<DiagonalSet>& diagonals() const noexcept { return diagonals_; }

   private:
    Polyomino base_;
    std::vector<DiagonalSet> diagonals_;
};

/// Graph of a triangulated polyomino with the lattice position of each vertex:
/// vertex i sits at points[i - 1]; vertices are ordered by (x, y).
struct LatticeEmbedding {
    Embedding embedding;
    std::vector<LatticePoint> points;

    /// 0 when no vertex sits at p.
    int vertex_at(LatticePoint p) const;
};

LatticeEmbedding to_graph(const PolyominoTriangulation& t);

/// Fixed polyominoes (translation classes) with 1..max_cells cells, monomino
/// tiles, ordered by size then by sorted cell list.
std::vector<Polyomino> enumerate_polyominoes(int max_cells, const Limits& limits = {});

/// Uniform choice among each tile's triangulations.
PolyominoTriangulation random_triangulation(const Polyomino& p, std::uint64_t seed, const Limits& limits = {});

/// Every combination of tile triangulations (product order, first tile
/// slowest). Throws resource_limit beyond `max_count` results.
std::vector<PolyominoTriangulation> enumerate_triangulations(const Polyomino& p, std::size_t max_count,
                                                            const Limits& limits = {});

/// Random partition of the cells into edge-connected tiles of at most
/// max_tile_cells cells whose boundaries stay within the point cap.
Polyomino random_tiling(const Polyomino& p, std::uint64_t seed, int max_tile_cells, const Limits& limits = {});

/// Every partition of the cells into edge-connected, simply connected tiles.
std::vector<Polyomino> enumerate_tilings(const Polyomino& p, const Limits& limits = {});

/// Triangulation file: polyomino grid, then `diag: x1 y1 x2 y2` lines.
PolyominoTriangulation parse_triangulation(std::string_view text, const Limits& limits = {});
PolyominoTriangulation parse_triangulation_lines(std::span<const TextLine> lines, const Limits& limits = {});
std::string format_triangulation(const PolyominoTriangulation& t);

}  // namespace wrep
