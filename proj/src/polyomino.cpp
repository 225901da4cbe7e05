#include "wrep/polyomino.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <sstream>

#include "wrep/error.hpp"

namespace wrep {

namespace {

constexpr std::array<Cell, 4> kSteps{Cell{1, 0}, Cell{-1, 0}, Cell{0, 1}, Cell{0, -1}};

Cell shifted(Cell c, Cell d) { return {c.x + d.x, c.y + d.y}; }

bool edge_connected(const std::vector<Cell>& sorted) {
    if (sorted.empty()) return true;
    std::set<Cell> seen{sorted.front()};
    std::vector<Cell> stack{sorted.front()};
    while (!stack.empty()) {
        const Cell c = stack.back();
        stack.pop_back();
        for (auto d : kSteps) {
            const Cell n = shifted(c, d);
            if (std::binary_search(sorted.begin(), sorted.end(), n) && seen.insert(n).second) stack.push_back(n);
        }
    }
    return seen.size() == sorted.size();
}

}  // namespace

Polyomino::Polyomino(std::vector<std::vector<Cell>> tiles) {
    for (auto& t : tiles) {
        if (t.empty()) throw invalid_parameter("empty tile");
        std::sort(t.begin(), t.end());
        if (std::adjacent_find(t.begin(), t.end()) != t.end()) throw invalid_parameter("tile repeats a cell");
        if (!edge_connected(t)) throw invalid_parameter("tile is not edge-connected");
    }
    std::sort(tiles.begin(), tiles.end());
    for (const auto& t : tiles) cells_.insert(cells_.end(), t.begin(), t.end());
    std::sort(cells_.begin(), cells_.end());
    if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end()) throw invalid_parameter("tiles overlap");
    if (cells_.empty()) throw invalid_parameter("polyomino has no cells");
    if (!edge_connected(cells_)) throw invalid_parameter("cells are not edge-connected");
    tiles_ = std::move(tiles);
    tile_index_.assign(cells_.size(), -1);
    for (std::size_t t = 0; t < tiles_.size(); ++t)
        for (const Cell c : tiles_[t]) {
            const auto i = std::lower_bound(cells_.begin(), cells_.end(), c) - cells_.begin();
            tile_index_[static_cast<std::size_t>(i)] = static_cast<int>(t);
        }
}

Polyomino Polyomino::monominoes(std::vector<Cell> cells) {
    std::vector<std::vector<Cell>> tiles;
    for (const Cell c : cells) tiles.push_back({c});
    return Polyomino(std::move(tiles));
}

bool Polyomino::contains(Cell c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }

int Polyomino::tile_of(Cell c) const {
    const auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
    if (it == cells_.end() || *it != c) return -1;
    return tile_index_[static_cast<std::size_t>(it - cells_.begin())];
}

Polyomino Polyomino::normalised() const {
    int min_x = cells_.front().x, min_y = cells_.front().y;
    for (const Cell c : cells_) {
        min_x = std::min(min_x, c.x);
        min_y = std::min(min_y, c.y);
    }
    auto tiles = tiles_;
    for (auto& t : tiles)
        for (auto& c : t) c = {c.x - min_x, c.y - min_y};
    return Polyomino(std::move(tiles));
}

Polyomino parse_polyomino_lines(std::span<const TextLine> lines) {
    if (lines.empty()) throw parse_error("empty polyomino grid", 0);
    const std::size_t width = lines.front().text.size();
    for (const auto& line : lines) {
        if (line.text.size() != width) throw parse_error("grid is not rectangular", line.number);
        if (line.text.find_first_of(" \t") != std::string::npos)
            throw parse_error("grid rows may not contain whitespace", line.number);
    }
    const int rows = static_cast<int>(lines.size());
    auto symbol = [&](Cell c) -> char {
        if (c.x < 0 || c.y < 0 || c.x >= static_cast<int>(width) || c.y >= rows) return '.';
        return lines[static_cast<std::size_t>(rows - 1 - c.y)].text[static_cast<std::size_t>(c.x)];
    };
    std::set<Cell> seen;
    std::vector<std::vector<Cell>> tiles;
    for (int y = 0; y < rows; ++y)
        for (int x = 0; x < static_cast<int>(width); ++x) {
            const Cell start{x, y};
            const char s = symbol(start);
            if (s == '.' || seen.count(start)) continue;
            std::vector<Cell> tile;
            std::vector<Cell> stack{start};
            seen.insert(start);
            while (!stack.empty()) {
                const Cell c = stack.back();
                stack.pop_back();
                tile.push_back(c);
                for (auto d : kSteps) {
                    const Cell n = shifted(c, d);
                    if (symbol(n) == s && seen.insert(n).second) stack.push_back(n);
                }
            }
            tiles.push_back(std::move(tile));
        }
    if (tiles.empty()) throw parse_error("grid has no cells", lines.front().number);
    try {
        return Polyomino(std::move(tiles));
    } catch (const invalid_parameter& e) {
        throw parse_error(e.what(), lines.front().number);
    }
}

Polyomino parse_polyomino(std::string_view text) {
    const auto lines = data_lines(text);
    return parse_polyomino_lines(lines);
}

std::string format_polyomino(const Polyomino& p) {
    int max_x = 0, max_y = 0;
    for (const Cell c : p.cells()) {
        if (c.x < 0 || c.y < 0) throw invalid_parameter("grid output needs non-negative coordinates");
        max_x = std::max(max_x, c.x);
        max_y = std::max(max_y, c.y);
    }
    // Greedy letters over the tile adjacency graph.
    std::vector<int> letter(p.tile_count(), -1);
    for (std::size_t t = 0; t < p.tile_count(); ++t) {
        std::set<int> taken;
        for (const Cell c : p.tile(t))
            for (auto d : kSteps) {
                const int u = p.tile_of(shifted(c, d));
                if (u >= 0 && static_cast<std::size_t>(u) != t && letter[static_cast<std::size_t>(u)] >= 0)
                    taken.insert(letter[static_cast<std::size_t>(u)]);
            }
        int l = 0;
        while (taken.count(l)) ++l;
        letter[t] = l;
    }
    std::ostringstream out;
    for (int y = max_y; y >= 0; --y) {
        for (int x = 0; x <= max_x; ++x) {
            const int t = p.tile_of({x, y});
            out << (t < 0 ? '.' : static_cast<char>('a' + letter[static_cast<std::size_t>(t)]));
        }
        out << '\n';
    }
    return out.str();
}

std::optional<Cell> find_internal_hole(const Polyomino& p) {
    int min_x = p.cells().front().x, max_x = min_x, min_y = p.cells().front().y, max_y = min_y;
    for (const Cell c : p.cells()) {
        min_x = std::min(min_x, c.x);
        max_x = std::max(max_x, c.x);
        min_y = std::min(min_y, c.y);
        max_y = std::max(max_y, c.y);
    }
    // Flood the complement from outside the bounding box.
    auto inside_box = [&](Cell c) { return c.x >= min_x - 1 && c.x <= max_x + 1 && c.y >= min_y - 1 && c.y <= max_y + 1; };
    std::set<Cell> outside{{min_x - 1, min_y - 1}};
    std::vector<Cell> stack{{min_x - 1, min_y - 1}};
    while (!stack.empty()) {
        const Cell c = stack.back();
        stack.pop_back();
        for (auto d : kSteps) {
            const Cell n = shifted(c, d);
            if (inside_box(n) && !p.contains(n) && outside.insert(n).second) stack.push_back(n);
        }
    }
    for (int x = min_x; x <= max_x; ++x)
        for (int y = min_y; y <= max_y; ++y)
            if (!p.contains({x, y}) && !outside.count({x, y})) return Cell{x, y};
    return std::nullopt;
}

bool has_internal_hole(const Polyomino& p) { return find_internal_hole(p).has_value(); }

namespace {

bool lines_convex(const Polyomino& p, bool rows) {
    std::map<int, std::vector<int>> lines;
    for (const Cell c : p.cells()) lines[rows ? c.y : c.x].push_back(rows ? c.x : c.y);
    for (auto& [key, values] : lines) {
        std::sort(values.begin(), values.end());
        if (values.back() - values.front() + 1 != static_cast<int>(values.size())) return false;
    }
    return true;
}

}  // namespace

bool is_row_convex(const Polyomino& p) { return lines_convex(p, true); }
bool is_column_convex(const Polyomino& p) { return lines_convex(p, false); }
bool is_convex(const Polyomino& p) { return is_row_convex(p) && is_column_convex(p); }

std::vector<Polyomino> enumerate_polyominoes(int max_cells, const Limits& limits) {
    if (max_cells < 0) throw invalid_parameter("max_cells must be non-negative");
    if (max_cells > limits.census_cells)
        throw resource_limit("polyomino census capped at " + std::to_string(limits.census_cells) + " cells");
    auto normalise = [](std::vector<Cell> cells) {
        int min_x = cells.front().x, min_y = cells.front().y;
        for (const Cell c : cells) {
            min_x = std::min(min_x, c.x);
            min_y = std::min(min_y, c.y);
        }
        for (auto& c : cells) c = {c.x - min_x, c.y - min_y};
        std::sort(cells.begin(), cells.end());
        return cells;
    };
    std::vector<Polyomino> out;
    if (max_cells == 0) return out;
    std::set<std::vector<Cell>> level{{Cell{0, 0}}};
    for (int size = 1; size <= max_cells; ++size) {
        for (const auto& cells : level) out.push_back(Polyomino::monominoes(cells));
        if (size == max_cells) break;
        std::set<std::vector<Cell>> next;
        for (const auto& cells : level)
            for (const Cell c : cells)
                for (auto d : kSteps) {
                    const Cell n = shifted(c, d);
                    if (std::binary_search(cells.begin(), cells.end(), n)) continue;
                    auto grown = cells;
                    grown.push_back(n);
                    next.insert(normalise(std::move(grown)));
                }
        level = std::move(next);
    }
    return out;
}

namespace {

bool usable_tile(const std::vector<Cell>& tile, const Limits& limits) {
    try {
        return static_cast<int>(boundary_polygon(tile).size()) <= limits.tile_points;
    } catch (const unsupported_input&) {
        return false;
    }
}

void extend_tilings(const std::vector<Cell>& cells, std::vector<char>& used, std::vector<std::vector<Cell>>& tiles,
                    const Limits& limits, std::vector<Polyomino>& out) {
    const auto first = std::find(used.begin(), used.end(), 0);
    if (first == used.end()) {
        out.emplace_back(tiles);
        return;
    }
    const auto root = static_cast<std::size_t>(first - used.begin());
    std::vector<std::size_t> free;
    for (std::size_t i = root + 1; i < cells.size(); ++i)
        if (!used[i]) free.push_back(i);
    // Every subset of the remaining cells that forms a tile with the root.
    for (std::size_t mask = 0; mask < (std::size_t{1} << free.size()); ++mask) {
        std::vector<Cell> tile{cells[root]};
        for (std::size_t b = 0; b < free.size(); ++b)
            if (mask & (std::size_t{1} << b)) tile.push_back(cells[free[b]]);
        std::sort(tile.begin(), tile.end());
        if (!edge_connected(tile) || !usable_tile(tile, limits)) continue;
        used[root] = 1;
        for (std::size_t b = 0; b < free.size(); ++b)
            if (mask & (std::size_t{1} << b)) used[free[b]] = 1;
        tiles.push_back(tile);
        extend_tilings(cells, used, tiles, limits, out);
        tiles.pop_back();
        used[root] = 0;
        for (std::size_t b = 0; b < free.size(); ++b)
            if (mask & (std::size_t{1} << b)) used[free[b]] = 0;
    }
}

}  // namespace

std::vector<Polyomino> enumerate_tilings(const Polyomino& p, const Limits& limits) {
    if (static_cast<int>(p.cells().size()) > limits.census_cells)
        throw resource_limit("tiling enumeration capped at " + std::to_string(limits.census_cells) + " cells");
    std::vector<char> used(p.cells().size(), 0);
    std::vector<std::vector<Cell>> tiles;
    std::vector<Polyomino> out;
    extend_tilings(p.cells(), used, tiles, limits, out);
    return out;
}

Polyomino random_tiling(const Polyomino& p, std::uint64_t seed, int max_tile_cells, const Limits& limits) {
    if (max_tile_cells < 1) throw invalid_parameter("tiles need at least one cell");
    std::mt19937_64 rng(seed);
    auto cells = p.cells();
    std::shuffle(cells.begin(), cells.end(), rng);
    std::set<Cell> free(cells.begin(), cells.end());
    std::vector<std::vector<Cell>> tiles;
    for (const Cell start : cells) {
        if (!free.count(start)) continue;
        free.erase(start);
        std::vector<Cell> tile{start};
        const int target = std::uniform_int_distribution<int>(1, max_tile_cells)(rng);
        while (static_cast<int>(tile.size()) < target) {
            std::set<Cell> candidates;
            for (const Cell c : tile)
                for (auto d : kSteps)
                    if (free.count(shifted(c, d))) candidates.insert(shifted(c, d));
            std::vector<Cell> options;
            for (const Cell c : candidates) {
                auto grown = tile;
                grown.push_back(c);
                std::sort(grown.begin(), grown.end());
                if (usable_tile(grown, limits)) options.push_back(c);
            }
            if (options.empty()) break;
            const Cell pick = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
            free.erase(pick);
            tile.push_back(pick);
        }
        tiles.push_back(std::move(tile));
    }
    return Polyomino(std::move(tiles));
}

}  // namespace wrep
