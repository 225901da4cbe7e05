#pragma once

#include <array>
#include <compare>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wrep/limits.hpp"
#include "wrep/text.hpp"

namespace wrep {

/// Undirected edge, normalised so that u < v.
struct Edge {
    int u = 0;
    int v = 0;

    auto operator<=>(const Edge&) const = default;
};

/// Finite simple undirected graph on vertices 1..n.
///
/// Immutable after construction. Construction rejects loops, duplicate edges
/// and out-of-range endpoints with invalid_parameter.
class Graph {
   public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::vector<Edge> edges);
    Graph(int n, std::initializer_list<std::pair<int, int>> edges);

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }

    bool adjacent(int u, int v) const;
    int degree(int v) const { return static_cast<int>(neighbours(v).size()); }
    /// Sorted ascending.
    const std::vector<int>& neighbours(int v) const;
    /// Sorted by (u, v).
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    bool has_vertex(int v) const noexcept { return v >= 1 && v <= n_; }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

   private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<char> matrix_;
};

/// A graph together with the label each of its vertices carried in the graph
/// (or word) it was derived from: vertex i maps to original[i - 1].
struct LabelledGraph {
    Graph graph;
    std::vector<int> original;
};

/// Proper-or-not assignment of colours 1..k to vertices 1..n. A value of 0
/// marks an uncoloured vertex (a partial colouring).
class Colouring {
   public:
    Colouring() = default;
    Colouring(int k, std::vector<int> colours);

    int k() const noexcept { return k_; }
    int of(int v) const { return colours_.at(static_cast<std::size_t>(v - 1)); }
    std::span<const int> values() const noexcept { return colours_; }
    std::size_t vertex_count() const noexcept { return colours_.size(); }
    /// Number of distinct colours actually used.
    int used() const;

    friend bool operator==(const Colouring&, const Colouring&) = default;

   private:
    int k_ = 0;
    std::vector<int> colours_;
};

Graph make_cycle(int n);
/// C_n on 1..n plus hub n+1.
Graph make_wheel(int n);
Graph make_complete(int n);

/// Vertices of `subset` relabelled 1..|S| in increasing order of original label.
LabelledGraph induced_subgraph(const Graph& g, std::span<const int> subset);

/// Graph with every edge incident to a vertex of `removed` deleted; labels and
/// vertex count are unchanged.
Graph without_vertices(const Graph& g, std::span<const int> removed);

bool is_proper_colouring(const Graph& g, const Colouring& c);

/// First proper k-colouring found by backtracking over vertices ordered by
/// decreasing degree (ties by label), trying colours in increasing order.
std::optional<Colouring> k_colour(const Graph& g, int k, const Limits& limits = {});

/// Calls `visit` for every proper k-colouring (no symmetry reduction). Stops
/// early when `visit` returns false. Returns the number of colourings visited.
std::size_t for_each_colouring(const Graph& g, int k, const std::function<bool(const Colouring&)>& visit,
                               const Limits& limits = {});

int chromatic_number(const Graph& g, const Limits& limits = {});

std::optional<std::array<int, 4>> contains_k4(const Graph& g);

int max_clique_size(const Graph& g);

struct Wheel {
    int hub = 0;
    /// Rim in cycle order starting from its least vertex; the second vertex is
    /// smaller than the last.
    std::vector<int> rim;

    friend bool operator==(const Wheel&, const Wheel&) = default;
};

/// Every (hub, rim) such that the rim is a chordless cycle of length at least
/// `min_rim` inside the hub's neighbourhood. Sorted by hub, then rim.
std::vector<Wheel> find_induced_wheels(const Graph& g, int min_rim = 4);

/// True iff {hub} ∪ rim induces exactly the wheel W_|rim| with the rim in the
/// given cyclic order.
bool is_induced_wheel(const Graph& g, const Wheel& w);

std::vector<int> articulation_points(const Graph& g);

/// Components as sorted vertex lists, ordered by least vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// Components of g after deleting `removed` (which appear in no component).
std::vector<std::vector<int>> connected_components(const Graph& g, std::span<const int> removed);

bool is_connected(const Graph& g);

bool is_perfect(const Graph& g, const Limits& limits = {});

/// Graph text format: `#` comments, then `n m`, then m lines `u v` with u < v.
Graph parse_graph(std::string_view text);
/// Reads the graph part of a larger document starting at lines[pos]; `pos` is
/// left just past the edge list.
Graph parse_graph_lines(std::span<const TextLine> lines, std::size_t& pos);
std::string format_graph(const Graph& g);

}  // namespace wrep
