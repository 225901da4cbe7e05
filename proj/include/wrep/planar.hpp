#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wrep/graph.hpp"
#include "wrep/limits.hpp"
#include "wrep/orientation.hpp"

namespace wrep {

/// A closed walk of the embedding. Consecutive vertices (cyclically) are the
/// darts of the face; an isolated vertex has the one-vertex walk {v}.
struct Face {
    std::vector<int> walk;

    std::size_t length() const noexcept { return walk.size(); }
};

/// Combinatorial plane embedding: a counter-clockwise rotation of neighbours
/// at every vertex and a designated outer face.
///
/// Faces are traced with the rule that from dart u->v the next dart is v->w,
/// where w immediately precedes u in the rotation at v. Bounded faces then
/// come out counter-clockwise and the outer face clockwise. Construction
/// checks that every rotation permutes the neighbourhood, that each connected
/// component satisfies V - E + F = 2, and that the outer walk is a face.
class Embedding {
   public:
    Embedding() = default;
    Embedding(Graph g, std::vector<std::vector<int>> rotation, std::vector<int> outer_walk);

    /// Rotations by angle around each vertex; the outer face is the one with
    /// the most negative signed area. coords[v - 1] is the position of v.
    static Embedding from_coordinates(Graph g, const std::vector<std::pair<double, double>>& coords);

    const Graph& graph() const noexcept { return graph_; }
    const std::vector<int>& rotation(int v) const { return rotation_.at(static_cast<std::size_t>(v)); }
    /// Ordered by least dart (u, v).
    const std::vector<Face>& faces() const noexcept { return faces_; }
    std::size_t outer_index() const noexcept { return outer_; }
    const Face& outer_face() const { return faces_.at(outer_); }

    /// Neighbour preceding / following `w` in the rotation at `v`.
    int predecessor(int v, int w) const;
    int successor(int v, int w) const;

   private:
    void trace_faces();

    Graph graph_;
    std::vector<std::vector<int>> rotation_;
    std::vector<Face> faces_;
    std::size_t outer_ = 0;
};

/// A component of a larger embedding, relabelled 1..k in increasing order of
/// the labels it had there: vertex i was original[i - 1].
struct SubEmbedding {
    Embedding embedding;
    std::vector<int> original;
};

std::vector<Face> faces(const Embedding& e);

/// V - E + F = 2 on every connected component.
bool satisfies_euler(const Embedding& e);

bool is_near_triangulation(const Embedding& e);

struct VertexClasses {
    std::vector<int> inner;
    std::vector<int> boundary;
};

VertexClasses classify_vertices(const Embedding& e);

bool is_boundary_vertex(const Embedding& e, int v);

/// Inner vertices of odd degree; empty iff internally even.
std::vector<int> odd_inner_vertices(const Embedding& e);

bool is_internally_even(const Embedding& e);

/// Deletes a boundary vertex. Rotations are restricted to the remaining
/// vertices and each resulting component gets the face that absorbed the
/// deleted vertex's corners as its outer face.
std::vector<SubEmbedding> remove_boundary_vertex(const Embedding& e, int v);

struct NeighbourPaths {
    /// One path per triangle fan around v, in the order the fans are met
    /// counter-clockwise from the outer face; each path runs counter-clockwise
    /// around v.
    std::vector<std::vector<int>> paths;
    /// A fan whose neighbours are joined by an edge other than the path edges.
    bool chorded = false;

    /// One path: the proof's situation (i). Several: v is a cut vertex.
    bool single() const noexcept { return paths.size() == 1; }
};

NeighbourPaths neighbour_paths(const Embedding& e, int v);

struct ColouringOptions {
    /// On an invariant violation, fall back to the backtracking oracle instead
    /// of raising.
    bool oracle_fallback = false;
    Limits limits{};
};

/// Counters describing how a run of three_colour_ent went.
struct ColouringTrace {
    std::size_t removals = 0;
    std::size_t two_coloured_neighbourhoods = 0;
    std::size_t swaps = 0;
    std::size_t component_permutations = 0;
    std::size_t fallbacks = 0;
};

/// Constructive 3-colouring of an internally even near-triangulation by
/// repeatedly deleting the least boundary vertex, colouring the rest and
/// recolouring the neighbour paths with Kempe-style swaps behind cut vertices.
Colouring three_colour_ent(const Embedding& e, const ColouringOptions& options = {}, ColouringTrace* trace = nullptr);

/// True iff every proper 3-colouring of g gives the two ends of the path
/// induced by N(x) the same colour. Requires odd deg(x), N(x) inducing a path,
/// and g 3-colourable.
bool lemma_endpoint_check(const Graph& g, int x, const Limits& limits = {});

/// The ends of the path induced by N(x), or nullopt if N(x) does not induce a
/// path.
std::optional<std::pair<int, int>> neighbourhood_path_ends(const Graph& g, int x);

/// Fast path for near-triangulations: on K4-free input the answer is the
/// internally-even verdict; with K4 present the generic engine decides and
/// the open-problem flag is set.
Decision decide_wr_near_triangulation(const Embedding& e, const Limits& limits = {}, bool with_colouring = true);

/// Embedding text format: the graph format, then `rot v: n1 ... nk` lines
/// (counter-clockwise) and an `outer: v1 ... vk` line, or `coord v: x y` lines
/// from which both are computed.
Embedding parse_embedding(std::string_view text);
Embedding parse_embedding_lines(std::span<const TextLine> lines);
std::string format_embedding(const Embedding& e);

}  // namespace wrep
