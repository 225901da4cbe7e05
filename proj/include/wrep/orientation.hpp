#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wrep/graph.hpp"
#include "wrep/limits.hpp"
#include "wrep/words.hpp"

namespace wrep {

struct Arc {
    int from = 0;
    int to = 0;

    friend bool operator==(const Arc&, const Arc&) = default;
};

/// A direction for every edge of a base graph.
class Orientation {
   public:
    Orientation() = default;
    /// `arcs` must direct every base edge exactly once and nothing else.
    Orientation(Graph base, std::vector<Arc> arcs);

    const Graph& base() const noexcept { return base_; }
    /// One arc per base edge, in base edge order.
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }
    bool has_arc(int from, int to) const;
    /// Out-neighbours, ascending.
    const std::vector<int>& successors(int v) const { return out_.at(static_cast<std::size_t>(v)); }

   private:
    Graph base_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> out_;
};

bool is_acyclic(const Orientation& d);

struct Shortcut {
    /// v1 -> v2 -> ... -> vk with k >= 4 and the arc v1 -> vk present.
    std::vector<int> path;
    /// A pair (vi, vj), i < j, with no arc vi -> vj.
    Arc missing;
};

/// Lexicographically least shortcut; throws invalid_parameter on cyclic input.
std::optional<Shortcut> find_shortcut(const Orientation& d);

bool is_semi_transitive(const Orientation& d);

enum class Answer { yes, no, unknown };

enum class Strategy {
    odd_wheel,           // an induced odd wheel W_{2m+1}, m >= 2, was found
    orientation_search,  // exhaustive semi-transitive orientation search
    structural,          // internally-even verdict for a K4-free near-triangulation
    resource_limit,      // search skipped because a cap was exceeded
};

/// Search space exhausted without a semi-transitive orientation.
struct ExhaustedSearch {
    std::size_t nodes = 0;
};

/// Search not attempted, or abandoned, because of a cap.
struct ExhaustedResources {
    std::string reason;
};

/// The internally-even verdict on a K4-free near-triangulation.
struct StructuralReason {
    bool internally_even = false;
    /// An inner vertex of odd degree when not internally even.
    std::optional<int> odd_inner_vertex;
    /// A proper 3-colouring when internally even.
    std::optional<Colouring> colouring;
};

using Certificate =
    std::variant<std::monostate, Orientation, Wheel, Word, StructuralReason, ExhaustedSearch, ExhaustedResources>;

struct Decision {
    Answer answer = Answer::unknown;
    Certificate certificate;
    Strategy strategy = Strategy::orientation_search;
    /// The input contains K4, so no result about K4-free graphs settled it.
    bool open_problem = false;
    std::optional<std::array<int, 4>> k4;
};

/// Generic decision: induced odd wheels first, then a backtracking search for
/// a semi-transitive orientation over edges in (min, max) order, low->high
/// first. Returns unknown rather than guessing when the edge cap is exceeded.
Decision decide_word_representable(const Graph& g, const Limits& limits = {});

const char* to_string(Answer a);
const char* to_string(Strategy s);

}  // namespace wrep
