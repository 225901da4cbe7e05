#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include "wrep/error.hpp"
#include "wrep/planar.hpp"

namespace wrep {

namespace {

std::string describe_state(const Embedding& e, const std::vector<int>& colours, const std::string& what) {
    std::ostringstream out;
    out << what << "\nembedding:\n" << format_embedding(e) << "colours:";
    for (std::size_t i = 0; i < colours.size(); ++i) out << ' ' << (i + 1) << '=' << colours[i];
    return out.str();
}

int least_unused(const std::set<int>& used) {
    for (int c = 1; c <= 3; ++c)
        if (!used.count(c)) return c;
    return 0;
}

const std::vector<int>& component_containing(const std::vector<std::vector<int>>& comps, int v) {
    for (const auto& c : comps)
        if (std::binary_search(c.begin(), c.end(), v)) return c;
    throw invalid_parameter("vertex " + std::to_string(v) + " is in no component");
}

class EntColourer {
   public:
    explicit EntColourer(ColouringTrace& trace) : trace_(trace) {}

    // colours[v - 1] in {1, 2, 3}.
    std::vector<int> colour(const Embedding& e) {
        const Graph& g = e.graph();
        const int n = g.order();
        if (n == 1) return {1};

        const int v = classify_vertices(e).boundary.front();
        ++trace_.removals;
        const auto fans = neighbour_paths(e, v);

        std::vector<int> col(static_cast<std::size_t>(n), 0);
        for (const auto& part : remove_boundary_vertex(e, v)) {
            if (!is_near_triangulation(part.embedding))
                throw invariant_violation(describe_state(e, col, "deleting " + std::to_string(v) +
                                                                     " left a component that is not a near-triangulation"));
            const auto sub = colour(part.embedding);
            for (std::size_t i = 0; i < sub.size(); ++i) col[static_cast<std::size_t>(part.original[i] - 1)] = sub[i];
        }
        auto at = [&](int u) -> int& { return col[static_cast<std::size_t>(u - 1)]; };

        std::set<int> around;
        for (int u : g.neighbours(v)) around.insert(at(u));
        if (around.size() <= 2) {
            ++trace_.two_coloured_neighbourhoods;
            at(v) = least_unused(around);
            return col;
        }

        const std::vector<int> gone{v};
        const Graph reduced = without_vertices(g, gone);

        // Walk each fan from its least endpoint; whenever three consecutive
        // vertices carry three colours, the middle one must separate its two
        // sides in the reduced graph, so the far side can swap the outer two
        // colours.
        std::vector<std::vector<int>> paths = fans.paths;
        for (auto& path : paths) {
            if (path.back() < path.front()) std::reverse(path.begin(), path.end());
            for (std::size_t i = 1; i + 1 < path.size(); ++i) {
                const int v1 = path[i - 1], v2 = path[i], v3 = path[i + 1];
                const int a = at(v1), b = at(v2), c = at(v3);
                if (a == b || b == c || a == c) continue;
                if (!is_boundary_vertex(e, v2))
                    throw invariant_violation(describe_state(
                        e, col, "fan vertex " + std::to_string(v2) + " between three colours is inner (v = " +
                                    std::to_string(v) + ")"));
                const std::vector<int> cut{v, v2};
                const auto comps = connected_components(reduced, cut);
                const auto& far = component_containing(comps, v3);
                if (std::binary_search(far.begin(), far.end(), v1))
                    throw invariant_violation(describe_state(
                        e, col, "vertex " + std::to_string(v2) + " does not separate " + std::to_string(v1) + " from " +
                                    std::to_string(v3) + " after deleting " + std::to_string(v)));
                for (int u : far) {
                    if (at(u) == a)
                        at(u) = c;
                    else if (at(u) == c)
                        at(u) = a;
                }
                ++trace_.swaps;
            }
            std::set<int> used;
            for (int u : path) used.insert(at(u));
            if (used.size() > 2)
                throw invariant_violation(describe_state(e, col, "fan still uses three colours after recolouring"));
        }

        // Fans lie in different components of the reduced graph; permute the
        // colours of a component so that all fans share one pair.
        const auto comps = connected_components(reduced, gone);
        std::set<int> shared;
        for (std::size_t p = 0; p < paths.size(); ++p) {
            std::set<int> own;
            for (int u : paths[p]) own.insert(at(u));
            std::set<int> both = shared;
            both.insert(own.begin(), own.end());
            if (both.size() <= 2) {
                shared = std::move(both);
                continue;
            }
            const auto& comp = component_containing(comps, paths[p].front());
            for (std::size_t q = 0; q < paths.size(); ++q)
                if (q != p && std::binary_search(comp.begin(), comp.end(), paths[q].front()))
                    throw invariant_violation(describe_state(e, col, "two fans share a component after deleting " +
                                                                         std::to_string(v)));
            std::set<int> target = shared;
            if (target.size() < 2) target.insert(least_unused(target));
            std::array<int, 4> perm{0, 1, 2, 3};
            std::array<int, 4> best = perm;
            int best_fixed = -1;
            std::array<int, 3> base{1, 2, 3};
            do {
                std::array<int, 4> candidate{0, base[0], base[1], base[2]};
                const bool fits =
                    std::all_of(own.begin(), own.end(), [&](int c) { return target.count(candidate[c]) > 0; });
                int fixed = 0;
                for (int c = 1; c <= 3; ++c) fixed += candidate[c] == c;
                if (fits && fixed > best_fixed) {
                    best = candidate;
                    best_fixed = fixed;
                }
            } while (std::next_permutation(base.begin(), base.end()));
            for (int u : comp) at(u) = best[static_cast<std::size_t>(at(u))];
            ++trace_.component_permutations;
            shared = std::move(target);
        }

        around.clear();
        for (int u : g.neighbours(v)) around.insert(at(u));
        if (around.size() > 2)
            throw invariant_violation(describe_state(e, col, "neighbours of " + std::to_string(v) +
                                                                 " still use three colours"));
        at(v) = least_unused(around);
        for (const auto& edge : g.edges())
            if (at(edge.u) == at(edge.v))
                throw invariant_violation(describe_state(e, col, "recolouring produced a clash on edge " +
                                                                     std::to_string(edge.u) + "-" + std::to_string(edge.v)));
        return col;
    }

   private:
    ColouringTrace& trace_;
};

}  // namespace

Colouring three_colour_ent(const Embedding& e, const ColouringOptions& options, ColouringTrace* trace) {
    if (!is_near_triangulation(e)) throw invalid_parameter("input is not a near-triangulation");
    if (const auto odd = odd_inner_vertices(e); !odd.empty())
        throw invalid_parameter("input is not internally even: inner vertex " + std::to_string(odd.front()) +
                                " has odd degree");
    ColouringTrace local;
    ColouringTrace& t = trace ? *trace : local;
    try {
        EntColourer colourer(t);
        return Colouring(3, colourer.colour(e));
    } catch (const invariant_violation&) {
        if (!options.oracle_fallback) throw;
        ++t.fallbacks;
        auto c = k_colour(e.graph(), 3, options.limits);
        if (!c) throw;
        return *c;
    }
}

std::optional<std::pair<int, int>> neighbourhood_path_ends(const Graph& g, int x) {
    const auto& nbrs = g.neighbours(x);
    if (nbrs.empty()) return std::nullopt;
    const auto sub = induced_subgraph(g, nbrs);
    const Graph& h = sub.graph;
    if (h.size() + 1 != static_cast<std::size_t>(h.order()) || !is_connected(h)) return std::nullopt;
    std::vector<int> ends;
    for (int v = 1; v <= h.order(); ++v) {
        if (h.degree(v) > 2) return std::nullopt;
        if (h.degree(v) <= 1) ends.push_back(sub.original[static_cast<std::size_t>(v - 1)]);
    }
    if (ends.size() == 1) return std::pair{ends[0], ends[0]};
    if (ends.size() != 2) return std::nullopt;
    return std::pair{ends[0], ends[1]};
}

bool lemma_endpoint_check(const Graph& g, int x, const Limits& limits) {
    if (!g.has_vertex(x)) throw invalid_parameter("unknown vertex " + std::to_string(x));
    if (g.degree(x) % 2 == 0) throw invalid_parameter("vertex " + std::to_string(x) + " has even degree");
    const auto ends = neighbourhood_path_ends(g, x);
    if (!ends) throw invalid_parameter("neighbours of " + std::to_string(x) + " do not induce a path");
    bool holds = true;
    const auto count = for_each_colouring(
        g, 3,
        [&](const Colouring& c) {
            holds = c.of(ends->first) == c.of(ends->second);
            return holds;
        },
        limits);
    if (count == 0) throw invalid_parameter("graph is not 3-colourable");
    return holds;
}

Decision decide_wr_near_triangulation(const Embedding& e, const Limits& limits, bool with_colouring) {
    if (!is_near_triangulation(e)) throw invalid_parameter("input is not a near-triangulation");
    const auto k4 = contains_k4(e.graph());
    if (k4) {
        Decision d = decide_word_representable(e.graph(), limits);
        d.open_problem = true;
        d.k4 = k4;
        return d;
    }
    Decision d;
    d.strategy = Strategy::structural;
    StructuralReason reason;
    const auto odd = odd_inner_vertices(e);
    reason.internally_even = odd.empty();
    if (!odd.empty()) reason.odd_inner_vertex = odd.front();
    if (reason.internally_even && with_colouring) reason.colouring = three_colour_ent(e, {false, limits});
    d.answer = reason.internally_even ? Answer::yes : Answer::no;
    d.certificate = std::move(reason);
    return d;
}

}  // namespace wrep
