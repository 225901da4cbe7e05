#include <algorithm>
#include <numeric>

#include "wrep/error.hpp"
#include "wrep/graph.hpp"

namespace wrep {

namespace {

void check_colour_cap(const Graph& g, const Limits& limits) {
    if (g.order() > limits.colour_vertices)
        throw resource_limit("colouring oracle capped at " + std::to_string(limits.colour_vertices) +
                             " vertices, graph has " + std::to_string(g.order()));
}

// Decreasing degree, ties by label.
std::vector<int> search_order(const Graph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.order()));
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return order;
}

class ColourSearch {
   public:
    ColourSearch(const Graph& g, int k, bool break_symmetry)
        : g_(g), k_(k), break_symmetry_(break_symmetry), order_(search_order(g)),
          colour_(static_cast<std::size_t>(g.order()), 0) {}

    template <typename Visit>
    bool run(Visit&& visit) {
        return step(0, 0, visit);
    }

   private:
    // Returns false once the visitor asks to stop.
    template <typename Visit>
    bool step(std::size_t depth, int max_used, Visit& visit) {
        if (depth == order_.size()) return visit(Colouring(k_, colour_));
        const int v = order_[depth];
        const int limit = break_symmetry_ ? std::min(k_, max_used + 1) : k_;
        for (int c = 1; c <= limit; ++c) {
            bool clash = false;
            for (int w : g_.neighbours(v))
                if (colour_[w - 1] == c) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            colour_[v - 1] = c;
            const bool keep_going = step(depth + 1, std::max(max_used, c), visit);
            colour_[v - 1] = 0;
            if (!keep_going) return false;
        }
        return true;
    }

    const Graph& g_;
    int k_;
    bool break_symmetry_;
    std::vector<int> order_;
    std::vector<int> colour_;
};

}  // namespace

bool is_proper_colouring(const Graph& g, const Colouring& c) {
    if (c.vertex_count() != static_cast<std::size_t>(g.order()))
        throw invalid_parameter("colouring covers " + std::to_string(c.vertex_count()) + " vertices, graph has " +
                                std::to_string(g.order()));
    for (int v = 1; v <= g.order(); ++v)
        if (c.of(v) == 0) throw invalid_parameter("vertex " + std::to_string(v) + " is uncoloured");
    return std::none_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) { return c.of(e.u) == c.of(e.v); });
}

std::optional<Colouring> k_colour(const Graph& g, int k, const Limits& limits) {
    if (k < 1) throw invalid_parameter("k must be at least 1");
    check_colour_cap(g, limits);
    std::optional<Colouring> found;
    ColourSearch search(g, k, true);
    search.run([&](const Colouring& c) {
        found = c;
        return false;
    });
    return found;
}

std::size_t for_each_colouring(const Graph& g, int k, const std::function<bool(const Colouring&)>& visit,
                               const Limits& limits) {
    if (k < 1) throw invalid_parameter("k must be at least 1");
    check_colour_cap(g, limits);
    std::size_t count = 0;
    ColourSearch search(g, k, false);
    search.run([&](const Colouring& c) {
        ++count;
        return visit(c);
    });
    return count;
}

int chromatic_number(const Graph& g, const Limits& limits) {
    if (g.order() == 0) throw invalid_parameter("chromatic number of the empty graph");
    check_colour_cap(g, limits);
    for (int k = 1;; ++k)
        if (k_colour(g, k, limits)) return k;
}

std::optional<std::array<int, 4>> contains_k4(const Graph& g) {
    // Lexicographic order over a < b < c < d restricted to common neighbours.
    for (int a = 1; a <= g.order(); ++a)
        for (int b : g.neighbours(a)) {
            if (b <= a) continue;
            for (int c : g.neighbours(b)) {
                if (c <= b || !g.adjacent(a, c)) continue;
                for (int d : g.neighbours(c))
                    if (d > c && g.adjacent(a, d) && g.adjacent(b, d)) return std::array<int, 4>{a, b, c, d};
            }
        }
    return std::nullopt;
}

namespace {

void grow_clique(const Graph& g, std::vector<int>& candidates, int size, int& best) {
    best = std::max(best, size);
    while (!candidates.empty()) {
        if (size + static_cast<int>(candidates.size()) <= best) return;
        const int v = candidates.back();
        candidates.pop_back();
        std::vector<int> next;
        for (int w : candidates)
            if (g.adjacent(v, w)) next.push_back(w);
        grow_clique(g, next, size + 1, best);
    }
}

}  // namespace

int max_clique_size(const Graph& g) {
    std::vector<int> all(static_cast<std::size_t>(g.order()));
    std::iota(all.begin(), all.end(), 1);
    int best = 0;
    grow_clique(g, all, 0, best);
    return best;
}

namespace {

void extend_rim(const Graph& g, const std::vector<char>& in_nbhd, std::vector<int>& path, int hub,
                std::size_t min_rim, std::vector<Wheel>& out) {
    const int start = path.front();
    const int last = path.back();
    for (int x : g.neighbours(last)) {
        if (x <= start || !in_nbhd[x] || std::find(path.begin(), path.end(), x) != path.end()) continue;
        // x must not touch the interior of the path.
        bool chord = false;
        for (std::size_t i = 1; i + 1 < path.size(); ++i)
            if (g.adjacent(x, path[i])) {
                chord = true;
                break;
            }
        if (chord) continue;
        if (path.size() >= 2 && g.adjacent(x, start)) {
            if (path[1] < x && path.size() + 1 >= min_rim) {
                Wheel w{hub, path};
                w.rim.push_back(x);
                out.push_back(std::move(w));
            }
            continue;
        }
        path.push_back(x);
        extend_rim(g, in_nbhd, path, hub, min_rim, out);
        path.pop_back();
    }
}

}  // namespace

std::vector<Wheel> find_induced_wheels(const Graph& g, int min_rim) {
    if (min_rim < 3) throw invalid_parameter("wheel rim must have at least 3 vertices");
    std::vector<Wheel> out;
    std::vector<char> in_nbhd(static_cast<std::size_t>(g.order()) + 1, 0);
    for (int hub = 1; hub <= g.order(); ++hub) {
        const auto& nbrs = g.neighbours(hub);
        if (static_cast<int>(nbrs.size()) < min_rim) continue;
        for (int v : nbrs) in_nbhd[v] = 1;
        std::vector<Wheel> found;
        for (int s : nbrs) {
            std::vector<int> path{s};
            extend_rim(g, in_nbhd, path, hub, static_cast<std::size_t>(min_rim), found);
        }
        for (int v : nbrs) in_nbhd[v] = 0;
        std::sort(found.begin(), found.end(), [](const Wheel& a, const Wheel& b) { return a.rim < b.rim; });
        out.insert(out.end(), found.begin(), found.end());
    }
    return out;
}

bool is_induced_wheel(const Graph& g, const Wheel& w) {
    const auto& rim = w.rim;
    const std::size_t r = rim.size();
    if (r < 3 || !g.has_vertex(w.hub)) return false;
    std::vector<int> sorted = rim;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    if (std::binary_search(sorted.begin(), sorted.end(), w.hub)) return false;
    for (std::size_t i = 0; i < r; ++i) {
        if (!g.has_vertex(rim[i]) || !g.adjacent(w.hub, rim[i])) return false;
        for (std::size_t j = i + 1; j < r; ++j) {
            const bool consecutive = j == i + 1 || (i == 0 && j == r - 1);
            if (g.adjacent(rim[i], rim[j]) != consecutive) return false;
        }
    }
    return true;
}

bool is_perfect(const Graph& g, const Limits& limits) {
    const int n = g.order();
    if (n > limits.perfect_vertices)
        throw resource_limit("perfectness check capped at " + std::to_string(limits.perfect_vertices) +
                             " vertices, graph has " + std::to_string(n));
    Limits inner = limits;
    inner.colour_vertices = std::max(inner.colour_vertices, n);
    std::vector<int> subset;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        subset.clear();
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) subset.push_back(v + 1);
        const Graph h = induced_subgraph(g, subset).graph;
        if (chromatic_number(h, inner) != max_clique_size(h)) return false;
    }
    return true;
}

}  // namespace wrep
