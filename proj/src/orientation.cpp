#include "wrep/orientation.hpp"

#include <algorithm>

#include "wrep/error.hpp"

namespace wrep {

Orientation::Orientation(Graph base, std::vector<Arc> arcs) : base_(std::move(base)) {
    const auto& edges = base_.edges();
    if (arcs.size() != edges.size())
        throw invalid_parameter("orientation has " + std::to_string(arcs.size()) + " arcs for " +
                                std::to_string(edges.size()) + " edges");
    std::vector<std::pair<Edge, Arc>> keyed;
    for (const auto& a : arcs) {
        if (!base_.adjacent(a.from, a.to))
            throw invalid_parameter("arc " + std::to_string(a.from) + "->" + std::to_string(a.to) + " is not an edge");
        keyed.push_back({Edge{std::min(a.from, a.to), std::max(a.from, a.to)}, a});
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t i = 0; i < keyed.size(); ++i)
        if (!(keyed[i].first == edges[i])) throw invalid_parameter("edge directed twice");
    out_.assign(static_cast<std::size_t>(base_.order()) + 1, {});
    for (auto& [e, a] : keyed) {
        arcs_.push_back(a);
        out_[a.from].push_back(a.to);
    }
    for (auto& list : out_) std::sort(list.begin(), list.end());
}

bool Orientation::has_arc(int from, int to) const {
    if (!base_.has_vertex(from)) return false;
    const auto& s = out_[from];
    return std::binary_search(s.begin(), s.end(), to);
}

bool is_acyclic(const Orientation& d) {
    const int n = d.base().order();
    std::vector<int> indeg(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& a : d.arcs()) ++indeg[a.to];
    std::vector<int> ready;
    for (int v = 1; v <= n; ++v)
        if (indeg[v] == 0) ready.push_back(v);
    int removed = 0;
    while (!ready.empty()) {
        const int v = ready.back();
        ready.pop_back();
        ++removed;
        for (int w : d.successors(v))
            if (--indeg[w] == 0) ready.push_back(w);
    }
    return removed == n;
}

namespace {

// Depth-first enumeration of directed paths in lexicographic order. On an
// acyclic orientation every walk is a path, and a pair vi, vj (i < j) on it
// is either joined by vi -> vj or not adjacent at all.
bool scan_paths(const Orientation& d, std::vector<int>& path, std::optional<Shortcut>& found) {
    if (path.size() >= 4 && d.has_arc(path.front(), path.back())) {
        for (std::size_t i = 0; i < path.size(); ++i)
            for (std::size_t j = i + 1; j < path.size(); ++j)
                if (!d.has_arc(path[i], path[j])) {
                    found = Shortcut{path, Arc{path[i], path[j]}};
                    return true;
                }
    }
    for (int w : d.successors(path.back())) {
        path.push_back(w);
        if (scan_paths(d, path, found)) return true;
        path.pop_back();
    }
    return false;
}

}  // namespace

std::optional<Shortcut> find_shortcut(const Orientation& d) {
    if (!is_acyclic(d)) throw invalid_parameter("shortcut search needs an acyclic orientation");
    std::optional<Shortcut> found;
    for (int s = 1; s <= d.base().order(); ++s) {
        std::vector<int> path{s};
        if (scan_paths(d, path, found)) return found;
    }
    return std::nullopt;
}

bool is_semi_transitive(const Orientation& d) { return is_acyclic(d) && !find_shortcut(d); }

namespace {

// Backtracking over edge directions. After each newly fixed arc a->b the
// partial orientation is checked for a cycle through a->b and for a shortcut
// made only of fixed arcs that uses a->b (as its long arc or along its path).
// A shortcut among fixed arcs survives every completion, since the missing
// pair must be non-adjacent once the partial orientation is acyclic.
class OrientationSearch {
   public:
    explicit OrientationSearch(const Graph& g)
        : g_(g), n_(g.order()), out_(static_cast<std::size_t>(n_) + 1), in_(static_cast<std::size_t>(n_) + 1),
          arc_(static_cast<std::size_t>((n_ + 1) * (n_ + 1)), 0) {}

    std::optional<std::vector<Arc>> run() {
        chosen_.clear();
        if (assign(0)) return chosen_;
        return std::nullopt;
    }

    std::size_t nodes() const noexcept { return nodes_; }

   private:
    bool fixed(int u, int v) const { return arc_[static_cast<std::size_t>(u) * (n_ + 1) + v] != 0; }

    void add(int a, int b) {
        out_[a].push_back(b);
        in_[b].push_back(a);
        arc_[static_cast<std::size_t>(a) * (n_ + 1) + b] = 1;
    }

    void remove(int a, int b) {
        out_[a].pop_back();
        in_[b].pop_back();
        arc_[static_cast<std::size_t>(a) * (n_ + 1) + b] = 0;
    }

    bool reaches(int from, int to) {
        std::vector<char> seen(static_cast<std::size_t>(n_) + 1, 0);
        std::vector<int> stack{from};
        seen[from] = 1;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            if (u == to) return true;
            for (int w : out_[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        return false;
    }

    bool clique(const std::vector<int>& path) const {
        for (std::size_t i = 0; i < path.size(); ++i)
            for (std::size_t j = i + 1; j < path.size(); ++j)
                if (!g_.adjacent(path[i], path[j])) return false;
        return true;
    }

    // Extends `path` forward from its last vertex; reports a shortcut when the
    // path reaches a vertex w with a fixed arc path.front() -> w. `skip` is an
    // arc the path may not use.
    bool forward_shortcut(std::vector<int>& path, int target, Arc skip) {
        const int u = path.back();
        for (int w : out_[u]) {
            if (u == skip.from && w == skip.to) continue;
            path.push_back(w);
            const bool closes = target == 0 ? fixed(path.front(), w) : w == target;
            if (closes && path.size() >= 4 && !clique(path)) return true;
            if (target == 0 || w != target)
                if (forward_shortcut(path, target, skip)) return true;
            path.pop_back();
        }
        return false;
    }

    // Backward paths ending in a, each then extended forward through a->b.
    bool backward_shortcut(std::vector<int>& reversed_prefix, int a, int b) {
        std::vector<int> path(reversed_prefix.rbegin(), reversed_prefix.rend());
        path.push_back(b);
        if (path.front() != a && fixed(path.front(), b) && path.size() >= 4 && !clique(path)) return true;
        if (forward_shortcut(path, 0, Arc{})) return true;
        const int u = reversed_prefix.back();
        for (int p : in_[u]) {
            reversed_prefix.push_back(p);
            if (backward_shortcut(reversed_prefix, a, b)) return true;
            reversed_prefix.pop_back();
        }
        return false;
    }

    bool creates_shortcut(int a, int b) {
        std::vector<int> path{a};
        if (forward_shortcut(path, b, Arc{a, b})) return true;
        std::vector<int> prefix{a};
        return backward_shortcut(prefix, a, b);
    }

    bool assign(std::size_t index) {
        ++nodes_;
        const auto& edges = g_.edges();
        if (index == edges.size()) return true;
        const auto [u, v] = edges[index];
        for (const Arc arc : {Arc{u, v}, Arc{v, u}}) {
            add(arc.from, arc.to);
            if (!reaches(arc.to, arc.from) && !creates_shortcut(arc.from, arc.to)) {
                chosen_.push_back(arc);
                if (assign(index + 1)) return true;
                chosen_.pop_back();
            }
            remove(arc.from, arc.to);
        }
        return false;
    }

    const Graph& g_;
    int n_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
    std::vector<char> arc_;
    std::vector<Arc> chosen_;
    std::size_t nodes_ = 0;
};

}  // namespace

Decision decide_word_representable(const Graph& g, const Limits& limits) {
    Decision d;
    d.k4 = contains_k4(g);
    d.open_problem = d.k4.has_value();

    for (auto& w : find_induced_wheels(g, 5)) {
        if (w.rim.size() % 2 == 1) {
            d.answer = Answer::no;
            d.strategy = Strategy::odd_wheel;
            d.certificate = std::move(w);
            return d;
        }
    }

    if (static_cast<int>(g.size()) > limits.orientation_edges) {
        d.answer = Answer::unknown;
        d.strategy = Strategy::resource_limit;
        d.certificate = ExhaustedResources{"orientation search capped at " + std::to_string(limits.orientation_edges) +
                                           " edges, graph has " + std::to_string(g.size())};
        return d;
    }

    OrientationSearch search(g);
    auto arcs = search.run();
    d.strategy = Strategy::orientation_search;
    if (!arcs) {
        d.answer = Answer::no;
        d.certificate = ExhaustedSearch{search.nodes()};
        return d;
    }
    Orientation o(g, std::move(*arcs));
    if (!is_semi_transitive(o))
        throw invariant_violation("orientation search accepted an orientation that is not semi-transitive:\n" +
                                  format_graph(g));
    d.answer = Answer::yes;
    d.certificate = std::move(o);
    return d;
}

const char* to_string(Answer a) {
    switch (a) {
        case Answer::yes: return "yes";
        case Answer::no: return "no";
        case Answer::unknown: return "unknown";
    }
    return "?";
}

const char* to_string(Strategy s) {
    switch (s) {
        case Strategy::odd_wheel: return "odd-wheel";
        case Strategy::orientation_search: return "orientation-search";
        case Strategy::structural: return "structural";
        case Strategy::resource_limit: return "resource-limit";
    }
    return "?";
}

}  // namespace wrep
