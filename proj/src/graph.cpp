#include "wrep/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "wrep/error.hpp"

namespace wrep {

Graph::Graph(int n) : Graph(n, std::vector<Edge>{}) {}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n, [&] {
    std::vector<Edge> list;
    list.reserve(edges.size());
    for (auto [u, v] : edges) list.push_back({u, v});
    return list;
}()) {}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw invalid_parameter("negative vertex count");
    for (auto& e : edges) {
        if (e.u == e.v) throw invalid_parameter("loop at vertex " + std::to_string(e.u));
        if (!has_vertex(e.u) || !has_vertex(e.v))
            throw invalid_parameter("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " outside 1.." +
                                    std::to_string(n));
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
        throw invalid_parameter("duplicate edge " + std::to_string(dup->u) + "-" + std::to_string(dup->v));
    edges_ = std::move(edges);

    adj_.assign(static_cast<std::size_t>(n) + 1, {});
    matrix_.assign(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1), 0);
    for (const auto& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
        matrix_[static_cast<std::size_t>(e.u) * (n + 1) + e.v] = 1;
        matrix_[static_cast<std::size_t>(e.v) * (n + 1) + e.u] = 1;
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool Graph::adjacent(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v)) return false;
    return matrix_[static_cast<std::size_t>(u) * (n_ + 1) + v] != 0;
}

const std::vector<int>& Graph::neighbours(int v) const {
    if (!has_vertex(v)) throw invalid_parameter("unknown vertex " + std::to_string(v));
    return adj_[v];
}

Colouring::Colouring(int k, std::vector<int> colours) : k_(k), colours_(std::move(colours)) {
    if (k < 0) throw invalid_parameter("negative colour count");
    for (int c : colours_)
        if (c < 0 || c > k) throw invalid_parameter("colour " + std::to_string(c) + " outside 1.." + std::to_string(k));
}

int Colouring::used() const {
    std::set<int> seen;
    for (int c : colours_)
        if (c != 0) seen.insert(c);
    return static_cast<int>(seen.size());
}

Graph make_cycle(int n) {
    if (n < 3) throw invalid_parameter("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) edges.push_back({i, i % n + 1});
    return Graph(n, std::move(edges));
}

Graph make_wheel(int n) {
    if (n < 3) throw invalid_parameter("wheel rim needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) {
        edges.push_back({i, i % n + 1});
        edges.push_back({i, n + 1});
    }
    return Graph(n + 1, std::move(edges));
}

Graph make_complete(int n) {
    if (n < 1) throw invalid_parameter("complete graph needs at least 1 vertex");
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

LabelledGraph induced_subgraph(const Graph& g, std::span<const int> subset) {
    std::vector<int> original(subset.begin(), subset.end());
    std::sort(original.begin(), original.end());
    original.erase(std::unique(original.begin(), original.end()), original.end());
    std::vector<int> index(static_cast<std::size_t>(g.order()) + 1, 0);
    for (std::size_t i = 0; i < original.size(); ++i) {
        if (!g.has_vertex(original[i]))
            throw invalid_parameter("vertex " + std::to_string(original[i]) + " not in graph");
        index[original[i]] = static_cast<int>(i) + 1;
    }
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        if (index[e.u] != 0 && index[e.v] != 0) edges.push_back({index[e.u], index[e.v]});
    return {Graph(static_cast<int>(original.size()), std::move(edges)), std::move(original)};
}

Graph without_vertices(const Graph& g, std::span<const int> removed) {
    std::vector<char> gone(static_cast<std::size_t>(g.order()) + 1, 0);
    for (int v : removed)
        if (g.has_vertex(v)) gone[v] = 1;
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        if (!gone[e.u] && !gone[e.v]) edges.push_back(e);
    return Graph(g.order(), std::move(edges));
}

std::vector<std::vector<int>> connected_components(const Graph& g, std::span<const int> removed) {
    const int n = g.order();
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : removed)
        if (g.has_vertex(v)) seen[v] = 1;
    std::vector<std::vector<int>> components;
    std::vector<int> stack;
    for (int s = 1; s <= n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : g.neighbours(u)) {
                if (seen[w]) continue;
                seen[w] = 1;
                stack.push_back(w);
            }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

std::vector<std::vector<int>> connected_components(const Graph& g) { return connected_components(g, {}); }

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::vector<int> articulation_points(const Graph& g) {
    // Iterative Hopcroft-Tarjan lowpoint computation.
    const int n = g.order();
    std::vector<int> disc(static_cast<std::size_t>(n) + 1, 0), low(disc), parent(disc);
    std::vector<std::size_t> next(static_cast<std::size_t>(n) + 1, 0);
    std::vector<char> cut(static_cast<std::size_t>(n) + 1, 0);
    int timer = 0;
    for (int root = 1; root <= n; ++root) {
        if (disc[root] != 0) continue;
        int root_children = 0;
        std::vector<int> stack{root};
        disc[root] = low[root] = ++timer;
        while (!stack.empty()) {
            const int u = stack.back();
            const auto& nbrs = g.neighbours(u);
            if (next[u] < nbrs.size()) {
                const int w = nbrs[next[u]++];
                if (disc[w] == 0) {
                    parent[w] = u;
                    disc[w] = low[w] = ++timer;
                    if (u == root) ++root_children;
                    stack.push_back(w);
                } else if (w != parent[u]) {
                    low[u] = std::min(low[u], disc[w]);
                }
                continue;
            }
            stack.pop_back();
            if (u == root) continue;
            const int p = parent[u];
            low[p] = std::min(low[p], low[u]);
            if (p != root && low[u] >= disc[p]) cut[p] = 1;
        }
        if (root_children >= 2) cut[root] = 1;
    }
    std::vector<int> out;
    for (int v = 1; v <= n; ++v)
        if (cut[v]) out.push_back(v);
    return out;
}

Graph parse_graph_lines(std::span<const TextLine> lines, std::size_t& pos) {
    if (pos >= lines.size()) throw parse_error("missing 'n m' header", 0);
    const auto& header = lines[pos];
    const auto head = split_ws(header.text);
    if (head.size() != 2) throw parse_error("header must be 'n m'", header.number);
    const int n = parse_int(head[0], header.number);
    const int m = parse_int(head[1], header.number);
    if (n < 0 || m < 0) throw parse_error("negative count in header", header.number);
    ++pos;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    for (int i = 0; i < m; ++i, ++pos) {
        if (pos >= lines.size())
            throw parse_error("expected " + std::to_string(m) + " edges, found " + std::to_string(i), header.number);
        const auto& line = lines[pos];
        const auto tok = split_ws(line.text);
        if (tok.size() != 2) throw parse_error("edge line must be 'u v'", line.number);
        const int u = parse_int(tok[0], line.number);
        const int v = parse_int(tok[1], line.number);
        if (u < 1 || v > n || u >= v)
            throw parse_error("edge must satisfy 1 <= u < v <= n", line.number);
        if (!seen.insert({u, v}).second) throw parse_error("duplicate edge", line.number);
        edges.push_back({u, v});
    }
    return Graph(n, std::move(edges));
}

Graph parse_graph(std::string_view text) {
    const auto lines = data_lines(text);
    std::size_t pos = 0;
    Graph g = parse_graph_lines(lines, pos);
    if (pos != lines.size()) throw parse_error("trailing content after edge list", lines[pos].number);
    return g;
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

}  // namespace wrep
