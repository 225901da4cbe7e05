#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "wrep/error.hpp"
#include "wrep/planar.hpp"

namespace wrep {

namespace {

std::string walk_string(const std::vector<int>& walk) {
    std::ostringstream out;
    for (std::size_t i = 0; i < walk.size(); ++i) out << (i ? " " : "") << walk[i];
    return out.str();
}

bool same_cycle(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    for (std::size_t shift = 0; shift < a.size(); ++shift) {
        bool equal = true;
        for (std::size_t i = 0; i < a.size() && equal; ++i) equal = a[i] == b[(i + shift) % b.size()];
        if (equal) return true;
    }
    return false;
}

}  // namespace

Embedding::Embedding(Graph g, std::vector<std::vector<int>> rotation, std::vector<int> outer_walk)
    : graph_(std::move(g)) {
    const int n = graph_.order();
    if (n == 0) throw invalid_embedding("cannot embed the empty graph");
    if (rotation.size() != static_cast<std::size_t>(n))
        throw invalid_embedding("expected a rotation for each of " + std::to_string(n) + " vertices");
    rotation_.assign(1, {});
    for (int v = 1; v <= n; ++v) {
        auto& r = rotation[static_cast<std::size_t>(v - 1)];
        auto sorted = r;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != graph_.neighbours(v))
            throw invalid_embedding("rotation at " + std::to_string(v) + " is not a permutation of its neighbours");
        rotation_.push_back(std::move(r));
    }
    trace_faces();
    if (!satisfies_euler(*this)) throw invalid_embedding("rotation system is not planar (Euler check failed)");
    const auto it = std::find_if(faces_.begin(), faces_.end(),
                                 [&](const Face& f) { return same_cycle(f.walk, outer_walk); });
    if (it == faces_.end()) throw invalid_embedding("outer walk '" + walk_string(outer_walk) + "' is not a face");
    outer_ = static_cast<std::size_t>(it - faces_.begin());
}

int Embedding::predecessor(int v, int w) const {
    const auto& r = rotation(v);
    const auto it = std::find(r.begin(), r.end(), w);
    if (it == r.end()) throw invalid_parameter(std::to_string(w) + " is not a neighbour of " + std::to_string(v));
    const auto i = static_cast<std::size_t>(it - r.begin());
    return r[(i + r.size() - 1) % r.size()];
}

int Embedding::successor(int v, int w) const {
    const auto& r = rotation(v);
    const auto it = std::find(r.begin(), r.end(), w);
    if (it == r.end()) throw invalid_parameter(std::to_string(w) + " is not a neighbour of " + std::to_string(v));
    const auto i = static_cast<std::size_t>(it - r.begin());
    return r[(i + 1) % r.size()];
}

void Embedding::trace_faces() {
    const int n = graph_.order();
    std::set<std::pair<int, int>> used;
    faces_.clear();
    for (int u = 1; u <= n; ++u) {
        if (graph_.degree(u) == 0) {
            faces_.push_back(Face{{u}});
            continue;
        }
        for (int v : graph_.neighbours(u)) {
            if (used.count({u, v})) continue;
            Face face;
            int a = u, b = v;
            while (used.insert({a, b}).second) {
                face.walk.push_back(a);
                const int c = predecessor(b, a);
                a = b;
                b = c;
            }
            if (a != u || b != v) throw invalid_embedding("face traversal did not close");
            faces_.push_back(std::move(face));
        }
    }
}

Embedding Embedding::from_coordinates(Graph g, const std::vector<std::pair<double, double>>& coords) {
    const int n = g.order();
    if (coords.size() != static_cast<std::size_t>(n))
        throw invalid_parameter("expected coordinates for each of " + std::to_string(n) + " vertices");
    std::vector<std::vector<int>> rotation;
    for (int v = 1; v <= n; ++v) {
        auto r = g.neighbours(v);
        const auto [x, y] = coords[static_cast<std::size_t>(v - 1)];
        auto angle = [&](int w) {
            const auto [wx, wy] = coords[static_cast<std::size_t>(w - 1)];
            return std::atan2(wy - y, wx - x);
        };
        std::sort(r.begin(), r.end(), [&](int a, int b) { return angle(a) < angle(b); });
        rotation.push_back(std::move(r));
    }
    // Trace once with a throwaway outer face to pick the clockwise one.
    Embedding probe;
    probe.graph_ = g;
    probe.rotation_.assign(1, {});
    for (auto& r : rotation) probe.rotation_.push_back(r);
    probe.trace_faces();
    double best = 0.0;
    std::size_t best_index = 0;
    for (std::size_t i = 0; i < probe.faces_.size(); ++i) {
        const auto& walk = probe.faces_[i].walk;
        double area = 0.0;
        for (std::size_t j = 0; j < walk.size(); ++j) {
            const auto [x1, y1] = coords[static_cast<std::size_t>(walk[j] - 1)];
            const auto [x2, y2] = coords[static_cast<std::size_t>(walk[(j + 1) % walk.size()] - 1)];
            area += x1 * y2 - x2 * y1;
        }
        if (i == 0 || area < best) {
            best = area;
            best_index = i;
        }
    }
    if (probe.faces_.empty()) throw invalid_embedding("cannot embed the empty graph");
    auto outer = probe.faces_[best_index].walk;
    return Embedding(std::move(g), std::move(rotation), std::move(outer));
}

std::vector<Face> faces(const Embedding& e) { return e.faces(); }

bool satisfies_euler(const Embedding& e) {
    const auto& g = e.graph();
    const auto components = connected_components(g);
    std::vector<int> component_of(static_cast<std::size_t>(g.order()) + 1, 0);
    for (std::size_t c = 0; c < components.size(); ++c)
        for (int v : components[c]) component_of[v] = static_cast<int>(c);
    std::vector<long> chi(components.size(), 0);
    for (std::size_t c = 0; c < components.size(); ++c) chi[c] = static_cast<long>(components[c].size());
    for (const auto& edge : g.edges()) --chi[static_cast<std::size_t>(component_of[edge.u])];
    for (const auto& f : e.faces()) ++chi[static_cast<std::size_t>(component_of[f.walk.front()])];
    return std::all_of(chi.begin(), chi.end(), [](long x) { return x == 2; });
}

bool is_near_triangulation(const Embedding& e) {
    if (!is_connected(e.graph())) throw invalid_parameter("near-triangulation recognition needs a connected graph");
    const auto& fs = e.faces();
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i == e.outer_index()) continue;
        const auto& w = fs[i].walk;
        if (w.size() != 3 || w[0] == w[1] || w[1] == w[2] || w[0] == w[2]) return false;
    }
    return true;
}

VertexClasses classify_vertices(const Embedding& e) {
    std::vector<char> on_outer(static_cast<std::size_t>(e.graph().order()) + 1, 0);
    for (int v : e.outer_face().walk) on_outer[v] = 1;
    VertexClasses out;
    for (int v = 1; v <= e.graph().order(); ++v) (on_outer[v] ? out.boundary : out.inner).push_back(v);
    return out;
}

bool is_boundary_vertex(const Embedding& e, int v) {
    const auto& w = e.outer_face().walk;
    return std::find(w.begin(), w.end(), v) != w.end();
}

std::vector<int> odd_inner_vertices(const Embedding& e) {
    std::vector<int> out;
    for (int v : classify_vertices(e).inner)
        if (e.graph().degree(v) % 2 == 1) out.push_back(v);
    return out;
}

bool is_internally_even(const Embedding& e) {
    if (!is_near_triangulation(e)) throw invalid_parameter("internal evenness is defined for near-triangulations");
    return odd_inner_vertices(e).empty();
}

namespace {

std::vector<int> trace_walk(const std::vector<std::vector<int>>& rotation, int u, int v) {
    auto pred = [&](int at, int from) {
        const auto& r = rotation[static_cast<std::size_t>(at)];
        const auto i = static_cast<std::size_t>(std::find(r.begin(), r.end(), from) - r.begin());
        return r[(i + r.size() - 1) % r.size()];
    };
    std::vector<int> walk;
    int a = u, b = v;
    do {
        walk.push_back(a);
        const int c = pred(b, a);
        a = b;
        b = c;
    } while (a != u || b != v);
    return walk;
}

}  // namespace

std::vector<SubEmbedding> remove_boundary_vertex(const Embedding& e, int v) {
    const auto& g = e.graph();
    if (!g.has_vertex(v)) throw invalid_parameter("unknown vertex " + std::to_string(v));
    if (!is_boundary_vertex(e, v)) throw invalid_parameter("vertex " + std::to_string(v) + " is not on the outer face");
    const std::vector<int> removed{v};
    const Graph reduced = without_vertices(g, removed);
    std::vector<SubEmbedding> out;
    for (const auto& comp : connected_components(reduced, removed)) {
        auto sub = induced_subgraph(g, comp);
        std::vector<int> local(static_cast<std::size_t>(g.order()) + 1, 0);
        for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i) + 1;

        std::vector<std::vector<int>> rotation(comp.size() + 1);
        for (int u : comp)
            for (int w : e.rotation(u))
                if (w != v) rotation[static_cast<std::size_t>(local[u])].push_back(local[w]);

        std::vector<int> outer;
        if (comp.size() == 1) {
            outer = {1};
        } else {
            // The corner that held v at u: the dart from u to the old
            // predecessor of v starts the merged face.
            const auto anchor = std::find_if(comp.begin(), comp.end(), [&](int u) { return g.adjacent(u, v); });
            if (anchor == comp.end()) throw invalid_parameter("embedding is not connected");
            const int u = *anchor;
            const int p = e.predecessor(u, v);
            outer = trace_walk(rotation, local[u], local[p]);
        }
        rotation.erase(rotation.begin());
        out.push_back({Embedding(std::move(sub.graph), std::move(rotation), std::move(outer)), std::move(sub.original)});
    }
    return out;
}

NeighbourPaths neighbour_paths(const Embedding& e, int v) {
    const auto& g = e.graph();
    if (!g.has_vertex(v)) throw invalid_parameter("unknown vertex " + std::to_string(v));
    if (!is_boundary_vertex(e, v)) throw invalid_parameter("vertex " + std::to_string(v) + " is not on the outer face");
    const auto& r = e.rotation(v);
    const std::size_t d = r.size();
    NeighbourPaths out;
    if (d == 0) return out;

    // Corner i lies between r[i] and r[i+1]; it belongs to the face through
    // the darts r[i+1] -> v -> r[i].
    std::set<std::pair<int, int>> outer_darts;
    const auto& ow = e.outer_face().walk;
    for (std::size_t i = 0; i < ow.size(); ++i) outer_darts.insert({ow[i], ow[(i + 1) % ow.size()]});
    std::vector<char> outer_corner(d, 0);
    for (std::size_t i = 0; i < d; ++i) outer_corner[i] = outer_darts.count({v, r[i]}) ? 1 : 0;

    const auto first = static_cast<std::size_t>(std::find(outer_corner.begin(), outer_corner.end(), 1) - outer_corner.begin());
    if (first == d) throw invalid_parameter("vertex " + std::to_string(v) + " has no outer corner");
    for (std::size_t step = 0; step < d; ++step) {
        const std::size_t i = (first + step) % d;
        if (!outer_corner[i]) continue;
        std::vector<int> path{r[(i + 1) % d]};
        for (std::size_t j = (i + 1) % d; !outer_corner[j]; j = (j + 1) % d) path.push_back(r[(j + 1) % d]);
        out.paths.push_back(std::move(path));
    }

    // Every fan must be exactly one component of the neighbourhood.
    const auto nbhd = induced_subgraph(g, g.neighbours(v));
    std::map<int, int> fan_of;
    for (std::size_t p = 0; p < out.paths.size(); ++p) {
        const auto& path = out.paths[p];
        for (std::size_t i = 0; i < path.size(); ++i) {
            if (!fan_of.emplace(path[i], static_cast<int>(p)).second)
                throw invariant_violation("neighbour " + std::to_string(path[i]) + " of " + std::to_string(v) +
                                          " lies in two fans");
            if (i + 1 < path.size() && !g.adjacent(path[i], path[i + 1]))
                throw invariant_violation("fan around " + std::to_string(v) + " is not a path");
        }
    }
    for (const auto& edge : nbhd.graph.edges()) {
        const int a = nbhd.original[static_cast<std::size_t>(edge.u - 1)];
        const int b = nbhd.original[static_cast<std::size_t>(edge.v - 1)];
        if (fan_of.at(a) != fan_of.at(b))
            throw invariant_violation("neighbours " + std::to_string(a) + " and " + std::to_string(b) + " of " +
                                      std::to_string(v) + " are adjacent across fans");
    }
    std::size_t path_edges = 0;
    for (const auto& path : out.paths) path_edges += path.size() - 1;
    out.chorded = nbhd.graph.size() != path_edges;
    return out;
}

namespace {

int label_of(std::string_view token, int line) {
    if (token.empty() || token.back() != ':') throw parse_error("expected 'v:'", line);
    return parse_int(token.substr(0, token.size() - 1), line);
}

}  // namespace

Embedding parse_embedding_lines(std::span<const TextLine> lines) {
    std::size_t pos = 0;
    Graph g = parse_graph_lines(lines, pos);
    const int n = g.order();
    std::vector<std::optional<std::vector<int>>> rotation(static_cast<std::size_t>(n));
    std::vector<std::optional<std::pair<double, double>>> coords(static_cast<std::size_t>(n));
    std::optional<std::vector<int>> outer;
    bool any_rot = false, any_coord = false;
    for (; pos < lines.size(); ++pos) {
        const auto& line = lines[pos];
        auto tok = split_ws(line.text);
        if (tok.empty()) continue;
        if (tok[0] == "rot" || tok[0] == "coord") {
            if (tok.size() < 2) throw parse_error("missing vertex label", line.number);
            // Allow "rot 3:" and "rot 3 :" alike.
            std::string label = tok[1];
            std::size_t next = 2;
            if (label.back() != ':' && tok.size() > 2 && tok[2] == ":") {
                label += ':';
                next = 3;
            }
            const int v = label_of(label, line.number);
            if (v < 1 || v > n) throw parse_error("vertex " + std::to_string(v) + " out of range", line.number);
            if (tok[0] == "rot") {
                any_rot = true;
                if (rotation[v - 1]) throw parse_error("duplicate rotation for " + std::to_string(v), line.number);
                std::vector<int> r;
                for (std::size_t i = next; i < tok.size(); ++i) r.push_back(parse_int(tok[i], line.number));
                rotation[v - 1] = std::move(r);
            } else {
                any_coord = true;
                if (tok.size() != next + 2) throw parse_error("coord line must be 'coord v: x y'", line.number);
                if (coords[v - 1]) throw parse_error("duplicate coordinates for " + std::to_string(v), line.number);
                coords[v - 1] = {parse_double(tok[next], line.number), parse_double(tok[next + 1], line.number)};
            }
        } else if (tok[0] == "outer:" || (tok[0] == "outer" && tok.size() > 1 && tok[1] == ":")) {
            if (outer) throw parse_error("duplicate outer face", line.number);
            std::vector<int> walk;
            for (std::size_t i = tok[0] == "outer:" ? 1 : 2; i < tok.size(); ++i)
                walk.push_back(parse_int(tok[i], line.number));
            outer = std::move(walk);
        } else {
            throw parse_error("unexpected line '" + line.text + "'", line.number);
        }
    }
    const int last_line = lines.empty() ? 0 : lines.back().number;
    if (any_rot && any_coord) throw parse_error("give either rot/outer or coord lines, not both", last_line);
    if (any_coord) {
        if (outer) throw parse_error("outer face is computed from coordinates", last_line);
        std::vector<std::pair<double, double>> xy;
        for (int v = 1; v <= n; ++v) {
            if (!coords[v - 1]) throw parse_error("missing coordinates for " + std::to_string(v), last_line);
            xy.push_back(*coords[v - 1]);
        }
        return Embedding::from_coordinates(std::move(g), xy);
    }
    if (!outer) throw parse_error("missing outer face", last_line);
    std::vector<std::vector<int>> rot;
    for (int v = 1; v <= n; ++v) {
        if (!rotation[v - 1]) throw parse_error("missing rotation for " + std::to_string(v), last_line);
        rot.push_back(*rotation[v - 1]);
    }
    return Embedding(std::move(g), std::move(rot), std::move(*outer));
}

Embedding parse_embedding(std::string_view text) {
    const auto lines = data_lines(text);
    return parse_embedding_lines(lines);
}

std::string format_embedding(const Embedding& e) {
    std::ostringstream out;
    out << format_graph(e.graph());
    for (int v = 1; v <= e.graph().order(); ++v) {
        out << "rot " << v << ":";
        for (int w : e.rotation(v)) out << ' ' << w;
        out << '\n';
    }
    out << "outer: " << walk_string(e.outer_face().walk) << '\n';
    return out.str();
}

}  // namespace wrep
