#include <algorithm>
#include <cctype>

#include "wrep/error.hpp"
#include "wrep/harness.hpp"

namespace wrep {

const char* to_string(InputKind k) {
    switch (k) {
        case InputKind::graph: return "graph";
        case InputKind::embedding: return "embedding";
        case InputKind::polyomino: return "polyomino";
        case InputKind::triangulation: return "triangulation";
    }
    return "?";
}

namespace {

bool is_number(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Instance load_instance(std::string_view text, const Limits& limits) {
    const auto lines = data_lines(text);
    if (lines.empty()) throw parse_error("input has no data lines", 0);
    Instance out;
    const auto head = split_ws(lines.front().text);
    if (head.size() == 2 && is_number(head[0]) && is_number(head[1])) {
        const bool embedded = std::any_of(lines.begin(), lines.end(), [](const TextLine& l) {
            return starts_with_keyword(l.text, "rot") || starts_with_keyword(l.text, "coord") ||
                   starts_with_keyword(l.text, "outer");
        });
        if (embedded) {
            out.kind = InputKind::embedding;
            out.embedding = parse_embedding_lines(lines);
            out.graph = out.embedding->graph();
            return out;
        }
        std::size_t pos = 0;
        out.kind = InputKind::graph;
        out.graph = parse_graph_lines(lines, pos);
        if (pos != lines.size()) throw parse_error("unexpected line '" + lines[pos].text + "'", lines[pos].number);
        return out;
    }
    const bool diagonals = std::any_of(lines.begin(), lines.end(),
                                       [](const TextLine& l) { return starts_with_keyword(l.text, "diag"); });
    if (!diagonals) {
        out.kind = InputKind::polyomino;
        out.polyomino = parse_polyomino_lines(lines);
        return out;
    }
    out.kind = InputKind::triangulation;
    out.triangulation = parse_triangulation_lines(lines, limits);
    out.polyomino = out.triangulation->base();
    auto lattice = to_graph(*out.triangulation);
    out.points = std::move(lattice.points);
    out.embedding = std::move(lattice.embedding);
    out.graph = out.embedding->graph();
    return out;
}

}  // namespace wrep
