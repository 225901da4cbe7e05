#include "wrep/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wrep/error.hpp"
#include "wrep/fixtures.hpp"
#include "wrep/harness.hpp"

namespace wrep {

namespace {

using nlohmann::json;

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path);
    if (!in) throw invalid_parameter("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

json point_list(const std::vector<LatticePoint>& points) {
    json a = json::array();
    for (const auto p : points) a.push_back({p.x, p.y});
    return a;
}

json certificate_json(const Certificate& c) {
    return std::visit(
        [](const auto& x) -> json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return nullptr;
            } else if constexpr (std::is_same_v<T, Orientation>) {
                json arcs = json::array();
                for (const auto& a : x.arcs()) arcs.push_back({a.from, a.to});
                return {{"type", "semi-transitive-orientation"}, {"arcs", arcs}};
            } else if constexpr (std::is_same_v<T, Wheel>) {
                return {{"type", "induced-odd-wheel"}, {"hub", x.hub}, {"rim", x.rim}};
            } else if constexpr (std::is_same_v<T, Word>) {
                return {{"type", "word"}, {"word", x.to_string()}};
            } else if constexpr (std::is_same_v<T, StructuralReason>) {
                json j{{"type", "structural"}, {"internally_even", x.internally_even}};
                j["odd_inner_vertex"] = x.odd_inner_vertex ? json(*x.odd_inner_vertex) : json(nullptr);
                if (x.colouring) j["colouring"] = std::vector<int>(x.colouring->values().begin(), x.colouring->values().end());
                return j;
            } else if constexpr (std::is_same_v<T, ExhaustedSearch>) {
                return {{"type", "exhausted-search"}, {"nodes", x.nodes}};
            } else {
                return {{"type", "resource-limit"}, {"reason", x.reason}};
            }
        },
        c);
}

void render(const json& j, std::ostream& out, int indent);

std::string inline_value(const json& v) {
    if (v.is_null()) return "none";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_array()) {
        std::string s;
        for (const auto& e : v) {
            if (!s.empty()) s += e.is_array() ? "  " : " ";
            if (e.is_array()) {
                std::string inner;
                for (const auto& x : e) inner += (inner.empty() ? "" : ",") + inline_value(x);
                s += inner;
            } else {
                s += inline_value(e);
            }
        }
        return s;
    }
    if (v.is_object()) {
        std::string s;
        for (const auto& [k, x] : v.items()) s += (s.empty() ? "" : ", ") + k + " " + inline_value(x);
        return s;
    }
    return v.dump();
}

void render(const json& j, std::ostream& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (const auto& [key, v] : j.items()) {
        if (v.is_object()) {
            out << pad << key << ":\n";
            render(v, out, indent + 2);
        } else if (v.is_array() && !v.empty() && v.front().is_object()) {
            out << pad << key << ":\n";
            for (const auto& e : v) out << pad << "  - " << inline_value(e) << '\n';
        } else if (v.is_string() && v.get<std::string>().find('\n') != std::string::npos) {
            out << pad << key << ":\n";
            std::istringstream lines(v.get<std::string>());
            for (std::string line; std::getline(lines, line);) out << pad << "  " << line << '\n';
        } else {
            out << pad << key << ": " << inline_value(v) << '\n';
        }
    }
}

void emit(const json& j, const Config& c, std::ostream& out) {
    if (c.format == OutputFormat::json)
        out << j.dump(2) << '\n';
    else
        render(j, out, 0);
}

int answer_code(Answer a) { return a == Answer::yes ? 0 : a == Answer::no ? 1 : 3; }

json decision_json(const Decision& d) {
    json j{{"answer", to_string(d.answer)}, {"strategy", to_string(d.strategy)}, {"open_problem", d.open_problem}};
    j["k4"] = d.k4 ? json(*d.k4) : json(nullptr);
    j["certificate"] = certificate_json(d.certificate);
    return j;
}

int cmd_decide(const std::string& path, const Config& c, std::ostream& out) {
    const Instance in = load_instance(read_input(path), c.limits);
    if (!in.graph) throw invalid_parameter("decide needs a graph, embedding or triangulation, not a bare polyomino");
    const bool nt = in.embedding && is_connected(*in.graph) && is_near_triangulation(*in.embedding);
    const Decision d = nt ? decide_wr_near_triangulation(*in.embedding, c.limits)
                          : decide_word_representable(*in.graph, c.limits);
    json j{{"command", "decide"}, {"input", to_string(in.kind)}, {"near_triangulation", nt}};
    j.update(decision_json(d));
    if (!in.points.empty()) j["vertex_positions"] = point_list(in.points);
    emit(j, c, out);
    return answer_code(d.answer);
}

int cmd_colour(const std::string& path, const Config& c, std::ostream& out) {
    const Instance in = load_instance(read_input(path), c.limits);
    if (!in.embedding) throw invalid_parameter("colour needs an embedding or a triangulation");
    if (!is_connected(*in.graph) || !is_near_triangulation(*in.embedding))
        throw invalid_parameter("input is not a near-triangulation");
    json j{{"command", "colour"}, {"input", to_string(in.kind)}};
    const auto odd = odd_inner_vertices(*in.embedding);
    if (!odd.empty()) {
        j["internally_even"] = false;
        j["odd_inner_vertex"] = odd.front();
        j["degree"] = in.graph->degree(odd.front());
        if (!in.points.empty()) j["position"] = point_list({in.points[static_cast<std::size_t>(odd.front() - 1)]});
        emit(j, c, out);
        return 1;
    }
    ColouringTrace trace;
    const Colouring col = three_colour_ent(*in.embedding, {c.oracle_fallback, c.limits}, &trace);
    j["internally_even"] = true;
    j["colouring"] = std::vector<int>(col.values().begin(), col.values().end());
    j["proper"] = is_proper_colouring(*in.graph, col);
    j["trace"] = {{"removals", trace.removals},
                  {"two_coloured_neighbourhoods", trace.two_coloured_neighbourhoods},
                  {"swaps", trace.swaps},
                  {"component_permutations", trace.component_permutations},
                  {"fallbacks", trace.fallbacks}};
    if (!in.points.empty()) j["vertex_positions"] = point_list(in.points);
    emit(j, c, out);
    return 0;
}

json polyomino_json(const Polyomino& p) {
    json j{{"cells", p.cells().size()}, {"tiles", p.tile_count()}};
    json sizes = json::array();
    for (const auto& t : p.tiles()) sizes.push_back(t.size());
    j["tile_sizes"] = sizes;
    const auto hole = find_internal_hole(p);
    j["internal_hole"] = hole ? json({hole->x, hole->y}) : json(nullptr);
    j["row_convex"] = is_row_convex(p);
    j["column_convex"] = is_column_convex(p);
    j["convex"] = is_convex(p);
    return j;
}

json graph_json(const Graph& g, const Limits& limits) {
    json j{{"vertices", g.order()}, {"edges", g.size()}, {"connected", is_connected(g)}};
    const auto k4 = contains_k4(g);
    j["k4"] = k4 ? json(*k4) : json(nullptr);
    json wheels = json::array();
    for (const auto& w : find_induced_wheels(g, 5))
        if (w.rim.size() % 2 == 1) wheels.push_back({{"hub", w.hub}, {"rim", w.rim}});
    j["induced_odd_wheels"] = wheels;
    j["articulation_points"] = articulation_points(g);
    j["max_clique"] = max_clique_size(g);
    if (g.order() >= 1 && g.order() <= limits.colour_vertices)
        j["chromatic_number"] = chromatic_number(g, limits);
    else
        j["chromatic_number"] = nullptr;
    return j;
}

json embedding_json(const Embedding& e) {
    json j{{"faces", e.faces().size()}, {"outer_face", e.outer_face().walk}, {"euler", satisfies_euler(e)}};
    const bool nt = is_connected(e.graph()) && is_near_triangulation(e);
    j["near_triangulation"] = nt;
    if (nt) {
        const auto classes = classify_vertices(e);
        j["inner"] = classes.inner;
        j["boundary"] = classes.boundary;
        j["odd_inner_vertices"] = odd_inner_vertices(e);
        j["internally_even"] = is_internally_even(e);
    }
    return j;
}

int cmd_recognize(const std::string& path, const Config& c, std::ostream& out) {
    const Instance in = load_instance(read_input(path), c.limits);
    json j{{"command", "recognize"}, {"input", to_string(in.kind)}};
    if (in.polyomino) j["polyomino"] = polyomino_json(*in.polyomino);
    if (in.graph) j["graph"] = graph_json(*in.graph, c.limits);
    if (in.embedding) j["embedding"] = embedding_json(*in.embedding);
    if (!in.points.empty()) j["vertex_positions"] = point_list(in.points);
    emit(j, c, out);
    return 0;
}

int cmd_witness(const std::string& path, int k_max, const Config& c, std::ostream& out) {
    const Instance in = load_instance(read_input(path), c.limits);
    if (!in.graph) throw invalid_parameter("witness needs a graph");
    if (k_max == 0) k_max = std::max(1, in.graph->order());
    json j{{"command", "witness"}, {"k_max", k_max}};
    const auto w = find_representing_word(*in.graph, k_max, c.limits);
    if (!w) {
        j["word"] = nullptr;
        j["message"] = "no uniform word with at most " + std::to_string(k_max) +
                       " copies of each letter; this says nothing about representability, run decide for a verdict";
        emit(j, c, out);
        return 3;
    }
    j["word"] = w->to_string();
    j["uniformity"] = in.graph->order() == 0 ? 0 : w->length() / static_cast<std::size_t>(in.graph->order());
    j["verified"] = represents(*w, *in.graph);
    emit(j, c, out);
    return 0;
}

int cmd_verify(const std::string& id, const Config& c, std::ostream& out) {
    const Report r = run_campaign(id, c);
    out << (c.format == OutputFormat::json ? report_json(r) + "\n" : report_human(r));
    return exit_code(r);
}

int cmd_generate(const std::vector<std::string>& args, const Config& c, std::ostream& out) {
    if (args.empty()) throw invalid_parameter("generate needs a kind");
    const std::string& kind = args[0];
    auto number = [&]() {
        if (args.size() != 2) throw invalid_parameter("generate " + kind + " needs one number");
        return parse_int(args[1], 0);
    };
    std::string text;
    if (kind == "wheel") {
        text = format_embedding(wheel_embedding(number()));
    } else if (kind == "cycle") {
        text = format_embedding(cycle_embedding(number()));
    } else if (kind == "complete") {
        text = format_graph(make_complete(number()));
    } else if (kind == "fixture") {
        if (args.size() != 2) throw invalid_parameter("generate fixture needs a name");
        text = builtin_fixture(args[1]);
    } else if (kind == "word") {
        if (args.size() < 2) throw invalid_parameter("generate word needs a word");
        std::string word;
        for (std::size_t i = 1; i < args.size(); ++i) word += (i > 1 ? " " : "") + args[i];
        const auto lg = graph_from_word(Word::parse(word));
        text = format_graph(lg.graph);
    } else if (kind == "triangulation") {
        if (args.size() != 2) throw invalid_parameter("generate triangulation needs a polyomino file");
        const Instance in = load_instance(read_input(args[1]), c.limits);
        if (!in.polyomino) throw invalid_parameter("generate triangulation needs a polyomino");
        text = format_triangulation(random_triangulation(*in.polyomino, c.seed, c.limits));
    } else if (kind == "graph" || kind == "embedding") {
        if (args.size() != 2) throw invalid_parameter("generate " + kind + " needs an input file");
        const Instance in = load_instance(read_input(args[1]), c.limits);
        if (kind == "graph" && in.graph)
            text = format_graph(*in.graph);
        else if (kind == "embedding" && in.embedding)
            text = format_embedding(*in.embedding);
        else
            throw invalid_parameter("input has no " + kind);
    } else if (kind == "census") {
        for (const auto& p : enumerate_polyominoes(number(), c.limits)) text += format_polyomino(p) + "\n";
    } else {
        throw invalid_parameter("unknown kind '" + kind + "' (wheel, cycle, complete, fixture, word, triangulation, graph, embedding, census)");
    }
    if (c.format == OutputFormat::json)
        out << json{{"command", "generate"}, {"kind", kind}, {"text", text}}.dump(2) << '\n';
    else
        out << text;
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Word-representability of graphs, near-triangulations and polyomino triangulations"};
    app.require_subcommand(1);
    app.fallthrough();

    Config config;
    std::string format = "human";
    app.add_option("--seed", config.seed, "Seed for all sampling");
    app.add_option("--cap-edges", config.limits.orientation_edges, "Edge cap of the orientation search")
        ->check(CLI::PositiveNumber);
    app.add_option("--cap-vertices", config.limits.colour_vertices, "Vertex cap of the colouring oracle")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "json"}));
    app.add_flag("--oracle-fallback", config.oracle_fallback,
                 "Fall back to the backtracking colourer if the constructive one breaks an invariant");

    std::string path;
    auto* decide = app.add_subcommand("decide", "Decide word-representability");
    decide->add_option("file", path, "Graph, embedding or triangulation file ('-' for stdin)")->required();
    auto* colour = app.add_subcommand("colour", "3-colour an internally even near-triangulation");
    colour->add_option("file", path, "Embedding or triangulation file")->required();
    auto* recognize = app.add_subcommand("recognize", "Report structural predicates");
    recognize->add_option("file", path, "Any input file")->required();
    std::string id;
    auto* verify = app.add_subcommand("verify", "Run an audit campaign");
    verify->add_option("id", id, "T2, T3, T4, T5, T6, T7, C1 or L1")->required();
    verify->add_option("--census-cells", config.census_cells, "Largest polyomino in the census")
        ->check(CLI::PositiveNumber);
    verify->add_option("--samples", config.samples, "Random instances per sampling campaign")
        ->check(CLI::PositiveNumber);
    int k_max = 0;
    auto* witness = app.add_subcommand("witness", "Search for a representing word");
    witness->add_option("file", path, "Graph file")->required();
    witness->add_option("--k-max", k_max, "Largest uniformity tried (default: number of vertices)")->check(CLI::PositiveNumber);
    std::vector<std::string> gen_args;
    auto* generate = app.add_subcommand("generate", "Print generated instances");
    generate->add_option("args", gen_args, "wheel N | cycle N | complete N | fixture NAME | word W | triangulation FILE | graph FILE | embedding FILE | census N")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    config.format = format == "json" ? OutputFormat::json : OutputFormat::human;

    try {
        if (*decide) return cmd_decide(path, config, out);
        if (*colour) return cmd_colour(path, config, out);
        if (*recognize) return cmd_recognize(path, config, out);
        if (*verify) return cmd_verify(id, config, out);
        if (*witness) return cmd_witness(path, k_max, config, out);
        if (*generate) return cmd_generate(gen_args, config, out);
    } catch (const resource_limit& e) {
        err << "error: resource limit: " << e.what() << '\n';
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace wrep
