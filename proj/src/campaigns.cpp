#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "json.hpp"
#include "wrep/error.hpp"
#include "wrep/fixtures.hpp"
#include "wrep/harness.hpp"

namespace wrep {

namespace {

enum class Verdict { yes, no, unknown };

const char* verdict_text(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        case Verdict::unknown: return "unknown";
    }
    return "?";
}

Verdict from_bool(bool b) { return b ? Verdict::yes : Verdict::no; }

struct Sample {
    InputKind kind = InputKind::triangulation;
    std::string text;
    Graph graph;
    std::optional<Embedding> embedding;
};

Sample from_triangulation(const PolyominoTriangulation& t) {
    auto lattice = to_graph(t);
    Graph g = lattice.embedding.graph();
    return {InputKind::triangulation, format_triangulation(t), std::move(g), std::move(lattice.embedding)};
}

Sample from_fixture(std::string_view name) {
    Instance in = load_instance(builtin_fixture(name));
    return {in.kind, builtin_fixture(name), *in.graph, in.embedding};
}

class Audit {
   public:
    Audit(Report& r, const Config& c) : report_(r), config_(c) {}

    Verdict word_representable(const Graph& g) {
        const auto d = decide_word_representable(g, config_.limits);
        if (d.answer == Answer::unknown) note_cap(std::get<ExhaustedResources>(d.certificate).reason);
        return d.answer == Answer::yes ? Verdict::yes : d.answer == Answer::no ? Verdict::no : Verdict::unknown;
    }

    Verdict three_colourable(const Graph& g) {
        try {
            return from_bool(k_colour(g, 3, config_.limits).has_value());
        } catch (const resource_limit& e) {
            note_cap(e.what());
            return Verdict::unknown;
        }
    }

    Verdict perfect(const Graph& g) {
        try {
            return from_bool(is_perfect(g, config_.limits));
        } catch (const resource_limit& e) {
            note_cap(e.what());
            return Verdict::unknown;
        }
    }

    void compare(const Sample& s, std::string left_name, Verdict left, std::string right_name, Verdict right) {
        ++report_.instances;
        if (left == Verdict::unknown || right == Verdict::unknown) {
            ++report_.unknown;
            report_.partial = true;
            return;
        }
        if (left != right)
            report_.counterexamples.push_back(
                {s.kind, s.text, std::move(left_name), verdict_text(left), std::move(right_name), verdict_text(right)});
    }

    void skip() { ++report_.skipped; }

   private:
    void note_cap(const std::string& reason) {
        if (std::find(report_.notes.begin(), report_.notes.end(), reason) == report_.notes.end())
            report_.notes.push_back(reason);
    }

    Report& report_;
    const Config& config_;
};

// Every triangulation of every hole-free polyomino up to `cells` cells, with
// monomino tiles only or with every tiling.
std::vector<Sample> census(int cells, bool all_tilings, const Limits& limits) {
    std::vector<Sample> out;
    for (const auto& p : enumerate_polyominoes(cells, limits)) {
        const auto tilings = all_tilings ? enumerate_tilings(p, limits) : std::vector<Polyomino>{p};
        for (const auto& tiling : tilings) {
            if (has_internal_hole(tiling)) continue;
            for (const auto& t : enumerate_triangulations(tiling, 1u << 20, limits)) out.push_back(from_triangulation(t));
        }
    }
    return out;
}

std::vector<Sample> wheels() {
    std::vector<Sample> out;
    for (int n = 4; n <= 9; ++n) out.push_back(from_fixture("w" + std::to_string(n)));
    return out;
}

// Random hole-free polyominoes with random tilings and triangulations, redrawn
// until the graph fits the orientation-search cap.
std::vector<Sample> random_mixed(std::mt19937_64& rng, int count, const Limits& limits) {
    const auto shapes = enumerate_polyominoes(std::min(6, limits.census_cells), limits);
    std::vector<Sample> out;
    while (static_cast<int>(out.size()) < count) {
        const auto& p = shapes[std::uniform_int_distribution<std::size_t>(0, shapes.size() - 1)(rng)];
        if (has_internal_hole(p)) continue;
        const Polyomino tiled = random_tiling(p, rng(), 3, limits);
        auto s = from_triangulation(random_triangulation(tiled, rng(), limits));
        if (static_cast<int>(s.graph.size()) <= limits.orientation_edges) out.push_back(std::move(s));
    }
    return out;
}

bool k4_free(const Sample& s) { return !contains_k4(s.graph).has_value(); }

void campaign_t2(Report& r, const Config& c, Audit& a) {
    r.statement = "K4-free near-triangulation: word-representable iff 3-colourable";
    std::mt19937_64 rng(c.seed);
    auto pool = census(c.census_cells, false, c.limits);
    for (auto& s : wheels()) pool.push_back(std::move(s));
    for (auto& s : random_mixed(rng, c.samples, c.limits)) pool.push_back(std::move(s));
    r.notes.push_back("random samples are drawn from graphs within the orientation-search edge cap");
    for (const auto& s : pool) {
        if (!k4_free(s) || !is_near_triangulation(*s.embedding)) {
            a.skip();
            continue;
        }
        a.compare(s, "word-representable", a.word_representable(s.graph), "3-colourable", a.three_colourable(s.graph));
    }
}

void campaign_t3(Report& r, const Config& c, Audit& a) {
    r.statement = "near-triangulation (monomino polyomino census): 3-colourable iff internally even";
    for (const auto& s : census(c.census_cells, false, c.limits))
        a.compare(s, "3-colourable", a.three_colourable(s.graph), "internally-even",
                  from_bool(is_internally_even(*s.embedding)));
}

void campaign_t4(Report& r, const Config& c, Audit& a) {
    r.statement = "K4-free near-triangulation: word-representable iff internally even";
    auto pool = census(c.census_cells, false, c.limits);
    for (auto& s : wheels()) pool.push_back(std::move(s));
    for (const auto& s : pool) {
        if (!k4_free(s)) {
            a.skip();
            continue;
        }
        a.compare(s, "word-representable", a.word_representable(s.graph), "internally-even",
                  from_bool(is_internally_even(*s.embedding)));
    }
}

void campaign_t5(Report& r, const Config& c, Audit& a) {
    r.statement = "triangulated convex polyomino: word-representable iff 3-colourable";
    for (const auto& p : enumerate_polyominoes(c.census_cells, c.limits)) {
        if (!is_convex(p)) {
            a.skip();
            continue;
        }
        for (const auto& t : enumerate_triangulations(p, 1u << 20, c.limits)) {
            const auto s = from_triangulation(t);
            a.compare(s, "word-representable", a.word_representable(s.graph), "3-colourable",
                      a.three_colourable(s.graph));
        }
    }
}

void campaign_t6(Report& r, const Config& c, Audit& a) {
    r.statement = "triangulated rectangle with one domino tile: word-representable iff 3-colourable";
    constexpr std::size_t kPerPlacement = 32;
    std::mt19937_64 rng(c.seed);
    for (int w = 1; w <= 3; ++w)
        for (int h = 1; h <= 3; ++h)
            for (int x = 0; x < w; ++x)
                for (int y = 0; y < h; ++y)
                    for (const Cell step : {Cell{1, 0}, Cell{0, 1}}) {
                        const Cell other{x + step.x, y + step.y};
                        if (other.x >= w || other.y >= h) continue;
                        std::vector<std::vector<Cell>> tiles{{Cell{x, y}, other}};
                        for (int i = 0; i < w; ++i)
                            for (int j = 0; j < h; ++j)
                                if (Cell{i, j} != Cell{x, y} && Cell{i, j} != other) tiles.push_back({Cell{i, j}});
                        const Polyomino p(std::move(tiles));
                        std::vector<PolyominoTriangulation> chosen;
                        try {
                            chosen = enumerate_triangulations(p, kPerPlacement, c.limits);
                        } catch (const resource_limit&) {
                            for (std::size_t k = 0; k < kPerPlacement; ++k)
                                chosen.push_back(random_triangulation(p, rng(), c.limits));
                            const std::string note = "rectangles with more than " + std::to_string(kPerPlacement) +
                                                     " triangulations per domino placement are sampled";
                            if (std::find(r.notes.begin(), r.notes.end(), note) == r.notes.end())
                                r.notes.push_back(note);
                        }
                        for (const auto& t : chosen) {
                            const auto s = from_triangulation(t);
                            a.compare(s, "word-representable", a.word_representable(s.graph), "3-colourable",
                                      a.three_colourable(s.graph));
                        }
                    }
}

void campaign_t7(Report& r, const Config& c, Audit& a) {
    r.statement = "K4-free triangulated hole-free polyomino with n-omino tiles: word-representable iff 3-colourable";
    for (const auto& s : census(c.census_cells, true, c.limits)) {
        if (!k4_free(s)) {
            a.skip();
            continue;
        }
        a.compare(s, "word-representable", a.word_representable(s.graph), "3-colourable", a.three_colourable(s.graph));
    }
}

void campaign_c1(Report& r, const Config& c, Audit& a) {
    r.statement = "K4-free near-triangulation with at most 10 vertices: perfect iff word-representable";
    auto pool = census(c.census_cells, true, c.limits);
    for (auto& s : wheels()) pool.push_back(std::move(s));
    pool.push_back(from_fixture("fig1-mid"));
    pool.push_back(from_fixture("fig1-right"));
    for (const auto& s : pool) {
        if (s.graph.order() > 10 || !k4_free(s) || !is_near_triangulation(*s.embedding)) {
            a.skip();
            continue;
        }
        a.compare(s, "perfect", a.perfect(s.graph), "word-representable", a.word_representable(s.graph));
    }
}

Graph random_graph(std::mt19937_64& rng) {
    const int n = std::uniform_int_distribution<int>(4, 9)(rng);
    std::bernoulli_distribution coin(0.4);
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (coin(rng)) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

void campaign_l1(Report& r, const Config& c, Audit& a) {
    r.statement = "odd-degree vertex whose neighbours induce a path: the path ends share a colour in every 3-colouring";
    std::mt19937_64 rng(c.seed);
    struct Candidate {
        Graph graph;
        int x;
    };
    std::vector<Candidate> pool;
    auto consider = [&](const Graph& g) {
        if (g.order() > c.limits.colour_vertices || !k_colour(g, 3, c.limits)) return;
        for (int x = 1; x <= g.order(); ++x)
            if (g.degree(x) % 2 == 1 && neighbourhood_path_ends(g, x)) pool.push_back({g, x});
    };
    for (const auto& s : census(std::min(3, c.census_cells), true, c.limits)) consider(s.graph);
    for (int i = 0; i < 4 * c.samples; ++i) consider(random_graph(rng));
    std::shuffle(pool.begin(), pool.end(), rng);
    if (pool.size() > static_cast<std::size_t>(c.samples)) pool.resize(static_cast<std::size_t>(c.samples));
    for (const auto& [g, x] : pool) {
        const Sample s{InputKind::graph, "# lemma vertex " + std::to_string(x) + "\n" + format_graph(g), g, {}};
        a.compare(s, "ends-share-colour", from_bool(lemma_endpoint_check(g, x, c.limits)), "lemma", Verdict::yes);
    }
}

}  // namespace

void validate(const Config& c) {
    const auto& l = c.limits;
    for (int v : {l.colour_vertices, l.perfect_vertices, l.word_vertices, l.orientation_edges, l.tile_points,
                  l.census_cells, c.census_cells, c.samples})
        if (v <= 0) throw invalid_parameter("caps and counts must be positive");
    if (c.census_cells > l.census_cells)
        throw resource_limit("census of " + std::to_string(c.census_cells) + " cells exceeds the cap of " +
                             std::to_string(l.census_cells));
}

const std::vector<std::string>& campaign_ids() {
    static const std::vector<std::string> ids{"T2", "T3", "T4", "T5", "T6", "T7", "C1", "L1"};
    return ids;
}

Report run_campaign(std::string_view id, const Config& config) {
    validate(config);
    Report r;
    r.campaign = std::string(id);
    r.config = config;
    Audit a(r, config);
    const auto start = std::chrono::steady_clock::now();
    if (id == "T2")
        campaign_t2(r, config, a);
    else if (id == "T3")
        campaign_t3(r, config, a);
    else if (id == "T4")
        campaign_t4(r, config, a);
    else if (id == "T5")
        campaign_t5(r, config, a);
    else if (id == "T6")
        campaign_t6(r, config, a);
    else if (id == "T7")
        campaign_t7(r, config, a);
    else if (id == "C1")
        campaign_c1(r, config, a);
    else if (id == "L1")
        campaign_l1(r, config, a);
    else
        throw invalid_parameter("unknown campaign '" + std::string(id) + "'");
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::sort(r.counterexamples.begin(), r.counterexamples.end());
    return r;
}

int exit_code(const Report& r) {
    if (!r.passed()) return 1;
    return r.partial ? 3 : 0;
}

std::string report_json(const Report& r) {
    nlohmann::json j;
    j["campaign"] = r.campaign;
    j["statement"] = r.statement;
    j["passed"] = r.passed();
    j["partial"] = r.partial;
    j["instances"] = r.instances;
    j["skipped"] = r.skipped;
    j["unknown"] = r.unknown;
    j["notes"] = r.notes;
    j["counterexamples"] = nlohmann::json::array();
    for (const auto& c : r.counterexamples)
        j["counterexamples"].push_back({{"kind", to_string(c.kind)},
                                        {"instance", c.instance},
                                        {"verdicts", {{c.left_name, c.left}, {c.right_name, c.right}}}});
    j["seconds"] = r.seconds;
    const auto& l = r.config.limits;
    j["config"] = {{"seed", r.config.seed},
                   {"oracle_fallback", r.config.oracle_fallback},
                   {"census_cells", r.config.census_cells},
                   {"samples", r.config.samples},
                   {"caps",
                    {{"orientation_edges", l.orientation_edges},
                     {"colour_vertices", l.colour_vertices},
                     {"perfect_vertices", l.perfect_vertices},
                     {"word_vertices", l.word_vertices},
                     {"tile_points", l.tile_points},
                     {"census_cells", l.census_cells}}}};
    return j.dump(2);
}

std::string report_human(const Report& r) {
    std::ostringstream out;
    out << "campaign " << r.campaign << ": " << r.statement << '\n';
    out << "result: " << (!r.passed() ? "FAIL" : r.partial ? "PARTIAL" : "PASS") << '\n';
    out << "instances: " << r.instances << " (skipped " << r.skipped << ", unknown " << r.unknown << ")\n";
    for (const auto& n : r.notes) out << "note: " << n << '\n';
    out << "counterexamples: " << r.counterexamples.size() << '\n';
    for (const auto& c : r.counterexamples) {
        out << "--- " << to_string(c.kind) << ", " << c.left_name << " = " << c.left << ", " << c.right_name << " = "
            << c.right << '\n'
            << c.instance;
    }
    const auto& l = r.config.limits;
    out << "seconds: " << r.seconds << '\n';
    out << "config: seed " << r.config.seed << ", oracle_fallback " << (r.config.oracle_fallback ? "true" : "false")
        << ", census_cells " << r.config.census_cells << ", samples " << r.config.samples << ", caps edges "
        << l.orientation_edges << " colour " << l.colour_vertices << " perfect " << l.perfect_vertices << " word "
        << l.word_vertices << " tile_points " << l.tile_points << " census " << l.census_cells << '\n';
    return out.str();
}

}  // namespace wrep
