#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "wrep/error.hpp"
#include "wrep/fixtures.hpp"
#include "wrep/planar.hpp"
#include "wrep/polyomino.hpp"

using namespace wrep;

namespace {

using Coords = std::vector<std::pair<double, double>>;

Embedding triangle() { return Embedding::from_coordinates(make_complete(3), {{0, 0}, {1, 0}, {0, 1}}); }

// Two triangles glued at vertex 1.
Embedding bowtie() {
    const Graph g(5, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {1, 5}, {4, 5}});
    return Embedding::from_coordinates(g, {{0, 0}, {-2, -1}, {-2, 1}, {2, 1}, {2, -1}});
}

Embedding fixture_embedding(const std::string& name) { return *testing::fixture(name).embedding; }

bool same_cycle(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t s = 0; s < b.size(); ++s) {
        bool equal = true;
        for (std::size_t i = 0; i < a.size() && equal; ++i) equal = a[i] == b[(i + s) % b.size()];
        if (equal) return true;
    }
    return false;
}

bool three_colourable(const Graph& g) { return k_colour(g, 3).has_value(); }

// Every triangulation of every polyomino with up to 4 cells (monomino tiles)
// plus every tiling of shapes with up to 3 cells.
struct LatticeSample {
    std::size_t cells;
    LatticeEmbedding lattice;
};

const std::vector<LatticeSample>& lattice_samples() {
    static const std::vector<LatticeSample> samples = [] {
        std::vector<LatticeSample> out;
        for (const auto& p : enumerate_polyominoes(4)) {
            if (has_internal_hole(p)) continue;
            for (const auto& t : enumerate_triangulations(p, 64)) out.push_back({p.cells().size(), to_graph(t)});
            if (p.cells().size() <= 3)
                for (const auto& tiling : enumerate_tilings(p))
                    if (tiling.tile_count() < p.cells().size())
                        for (const auto& t : enumerate_triangulations(tiling, 64))
                            out.push_back({p.cells().size(), to_graph(t)});
        }
        return out;
    }();
    return samples;
}

std::vector<Embedding> random_lattice_embeddings(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    const auto shapes = enumerate_polyominoes(5);
    std::vector<Embedding> out;
    while (static_cast<int>(out.size()) < count) {
        const auto& shape = shapes[rng() % shapes.size()];
        if (has_internal_hole(shape)) continue;
        const auto tiling = random_tiling(shape, rng(), 3);
        out.push_back(to_graph(random_triangulation(tiling, rng())).embedding);
    }
    return out;
}

}  // namespace

TEST_CASE("faces of small embeddings") {
    const auto t = triangle();
    REQUIRE(t.faces().size() == 2);
    CHECK(t.faces()[0].length() == 3);
    CHECK(t.faces()[1].length() == 3);
    CHECK(satisfies_euler(t));

    const auto single = Embedding(Graph(1), {{}}, {1});
    REQUIRE(single.faces().size() == 1);
    CHECK(single.faces()[0].walk == std::vector<int>{1});

    const auto edge = Embedding(Graph(2, {{1, 2}}), {{2}, {1}}, {1, 2});
    REQUIRE(edge.faces().size() == 1);
    CHECK(edge.faces()[0].length() == 2);

    const auto w5 = fixture_embedding("w5");
    CHECK(w5.faces().size() == 6);
    CHECK(same_cycle(w5.outer_face().walk, {1, 5, 4, 3, 2}));
    CHECK(faces(w5).size() == 6);

    const auto bt = bowtie();
    CHECK(bt.faces().size() == 3);
    CHECK(bt.outer_face().length() == 6);
}

TEST_CASE("rotation neighbours") {
    const auto w5 = fixture_embedding("w5");
    CHECK(w5.rotation(6) == std::vector<int>{4, 5, 1, 2, 3});
    CHECK(w5.successor(6, 3) == 4);
    CHECK(w5.predecessor(6, 4) == 3);
    CHECK_THROWS_AS(w5.successor(1, 3), invalid_parameter);
}

TEST_CASE("invalid embeddings are rejected") {
    const Graph k33(6, {{1, 4}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}});
    std::vector<std::vector<int>> rot;
    for (int v = 1; v <= 6; ++v) rot.push_back(k33.neighbours(v));
    CHECK_THROWS_AS(Embedding(k33, rot, {1, 4, 2, 5}), invalid_embedding);

    const Graph tri = make_complete(3);
    CHECK_THROWS_AS(Embedding(tri, {{2}, {1, 3}, {1, 2}}, {1, 2, 3}), invalid_embedding);
    CHECK_THROWS_AS(Embedding(tri, {{2, 3}, {1, 3}}, {1, 2, 3}), invalid_embedding);
    CHECK_THROWS_AS(Embedding(tri, {{2, 3}, {3, 1}, {1, 2}}, {1, 2}), invalid_embedding);
    CHECK_THROWS_AS(Embedding(Graph(0), {}, {}), invalid_embedding);
    CHECK_NOTHROW(Embedding(tri, {{2, 3}, {3, 1}, {1, 2}}, {1, 3, 2}));
    CHECK_NOTHROW(Embedding(tri, {{2, 3}, {3, 1}, {1, 2}}, {1, 2, 3}));
}

TEST_CASE("near-triangulation recognition") {
    CHECK(is_near_triangulation(triangle()));
    CHECK(is_near_triangulation(fixture_embedding("fig1-right")));
    CHECK(is_near_triangulation(fixture_embedding("fig1-mid")));
    CHECK(is_near_triangulation(fixture_embedding("w5")));
    CHECK(is_near_triangulation(bowtie()));
    CHECK_FALSE(is_near_triangulation(cycle_embedding(4)));
    CHECK(is_near_triangulation(Embedding(Graph(2, {{1, 2}}), {{2}, {1}}, {1, 2})));
    CHECK_FALSE(is_near_triangulation(*testing::fixture("donut").embedding));

    const Graph two(4, {{1, 2}, {3, 4}});
    const auto apart = Embedding::from_coordinates(two, {{0, 0}, {1, 0}, {5, 0}, {6, 0}});
    CHECK(satisfies_euler(apart));
    CHECK_THROWS_AS(is_near_triangulation(apart), invalid_parameter);

    CHECK(is_internally_even(fixture_embedding("fig1-right")));
    CHECK_FALSE(is_internally_even(fixture_embedding("fig1-mid")));
    CHECK(odd_inner_vertices(fixture_embedding("fig1-mid")) == std::vector<int>{6});
    CHECK(is_internally_even(fixture_embedding("w4")));
    CHECK_FALSE(is_internally_even(fixture_embedding("w7")));
    CHECK_THROWS_AS(is_internally_even(cycle_embedding(5)), invalid_parameter);
}

TEST_CASE("vertex classes") {
    const auto e = fixture_embedding("fig1-right");
    const auto classes = classify_vertices(e);
    CHECK(classes.inner == std::vector<int>{2, 3, 4});
    CHECK(classes.boundary == std::vector<int>{1, 5, 6, 7});
    CHECK_FALSE(is_boundary_vertex(e, 3));
    CHECK(is_boundary_vertex(e, 7));
    CHECK(e.graph().degree(3) == 4);

    const auto w6 = fixture_embedding("w6");
    CHECK(classify_vertices(w6).inner == std::vector<int>{7});
}

TEST_CASE("removing a boundary vertex") {
    const auto tri = remove_boundary_vertex(triangle(), 1);
    REQUIRE(tri.size() == 1);
    CHECK(tri[0].original == std::vector<int>{2, 3});
    CHECK(tri[0].embedding.graph() == Graph(2, {{1, 2}}));

    const auto e = fixture_embedding("fig1-right");
    const auto parts = remove_boundary_vertex(e, 7);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].original == std::vector<int>{1, 2, 3, 4, 5, 6});
    const auto& rest = parts[0].embedding;
    CHECK(rest.graph().size() == 11);
    CHECK(is_near_triangulation(rest));
    CHECK(satisfies_euler(rest));
    CHECK(is_boundary_vertex(rest, 4));
    CHECK_FALSE(is_boundary_vertex(rest, 3));

    const auto split = remove_boundary_vertex(bowtie(), 1);
    REQUIRE(split.size() == 2);
    CHECK(split[0].original == std::vector<int>{2, 3});
    CHECK(split[1].original == std::vector<int>{4, 5});

    CHECK_THROWS_AS(remove_boundary_vertex(e, 3), invalid_parameter);
    CHECK_THROWS_AS(remove_boundary_vertex(e, 8), invalid_parameter);
}

TEST_CASE("neighbour paths") {
    const auto e = fixture_embedding("fig1-right");
    const auto np = neighbour_paths(e, 7);
    REQUIRE(np.single());
    CHECK(np.paths[0].size() == 3);
    CHECK(np.paths[0][1] == 4);
    CHECK(std::set<int>(np.paths[0].begin(), np.paths[0].end()) == std::set<int>{1, 4, 5});
    CHECK_FALSE(np.chorded);

    const auto two = neighbour_paths(bowtie(), 1);
    REQUIRE(two.paths.size() == 2);
    CHECK(std::set<int>(two.paths[0].begin(), two.paths[0].end()) != std::set<int>(two.paths[1].begin(), two.paths[1].end()));
    for (const auto& path : two.paths) CHECK(path.size() == 2);

    // Path runs counter-clockwise around the vertex.
    const auto tri = neighbour_paths(triangle(), 1);
    REQUIRE(tri.single());
    CHECK(tri.paths[0] == std::vector<int>{2, 3});

    CHECK_THROWS_AS(neighbour_paths(e, 3), invalid_parameter);
}

TEST_CASE("constructive colouring examples") {
    const auto t = three_colour_ent(triangle());
    CHECK(t.used() == 3);
    CHECK(is_proper_colouring(make_complete(3), t));
    for (int v = 1; v <= 3; ++v) CHECK((t.of(v) >= 1 && t.of(v) <= 3));

    for (const std::string name : {"fig1-right", "w4", "w6", "w8"}) {
        const auto e = fixture_embedding(name);
        ColouringTrace trace;
        const auto c = three_colour_ent(e, {}, &trace);
        CHECK(is_proper_colouring(e.graph(), c));
        CHECK(c.k() == 3);
        CHECK(trace.fallbacks == 0);
        CHECK(trace.removals >= 1);
    }
    const auto ent = *testing::fixture("fig2").embedding;
    CHECK(is_proper_colouring(ent.graph(), three_colour_ent(ent)));

    CHECK_THROWS_AS(three_colour_ent(fixture_embedding("fig1-mid")), invalid_parameter);
    CHECK_THROWS_AS(three_colour_ent(cycle_embedding(4)), invalid_parameter);
}

TEST_CASE("neighbourhood lemma examples") {
    const auto g = fixture_embedding("fig1-right").graph();
    const auto ends = neighbourhood_path_ends(g, 7);
    REQUIRE(ends.has_value());
    CHECK(std::minmax(ends->first, ends->second) == std::pair<const int&, const int&>(1, 5));
    CHECK(lemma_endpoint_check(g, 7));

    const auto w = make_wheel(6);
    CHECK_FALSE(neighbourhood_path_ends(w, 7).has_value());
    CHECK(neighbourhood_path_ends(w, 1).has_value());
    CHECK(lemma_endpoint_check(w, 1));
    CHECK_THROWS_AS(lemma_endpoint_check(w, 7), invalid_parameter);
    CHECK_THROWS_AS(lemma_endpoint_check(make_cycle(5), 1), invalid_parameter);
    CHECK_THROWS_AS(lemma_endpoint_check(Graph(2, {{1, 2}}), 3), invalid_parameter);
}

TEST_CASE("near-triangulation decisions") {
    const auto right = decide_wr_near_triangulation(fixture_embedding("fig1-right"));
    CHECK(right.answer == Answer::yes);
    CHECK(right.strategy == Strategy::structural);
    CHECK_FALSE(right.open_problem);
    const auto* reason = std::get_if<StructuralReason>(&right.certificate);
    REQUIRE(reason != nullptr);
    CHECK(reason->internally_even);
    REQUIRE(reason->colouring.has_value());
    CHECK(is_proper_colouring(fixture_embedding("fig1-right").graph(), *reason->colouring));

    const auto mid = decide_wr_near_triangulation(fixture_embedding("fig1-mid"));
    CHECK(mid.answer == Answer::no);
    const auto* odd = std::get_if<StructuralReason>(&mid.certificate);
    REQUIRE(odd != nullptr);
    CHECK(odd->odd_inner_vertex == 6);

    const auto fig3 = decide_wr_near_triangulation(*testing::fixture("fig3").embedding);
    CHECK(fig3.answer == Answer::no);
    CHECK_FALSE(fig3.open_problem);

    const auto fig4 = decide_wr_near_triangulation(*testing::fixture("fig4").embedding);
    CHECK(fig4.open_problem);
    CHECK(fig4.k4.has_value());
    CHECK(fig4.answer == Answer::no);

    CHECK_THROWS_AS(decide_wr_near_triangulation(cycle_embedding(4)), invalid_parameter);
}

TEST_CASE("embedding text round trip") {
    for (const auto& name : fixture_names()) {
        const auto inst = testing::fixture(name);
        if (!inst.embedding) continue;
        const auto& e = *inst.embedding;
        const auto again = parse_embedding(format_embedding(e));
        CHECK(again.graph() == e.graph());
        for (int v = 1; v <= e.graph().order(); ++v) CHECK(again.rotation(v) == e.rotation(v));
        CHECK(same_cycle(again.outer_face().walk, e.outer_face().walk));
    }
    CHECK_THROWS_AS(parse_embedding("3 3\n1 2\n2 3\n1 3\nrot 1: 2 3\nrot 2: 3 1\nrot 3: 1 2\n"), parse_error);
    CHECK_THROWS_AS(parse_embedding("3 3\n1 2\n2 3\n1 3\nrot 1: 2 3\nrot 2: 3 1\nrot 3: 1 2\nouter: 1 3 2\ncoord 1: 0 0\n"),
                    parse_error);
    CHECK_THROWS_AS(parse_embedding("2 1\n1 2\nrot 1: 2\nrot 1: 2\nouter: 1 2\n"), parse_error);
    CHECK_THROWS_AS(parse_embedding("2 1\n1 2\nrot 4: 2\nouter: 1 2\n"), parse_error);
    CHECK_THROWS_AS(parse_embedding("2 1\n1 2\ncoord 1: 0\ncoord 2: 1 1\n"), parse_error);
    CHECK_THROWS_AS(parse_embedding("2 1\n1 2\nrot 1: 2\nrot 2: 1\nouter: 1 2\nbogus\n"), parse_error);
    CHECK_THROWS_AS(parse_embedding("3 3\n1 2\n2 3\n1 3\nrot 1: 2\nrot 2: 3 1\nrot 3: 1 2\nouter: 1 3 2\n"),
                    invalid_embedding);
    CHECK_NOTHROW(parse_embedding("3 3\n1 2\n2 3\n1 3\nrot 1: 2 3\nrot 2: 3 1\nrot 3: 1 2\nouter: 1 3 2\n"));
}

TEST_CASE("property: lattice embeddings satisfy Euler with twice the area in triangles") {
    for (const auto& s : lattice_samples()) {
        const auto& e = s.lattice.embedding;
        CHECK(satisfies_euler(e));
        CHECK(is_near_triangulation(e));
        // Unit-area cells, lattice triangles of area one half.
        CHECK(e.faces().size() == 2 * s.cells + 1);
        std::size_t darts = 0;
        for (const auto& f : e.faces()) darts += f.length();
        CHECK(darts == 2 * e.graph().size());
    }
}

TEST_CASE("property: internally even iff 3-colourable on near-triangulations") {
    std::size_t even = 0, odd = 0;
    for (const auto& s : lattice_samples()) {
        const auto& e = s.lattice.embedding;
        const bool ie = is_internally_even(e);
        CHECK(ie == three_colourable(e.graph()));
        (ie ? even : odd) += 1;
    }
    for (int n = 4; n <= 9; ++n) {
        const auto w = wheel_embedding(n);
        CHECK(is_internally_even(w) == three_colourable(w.graph()));
    }
    CHECK(even > 0);
    CHECK(odd > 0);
}

TEST_CASE("property: constructive colouring is proper on every ENT sample") {
    std::size_t checked = 0;
    auto check = [&](const Embedding& e) {
        if (!is_internally_even(e)) return;
        ColouringTrace trace;
        const auto c = three_colour_ent(e, {}, &trace);
        CHECK(is_proper_colouring(e.graph(), c));
        CHECK(c.k() == 3);
        CHECK(trace.fallbacks == 0);
        ++checked;
    };
    for (const auto& s : lattice_samples()) check(s.lattice.embedding);
    for (const auto& e : random_lattice_embeddings(41, 150)) check(e);
    CHECK(checked > 20);
}

TEST_CASE("property: removal keeps near-triangulations and internal evenness") {
    for (const auto& e : random_lattice_embeddings(42, 80)) {
        const bool ent = is_internally_even(e);
        for (int v : classify_vertices(e).boundary) {
            const auto parts = remove_boundary_vertex(e, v);
            std::size_t total = 0;
            for (const auto& part : parts) {
                total += part.original.size();
                CHECK(satisfies_euler(part.embedding));
                CHECK(is_near_triangulation(part.embedding));
                if (ent) CHECK(is_internally_even(part.embedding));
                // Labels are preserved through the relabelling.
                for (const auto& edge : part.embedding.graph().edges())
                    CHECK(e.graph().adjacent(part.original[static_cast<std::size_t>(edge.u - 1)],
                                             part.original[static_cast<std::size_t>(edge.v - 1)]));
            }
            CHECK(total + 1 == static_cast<std::size_t>(e.graph().order()));
            CHECK(parts.size() == neighbour_paths(e, v).paths.size());
        }
    }
}

TEST_CASE("property: structural verdict matches the generic engine") {
    std::size_t compared = 0;
    for (const auto& s : lattice_samples()) {
        const auto& e = s.lattice.embedding;
        if (contains_k4(e.graph())) continue;
        const auto fast = decide_wr_near_triangulation(e, {}, false);
        const auto slow = decide_word_representable(e.graph());
        if (slow.answer == Answer::unknown) continue;
        CHECK(fast.answer == slow.answer);
        CHECK(fast.strategy == Strategy::structural);
        ++compared;
    }
    CHECK(compared > 20);
}

TEST_CASE("property: lemma endpoints agree in every 3-colouring") {
    std::mt19937_64 rng(43);
    std::size_t checked = 0;
    for (int round = 0; round < 200; ++round) {
        const Graph g = testing::random_graph(rng, std::uniform_int_distribution<int>(4, 8)(rng), 0.45);
        if (!three_colourable(g)) continue;
        for (int x = 1; x <= g.order(); ++x) {
            if (g.degree(x) % 2 == 0) continue;
            const auto ends = neighbourhood_path_ends(g, x);
            if (!ends) continue;
            bool agree = true;
            for_each_colouring(g, 3, [&](const Colouring& c) {
                agree = agree && c.of(ends->first) == c.of(ends->second);
                return true;
            });
            CHECK(agree);
            CHECK(lemma_endpoint_check(g, x));
            ++checked;
        }
    }
    CHECK(checked > 20);
}
