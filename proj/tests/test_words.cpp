#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "support.hpp"
#include "wrep/error.hpp"
#include "wrep/orientation.hpp"
#include "wrep/words.hpp"

using namespace wrep;

namespace {

// Alternation read straight off the positions of x and y.
bool alternate_by_positions(const Word& w, int x, int y) {
    std::vector<int> seq;
    for (int l : w.letters())
        if (l == x || l == y) seq.push_back(l);
    for (std::size_t i = 1; i < seq.size(); ++i)
        if (seq[i] == seq[i - 1]) return false;
    return true;
}

}  // namespace

TEST_CASE("alternation examples") {
    const Word w = Word::parse("14213243");
    CHECK(alternates(w, 1, 2));
    CHECK_FALSE(alternates(w, 1, 3));
    CHECK(alternates(Word{2, 1, 2}, 1, 2));
    CHECK_THROWS_AS(alternates(w, 1, 1), invalid_parameter);
    CHECK_THROWS_AS(alternates(w, 1, 5), invalid_parameter);
}

TEST_CASE("graph from word examples") {
    const auto c4 = graph_from_word(Word::parse("14213243"));
    CHECK(c4.graph == make_cycle(4));
    CHECK(c4.original == std::vector<int>{1, 2, 3, 4});

    const auto k5 = graph_from_word(Word{3, 5, 1, 4, 2});
    CHECK(k5.graph == make_complete(5));

    const auto single = graph_from_word(Word::parse("1 1"));
    CHECK(single.graph.order() == 1);
    CHECK(single.graph.size() == 0);

    const auto empty = graph_from_word(Word{});
    CHECK(empty.graph.order() == 0);

    const auto relabelled = graph_from_word(Word{10, 30, 10, 30});
    CHECK(relabelled.original == std::vector<int>{10, 30});
    CHECK(relabelled.graph == Graph(2, {{1, 2}}));
}

TEST_CASE("represents examples") {
    CHECK(represents(Word::parse("14213243"), make_cycle(4)));
    CHECK(represents(Word{1, 2}, Graph(2, {{1, 2}})));
    CHECK_THROWS_AS(represents(Word::parse("1212"), make_cycle(4)), invalid_parameter);
    CHECK_FALSE(represents(Word::parse("1234"), make_cycle(4)));
}

TEST_CASE("restrict examples") {
    const Word w = Word::parse("14213243");
    const std::vector<int> s{1, 2};
    CHECK(restrict(w, s) == Word{1, 2, 1, 2});
    const auto alpha = w.alphabet();
    CHECK(restrict(w, alpha) == w);
    CHECK(restrict(w, std::vector<int>{}).empty());
}

TEST_CASE("word parsing") {
    CHECK(Word::parse("14213243") == Word{1, 4, 2, 1, 3, 2, 4, 3});
    CHECK(Word::parse("10 2 10") == Word{10, 2, 10});
    CHECK(Word::parse("7") == Word{7});
    CHECK(Word::parse("") == Word{});
    CHECK_THROWS_AS(Word::parse("1 0 2"), parse_error);
    CHECK_THROWS_AS(Word::parse("1 x"), parse_error);
    CHECK_THROWS_AS(Word({1, -2}), invalid_parameter);
    CHECK(Word{3, 1, 3}.to_string() == "3 1 3");
    CHECK(Word{3, 1, 3}.alphabet() == std::vector<int>{1, 3});
    CHECK(Word{3, 1, 3}.count(3) == 2);
    const auto words = parse_word_file("# words\n14213243\n\n1 2 1\n# end\n");
    REQUIRE(words.size() == 2);
    CHECK(words[1] == Word{1, 2, 1});
}

TEST_CASE("witness search examples") {
    const auto c4 = find_representing_word(make_cycle(4), 2);
    REQUIRE(c4.has_value());
    CHECK(represents(*c4, make_cycle(4)));
    CHECK(c4->length() == 8);
    CHECK_FALSE(find_representing_word(make_cycle(4), 1).has_value());

    const auto k3 = find_representing_word(make_complete(3), 1);
    REQUIRE(k3.has_value());
    CHECK(k3->length() == 3);
    CHECK(represents(*k3, make_complete(3)));

    CHECK_FALSE(find_representing_word(make_wheel(5), 3).has_value());
    CHECK_THROWS_AS(find_representing_word(make_cycle(9), 2), resource_limit);
    CHECK_THROWS_AS(find_representing_word(make_cycle(4), 0), invalid_parameter);

    CHECK_FALSE(find_representing_word(Graph(3), 1).has_value());
    const auto empty = find_representing_word(Graph(3), 2);
    REQUIRE(empty.has_value());
    CHECK(represents(*empty, Graph(3)));
}

TEST_CASE("property: alternation is symmetric and matches positions") {
    std::mt19937_64 rng(21);
    for (int round = 0; round < 300; ++round) {
        const Word w = testing::random_word(rng, 6, std::uniform_int_distribution<int>(2, 14)(rng));
        const auto alpha = w.alphabet();
        for (std::size_t i = 0; i < alpha.size(); ++i)
            for (std::size_t j = i + 1; j < alpha.size(); ++j) {
                const bool a = alternates(w, alpha[i], alpha[j]);
                CHECK(a == alternates(w, alpha[j], alpha[i]));
                CHECK(a == alternate_by_positions(w, alpha[i], alpha[j]));
            }
    }
}

TEST_CASE("property: word graphs are hereditary") {
    std::mt19937_64 rng(22);
    for (int round = 0; round < 200; ++round) {
        const int alphabet = std::uniform_int_distribution<int>(1, 7)(rng);
        const Word w = testing::random_word(rng, alphabet, std::uniform_int_distribution<int>(1, 18)(rng));
        const auto whole = graph_from_word(w);
        std::vector<int> keep;
        for (int letter : w.alphabet())
            if (rng() % 2) keep.push_back(letter);
        const auto part = graph_from_word(restrict(w, keep));
        // Positions of the kept letters in the whole graph's labelling.
        std::vector<int> vertices;
        for (int letter : keep) {
            const auto it = std::find(whole.original.begin(), whole.original.end(), letter);
            vertices.push_back(static_cast<int>(it - whole.original.begin()) + 1);
        }
        const auto induced = induced_subgraph(whole.graph, vertices);
        CHECK(part.graph == induced.graph);
        CHECK(part.original == keep);
    }
}

TEST_CASE("property: found witnesses represent and agree with the decision engine") {
    std::mt19937_64 rng(23);
    for (int round = 0; round < 60; ++round) {
        const int n = std::uniform_int_distribution<int>(1, 6)(rng);
        const Graph g = testing::random_graph(rng, n, 0.5);
        const auto w = find_representing_word(g, 3);
        if (!w) continue;
        CHECK(represents(*w, g));
        for (int v = 1; v <= n; ++v) CHECK(w->count(v) * static_cast<std::size_t>(n) == w->length());
        CHECK(decide_word_representable(g).answer == Answer::yes);
    }
}

TEST_CASE("property: words of random graphs recompute from scratch") {
    std::mt19937_64 rng(24);
    for (int round = 0; round < 100; ++round) {
        Word w = testing::random_word(rng, 5, std::uniform_int_distribution<int>(1, 12)(rng));
        const auto before = graph_from_word(w);
        auto letters = w.letters();
        letters.push_back(letters.front());
        const Word longer(letters);
        const auto after = graph_from_word(longer);
        const auto alpha = longer.alphabet();
        for (std::size_t i = 0; i < alpha.size(); ++i)
            for (std::size_t j = i + 1; j < alpha.size(); ++j)
                CHECK(after.graph.adjacent(static_cast<int>(i) + 1, static_cast<int>(j) + 1) ==
                      alternate_by_positions(longer, alpha[i], alpha[j]));
        CHECK(before.graph.order() == after.graph.order());
    }
}
