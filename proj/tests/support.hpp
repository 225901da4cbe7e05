#pragma once

#include <fstream>
#include <iterator>
#include <random>
#include <string>
#include <vector>

#include "wrep/harness.hpp"

namespace testing {

inline std::string read_fixture(const std::string& name) {
    std::ifstream in(std::string(WREP_FIXTURE_DIR) + "/" + name);
    if (!in) throw std::runtime_error("missing fixture " + name);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline wrep::Instance fixture(const std::string& name) { return wrep::load_instance(read_fixture(name)); }

inline wrep::Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<wrep::Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (coin(rng)) edges.push_back({u, v});
    return wrep::Graph(n, std::move(edges));
}

inline wrep::Word random_word(std::mt19937_64& rng, int alphabet, int length) {
    std::uniform_int_distribution<int> letter(1, alphabet);
    std::vector<int> letters;
    for (int i = 0; i < length; ++i) letters.push_back(letter(rng));
    return wrep::Word(std::move(letters));
}

/// Every subset of 1..n as a sorted vertex list, in mask order.
inline std::vector<std::vector<int>> all_subsets(int n) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) s.push_back(v + 1);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace testing
