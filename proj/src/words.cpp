#include "wrep/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "wrep/error.hpp"
#include "wrep/text.hpp"

namespace wrep {

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
    for (int x : letters_)
        if (x < 1) throw invalid_parameter("word letters must be positive, got " + std::to_string(x));
}

Word Word::parse(std::string_view text) {
    const auto tokens = split_ws(trim(text));
    std::vector<int> letters;
    const bool compact = tokens.size() == 1 && tokens[0].size() > 1 &&
                         std::all_of(tokens[0].begin(), tokens[0].end(), [](char c) { return std::isdigit(c); });
    if (compact) {
        for (char c : tokens[0]) letters.push_back(c - '0');
    } else {
        for (const auto& t : tokens) letters.push_back(parse_int(t, 0));
    }
    for (int x : letters)
        if (x < 1) throw parse_error("word letters must be positive", 0);
    return Word(std::move(letters));
}

std::vector<int> Word::alphabet() const {
    std::vector<int> out = letters_;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool Word::contains(int letter) const { return std::find(letters_.begin(), letters_.end(), letter) != letters_.end(); }

std::size_t Word::count(int letter) const {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), letter));
}

std::string Word::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < letters_.size(); ++i) out << (i ? " " : "") << letters_[i];
    return out.str();
}

bool alternates(const Word& w, int x, int y) {
    if (x == y) throw invalid_parameter("alternation needs two distinct letters");
    if (!w.contains(x) || !w.contains(y))
        throw invalid_parameter("letters " + std::to_string(x) + ", " + std::to_string(y) + " must both occur");
    int last = 0;
    for (int c : w.letters()) {
        if (c != x && c != y) continue;
        if (c == last) return false;
        last = c;
    }
    return true;
}

LabelledGraph graph_from_word(const Word& w) {
    auto alphabet = w.alphabet();
    const int n = static_cast<int>(alphabet.size());
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (alternates(w, alphabet[i], alphabet[j])) edges.push_back({i + 1, j + 1});
    return {Graph(n, std::move(edges)), std::move(alphabet)};
}

bool represents(const Word& w, const Graph& g) {
    const auto alphabet = w.alphabet();
    bool matches = static_cast<int>(alphabet.size()) == g.order();
    for (std::size_t i = 0; matches && i < alphabet.size(); ++i) matches = alphabet[i] == static_cast<int>(i) + 1;
    if (!matches) throw invalid_parameter("word alphabet differs from the graph's vertex set");
    return graph_from_word(w).graph == g;
}

Word restrict(const Word& w, std::span<const int> letters) {
    std::vector<int> keep(letters.begin(), letters.end());
    std::sort(keep.begin(), keep.end());
    std::vector<int> out;
    for (int c : w.letters())
        if (std::binary_search(keep.begin(), keep.end(), c)) out.push_back(c);
    return Word(std::move(out));
}

namespace {

// Backtracking over k-uniform words. For every pair the state records the last
// of the two letters placed and whether their restriction has already stopped
// alternating.
class UniformWordSearch {
   public:
    UniformWordSearch(const Graph& g, int k)
        : g_(g), n_(g.order()), k_(k), count_(static_cast<std::size_t>(n_) + 1, 0),
          last_(static_cast<std::size_t>((n_ + 1) * (n_ + 1)), 0),
          broken_(static_cast<std::size_t>((n_ + 1) * (n_ + 1)), 0) {}

    std::optional<Word> run() {
        word_.clear();
        if (place(static_cast<std::size_t>(n_) * static_cast<std::size_t>(k_))) return Word(word_);
        return std::nullopt;
    }

   private:
    std::size_t at(int x, int y) const {
        if (x > y) std::swap(x, y);
        return static_cast<std::size_t>(x) * static_cast<std::size_t>(n_ + 1) + static_cast<std::size_t>(y);
    }

    // A non-edge pair that still alternates can only be broken by the letter
    // that is not yet exhausted.
    bool can_still_break(int x, int y) const {
        if (broken_[at(x, y)]) return true;
        const int rx = k_ - count_[x];
        const int ry = k_ - count_[y];
        if (rx > 0 && ry > 0) return true;
        const int remaining_letter = rx > 0 ? x : y;
        const int remaining = rx > 0 ? rx : ry;
        if (remaining == 0) return false;
        return last_[at(x, y)] == remaining_letter ? remaining >= 1 : remaining >= 2;
    }

    bool place(std::size_t left) {
        if (left == 0) return true;
        std::vector<std::pair<int, char>> saved;
        saved.reserve(static_cast<std::size_t>(n_));
        for (int x = 1; x <= n_; ++x) {
            if (count_[x] == k_) continue;
            saved.clear();
            bool ok = true;
            for (int y = 1; y <= n_; ++y) {
                if (y == x) continue;
                const auto idx = at(x, y);
                saved.push_back({last_[idx], broken_[idx]});
                if (last_[idx] == x) broken_[idx] = 1;
                last_[idx] = x;
                if (broken_[idx] && g_.adjacent(x, y)) ok = false;
            }
            ++count_[x];
            word_.push_back(x);
            if (ok)
                for (int y = 1; y <= n_ && ok; ++y)
                    if (y != x && !g_.adjacent(x, y)) ok = can_still_break(x, y);
            if (ok && place(left - 1)) return true;
            word_.pop_back();
            --count_[x];
            std::size_t s = 0;
            for (int y = 1; y <= n_; ++y) {
                if (y == x) continue;
                const auto idx = at(x, y);
                last_[idx] = saved[s].first;
                broken_[idx] = saved[s].second;
                ++s;
            }
        }
        return false;
    }

    const Graph& g_;
    int n_;
    int k_;
    std::vector<int> count_;
    std::vector<int> last_;
    std::vector<char> broken_;
    std::vector<int> word_;
};

}  // namespace

std::optional<Word> find_representing_word(const Graph& g, int k_max, const Limits& limits) {
    if (g.order() > limits.word_vertices)
        throw resource_limit("word search capped at " + std::to_string(limits.word_vertices) + " vertices, graph has " +
                             std::to_string(g.order()));
    if (k_max < 1) throw invalid_parameter("k_max must be at least 1");
    if (g.order() == 0) return Word{};
    for (int k = 1; k <= k_max; ++k) {
        UniformWordSearch search(g, k);
        if (auto w = search.run()) {
            if (!represents(*w, g)) throw invariant_violation("word search produced a non-representant " + w->to_string());
            return w;
        }
    }
    return std::nullopt;
}

std::vector<Word> parse_word_file(std::string_view text) {
    std::vector<Word> out;
    for (const auto& line : data_lines(text)) {
        try {
            out.push_back(Word::parse(line.text));
        } catch (const parse_error& e) {
            throw parse_error(e.what(), line.number);
        }
    }
    return out;
}

}  // namespace wrep
