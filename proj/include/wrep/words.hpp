#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wrep/graph.hpp"
#include "wrep/limits.hpp"

namespace wrep {

/// A finite sequence of positive integer letters.
class Word {
   public:
    Word() = default;
    explicit Word(std::vector<int> letters);
    Word(std::initializer_list<int> letters) : Word(std::vector<int>(letters)) {}

    /// Whitespace-separated tokens, or a compact digit string such as
    /// "14213243" when it is a single token.
    static Word parse(std::string_view text);

    const std::vector<int>& letters() const noexcept { return letters_; }
    std::size_t length() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    /// Distinct letters, ascending.
    std::vector<int> alphabet() const;
    bool contains(int letter) const;
    /// Occurrences of `letter`.
    std::size_t count(int letter) const;

    /// Whitespace-separated tokens.
    std::string to_string() const;

    friend bool operator==(const Word&, const Word&) = default;

   private:
    std::vector<int> letters_;
};

/// True iff w restricted to {x, y} is xyxy... or yxyx...
bool alternates(const Word& w, int x, int y);

/// Vertices are the alphabet relabelled 1..|alphabet| by increasing letter.
LabelledGraph graph_from_word(const Word& w);

/// The word's alphabet must be exactly 1..n of g.
bool represents(const Word& w, const Graph& g);

Word restrict(const Word& w, std::span<const int> letters);

/// Iterative deepening over k = 1..k_max for a k-uniform word representing g
/// (letters 1..n). Absence of a result says nothing about representability.
std::optional<Word> find_representing_word(const Graph& g, int k_max, const Limits& limits = {});

/// Word file: one word per line, `#` comments ignored.
std::vector<Word> parse_word_file(std::string_view text);

}  // namespace wrep
