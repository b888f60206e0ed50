#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "bruhat/limits.hpp"
#include "bruhat/permutation.hpp"

namespace bruhat {

// A string of generator subscripts. Letters are plain integers so that shifts
// may leave the generator range.
struct Word {
  std::vector<int> letters;

  Word() = default;
  Word(std::initializer_list<int> ls) : letters(ls) {}
  explicit Word(std::vector<int> ls) : letters(std::move(ls)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

// Concatenated digits when every letter is in 0..9, space separated otherwise.
std::string to_string(const Word& word);
// Inverse of to_string; also accepts whitespace separated integers with signs.
Word parse_word(std::string_view text);

Word concat(const Word& a, const Word& b);
Word reversed(const Word& word);

// Product s_{i1} s_{i2} ... s_{ir} in S_n. Throws std::invalid_argument for a
// letter outside 1..n-1.
Permutation evaluate(const Word& word, int n);
bool is_reduced(const Word& word, int n);

struct ReducedWordSet {
  Permutation owner;
  std::vector<Word> words;  // lexicographic by letter sequence
};

// |R(w)|, saturating at limits.max_words + 1. Memoized over permutations.
std::uint64_t reduced_word_count(const Permutation& w, const Limits& limits = {});

// R(w) in lexicographic order. Throws CapExceeded when length(w) exceeds
// limits.max_length or |R(w)| exceeds limits.max_words.
ReducedWordSet reduced_words(const Permutation& w, const Limits& limits = {});

// Visits R(w) lazily in lexicographic order; the visitor returns false to
// stop. Applies the same caps as reduced_words.
void for_each_reduced_word(const Permutation& w, const std::function<bool(const Word&)>& visit,
                           const Limits& limits = {});

// Lexicographically least element of R(w).
Word least_reduced_word(const Permutation& w);

Word shift(const Word& word, int t);
// Removes the consecutive block [start, start+len).
Word delete_factor(const Word& word, std::size_t start, std::size_t len);
// True iff a is a (not necessarily consecutive) subsequence of b.
bool is_subword(const Word& a, const Word& b);

}  // namespace bruhat
