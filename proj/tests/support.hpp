#pragma once

// Bridges between library types and the plain-vector oracles.

#include <string>
#include <vector>

#include "bruhat/order.hpp"
#include "bruhat/poset.hpp"
#include "bruhat/words.hpp"
#include "oracles.hpp"

inline bruhat::Permutation P(const std::string& text) { return bruhat::Permutation::parse(text); }

inline bruhat::Word W(const std::string& text) { return bruhat::parse_word(text); }

inline oracle::Perm plain(const bruhat::Permutation& p) { return p.one_line(); }

inline oracle::Poset plain(const bruhat::RankedPoset& p) { return {p.ranks(), p.covers()}; }

inline std::vector<bruhat::Permutation> every_permutation(int n) {
  std::vector<bruhat::Permutation> out;
  for (const auto& p : oracle::all_perms(n)) out.emplace_back(p);
  return out;
}

inline std::vector<std::string> word_strings(const bruhat::ReducedWordSet& set) {
  std::vector<std::string> out;
  for (const auto& w : set.words) out.push_back(bruhat::to_string(w));
  return out;
}
