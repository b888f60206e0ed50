#pragma once

#include <optional>
#include <span>
#include <vector>

#include "bruhat/limits.hpp"
#include "bruhat/order.hpp"
#include "bruhat/permutation.hpp"
#include "bruhat/words.hpp"

namespace bruhat {

// ---------------------------------------------------------------------------
// Thin substrings

// values is an arbitrary integer string; positions are 1-indexed and strictly
// increasing, selecting a monotonic substring. The substring is thin when no
// value outside it lying strictly between its minimum and maximum occurs
// between its first and last positions. Throws std::invalid_argument when the
// positions are not increasing or the substring is not monotonic.
bool is_thin(std::span<const int> values, std::span<const int> positions);
bool is_thin(const Permutation& s, std::span<const int> positions);

// ---------------------------------------------------------------------------
// Decomposability

enum class BlockOrder {
  SmallFirst,  // a1 uses letters <= m, a2 letters > m
  LargeFirst,  // a1 uses letters > m, a2 letters <= m
};

struct Decomposition {
  int m = 0;
  Word a1;
  Word a2;
  BlockOrder order = BlockOrder::SmallFirst;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// Searches R(w) in lexicographic order, every split point, and both block
// orders; returns the first split a1|a2 with both blocks nonempty and one
// block entirely at or below m, the other entirely above (m is taken as the
// largest letter of the small block). Empty iff w is indecomposable.
std::optional<Decomposition> decompose(const Permutation& w, const Limits& limits = {});

// Throws std::invalid_argument unless d describes a reduced word of w split
// as documented above.
void validate_decomposition(const Permutation& w, const Decomposition& d);

// ---------------------------------------------------------------------------
// Intervals isomorphic to a decomposable ideal without a factor certificate

struct NonForcingWitness {
  Permutation w;
  Permutation w_minus;
  Permutation w_plus;
  Word b;           // the consecutive run (k1+1)...k2 (reversed for LargeFirst)
  int k1 = 0;       // largest letter of the small block
  int k2 = 0;       // smallest letter of the large block
  Word full_word;   // reduced word of w_plus containing b as a factor
  BlockOrder order = BlockOrder::SmallFirst;
};

// For SmallFirst: full_word = a1 . (k1+1)...k2 . shift(a2, 1), w_minus is the
// product of the run, w_plus that of full_word. LargeFirst is handled through
// the inverse: build the witness for the reversed word of w^{-1}, then invert
// both endpoints and reverse the words. Ambient size is
// max(w.size(), largest letter + 1).
NonForcingWitness nonforcing_witness(const Permutation& w, const Decomposition& d);

// ---------------------------------------------------------------------------
// Swap-strings

// Positions p1 < ... < pk holding values v1 < ... < vk increasing in x and
// decreasing in y (y(p_j) = x(p_{k+1-j})); x and y agree elsewhere.
struct SwapString {
  std::vector<int> positions;
  std::vector<int> values;
  int k = 0;

  friend bool operator==(const SwapString&, const SwapString&) = default;
};

// The unique swap-string of (x, y) with k >= 2 that is thin in both, if any.
std::optional<SwapString> detect_swap_string(const Permutation& x, const Permutation& y);

struct SwapFactorization {
  Word a;
  Word b;
  Word c;
  int t = 0;  // shift(b, t) is a reduced word of the longest element of S_k
};

// Builds a.c in R(x) and a.b.c in R(y). Values strictly inside the span of
// the swap-string but outside it are swept out by right multiplication (too
// large ones rightwards, rightmost first; then too small ones leftwards,
// leftmost first), each step removing one inversion from both x and y. b
// sorts the then-contiguous decreasing block of y, and a is the
// lexicographically least reduced word of the swept x.
// Throws std::invalid_argument if ss is not the swap-string of (x, y).
SwapFactorization swap_string_factorization(const Permutation& x, const Permutation& y,
                                            const SwapString& ss);

// ---------------------------------------------------------------------------
// Shifted longest words

// The t with shift(b, t) in R(w0^k), if one exists.
std::optional<int> shifted_longest_offset(const Word& b, int k);

// For iv isomorphic to S_k (k recovered from the length C(k, 2)), true iff some
// shift of b is a reduced word of the longest element of S_k.
bool verify_b_is_shifted_longest(const Interval& iv, const Word& b);

}  // namespace bruhat
