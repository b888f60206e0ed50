#pragma once

#include <cstddef>
#include <vector>

#include "bruhat/limits.hpp"

namespace bruhat {

struct AtlasRow {
  int length = 0;
  std::size_t intervals = 0;  // isomorphism classes of [x, y] with that length
  std::size_t ideals = 0;     // isomorphism classes of [identity, w]

  friend bool operator==(const AtlasRow&, const AtlasRow&) = default;
};

struct AtlasResult {
  int n = 0;
  int max_len = 0;
  std::vector<AtlasRow> rows;  // lengths 0..max_len
  std::size_t intervals_examined = 0;
  double seconds = 0;
  Limits caps;
};

// Counts isomorphism classes of intervals and of principal order ideals of
// each length in S_n. Only tops that are lexicographically least among their
// images under inversion and conjugation by the longest element are expanded;
// both maps are automorphisms of the order, so every class is still reached.
// jobs > 1 splits the tops over threads; counts do not depend on it.
AtlasResult atlas(int n, int max_len, const Limits& limits = {}, int jobs = 1);

}  // namespace bruhat
