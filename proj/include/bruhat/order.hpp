#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "bruhat/limits.hpp"
#include "bruhat/permutation.hpp"
#include "bruhat/poset.hpp"

namespace bruhat {

// x <= y by the rank-matrix criterion: for all i, j,
// #{k <= i : x(k) >= j} <= #{k <= i : y(k) >= j}.
// Throws std::invalid_argument on a size mismatch.
bool bruhat_leq(const Permutation& x, const Permutation& y);

// Elements covering x (length +1), lexicographic order.
std::vector<Permutation> covers_above(const Permutation& x);
// Elements covered by x (length -1), lexicographic order.
std::vector<Permutation> covers_below(const Permutation& x);

// [low, high] with its Hasse diagram. elements are sorted by (rank, one-line
// notation) and poset vertex v is elements[v]; rank is offset from low.
struct Interval {
  Permutation low;
  Permutation high;
  std::vector<Permutation> elements;
  RankedPoset poset;

  int length() const { return high.length() - low.length(); }
  int rank_of(const Permutation& z) const;
  int index_of(const Permutation& z) const;
  bool contains(const Permutation& z) const;
  std::vector<std::pair<Permutation, Permutation>> cover_pairs() const;
};

// A principal order ideal is the interval [identity, w].
using Ideal = Interval;

// Throws std::invalid_argument unless x <= y; CapExceeded for n > max_n.
Interval interval(const Permutation& x, const Permutation& y, const Limits& limits = {});
Ideal ideal(const Permutation& w, const Limits& limits = {});

// Elements of iv covered by iv.high.
std::vector<Permutation> coatoms(const Interval& iv);

// Some w with x <= w covered by y and w(i) != y(i), found by scanning the
// coatoms of [x, y] in lexicographic order. Requires x < y and x(i) != y(i).
Permutation coatom_avoiding_position(const Permutation& x, const Permutation& y, int i);

// Elements within `depth` ranks of a root, on one side of it, with the
// covers among them. Used to extract many intervals sharing an endpoint.
class HasseRegion {
 public:
  enum class Direction { Down, Up };

  static HasseRegion below(const Permutation& top, int depth);
  static HasseRegion above(const Permutation& bottom, int depth);

  const Permutation& root() const { return elements_.front(); }
  Direction direction() const { return direction_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const Permutation& element(int i) const { return elements_[i]; }
  // Distance from the root in ranks.
  int depth(int i) const { return depth_[i]; }
  const std::vector<int>& at_depth(int d) const { return layers_[d]; }
  int max_depth() const { return static_cast<int>(layers_.size()) - 1; }

  // The interval between the root and element `other`, as a ranked poset.
  // Vertex order is unspecified; `members`, when given, receives the region
  // indices of the elements in vertex order.
  RankedPoset interval_with(int other, std::vector<int>* members = nullptr) const;

 private:
  static HasseRegion build(const Permutation& root, int depth, Direction direction);

  Direction direction_ = Direction::Down;
  std::vector<Permutation> elements_;
  std::vector<int> depth_;
  std::vector<std::vector<int>> layers_;
  // Adjacency toward the root and away from it.
  std::vector<std::vector<int>> toward_;
  std::vector<std::vector<int>> away_;
};

}  // namespace bruhat
