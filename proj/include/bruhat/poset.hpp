#pragma once

#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bruhat {

// A finite graded poset given by element ranks and its Hasse diagram, with a
// unique minimum and a unique maximum. Elements are 0..size()-1.
class RankedPoset {
 public:
  // covers holds (lower, upper) pairs. Throws std::invalid_argument when a
  // cover does not join adjacent ranks, is repeated, or when the minimum or
  // maximum is not unique.
  RankedPoset(std::vector<int> ranks, std::vector<std::pair<int, int>> covers);

  int size() const { return static_cast<int>(ranks_.size()); }
  int rank(int v) const { return ranks_[v]; }
  const std::vector<int>& ranks() const { return ranks_; }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& up(int v) const { return up_[v]; }
  const std::vector<int>& down(int v) const { return down_[v]; }

  int bottom() const { return bottom_; }
  int top() const { return top_; }
  int length() const { return ranks_[top_]; }
  // Number of elements of each rank 0..length().
  std::vector<int> rank_profile() const;

 private:
  std::vector<int> ranks_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> up_;
  std::vector<std::vector<int>> down_;
  int bottom_ = 0;
  int top_ = 0;
};

RankedPoset singleton_poset();
// Chain with `length` covers.
RankedPoset chain(int length);
// Product order; rank is the sum of ranks.
RankedPoset direct_product(const RankedPoset& p, const RankedPoset& q);

// Isomorphism-invariant byte string: equal for two posets iff they are
// isomorphic.
struct CanonicalForm {
  std::string certificate;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const RankedPoset& p);
bool is_isomorphic(const RankedPoset& p, const RankedPoset& q);

// DOT digraph with one node per element, one edge per cover, and one
// rank=same group per rank. labels, when given, must have size() entries.
std::string to_dot(const RankedPoset& p, std::span<const std::string> labels = {});

}  // namespace bruhat
