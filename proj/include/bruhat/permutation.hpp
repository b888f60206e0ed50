#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bruhat {

// Adjacent transposition s_i, 1 <= i < n.
struct SimpleReflection {
  int index;
};

// A permutation of {1..n} in one-line notation. Positions and values are
// 1-indexed at the interface. Values are immutable; every operation returns a
// new permutation.
class Permutation {
 public:
  static constexpr int kMaxStorage = 16;

  // Throws std::invalid_argument unless one_line is a bijection on {1..n}
  // with 1 <= n <= kMaxStorage.
  explicit Permutation(std::span<const int> one_line);
  Permutation(std::initializer_list<int> one_line);

  static Permutation identity(int n);
  static Permutation longest(int n);

  // Accepts "3241" (one digit per entry) or whitespace/comma separated
  // integers ("10 2 3 ...").
  static Permutation parse(std::string_view text);

  int size() const { return n_; }
  int length() const { return length_; }

  // w(i) for 1 <= i <= n.
  int operator()(int position) const { return entries_[position - 1]; }
  // w^{-1}(v): position holding value v.
  int position_of(int value) const;

  std::vector<int> one_line() const;
  std::vector<std::pair<int, int>> inversions() const;
  Permutation inverse() const;

  // i is a right descent iff w(i) > w(i+1), a left descent iff value i+1
  // stands left of value i.
  bool has_right_descent(int i) const { return entries_[i - 1] > entries_[i]; }
  bool has_left_descent(int i) const { return position_of(i + 1) < position_of(i); }

  // Swap entries in positions i < j. Used for transposition neighbours.
  Permutation swap_positions(int i, int j) const;

  // 4 bits per entry; injective for a fixed n.
  std::uint64_t key() const;

  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  // Lexicographic on one-line notation (shorter n first on a tie prefix).
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b);

 private:
  Permutation() = default;
  static int count_inversions(const std::array<std::uint8_t, kMaxStorage>& e, int n);

  std::array<std::uint8_t, kMaxStorage> entries_{};
  std::uint8_t n_ = 0;
  std::uint8_t length_ = 0;

  friend Permutation apply_left(SimpleReflection s, const Permutation& w);
  friend Permutation apply_right(const Permutation& w, SimpleReflection s);
};

// s_i w: exchanges the positions of values i and i+1.
Permutation apply_left(SimpleReflection s, const Permutation& w);
// w s_i: exchanges the values in positions i and i+1.
Permutation apply_right(const Permutation& w, SimpleReflection s);
// (u v)(k) = u(v(k)); with this convention s1 s2 s1 s3 = 3241.
Permutation compose(const Permutation& u, const Permutation& v);
// Appends fixed points n+1..m.
Permutation embed(const Permutation& w, int m);

}  // namespace bruhat

template <>
struct std::hash<bruhat::Permutation> {
  std::size_t operator()(const bruhat::Permutation& p) const noexcept {
    return std::hash<std::uint64_t>{}(p.key() * 31u + static_cast<std::uint64_t>(p.size()));
  }
};
