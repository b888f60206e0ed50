#include "bruhat/structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace bruhat {

bool is_thin(std::span<const int> values, std::span<const int> positions) {
  if (positions.empty()) throw std::invalid_argument("is_thin: empty substring");
  const int n = static_cast<int>(values.size());
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (positions[i] < 1 || positions[i] > n || (i > 0 && positions[i] <= positions[i - 1])) {
      throw std::invalid_argument("is_thin: positions must be increasing and in range");
    }
  }
  std::vector<int> sub;
  for (int p : positions) sub.push_back(values[p - 1]);
  const bool increasing = std::adjacent_find(sub.begin(), sub.end(), std::greater_equal<>()) ==
                          sub.end();
  const bool decreasing = std::adjacent_find(sub.begin(), sub.end(), std::less_equal<>()) ==
                          sub.end();
  if (!increasing && !decreasing) {
    throw std::invalid_argument("is_thin: substring is not monotonic");
  }
  const auto [lo, hi] = std::minmax_element(sub.begin(), sub.end());
  for (int p = positions.front(); p <= positions.back(); ++p) {
    const int c = values[p - 1];
    if (c > *lo && c < *hi && std::find(sub.begin(), sub.end(), c) == sub.end()) return false;
  }
  return true;
}

bool is_thin(const Permutation& s, std::span<const int> positions) {
  const std::vector<int> values = s.one_line();
  return is_thin(std::span<const int>(values), positions);
}

std::optional<Decomposition> decompose(const Permutation& w, const Limits& limits) {
  std::optional<Decomposition> found;
  for_each_reduced_word(
      w,
      [&](const Word& word) {
        const auto& ls = word.letters;
        const std::size_t len = ls.size();
        // suffix_min[p], suffix_max[p] over ls[p..]
        std::vector<int> suffix_min(len + 1, 1 << 20);
        std::vector<int> suffix_max(len + 1, -(1 << 20));
        for (std::size_t p = len; p-- > 0;) {
          suffix_min[p] = std::min(suffix_min[p + 1], ls[p]);
          suffix_max[p] = std::max(suffix_max[p + 1], ls[p]);
        }
        int prefix_min = 1 << 20;
        int prefix_max = -(1 << 20);
        for (std::size_t p = 1; p < len; ++p) {
          prefix_min = std::min(prefix_min, ls[p - 1]);
          prefix_max = std::max(prefix_max, ls[p - 1]);
          const Word a1(std::vector<int>(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(p)));
          const Word a2(std::vector<int>(ls.begin() + static_cast<std::ptrdiff_t>(p), ls.end()));
          if (prefix_max < suffix_min[p]) {
            found = Decomposition{prefix_max, a1, a2, BlockOrder::SmallFirst};
            return false;
          }
          if (prefix_min > suffix_max[p]) {
            found = Decomposition{suffix_max[p], a1, a2, BlockOrder::LargeFirst};
            return false;
          }
        }
        return true;
      },
      limits);
  return found;
}

void validate_decomposition(const Permutation& w, const Decomposition& d) {
  if (d.a1.empty() || d.a2.empty()) {
    throw std::invalid_argument("decomposition blocks must be nonempty");
  }
  if (d.m < 1 || d.m > w.size() - 2) {
    throw std::invalid_argument("decomposition split letter out of range");
  }
  const Word& small = d.order == BlockOrder::SmallFirst ? d.a1 : d.a2;
  const Word& large = d.order == BlockOrder::SmallFirst ? d.a2 : d.a1;
  const bool ok_small = std::all_of(small.letters.begin(), small.letters.end(),
                                    [&](int l) { return l <= d.m; });
  const bool ok_large = std::all_of(large.letters.begin(), large.letters.end(),
                                    [&](int l) { return l > d.m; });
  if (!ok_small || !ok_large) {
    throw std::invalid_argument("decomposition blocks are not separated by m=" +
                                std::to_string(d.m));
  }
  const Word full = concat(d.a1, d.a2);
  if (evaluate(full, w.size()) != w || !is_reduced(full, w.size())) {
    throw std::invalid_argument("decomposition " + to_string(full) + " is not a reduced word of " +
                                w.str());
  }
}

NonForcingWitness nonforcing_witness(const Permutation& w, const Decomposition& d) {
  validate_decomposition(w, d);
  if (d.order == BlockOrder::LargeFirst) {
    const Decomposition mirrored{d.m, reversed(d.a2), reversed(d.a1), BlockOrder::SmallFirst};
    const NonForcingWitness inner = nonforcing_witness(w.inverse(), mirrored);
    return NonForcingWitness{w,
                             inner.w_minus.inverse(),
                             inner.w_plus.inverse(),
                             reversed(inner.b),
                             inner.k1,
                             inner.k2,
                             reversed(inner.full_word),
                             BlockOrder::LargeFirst};
  }
  const int k1 = *std::max_element(d.a1.letters.begin(), d.a1.letters.end());
  const int k2 = *std::min_element(d.a2.letters.begin(), d.a2.letters.end());
  Word b;
  for (int l = k1 + 1; l <= k2; ++l) b.letters.push_back(l);
  const Word full = concat(concat(d.a1, b), shift(d.a2, 1));
  const int top_letter = *std::max_element(full.letters.begin(), full.letters.end());
  const int ambient = std::max(w.size(), top_letter + 1);
  return NonForcingWitness{w,     evaluate(b, ambient), evaluate(full, ambient), b, k1, k2,
                           full,  BlockOrder::SmallFirst};
}

std::optional<SwapString> detect_swap_string(const Permutation& x, const Permutation& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("detect_swap_string: size mismatch");
  }
  std::vector<int> differ;
  for (int i = 1; i <= x.size(); ++i) {
    if (x(i) != y(i)) differ.push_back(i);
  }
  // An odd k leaves the central position fixed, so |differ| is always even.
  if (differ.size() < 2 || differ.size() % 2 != 0) return std::nullopt;

  auto accept = [&](const std::vector<int>& positions) -> std::optional<SwapString> {
    const int k = static_cast<int>(positions.size());
    std::vector<int> values;
    for (int p : positions) values.push_back(x(p));
    if (!std::is_sorted(values.begin(), values.end())) return std::nullopt;
    for (int j = 0; j < k; ++j) {
      if (y(positions[j]) != values[k - 1 - j]) return std::nullopt;
    }
    if (!is_thin(x, positions) || !is_thin(y, positions)) return std::nullopt;
    return SwapString{positions, values, k};
  };

  if (auto ss = accept(differ)) return ss;
  const std::size_t half = differ.size() / 2;
  for (int q = differ[half - 1] + 1; q < differ[half]; ++q) {
    std::vector<int> positions(differ);
    positions.insert(positions.begin() + static_cast<std::ptrdiff_t>(half), q);
    if (auto ss = accept(positions)) return ss;
  }
  return std::nullopt;
}

SwapFactorization swap_string_factorization(const Permutation& x, const Permutation& y,
                                            const SwapString& ss) {
  if (detect_swap_string(x, y) != ss) {
    throw std::invalid_argument("swap_string_factorization: not the swap-string of (" + x.str() +
                                ", " + y.str() + ")");
  }
  std::vector<int> xs = x.one_line();
  std::vector<int> ys = y.one_line();
  const int vmin = ss.values.front();
  const int vmax = ss.values.back();
  auto in_string = [&](int v) {
    return std::binary_search(ss.values.begin(), ss.values.end(), v);
  };
  // 1-indexed helpers over xs; xs and ys agree outside the swap-string values.
  auto pos_of = [&](int v) {
    return static_cast<int>(std::find(xs.begin(), xs.end(), v) - xs.begin()) + 1;
  };
  auto first_string_pos = [&] {
    for (int p = 1; p <= static_cast<int>(xs.size()); ++p)
      if (in_string(xs[p - 1])) return p;
    return 0;
  };
  auto last_string_pos = [&] {
    for (int p = static_cast<int>(xs.size()); p >= 1; --p)
      if (in_string(xs[p - 1])) return p;
    return 0;
  };
  Word sweep;
  auto swap_both = [&](int p) {
    std::swap(xs[p - 1], xs[p]);
    std::swap(ys[p - 1], ys[p]);
    sweep.letters.push_back(p);
  };

  std::vector<int> large;
  std::vector<int> small;
  for (int p = ss.positions.front() + 1; p < ss.positions.back(); ++p) {
    const int v = xs[p - 1];
    if (in_string(v)) continue;
    if (v > vmax) large.push_back(v);
    if (v < vmin) small.push_back(v);
  }
  for (auto it = large.rbegin(); it != large.rend(); ++it) {
    for (int p = pos_of(*it); p < last_string_pos(); ++p) swap_both(p);
  }
  for (int v : small) {
    for (int p = pos_of(v); p > first_string_pos(); --p) swap_both(p - 1);
  }

  const Permutation x_swept(xs);
  const int start = first_string_pos();
  Word sorting;
  for (bool changed = true; changed;) {
    changed = false;
    for (int p = start; p < start + ss.k - 1; ++p) {
      if (ys[p - 1] > ys[p]) {
        std::swap(ys[p - 1], ys[p]);
        sorting.letters.push_back(p);
        changed = true;
      }
    }
  }

  SwapFactorization out{least_reduced_word(x_swept), reversed(sorting), reversed(sweep),
                        1 - start};
  const int n = x.size();
  const Word ac = concat(out.a, out.c);
  const Word abc = concat(concat(out.a, out.b), out.c);
  if (evaluate(ac, n) != x || !is_reduced(ac, n) || evaluate(abc, n) != y ||
      !is_reduced(abc, n)) {
    throw std::logic_error("swap_string_factorization produced inconsistent words");
  }
  return out;
}

std::optional<int> shifted_longest_offset(const Word& b, int k) {
  if (k < 1) return std::nullopt;
  if (static_cast<int>(b.size()) != k * (k - 1) / 2) return std::nullopt;
  if (b.empty()) return 0;
  const int t = 1 - *std::min_element(b.letters.begin(), b.letters.end());
  const Word moved = shift(b, t);
  const bool in_range = std::all_of(moved.letters.begin(), moved.letters.end(),
                                    [&](int l) { return l >= 1 && l <= k - 1; });
  if (!in_range || !is_reduced(moved, k)) return std::nullopt;
  return t;
}

bool verify_b_is_shifted_longest(const Interval& iv, const Word& b) {
  const int len = iv.length();
  for (int k = 1; k * (k - 1) / 2 <= len; ++k) {
    if (k * (k - 1) / 2 == len) return shifted_longest_offset(b, k).has_value();
  }
  return false;
}

}  // namespace bruhat
