#include "bruhat/order.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace bruhat {

namespace {

void check_same_size(const Permutation& x, const Permutation& y, const char* what) {
  if (x.size() != y.size()) {
    throw std::invalid_argument(std::string(what) + ": size mismatch " + x.str() + " vs " +
                                y.str());
  }
}

// Transpositions of positions i < j that change length by exactly one:
// no entry strictly between them has a value strictly between theirs.
template <typename Fn>
void for_each_cover_swap(const Permutation& w, bool upward, Fn&& fn) {
  const int n = w.size();
  for (int i = 1; i <= n; ++i) {
    const int a = w(i);
    // Scanning j rightwards, track the tightest bound seen between i and j.
    int bound = upward ? n + 1 : 0;
    for (int j = i + 1; j <= n; ++j) {
      const int b = w(j);
      if (upward) {
        if (b > a && b < bound) {
          fn(i, j);
          bound = b;
        }
      } else {
        if (b < a && b > bound) {
          fn(i, j);
          bound = b;
        }
      }
    }
  }
}

}  // namespace

bool bruhat_leq(const Permutation& x, const Permutation& y) {
  check_same_size(x, y, "bruhat_leq");
  if (x.length() > y.length()) return false;
  const int n = x.size();
  std::array<int, Permutation::kMaxStorage + 2> cx{};
  std::array<int, Permutation::kMaxStorage + 2> cy{};
  for (int i = 1; i <= n; ++i) {
    // c[j] = #{k <= i : w(k) >= j}
    for (int j = 1; j <= x(i); ++j) ++cx[j];
    for (int j = 1; j <= y(i); ++j) ++cy[j];
    for (int j = 1; j <= n; ++j) {
      if (cx[j] > cy[j]) return false;
    }
  }
  return true;
}

std::vector<Permutation> covers_above(const Permutation& x) {
  std::vector<Permutation> out;
  for_each_cover_swap(x, true, [&](int i, int j) { out.push_back(x.swap_positions(i, j)); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> covers_below(const Permutation& x) {
  std::vector<Permutation> out;
  for_each_cover_swap(x, false, [&](int i, int j) { out.push_back(x.swap_positions(i, j)); });
  std::sort(out.begin(), out.end());
  return out;
}

int Interval::index_of(const Permutation& z) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), z,
                             [&](const Permutation& a, const Permutation& b) {
                               if (a.length() != b.length()) return a.length() < b.length();
                               return a < b;
                             });
  if (it == elements.end() || *it != z) return -1;
  return static_cast<int>(it - elements.begin());
}

bool Interval::contains(const Permutation& z) const {
  return z.size() == low.size() && index_of(z) >= 0;
}

int Interval::rank_of(const Permutation& z) const {
  const int idx = index_of(z);
  if (idx < 0) throw std::invalid_argument(z.str() + " is not in the interval");
  return poset.rank(idx);
}

std::vector<std::pair<Permutation, Permutation>> Interval::cover_pairs() const {
  std::vector<std::pair<Permutation, Permutation>> out;
  for (auto [a, b] : poset.covers()) out.emplace_back(elements[a], elements[b]);
  return out;
}

Interval interval(const Permutation& x, const Permutation& y, const Limits& limits) {
  check_same_size(x, y, "interval");
  require_group_size(x.size(), limits);
  if (!bruhat_leq(x, y)) {
    throw std::invalid_argument("interval: " + x.str() + " is not below " + y.str());
  }
  std::unordered_set<Permutation> seen{y};
  std::vector<Permutation> found{y};
  std::deque<Permutation> queue{y};
  while (!queue.empty()) {
    Permutation z = queue.front();
    queue.pop_front();
    if (z.length() == x.length()) continue;
    for_each_cover_swap(z, false, [&](int i, int j) {
      Permutation u = z.swap_positions(i, j);
      if (seen.contains(u)) return;
      seen.insert(u);
      if (!bruhat_leq(x, u)) return;
      found.push_back(u);
      queue.push_back(u);
    });
  }
  std::sort(found.begin(), found.end(), [](const Permutation& a, const Permutation& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a < b;
  });
  std::unordered_map<Permutation, int> index;
  for (int i = 0; i < static_cast<int>(found.size()); ++i) index.emplace(found[i], i);

  std::vector<int> ranks;
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < static_cast<int>(found.size()); ++i) {
    ranks.push_back(found[i].length() - x.length());
    for_each_cover_swap(found[i], false, [&](int a, int b) {
      auto it = index.find(found[i].swap_positions(a, b));
      if (it != index.end()) covers.emplace_back(it->second, i);
    });
  }
  std::sort(covers.begin(), covers.end());
  RankedPoset poset(std::move(ranks), std::move(covers));
  return Interval{x, y, std::move(found), std::move(poset)};
}

Ideal ideal(const Permutation& w, const Limits& limits) {
  return interval(Permutation::identity(w.size()), w, limits);
}

std::vector<Permutation> coatoms(const Interval& iv) {
  std::vector<Permutation> out;
  for (int v : iv.poset.down(iv.poset.top())) out.push_back(iv.elements[v]);
  std::sort(out.begin(), out.end());
  return out;
}

Permutation coatom_avoiding_position(const Permutation& x, const Permutation& y, int i) {
  check_same_size(x, y, "coatom_avoiding_position");
  if (x == y || !bruhat_leq(x, y)) {
    throw std::invalid_argument("coatom_avoiding_position: need " + x.str() + " < " + y.str());
  }
  if (i < 1 || i > x.size() || x(i) == y(i)) {
    throw std::invalid_argument("coatom_avoiding_position: position " + std::to_string(i) +
                                " must hold different values in x and y");
  }
  for (const Permutation& w : covers_below(y)) {
    if (w(i) != y(i) && bruhat_leq(x, w)) return w;
  }
  throw std::logic_error("no coatom of [" + x.str() + ", " + y.str() +
                         "] moves position " + std::to_string(i));
}

HasseRegion HasseRegion::build(const Permutation& root, int depth, Direction direction) {
  HasseRegion r;
  r.direction_ = direction;
  std::unordered_map<std::uint64_t, int> index;
  r.elements_.push_back(root);
  r.depth_.push_back(0);
  r.layers_.push_back({0});
  r.toward_.emplace_back();
  r.away_.emplace_back();
  index.emplace(root.key(), 0);
  const bool upward = direction == Direction::Up;
  for (int d = 0; d < depth; ++d) {
    std::vector<int> next;
    for (int v : r.layers_[d]) {
      const Permutation z = r.elements_[v];
      for_each_cover_swap(z, upward, [&](int i, int j) {
        Permutation u = z.swap_positions(i, j);
        auto [it, inserted] = index.emplace(u.key(), static_cast<int>(r.elements_.size()));
        if (inserted) {
          r.elements_.push_back(u);
          r.depth_.push_back(d + 1);
          r.toward_.emplace_back();
          r.away_.emplace_back();
          next.push_back(it->second);
        }
        r.away_[v].push_back(it->second);
        r.toward_[it->second].push_back(v);
      });
    }
    if (next.empty()) break;
    r.layers_.push_back(std::move(next));
  }
  return r;
}

HasseRegion HasseRegion::below(const Permutation& top, int depth) {
  return build(top, depth, Direction::Down);
}

HasseRegion HasseRegion::above(const Permutation& bottom, int depth) {
  return build(bottom, depth, Direction::Up);
}

RankedPoset HasseRegion::interval_with(int other, std::vector<int>* members) const {
  // Everything reachable from `other` moving toward the root lies between the
  // two endpoints.
  std::unordered_map<int, int> local;
  std::vector<int> order{other};
  local.emplace(other, 0);
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (int u : toward_[order[head]]) {
      if (local.emplace(u, static_cast<int>(order.size())).second) order.push_back(u);
    }
  }
  const int span = depth_[other];
  std::vector<int> ranks(order.size());
  std::vector<std::pair<int, int>> covers;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const int v = order[k];
    ranks[k] = direction_ == Direction::Down ? span - depth_[v] : depth_[v];
    for (int u : toward_[v]) {
      const int lu = local.at(u);
      if (direction_ == Direction::Down) {
        covers.emplace_back(static_cast<int>(k), lu);
      } else {
        covers.emplace_back(lu, static_cast<int>(k));
      }
    }
  }
  if (members) *members = order;
  return RankedPoset(std::move(ranks), std::move(covers));
}

}  // namespace bruhat
