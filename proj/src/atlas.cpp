#include "bruhat/atlas.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <string>
#include <thread>
#include <unordered_set>

#include "bruhat/order.hpp"
#include "bruhat/permutation.hpp"
#include "bruhat/poset.hpp"

namespace bruhat {

namespace {

Permutation conjugate_by_longest(const Permutation& w) {
  const int n = w.size();
  std::vector<int> out(n);
  for (int i = 1; i <= n; ++i) out[i - 1] = n + 1 - w(n + 1 - i);
  return Permutation(out);
}

bool is_orbit_minimum(const Permutation& w) {
  const Permutation inv = w.inverse();
  const Permutation c = conjugate_by_longest(w);
  return w <= inv && w <= c && w <= c.inverse();
}

struct Classes {
  std::vector<std::unordered_set<std::string>> intervals;
  std::vector<std::unordered_set<std::string>> ideals;
  std::size_t examined = 0;

  explicit Classes(int max_len)
      : intervals(static_cast<std::size_t>(max_len) + 1),
        ideals(static_cast<std::size_t>(max_len) + 1) {}

  void merge(Classes&& other) {
    for (std::size_t d = 0; d < intervals.size(); ++d) {
      intervals[d].merge(other.intervals[d]);
      ideals[d].merge(other.ideals[d]);
    }
    examined += other.examined;
  }
};

void expand_top(const Permutation& y, int max_len, Classes& classes) {
  const HasseRegion region = HasseRegion::below(y, max_len);
  for (int d = 0; d <= region.max_depth(); ++d) {
    for (int x : region.at_depth(d)) {
      const RankedPoset p = region.interval_with(x);
      std::string cert = canonical_form(p).certificate;
      if (region.element(x).length() == 0) classes.ideals[d].insert(cert);
      classes.intervals[d].insert(std::move(cert));
      ++classes.examined;
    }
  }
}

}  // namespace

AtlasResult atlas(int n, int max_len, const Limits& limits, int jobs) {
  if (n < 1) throw std::invalid_argument("atlas: invalid group size");
  require_group_size(n, limits);
  if (max_len < 0 || max_len > limits.max_length) {
    throw CapExceeded("atlas: max_len " + std::to_string(max_len) +
                      " outside 0..max_length=" + std::to_string(limits.max_length));
  }
  const auto start = std::chrono::steady_clock::now();

  std::vector<Permutation> tops;
  std::vector<int> one_line(n);
  std::iota(one_line.begin(), one_line.end(), 1);
  do {
    Permutation y(one_line);
    if (is_orbit_minimum(y)) tops.push_back(y);
  } while (std::next_permutation(one_line.begin(), one_line.end()));

  Classes total(max_len);
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    for (const auto& y : tops) expand_top(y, max_len, total);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<Classes> partial(static_cast<std::size_t>(jobs), Classes(max_len));
    std::vector<std::thread> workers;
    for (int t = 0; t < jobs; ++t) {
      workers.emplace_back([&, t] {
        for (std::size_t i = next++; i < tops.size(); i = next++) {
          expand_top(tops[i], max_len, partial[t]);
        }
      });
    }
    for (auto& w : workers) w.join();
    for (auto& p : partial) total.merge(std::move(p));
  }

  AtlasResult result;
  result.n = n;
  result.max_len = max_len;
  result.caps = limits;
  for (int d = 0; d <= max_len; ++d) {
    result.rows.push_back(AtlasRow{d, total.intervals[d].size(), total.ideals[d].size()});
  }
  result.intervals_examined = total.examined;
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace bruhat
