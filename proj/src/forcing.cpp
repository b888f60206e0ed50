#include "bruhat/forcing.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "bruhat/order.hpp"
#include "bruhat/poset.hpp"

namespace bruhat {

namespace {

Permutation conjugate_by_longest(const Permutation& w) {
  const int n = w.size();
  std::vector<int> out(n);
  for (int i = 1; i <= n; ++i) out[i - 1] = n + 1 - w(n + 1 - i);
  return Permutation(out);
}

bool is_orbit_minimum(const Permutation& x, const Permutation& y) {
  const auto pair = std::make_pair(x, y);
  const Permutation cx = conjugate_by_longest(x);
  const Permutation cy = conjugate_by_longest(y);
  return pair <= std::make_pair(x.inverse(), y.inverse()) && pair <= std::make_pair(cx, cy) &&
         pair <= std::make_pair(cx.inverse(), cy.inverse());
}

std::vector<Permutation> all_permutations(int m) {
  std::vector<Permutation> out;
  std::vector<int> one_line(m);
  std::iota(one_line.begin(), one_line.end(), 1);
  do {
    out.emplace_back(one_line);
  } while (std::next_permutation(one_line.begin(), one_line.end()));
  return out;
}

// Ideal of w, summarized for cheap rejection before certificates.
struct Target {
  int length;
  int size;
  std::size_t cover_count;
  std::vector<int> profile;
  CanonicalForm form;

  Target(const Permutation& w, const Limits& limits) {
    const Interval iv = ideal(w, limits);
    length = w.length();
    size = iv.poset.size();
    cover_count = iv.poset.covers().size();
    profile = iv.poset.rank_profile();
    form = canonical_form(iv.poset);
  }

  bool matches(const RankedPoset& p) const {
    if (p.size() != size || p.covers().size() != cover_count) return false;
    if (p.rank_profile() != profile) return false;
    return canonical_form(p) == form;
  }
};

// Visits the y with [x, y] matching target, lexicographically.
template <typename Fn>
void scan_bottom(const Permutation& x, const Target& target, bool symmetry_pruning, Fn&& fn) {
  const HasseRegion region = HasseRegion::above(x, target.length);
  if (region.max_depth() < target.length) return;
  std::vector<int> tops = region.at_depth(target.length);
  std::sort(tops.begin(), tops.end(),
            [&](int a, int b) { return region.element(a) < region.element(b); });
  for (int t : tops) {
    const Permutation& y = region.element(t);
    if (symmetry_pruning && !is_orbit_minimum(x, y)) continue;
    if (!target.matches(region.interval_with(t))) continue;
    if (!fn(y)) return;
  }
}

void check_search_caps(const Permutation& w, int m, const Limits& limits) {
  if (m < w.size()) {
    throw std::invalid_argument("group size " + std::to_string(m) + " is smaller than " +
                                std::to_string(w.size()));
  }
  require_group_size(m, limits);
  if (w.length() > limits.max_length) {
    throw CapExceeded("length of " + w.str() + " exceeds cap max_length=" +
                      std::to_string(limits.max_length));
  }
}

}  // namespace

std::optional<FactorCertificate> factor_deletion(const Permutation& x, const Permutation& y,
                                                 const Limits& limits) {
  if (x.size() != y.size()) throw std::invalid_argument("factor_deletion: size mismatch");
  if (!bruhat_leq(x, y)) {
    throw std::invalid_argument("factor_deletion: " + x.str() + " is not below " + y.str());
  }
  const int n = x.size();
  const auto len = static_cast<std::size_t>(y.length() - x.length());
  const auto lx = static_cast<std::size_t>(x.length());
  std::optional<FactorCertificate> found;
  std::vector<Permutation> prefix;
  std::vector<Permutation> suffix;
  for_each_reduced_word(
      y,
      [&](const Word& j) {
        const std::size_t lj = j.size();
        // prefix[s] = product of j[0, s); suffix[e] = product of j[e, lj).
        prefix.assign(1, Permutation::identity(n));
        for (std::size_t s = 0; s < lx; ++s) {
          prefix.push_back(apply_right(prefix.back(), SimpleReflection{j.letters[s]}));
        }
        suffix.assign(lj + 1, Permutation::identity(n));
        for (std::size_t e = lj; e-- > len;) {
          suffix[e] = apply_left(SimpleReflection{j.letters[e]}, suffix[e + 1]);
        }
        for (std::size_t start = 0; start <= lx; ++start) {
          const Permutation& p = prefix[start];
          const Permutation& s = suffix[start + len];
          bool hit = true;
          for (int k = 1; k <= n && hit; ++k) hit = p(s(k)) == x(k);
          if (hit) {
            found = FactorCertificate{j, start, len, delete_factor(j, start, len)};
            return false;
          }
        }
        return true;
      },
      limits);
  return found;
}

void for_each_interval_isomorphic_to(
    const Permutation& w, int m,
    const std::function<bool(const Permutation&, const Permutation&)>& visit,
    const IntervalSearchOptions& options) {
  check_search_caps(w, m, options.limits);
  const Target target(w, options.limits);
  bool go_on = true;
  for (const Permutation& x : all_permutations(m)) {
    scan_bottom(x, target, options.symmetry_pruning, [&](const Permutation& y) {
      go_on = visit(x, y);
      return go_on;
    });
    if (!go_on) return;
  }
}

std::vector<std::pair<Permutation, Permutation>> intervals_isomorphic_to(
    const Permutation& w, int m, const IntervalSearchOptions& options) {
  std::vector<std::pair<Permutation, Permutation>> out;
  for_each_interval_isomorphic_to(
      w, m,
      [&](const Permutation& x, const Permutation& y) {
        out.emplace_back(x, y);
        return true;
      },
      options);
  return out;
}

namespace {

// Outcome of all intervals with a given bottom x, in lexicographic order of y,
// truncated after the first counterexample.
struct BottomResult {
  std::size_t examined = 0;
  std::optional<Permutation> counterexample_top;
  std::vector<FoundCertificate> certificates;
};

BottomResult examine_bottom(const Permutation& x, int m, const Target& target,
                            const ForcingOptions& options, bool keep_all) {
  BottomResult r;
  scan_bottom(x, target, options.symmetry_pruning, [&](const Permutation& y) {
    ++r.examined;
    auto cert = factor_deletion(x, y, options.limits);
    if (!cert) {
      r.counterexample_top = y;
      return false;
    }
    if (keep_all || r.certificates.empty()) {
      r.certificates.push_back(FoundCertificate{x, y, m, std::move(*cert)});
    }
    return true;
  });
  return r;
}

}  // namespace

ForcingVerdict forces_factor(const Permutation& w, const ForcingOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  const int m_max = options.m_max == 0 ? w.size() + 2 : options.m_max;
  if (m_max < w.size()) {
    throw std::invalid_argument("m_max " + std::to_string(m_max) + " is smaller than " +
                                std::to_string(w.size()));
  }
  ForcingVerdict verdict{w, m_max, std::nullopt, std::nullopt, {}, {}, options.limits};
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  };

  check_search_caps(w, m_max, options.limits);
  for (int m = w.size(); m <= m_max; ++m) {
    const Target target(w, options.limits);
    const std::vector<Permutation> bottoms = all_permutations(m);
    std::vector<BottomResult> results(bottoms.size());
    // Bottoms beyond the earliest known counterexample need not be examined.
    std::atomic<std::size_t> earliest{std::numeric_limits<std::size_t>::max()};
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto work = [&] {
      for (std::size_t i = next++; i < bottoms.size(); i = next++) {
        if (i > earliest.load()) continue;
        try {
          results[i] = examine_bottom(bottoms[i], m, target, options, options.collect_certificates);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          earliest.store(0);
          return;
        }
        if (results[i].counterexample_top) {
          std::size_t cur = earliest.load();
          while (i < cur && !earliest.compare_exchange_weak(cur, i)) {
          }
        }
      }
    };
    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
      for (auto& th : pool) th.join();
    }

    for (std::size_t i = 0; i < bottoms.size(); ++i) {
      if (failure) break;
      BottomResult& r = results[i];
      verdict.stats.intervals_examined += r.examined;
      if (!verdict.first_certificate && !r.certificates.empty()) {
        verdict.first_certificate = r.certificates.front();
      }
      if (options.collect_certificates) {
        for (auto& c : r.certificates) verdict.certificates.push_back(std::move(c));
      }
      if (r.counterexample_top) {
        verdict.counterexample = Counterexample{bottoms[i], *r.counterexample_top, m};
        break;
      }
    }
    if (failure) {
      try {
        std::rethrow_exception(failure);
      } catch (const CapExceeded& e) {
        throw ForcingCapExceeded(e.what(), ForcingStats{verdict.stats.intervals_examined, elapsed()});
      }
    }
    if (verdict.counterexample) {
      verdict.first_certificate.reset();
      break;
    }
  }
  verdict.stats.seconds = elapsed();
  return verdict;
}

bool certificate_is_shifted_longest(const Permutation& x, const Permutation& y,
                                    const FactorCertificate& cert, int k) {
  const int n = x.size();
  if (y.size() != n || cert.start + cert.len > cert.j.size()) return false;
  if (delete_factor(cert.j, cert.start, cert.len) != cert.i) return false;
  if (evaluate(cert.j, n) != y || evaluate(cert.i, n) != x) return false;
  const auto first = cert.j.letters.begin() + static_cast<std::ptrdiff_t>(cert.start);
  const Word factor(std::vector<int>(first, first + static_cast<std::ptrdiff_t>(cert.len)));
  return shifted_longest_offset(factor, k).has_value();
}

WitnessCheck verify_nonforcing_witness(const NonForcingWitness& witness, const Limits& limits) {
  WitnessCheck check;
  const Interval iv = interval(witness.w_minus, witness.w_plus, limits);
  check.isomorphic = is_isomorphic(iv.poset, ideal(witness.w, limits).poset);
  check.factor_free = !factor_deletion(witness.w_minus, witness.w_plus, limits).has_value();
  return check;
}

}  // namespace bruhat
