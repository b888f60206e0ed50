// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "bruhat/atlas.hpp"
#include "bruhat/forcing.hpp"
#include "bruhat/structure.hpp"
#include "support.hpp"

using namespace bruhat;

namespace {

// Collects failed expectations for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    failed_ = failed_ || !ok;
  }
  void note(const std::string& text) { notes_.push_back(text); }
  bool failed() const { return failed_; }

  std::string summary() const {
    std::string out;
    for (const auto& f : failures_) out += (out.empty() ? "" : "; ") + f;
    for (const auto& n : notes_) out += (out.empty() ? "" : "; ") + n;
    return out;
  }

 private:
  bool failed_ = false;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::set<std::string> as_set(const ReducedWordSet& s) {
  const auto v = word_strings(s);
  return {v.begin(), v.end()};
}

oracle::Letters plain_letters(const Word& w) { return w.letters; }

int hardware_jobs() { return std::max(1, static_cast<int>(std::thread::hardware_concurrency())); }

void reduced_words_of_3241(Check& c) {
  c.expect(as_set(reduced_words(P("3241"))) == std::set<std::string>{"1213", "2123", "1231"}, "R(3241)");
  c.expect(P("3241").length() == 4, "length of 3241");
}

void reduced_word_listings(Check& c) {
  c.expect(as_set(reduced_words(P("12543"))) == std::set<std::string>{"343", "434"}, "R(12543)");
  c.expect(as_set(reduced_words(P("21543"))) ==
               std::set<std::string>{"1343", "3143", "3413", "3431", "1434", "4134", "4314", "4341"},
           "R(21543)");
  const std::set<std::string> listing{"1234321", "1243421", "1423421", "4123421", "1243241",
                                      "1423241", "4123241", "1243214", "1423214", "4123214",
                                      "1432341", "4132341", "4312341", "1432314", "4132314",
                                      "4312314", "1432134", "4132134", "4312134", "4321234"};
  const auto big = reduced_words(P("52341"));
  c.expect(big.words.size() == 20, "|R(52341)| = 20");
  c.expect(as_set(big) == listing, "R(52341) listing");
}

void figure_interval_is_not_an_ideal(Check& c) {
  const Interval iv = interval(P("2143"), P("4231"));
  std::set<std::string> got;
  for (const auto& e : iv.elements) got.insert(e.str());
  c.expect(got == std::set<std::string>{"2143", "2341", "2413", "3142", "4123", "2431", "3241", "4132",
                                        "4213", "4231"},
           "elements of [2143, 4231]");
  c.expect(iv.poset.rank_profile() == std::vector<int>{1, 4, 4, 1}, "rank profile");
  std::size_t compared = 0;
  for (int n = 4; n <= 6; ++n) {
    for (const auto& w : every_permutation(n)) {
      c.expect(!is_isomorphic(iv.poset, ideal(w).poset), "isomorphic to ideal(" + w.str() + ")");
      ++compared;
    }
  }
  c.note(std::to_string(compared) + " ideals compared");
}

void atlas_counts(Check& c) {
  const int max_len = 5;
  std::vector<AtlasResult> results;
  for (int n = 2; n <= 7; ++n) results.push_back(atlas(n, max_len, {}, hardware_jobs()));
  auto column = [&](const AtlasResult& r, int lo, int hi) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (int l = lo; l <= hi; ++l) {
      const auto& row = r.rows[static_cast<std::size_t>(l)];
      out.emplace_back(row.intervals, row.ideals);
    }
    return out;
  };
  // First n at which every length in lo..hi occurs and the counts agree with
  // those at n + 1.
  auto stable = [&](int lo, int hi) -> const AtlasResult* {
    for (std::size_t k = 0; k + 1 < results.size(); ++k) {
      const auto here = column(results[k], lo, hi);
      const bool occurs = std::all_of(here.begin(), here.end(), [](auto p) { return p.first > 0; });
      if (occurs && here == column(results[k + 1], lo, hi)) return &results[k];
    }
    return nullptr;
  };
  const AtlasResult* low = stable(0, 4);
  c.expect(low != nullptr, "lengths 0-4 never stabilize for n <= 7");
  if (low) {
    const std::vector<std::pair<std::size_t, std::size_t>> expected{{1, 1}, {1, 1}, {1, 1}, {3, 2}, {7, 3}};
    c.expect(column(*low, 0, 4) == expected, "lengths 0-4 at n = " + std::to_string(low->n));
    c.note("lengths 0-4 stable at n = " + std::to_string(low->n));
  }
  const AtlasResult* five = stable(5, 5);
  c.expect(five != nullptr, "length 5 never stabilizes for n <= 7");
  if (five) {
    const auto& row = five->rows[5];
    c.expect(row.intervals == 25 && row.ideals == 5, "length 5 at n = " + std::to_string(five->n));
    c.note("length 5 stable at n = " + std::to_string(five->n) + " with " + std::to_string(row.intervals) +
           " intervals, " + std::to_string(row.ideals) + " ideals");
  }
}

void decomposition_and_witness(Check& c) {
  const auto d = decompose(P("2314"));
  c.expect(d.has_value(), "2314 decomposable");
  if (d) {
    c.expect(d->m == 1 && to_string(d->a1) == "1" && to_string(d->a2) == "2", "decompose(2314)");
    const auto wit = nonforcing_witness(P("2314"), *d);
    c.expect(wit.w_minus.str() == "1324" && wit.w_plus.str() == "2341", "witness endpoints");
    c.expect(to_string(wit.full_word) == "123", "witness word");
  }
  c.expect(!decompose(P("3412")).has_value(), "3412 indecomposable");
}

void forcing_counterexamples(Check& c) {
  struct Case {
    const char* w;
    int m_max;
    std::pair<const char*, const char*> expected;
  };
  const Case cases[] = {{"2314", 4, {"1324", "2341"}}, {"3412", 5, {"12543", "52341"}}};
  for (const auto& [w, m_max, expected] : cases) {
    ForcingOptions o;
    o.m_max = m_max;
    o.jobs = hardware_jobs();
    const auto v = forces_factor(P(w), o);
    c.expect(v.counterexample.has_value(), std::string(w) + " has no counterexample");
    if (!v.counterexample) continue;
    const auto& found = *v.counterexample;
    const std::string pair = "(" + found.x.str() + ", " + found.y.str() + ")";
    c.expect(found.x.str() == expected.first && found.y.str() == expected.second,
             std::string(w) + ": expected (" + expected.first + ", " + expected.second + "), found " + pair);
    c.expect(!oracle::has_factor_deletion(plain(found.x), plain(found.y)),
             "exhaustive scan finds a factor in " + pair);
    // The expected pair itself, checked the same way.
    const auto ex = P(expected.first);
    const auto ey = P(expected.second);
    if (!oracle::has_factor_deletion(plain(ex), plain(ey))) continue;
    const auto cert = factor_deletion(ex, ey);
    c.note("(" + std::string(expected.first) + ", " + expected.second + ") admits a factor deletion: " +
           (cert ? to_string(cert->j) + " minus positions " + std::to_string(cert->start + 1) + "-" +
                       std::to_string(cert->start + cert->len) + " gives " + to_string(cert->i)
                 : std::string("per exhaustive scan")));
  }
}

void longest_elements_force(Check& c) {
  const std::pair<int, int> cases[] = {{2, 6}, {3, 5}, {4, 5}};
  for (auto [k, m_max] : cases) {
    ForcingOptions o;
    o.m_max = m_max;
    o.jobs = hardware_jobs();
    o.collect_certificates = true;
    const auto v = forces_factor(Permutation::longest(k), o);
    const std::string tag = "k=" + std::to_string(k) + " m_max=" + std::to_string(m_max);
    c.expect(v.no_counterexample_up_to_bound(), tag + " has a counterexample");
    std::size_t shaped = 0;
    for (const auto& f : v.certificates) shaped += certificate_is_shifted_longest(f.x, f.y, f.certificate, k);
    c.expect(shaped == v.certificates.size(), tag + " certificate not shifted longest");
    c.note(tag + ": " + std::to_string(v.certificates.size()) + " certificates");
  }
}

void property_suites(Check& c) {
  // Bruhat order against the subword definition.
  const auto s4 = every_permutation(4);
  for (const auto& x : s4)
    for (const auto& y : s4)
      c.expect(bruhat_leq(x, y) == oracle::subword_leq(plain(x), plain(y)), "leq on S4");
  const auto s5 = every_permutation(5);
  std::map<oracle::Perm, std::set<oracle::Perm>> lower;
  for (const auto& y : s5) lower[plain(y)] = oracle::lower_set(plain(y));
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<std::size_t> pick(0, s5.size() - 1);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto& x = s5[pick(rng)];
    const auto& y = s5[pick(rng)];
    c.expect(bruhat_leq(x, y) == (lower[plain(y)].count(plain(x)) == 1), "leq on S5 sample");
  }

  // A coatom of [x, y] avoiding y's value at any position where x and y differ.
  std::size_t coatom_checks = 0;
  for (const auto& x : s5) {
    for (const auto& y : s5) {
      if (x == y || !lower[plain(y)].count(plain(x))) continue;
      const auto below = covers_below(y);
      for (int i = 1; i <= 5; ++i) {
        if (x(i) == y(i)) continue;
        const Permutation w = coatom_avoiding_position(x, y, i);
        const bool is_coatom = std::find(below.begin(), below.end(), w) != below.end();
        c.expect(w(i) != y(i) && is_coatom && lower[plain(w)].count(plain(x)), "coatom in S5");
        ++coatom_checks;
      }
    }
  }

  // Swap-strings of every interval shaped like S_k in S5, and their factorizations.
  std::size_t swap_checks = 0;
  for (int k = 2; k <= 5; ++k) {
    const auto target = plain(ideal(Permutation::longest(k)).poset);
    const int length = k * (k - 1) / 2;
    for (const auto& [x, y] : intervals_isomorphic_to(Permutation::longest(k), 5)) {
      c.expect(oracle::isomorphic(oracle::interval(plain(x), plain(y)), target), "search result shape");
      const auto ss = detect_swap_string(x, y);
      c.expect(ss.has_value() && ss->k == k, "swap-string of [" + x.str() + ", " + y.str() + "]");
      if (!ss) continue;
      const auto f = swap_string_factorization(x, y, *ss);
      const auto ac = plain_letters(concat(f.a, f.c));
      const auto abc = plain_letters(concat(concat(f.a, f.b), f.c));
      c.expect(oracle::evaluate(ac, 5) == plain(x) && static_cast<int>(ac.size()) == x.length(),
               "a.c reduced for x");
      c.expect(oracle::evaluate(abc, 5) == plain(y) && static_cast<int>(abc.size()) == y.length(),
               "a.b.c reduced for y");
      const auto shifted = plain_letters(shift(f.b, f.t));
      c.expect(static_cast<int>(shifted.size()) == length &&
                   oracle::evaluate(shifted, k) == plain(Permutation::longest(k)),
               "b is a shifted longest word");
      ++swap_checks;
    }
  }

  // Reduced word counts of longest elements against brute force.
  const std::size_t counts[] = {0, 0, 0, 2, 16, 768};
  for (int n = 3; n <= 5; ++n) {
    const auto w0 = Permutation::longest(n);
    const auto brute = oracle::reduced_words(plain(w0));
    const auto fast = reduced_words(w0);
    std::set<oracle::Letters> mine;
    for (const auto& w : fast.words) mine.insert(plain_letters(w));
    c.expect(brute.size() == counts[n] && mine == brute, "R(w0) in S" + std::to_string(n));
  }
  c.note(std::to_string(coatom_checks) + " coatom cases, " + std::to_string(swap_checks) + " swap-strings");
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Check&)>> criteria[] = {
      {"reduced words of 3241", reduced_words_of_3241},
      {"reduced word listings", reduced_word_listings},
      {"[2143, 4231] is not an ideal in S4, S5, S6", figure_interval_is_not_an_ideal},
      {"atlas counts", atlas_counts},
      {"decomposition and witness", decomposition_and_witness},
      {"counterexamples for 2314 and 3412", forcing_counterexamples},
      {"longest elements force shifted longest factors", longest_elements_force},
      {"property suites", property_suites},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Check c;
    const auto started = std::chrono::steady_clock::now();
    try {
      run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    failed += c.failed();
    std::printf("%s %d %s (%.2fs)%s%s\n", c.failed() ? "FAIL" : "PASS", index, name, seconds,
                c.summary().empty() ? "" : ": ", c.summary().c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
