#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>

#include "bruhat/forcing.hpp"
#include "bruhat/structure.hpp"
#include "support.hpp"

using namespace bruhat;

namespace {

ForcingOptions bound(int m_max) {
  ForcingOptions o;
  o.m_max = m_max;
  return o;
}

void check_certificate(const Permutation& x, const Permutation& y, const FactorCertificate& c) {
  CHECK(evaluate(c.j, y.size()) == y);
  CHECK(static_cast<int>(c.j.size()) == y.length());
  CHECK(evaluate(c.i, x.size()) == x);
  CHECK(static_cast<int>(c.i.size()) == x.length());
  CHECK(delete_factor(c.j, c.start, c.len) == c.i);
  CHECK(static_cast<int>(c.len) == y.length() - x.length());
}

// All (x, y) in S_m with [x, y] isomorphic to the ideal of w, via the oracles.
std::set<std::pair<std::string, std::string>> brute_isomorphic_pairs(const Permutation& w, int m) {
  const oracle::Poset target = plain(ideal(w).poset);
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& x : oracle::all_perms(m)) {
    const int lx = oracle::inversions(x);
    for (const auto& y : oracle::all_perms(m)) {
      if (oracle::inversions(y) - lx != w.length()) continue;
      if (!oracle::lower_set(y).count(x)) continue;
      if (oracle::isomorphic(oracle::interval(x, y), target))
        out.emplace(Permutation(x).str(), Permutation(y).str());
    }
  }
  return out;
}

}  // namespace

TEST_CASE("factor deletion on small intervals") {
  CHECK_FALSE(factor_deletion(P("1324"), P("2341")).has_value());
  const auto c = factor_deletion(P("1243"), P("4213"));
  REQUIRE(c.has_value());
  check_certificate(P("1243"), P("4213"), *c);
  const auto whole = factor_deletion(Permutation::identity(4), P("3412"));
  REQUIRE(whole.has_value());
  CHECK(whole->start == 0);
  CHECK(whole->len == 4);
  CHECK(whole->i.empty());
  CHECK_THROWS_AS(factor_deletion(P("2341"), P("4123")), std::invalid_argument);
}

TEST_CASE("[12543, 52341] admits a factor deletion") {
  const auto c = factor_deletion(P("12543"), P("52341"));
  REQUIRE(c.has_value());
  check_certificate(P("12543"), P("52341"), *c);
  CHECK(c->j == W("4132134"));
  CHECK(c->start == 1);
  CHECK(c->i == W("434"));
  CHECK(oracle::has_factor_deletion(oracle::from_string("12543"), oracle::from_string("52341")));
}

TEST_CASE("factor deletion agrees with an exhaustive scan on S4") {
  const auto all = every_permutation(4);
  for (const auto& x : all) {
    for (const auto& y : all) {
      if (!bruhat_leq(x, y)) continue;
      const auto c = factor_deletion(x, y);
      CHECK(c.has_value() == oracle::has_factor_deletion(plain(x), plain(y)));
      if (c) check_certificate(x, y, *c);
    }
  }
}

TEST_CASE("factor deletion agrees with an exhaustive scan on sampled S5 pairs") {
  const auto all = every_permutation(5);
  int compared = 0;
  for (std::size_t a = 0; a < all.size(); a += 3) {
    for (std::size_t b = 1; b < all.size(); b += 11) {
      const auto& x = all[a];
      const auto& y = all[b];
      if (y.length() > 7 || !bruhat_leq(x, y)) continue;
      CHECK(factor_deletion(x, y).has_value() == oracle::has_factor_deletion(plain(x), plain(y)));
      ++compared;
    }
  }
  CHECK(compared > 50);
}

TEST_CASE("interval search matches brute force") {
  for (const char* w : {"2314", "321", "3412"}) {
    CAPTURE(w);
    const auto found = intervals_isomorphic_to(P(w), 4);
    std::set<std::pair<std::string, std::string>> got;
    for (const auto& [x, y] : found) got.emplace(x.str(), y.str());
    CHECK(got == brute_isomorphic_pairs(P(w), 4));
    CHECK(std::is_sorted(found.begin(), found.end()));
  }
}

TEST_CASE("interval search in S5 finds the [12543, 52341] copy of ideal(3412)") {
  const auto found = intervals_isomorphic_to(P("3412"), 5);
  CHECK(std::find(found.begin(), found.end(), std::make_pair(P("12543"), P("52341"))) != found.end());
  for (const auto& [x, y] : found) CHECK(is_isomorphic(interval(x, y).poset, ideal(P("3412")).poset));
}

TEST_CASE("2314 does not force a factor") {
  const auto v = forces_factor(P("2314"), bound(4));
  REQUIRE(v.counterexample.has_value());
  CHECK(v.counterexample->x.str() == "1324");
  CHECK(v.counterexample->y.str() == "2341");
  CHECK(v.counterexample->m == 4);
  CHECK_FALSE(v.no_counterexample_up_to_bound());
  CHECK_FALSE(v.first_certificate.has_value());
}

TEST_CASE("3412 does not force a factor and the reported pair is the least one") {
  const auto v = forces_factor(P("3412"), bound(5));
  REQUIRE(v.counterexample.has_value());
  const auto& c = *v.counterexample;
  CHECK(c.m == 5);
  CHECK(c.x.str() == "13425");
  CHECK(c.y.str() == "45123");
  CHECK(is_isomorphic(interval(c.x, c.y).poset, ideal(P("3412")).poset));
  CHECK_FALSE(oracle::has_factor_deletion(plain(c.x), plain(c.y)));
  // Every earlier candidate, in S4 and in S5, does admit a factor.
  for (const auto& [x, y] : intervals_isomorphic_to(P("3412"), 4))
    CHECK(oracle::has_factor_deletion(plain(x), plain(y)));
  for (const auto& [x, y] : intervals_isomorphic_to(P("3412"), 5)) {
    if (std::make_pair(x, y) >= std::make_pair(c.x, c.y)) break;
    CHECK(oracle::has_factor_deletion(plain(x), plain(y)));
  }
}

TEST_CASE("the verdict does not depend on workers or symmetry pruning") {
  for (const char* w : {"2314", "3412", "2143", "321"}) {
    CAPTURE(w);
    const auto base = forces_factor(P(w), bound(5));
    for (int jobs : {1, 3}) {
      for (bool symmetry : {false, true}) {
        ForcingOptions o = bound(5);
        o.jobs = jobs;
        o.symmetry_pruning = symmetry;
        const auto v = forces_factor(P(w), o);
        CHECK(v.counterexample.has_value() == base.counterexample.has_value());
        if (v.counterexample) {
          CHECK(v.counterexample->x == base.counterexample->x);
          CHECK(v.counterexample->y == base.counterexample->y);
          CHECK(v.counterexample->m == base.counterexample->m);
        }
        if (!symmetry) CHECK(v.stats.intervals_examined == base.stats.intervals_examined);
      }
    }
  }
}

TEST_CASE("a single letter always survives as a factor") {
  const auto v = forces_factor(P("21"), bound(6));
  CHECK(v.no_counterexample_up_to_bound());
  CHECK(v.m_max == 6);
  REQUIRE(v.first_certificate.has_value());
  CHECK(v.first_certificate->certificate.len == 1);
}

TEST_CASE("longest elements force a factor of shifted longest shape") {
  const std::pair<int, int> cases[] = {{2, 6}, {3, 5}, {4, 5}};
  for (auto [k, m_max] : cases) {
    CAPTURE(k);
    ForcingOptions o = bound(m_max);
    o.collect_certificates = true;
    const auto v = forces_factor(Permutation::longest(k), o);
    CHECK(v.no_counterexample_up_to_bound());
    CHECK(v.certificates.size() == v.stats.intervals_examined);
    for (const auto& f : v.certificates) {
      check_certificate(f.x, f.y, f.certificate);
      CHECK(certificate_is_shifted_longest(f.x, f.y, f.certificate, k));
    }
  }
}

TEST_CASE("every decomposable permutation of S4 has a counterexample") {
  for (const auto& w : every_permutation(4)) {
    const auto d = decompose(w);
    if (!d) continue;
    CAPTURE(w.str());
    const auto wit = nonforcing_witness(w, *d);
    const auto v = forces_factor(w, bound(4 + (wit.k2 - wit.k1)));
    REQUIRE(v.counterexample.has_value());
    const auto& c = *v.counterexample;
    CHECK(is_isomorphic(interval(c.x, c.y).poset, ideal(w).poset));
    CHECK_FALSE(oracle::has_factor_deletion(plain(c.x), plain(c.y)));
    // The constructed witness is one of the intervals the search considers.
    const auto pairs = intervals_isomorphic_to(w, wit.w_plus.size());
    CHECK(std::find(pairs.begin(), pairs.end(), std::make_pair(wit.w_minus, wit.w_plus)) != pairs.end());
  }
}

TEST_CASE("shifted longest certificate check") {
  const auto c = *factor_deletion(P("1243"), P("4213"));
  CHECK(certificate_is_shifted_longest(P("1243"), P("4213"), c, 3));
  CHECK_FALSE(certificate_is_shifted_longest(P("1243"), P("4213"), c, 2));
  FactorCertificate bogus = c;
  bogus.i = W("1");
  CHECK_FALSE(certificate_is_shifted_longest(P("1243"), P("4213"), bogus, 3));
}

TEST_CASE("search caps and bounds") {
  CHECK_THROWS_AS(forces_factor(P("2314"), bound(9)), CapExceeded);
  CHECK_THROWS_AS(forces_factor(P("2314"), bound(3)), std::invalid_argument);
  ForcingOptions o = bound(5);
  o.limits.max_words = 10;
  try {
    forces_factor(P("321"), o);
    FAIL("expected a cap error");
  } catch (const ForcingCapExceeded& e) {
    CHECK(e.partial_stats().intervals_examined > 0);
  }
  CHECK(forces_factor(P("321")).m_max == 5);
}
