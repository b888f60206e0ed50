#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "bruhat/limits.hpp"
#include "bruhat/permutation.hpp"
#include "bruhat/structure.hpp"
#include "bruhat/words.hpp"

namespace bruhat {

// i = delete_factor(j, start, len) with j in R(y) and i in R(x).
struct FactorCertificate {
  Word j;
  std::size_t start = 0;
  std::size_t len = 0;
  Word i;

  friend bool operator==(const FactorCertificate&, const FactorCertificate&) = default;
};

// Scans R(y) in lexicographic order and, for each word, every start position
// in increasing order; returns the first deletion of a len = l(y) - l(x) block
// that leaves a word of x. Requires x <= y (std::invalid_argument otherwise);
// CapExceeded when R(y) is over the caps.
std::optional<FactorCertificate> factor_deletion(const Permutation& x, const Permutation& y,
                                                 const Limits& limits = {});

struct IntervalSearchOptions {
  Limits limits;
  // Skip pairs that are not lexicographically least among their images under
  // inversion and conjugation by the longest element.
  bool symmetry_pruning = false;
};

// Visits every (x, y) in S_m with [x, y] isomorphic to the ideal of w, in
// lexicographic order of (x, y), until visit returns false. Candidates are
// pruned by length gap, element count, cover count and rank profile before
// certificates are compared.
void for_each_interval_isomorphic_to(
    const Permutation& w, int m,
    const std::function<bool(const Permutation&, const Permutation&)>& visit,
    const IntervalSearchOptions& options = {});

std::vector<std::pair<Permutation, Permutation>> intervals_isomorphic_to(
    const Permutation& w, int m, const IntervalSearchOptions& options = {});

struct ForcingOptions {
  int m_max = 0;  // 0 means w.size() + 2
  int jobs = 1;
  bool symmetry_pruning = false;
  // Keep every certificate found, not just the first.
  bool collect_certificates = false;
  Limits limits;
};

struct Counterexample {
  Permutation x;
  Permutation y;
  int m = 0;
};

struct FoundCertificate {
  Permutation x;
  Permutation y;
  int m = 0;
  FactorCertificate certificate;
};

struct ForcingStats {
  std::size_t intervals_examined = 0;
  double seconds = 0;
};

// Bounded answer: either an interval isomorphic to the ideal of w admitting
// no factor deletion, or none in S_m for m up to m_max.
struct ForcingVerdict {
  Permutation w;
  int m_max = 0;
  std::optional<Counterexample> counterexample;
  // Certificate of the first interval examined, when the bound is cleared.
  std::optional<FoundCertificate> first_certificate;
  std::vector<FoundCertificate> certificates;  // filled if collect_certificates
  ForcingStats stats;
  Limits caps;

  bool no_counterexample_up_to_bound() const { return !counterexample.has_value(); }
};

class ForcingCapExceeded : public CapExceeded {
 public:
  ForcingCapExceeded(const std::string& what, ForcingStats partial)
      : CapExceeded(what), partial_(partial) {}
  const ForcingStats& partial_stats() const { return partial_; }

 private:
  ForcingStats partial_;
};

// Scans m = w.size() .. m_max. The counterexample reported is the one with
// the smallest m, then the lexicographically least (x, y); the result does
// not depend on jobs or symmetry_pruning (stats may).
ForcingVerdict forces_factor(const Permutation& w, const ForcingOptions& options = {});

// True iff the factor deleted by cert has a shift in R(w0^k).
bool certificate_is_shifted_longest(const Permutation& x, const Permutation& y,
                                    const FactorCertificate& cert, int k);

struct WitnessCheck {
  bool isomorphic = false;   // [w_minus, w_plus] is isomorphic to the ideal of w
  bool factor_free = false;  // no factor deletion joins w_minus to w_plus
};

WitnessCheck verify_nonforcing_witness(const NonForcingWitness& witness,
                                       const Limits& limits = {});

}  // namespace bruhat
