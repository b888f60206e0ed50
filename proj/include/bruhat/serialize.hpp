#pragma once

#include <json.hpp>

#include "bruhat/atlas.hpp"
#include "bruhat/forcing.hpp"
#include "bruhat/order.hpp"
#include "bruhat/structure.hpp"
#include "bruhat/words.hpp"

// JSON forms of the library's results. Permutations and words appear in
// their text forms.
namespace bruhat::io {

using Json = nlohmann::json;

// Sorted array of word strings.
Json to_json(const ReducedWordSet& set);
std::vector<Word> words_from_json(const Json& j);

// {low, high, n, elements, covers: [[a, b], ...]}
Json to_json(const Interval& iv);
Interval interval_from_json(const Json& j);

// {n, rows: [{length, intervals, ideals}], stats}
Json to_json(const AtlasResult& result);
AtlasResult atlas_from_json(const Json& j);

// {w, decomposable, m, a1, a2, order}
Json to_json(const Permutation& w, const std::optional<Decomposition>& d);

// {w, w_minus, w_plus, word, k1, k2, orientation}
Json to_json(const NonForcingWitness& witness);
NonForcingWitness witness_from_json(const Json& j);

// {positions, values, k, t}
Json to_json(const SwapString& ss, int t);
std::pair<SwapString, int> swap_string_from_json(const Json& j);

// {a, b, c, t}
Json to_json(const SwapFactorization& f);

// {j, start, len, i}
Json to_json(const FactorCertificate& cert);
FactorCertificate certificate_from_json(const Json& j);

// {w, m_max, outcome, counterexample?: {x, y, m}, certificate?: {j, start,
// len, i, x, y, m}, stats: {intervals_examined, seconds, caps}}
Json to_json(const ForcingVerdict& verdict);
ForcingVerdict verdict_from_json(const Json& j);

Json caps_to_json(const Limits& limits);
Limits caps_from_json(const Json& j);

}  // namespace bruhat::io
