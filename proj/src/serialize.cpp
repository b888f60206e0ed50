#include "bruhat/serialize.hpp"

#include <algorithm>
#include <unordered_map>

namespace bruhat::io {

namespace {

Permutation perm(const Json& j) { return Permutation::parse(j.get<std::string>()); }
Word word(const Json& j) { return parse_word(j.get<std::string>()); }

const char* order_name(BlockOrder o) {
  return o == BlockOrder::SmallFirst ? "small-first" : "large-first";
}

BlockOrder order_from(const std::string& s) {
  if (s == "small-first") return BlockOrder::SmallFirst;
  if (s == "large-first") return BlockOrder::LargeFirst;
  throw std::invalid_argument("unknown block order '" + s + "'");
}

}  // namespace

Json caps_to_json(const Limits& limits) {
  return Json{{"max_n", limits.max_n},
              {"max_length", limits.max_length},
              {"max_words", limits.max_words}};
}

Limits caps_from_json(const Json& j) {
  return Limits{j.at("max_n").get<int>(), j.at("max_length").get<int>(),
                j.at("max_words").get<std::size_t>()};
}

Json to_json(const ReducedWordSet& set) {
  std::vector<Word> sorted = set.words;
  std::sort(sorted.begin(), sorted.end());
  Json out = Json::array();
  for (const Word& w : sorted) out.push_back(to_string(w));
  return out;
}

std::vector<Word> words_from_json(const Json& j) {
  std::vector<Word> out;
  for (const auto& item : j) out.push_back(word(item));
  return out;
}

Json to_json(const Interval& iv) {
  Json elements = Json::array();
  for (const auto& e : iv.elements) elements.push_back(e.str());
  Json covers = Json::array();
  for (auto [a, b] : iv.poset.covers()) {
    covers.push_back(Json::array({iv.elements[a].str(), iv.elements[b].str()}));
  }
  return Json{{"low", iv.low.str()},
              {"high", iv.high.str()},
              {"n", iv.low.size()},
              {"elements", elements},
              {"covers", covers}};
}

Interval interval_from_json(const Json& j) {
  Permutation low = perm(j.at("low"));
  Permutation high = perm(j.at("high"));
  std::vector<Permutation> elements;
  std::unordered_map<Permutation, int> index;
  std::vector<int> ranks;
  for (const auto& e : j.at("elements")) {
    index.emplace(perm(e), static_cast<int>(elements.size()));
    elements.push_back(perm(e));
    ranks.push_back(elements.back().length() - low.length());
  }
  std::vector<std::pair<int, int>> covers;
  for (const auto& c : j.at("covers")) {
    covers.emplace_back(index.at(perm(c.at(0))), index.at(perm(c.at(1))));
  }
  RankedPoset poset(std::move(ranks), std::move(covers));
  return Interval{std::move(low), std::move(high), std::move(elements), std::move(poset)};
}

Json to_json(const AtlasResult& result) {
  Json rows = Json::array();
  for (const auto& r : result.rows) {
    rows.push_back(Json{{"length", r.length}, {"intervals", r.intervals}, {"ideals", r.ideals}});
  }
  return Json{{"n", result.n},
              {"rows", rows},
              {"stats",
               {{"intervals_examined", result.intervals_examined},
                {"seconds", result.seconds},
                {"caps", caps_to_json(result.caps)}}}};
}

AtlasResult atlas_from_json(const Json& j) {
  AtlasResult r;
  r.n = j.at("n").get<int>();
  for (const auto& row : j.at("rows")) {
    r.rows.push_back(AtlasRow{row.at("length").get<int>(), row.at("intervals").get<std::size_t>(),
                              row.at("ideals").get<std::size_t>()});
  }
  r.max_len = r.rows.empty() ? 0 : r.rows.back().length;
  if (j.contains("stats")) {
    const auto& s = j.at("stats");
    r.intervals_examined = s.at("intervals_examined").get<std::size_t>();
    r.seconds = s.at("seconds").get<double>();
    r.caps = caps_from_json(s.at("caps"));
  }
  return r;
}

Json to_json(const Permutation& w, const std::optional<Decomposition>& d) {
  Json out{{"w", w.str()}, {"decomposable", d.has_value()}};
  if (d) {
    out["m"] = d->m;
    out["a1"] = to_string(d->a1);
    out["a2"] = to_string(d->a2);
    out["order"] = order_name(d->order);
  }
  return out;
}

Json to_json(const NonForcingWitness& witness) {
  return Json{{"w", witness.w.str()},
              {"w_minus", witness.w_minus.str()},
              {"w_plus", witness.w_plus.str()},
              {"word", to_string(witness.full_word)},
              {"k1", witness.k1},
              {"k2", witness.k2},
              {"orientation", order_name(witness.order)}};
}

NonForcingWitness witness_from_json(const Json& j) {
  const int k1 = j.at("k1").get<int>();
  const int k2 = j.at("k2").get<int>();
  const BlockOrder order = order_from(j.at("orientation").get<std::string>());
  Word b;
  for (int l = k1 + 1; l <= k2; ++l) b.letters.push_back(l);
  if (order == BlockOrder::LargeFirst) b = reversed(b);
  return NonForcingWitness{perm(j.at("w")), perm(j.at("w_minus")), perm(j.at("w_plus")),
                           b,              k1,                     k2,
                           word(j.at("word")), order};
}

Json to_json(const SwapString& ss, int t) {
  return Json{{"positions", ss.positions}, {"values", ss.values}, {"k", ss.k}, {"t", t}};
}

std::pair<SwapString, int> swap_string_from_json(const Json& j) {
  SwapString ss{j.at("positions").get<std::vector<int>>(), j.at("values").get<std::vector<int>>(),
                j.at("k").get<int>()};
  return {ss, j.at("t").get<int>()};
}

Json to_json(const SwapFactorization& f) {
  return Json{{"a", to_string(f.a)}, {"b", to_string(f.b)}, {"c", to_string(f.c)}, {"t", f.t}};
}

Json to_json(const FactorCertificate& cert) {
  return Json{{"j", to_string(cert.j)},
              {"start", cert.start},
              {"len", cert.len},
              {"i", to_string(cert.i)}};
}

FactorCertificate certificate_from_json(const Json& j) {
  return FactorCertificate{word(j.at("j")), j.at("start").get<std::size_t>(),
                           j.at("len").get<std::size_t>(), word(j.at("i"))};
}

Json to_json(const ForcingVerdict& verdict) {
  Json out{{"w", verdict.w.str()},
           {"m_max", verdict.m_max},
           {"outcome", verdict.counterexample ? "counterexample" : "no-counterexample-up-to-bound"}};
  if (verdict.counterexample) {
    const auto& c = *verdict.counterexample;
    out["counterexample"] = Json{{"x", c.x.str()}, {"y", c.y.str()}, {"m", c.m}};
  }
  if (verdict.first_certificate) {
    const auto& f = *verdict.first_certificate;
    Json cert = to_json(f.certificate);
    cert["x"] = f.x.str();
    cert["y"] = f.y.str();
    cert["m"] = f.m;
    out["certificate"] = cert;
  }
  out["stats"] = Json{{"intervals_examined", verdict.stats.intervals_examined},
                      {"seconds", verdict.stats.seconds},
                      {"caps", caps_to_json(verdict.caps)}};
  return out;
}

ForcingVerdict verdict_from_json(const Json& j) {
  ForcingVerdict v{perm(j.at("w")), j.at("m_max").get<int>(), std::nullopt, std::nullopt, {}, {},
                   {}};
  const std::string outcome = j.at("outcome").get<std::string>();
  if (outcome == "counterexample") {
    const auto& c = j.at("counterexample");
    v.counterexample = Counterexample{perm(c.at("x")), perm(c.at("y")), c.at("m").get<int>()};
  } else if (outcome != "no-counterexample-up-to-bound") {
    throw std::invalid_argument("unknown outcome '" + outcome + "'");
  }
  if (j.contains("certificate")) {
    const auto& c = j.at("certificate");
    v.first_certificate = FoundCertificate{perm(c.at("x")), perm(c.at("y")), c.at("m").get<int>(),
                                           certificate_from_json(c)};
  }
  const auto& s = j.at("stats");
  v.stats = ForcingStats{s.at("intervals_examined").get<std::size_t>(),
                         s.at("seconds").get<double>()};
  v.caps = caps_from_json(s.at("caps"));
  return v;
}

}  // namespace bruhat::io
