#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "bruhat/atlas.hpp"
#include "bruhat/forcing.hpp"
#include "bruhat/order.hpp"
#include "bruhat/serialize.hpp"
#include "bruhat/structure.hpp"
#include "bruhat/words.hpp"

namespace bruhat::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Permutation parse_in(const std::string& text, int n) {
  Permutation p = Permutation::parse(text);
  return n > 0 ? embed(p, n) : p;
}

// Brings both arguments to a common ambient group.
std::pair<Permutation, Permutation> parse_pair(const std::string& a, const std::string& b, int n) {
  Permutation x = Permutation::parse(a);
  Permutation y = Permutation::parse(b);
  const int m = std::max({n, x.size(), y.size()});
  return {embed(x, m), embed(y, m)};
}

// "w" names the ideal of w; "x,y" or "x:y" the interval [x, y].
Interval parse_poset_arg(const std::string& arg, int n, const Limits& limits) {
  const auto sep = arg.find_first_of(",:");
  if (sep == std::string::npos) return ideal(parse_in(arg, n), limits);
  auto [x, y] = parse_pair(arg.substr(0, sep), arg.substr(sep + 1), n);
  return interval(x, y, limits);
}

std::vector<std::string> labels_of(const Interval& iv) {
  std::vector<std::string> labels;
  for (const auto& e : iv.elements) labels.push_back(e.str());
  return labels;
}

void print_interval(std::ostream& out, const Interval& iv, bool dot, bool json) {
  if (json) {
    out << io::to_json(iv).dump(2) << "\n";
    return;
  }
  if (dot) {
    const auto labels = labels_of(iv);
    out << to_dot(iv.poset, labels);
    return;
  }
  out << "[" << iv.low.str() << ", " << iv.high.str() << "] length " << iv.length() << ", "
      << iv.elements.size() << " elements, " << iv.poset.covers().size() << " covers\n";
  for (int r = 0; r <= iv.length(); ++r) {
    out << "rank " << r << ":";
    for (std::size_t v = 0; v < iv.elements.size(); ++v) {
      if (iv.poset.rank(static_cast<int>(v)) == r) out << " " << iv.elements[v].str();
    }
    out << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bruhat order toolkit for symmetric groups", "bruhat"};
  app.require_subcommand(1);

  Limits limits;
  app.add_option("--cap-n", limits.max_n, "Largest group size enumerated")->capture_default_str();
  app.add_option("--cap-length", limits.max_length, "Largest length whose words are enumerated")
      ->capture_default_str();
  app.add_option("--cap-words", limits.max_words, "Largest reduced-word set enumerated")
      ->capture_default_str();

  std::string a;
  std::string b;
  int n = 0;
  bool json = false;
  bool dot = false;
  int jobs = 1;
  int max_len = 0;
  int max_n = 0;
  bool symmetry = false;
  bool verify = false;

  auto* words = app.add_subcommand("words", "List the reduced words of a permutation");
  words->add_option("perm", a)->required();
  words->add_option("--n", n, "Ambient group size");
  words->add_flag("--json", json);

  auto* eval = app.add_subcommand("eval", "Evaluate a word as a permutation");
  eval->add_option("word", a)->required();
  eval->add_option("--n", n, "Group size")->required();

  auto* leq = app.add_subcommand("leq", "Compare two permutations in Bruhat order");
  leq->add_option("x", a)->required();
  leq->add_option("y", b)->required();
  leq->add_option("--n", n, "Ambient group size");

  auto* iv_cmd = app.add_subcommand("interval", "Print the interval [x, y]");
  iv_cmd->add_option("x", a)->required();
  iv_cmd->add_option("y", b)->required();
  iv_cmd->add_option("--n", n, "Ambient group size");
  auto* iv_dot = iv_cmd->add_flag("--dot", dot);
  iv_cmd->add_flag("--json", json)->excludes(iv_dot);

  auto* ideal_cmd = app.add_subcommand("ideal", "Print the principal order ideal of w");
  ideal_cmd->add_option("w", a)->required();
  ideal_cmd->add_option("--n", n, "Ambient group size");
  auto* ideal_dot = ideal_cmd->add_flag("--dot", dot);
  ideal_cmd->add_flag("--json", json)->excludes(ideal_dot);

  auto* iso = app.add_subcommand("iso", "Test two intervals for isomorphism ('w' or 'x,y')");
  iso->add_option("first", a)->required();
  iso->add_option("second", b)->required();
  iso->add_option("--n", n, "Ambient group size");

  auto* atlas_cmd = app.add_subcommand("atlas", "Count isomorphism classes of intervals");
  atlas_cmd->add_option("--n", n, "Group size")->required();
  atlas_cmd->add_option("--max-len", max_len, "Largest interval length")->required();
  atlas_cmd->add_option("--jobs", jobs, "Worker threads")->capture_default_str();

  auto* decompose_cmd = app.add_subcommand("decompose", "Split a reduced word into blocks");
  decompose_cmd->add_option("w", a)->required();
  decompose_cmd->add_flag("--json", json);

  auto* witness_cmd = app.add_subcommand("witness", "Interval without a factor certificate");
  witness_cmd->add_option("w", a)->required();
  witness_cmd->add_flag("--verify", verify, "Recheck isomorphism and absence of a factor");

  auto* swap_cmd = app.add_subcommand("swapstring", "Detect the swap-string of (x, y)");
  swap_cmd->add_option("x", a)->required();
  swap_cmd->add_option("y", b)->required();

  auto* factorize_cmd = app.add_subcommand("factorize", "Reduced words a.c of x and a.b.c of y");
  factorize_cmd->add_option("x", a)->required();
  factorize_cmd->add_option("y", b)->required();

  auto* forces = app.add_subcommand("forces", "Bounded search for a non-factor interval");
  forces->add_option("w", a)->required();
  forces->add_option("--max-n", max_n, "Largest ambient group searched")->required();
  forces->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
  forces->add_flag("--symmetry", symmetry, "Skip pairs equivalent under order automorphisms");
  forces->add_flag("--json", json);

  std::vector<std::string> argv_store{"bruhat"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (*words) {
      const auto set = reduced_words(parse_in(a, n), limits);
      if (json) {
        out << io::to_json(set).dump() << "\n";
      } else {
        for (const auto& w : set.words) out << to_string(w) << "\n";
      }
    } else if (*eval) {
      out << evaluate(parse_word(a), n).str() << "\n";
    } else if (*leq) {
      auto [x, y] = parse_pair(a, b, n);
      out << (bruhat_leq(x, y) ? "true" : "false") << "\n";
    } else if (*iv_cmd) {
      auto [x, y] = parse_pair(a, b, n);
      print_interval(out, interval(x, y, limits), dot, json);
    } else if (*ideal_cmd) {
      print_interval(out, ideal(parse_in(a, n), limits), dot, json);
    } else if (*iso) {
      const Interval p = parse_poset_arg(a, n, limits);
      const Interval q = parse_poset_arg(b, n, limits);
      out << (is_isomorphic(p.poset, q.poset) ? "true" : "false") << "\n";
    } else if (*atlas_cmd) {
      out << io::to_json(atlas(n, max_len, limits, jobs)).dump(2) << "\n";
    } else if (*decompose_cmd) {
      const Permutation w = Permutation::parse(a);
      const auto d = decompose(w, limits);
      if (json) {
        out << io::to_json(w, d).dump() << "\n";
      } else if (d) {
        out << "m=" << d->m << " a1=" << to_string(d->a1) << " a2=" << to_string(d->a2)
            << " order=" << (d->order == BlockOrder::SmallFirst ? "small-first" : "large-first")
            << "\n";
      } else {
        out << "indecomposable\n";
      }
    } else if (*witness_cmd) {
      const Permutation w = Permutation::parse(a);
      const auto d = decompose(w, limits);
      if (!d) {
        out << io::to_json(w, d).dump() << "\n";
        return 0;
      }
      const auto witness = nonforcing_witness(w, *d);
      auto j = io::to_json(witness);
      if (verify) {
        const auto check = verify_nonforcing_witness(witness, limits);
        j["verified"] = {{"isomorphic", check.isomorphic}, {"factor_free", check.factor_free}};
      }
      out << j.dump() << "\n";
    } else if (*swap_cmd) {
      auto [x, y] = parse_pair(a, b, 0);
      const auto ss = detect_swap_string(x, y);
      if (!ss) {
        out << "null\n";
      } else {
        const auto f = swap_string_factorization(x, y, *ss);
        out << io::to_json(*ss, f.t).dump() << "\n";
      }
    } else if (*factorize_cmd) {
      auto [x, y] = parse_pair(a, b, 0);
      const auto ss = detect_swap_string(x, y);
      if (!ss) throw UsageError("(" + x.str() + ", " + y.str() + ") has no swap-string");
      out << io::to_json(swap_string_factorization(x, y, *ss)).dump() << "\n";
    } else if (*forces) {
      ForcingOptions options;
      options.m_max = max_n;
      options.jobs = jobs;
      options.symmetry_pruning = symmetry;
      options.limits = limits;
      const auto verdict = forces_factor(Permutation::parse(a), options);
      if (json) {
        out << io::to_json(verdict).dump(2) << "\n";
      } else if (verdict.counterexample) {
        const auto& c = *verdict.counterexample;
        out << "counterexample [" << c.x.str() << ", " << c.y.str() << "] in S_" << c.m << "\n";
      } else {
        out << "no counterexample up to S_" << verdict.m_max << "\n";
      }
    }
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace bruhat::cli
