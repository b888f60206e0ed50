#include "bruhat/words.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <unordered_map>

namespace bruhat {

std::string to_string(const Word& word) {
  const bool compact = std::all_of(word.letters.begin(), word.letters.end(),
                                   [](int l) { return l >= 0 && l <= 9; });
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += std::to_string(word.letters[i]);
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word w;
  if (text.find_first_of(" ,\t") == std::string_view::npos &&
      text.find('-') == std::string_view::npos) {
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad word text '" + std::string(text) + "'");
      w.letters.push_back(c - '0');
    }
    return w;
  }
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '\t')) ++i;
    if (i == text.size()) break;
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc{}) throw std::invalid_argument("bad word text '" + std::string(text) + "'");
    w.letters.push_back(v);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return w;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

Word reversed(const Word& word) {
  return Word(std::vector<int>(word.letters.rbegin(), word.letters.rend()));
}

Permutation evaluate(const Word& word, int n) {
  Permutation p = Permutation::identity(n);
  for (int letter : word.letters) p = apply_right(p, SimpleReflection{letter});
  return p;
}

bool is_reduced(const Word& word, int n) {
  return evaluate(word, n).length() == static_cast<int>(word.size());
}

namespace {

void check_length_cap(const Permutation& w, const Limits& limits) {
  if (w.length() > limits.max_length) {
    throw CapExceeded("length " + std::to_string(w.length()) + " of " + w.str() +
                      " exceeds cap max_length=" + std::to_string(limits.max_length));
  }
}

// Count via right descents: R(w) = union over i with w(i) > w(i+1) of R(w s_i) . i
class CountMemo {
 public:
  explicit CountMemo(std::uint64_t saturate) : saturate_(saturate) {}

  std::uint64_t count(const Permutation& w) {
    if (w.length() == 0) return 1;
    const auto key = w.key();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::uint64_t total = 0;
    for (int i = 1; i < w.size(); ++i) {
      if (!w.has_right_descent(i)) continue;
      total += count(apply_right(w, SimpleReflection{i}));
      if (total > saturate_) {
        total = saturate_;
        break;
      }
    }
    memo_.emplace(key, total);
    return total;
  }

 private:
  std::uint64_t saturate_;
  std::unordered_map<std::uint64_t, std::uint64_t> memo_;
};

// First letter ranges over left descents in increasing order, which yields
// lexicographic order directly.
bool visit_words(const Permutation& w, std::vector<int>& prefix,
                 const std::function<bool(const Word&)>& visit, Word& scratch) {
  if (w.length() == 0) {
    scratch.letters = prefix;
    return visit(scratch);
  }
  for (int i = 1; i < w.size(); ++i) {
    if (!w.has_left_descent(i)) continue;
    prefix.push_back(i);
    const bool go_on = visit_words(apply_left(SimpleReflection{i}, w), prefix, visit, scratch);
    prefix.pop_back();
    if (!go_on) return false;
  }
  return true;
}

}  // namespace

std::uint64_t reduced_word_count(const Permutation& w, const Limits& limits) {
  CountMemo memo(static_cast<std::uint64_t>(limits.max_words) + 1);
  return memo.count(w);
}

void for_each_reduced_word(const Permutation& w, const std::function<bool(const Word&)>& visit,
                           const Limits& limits) {
  check_length_cap(w, limits);
  const auto count = reduced_word_count(w, limits);
  if (count > limits.max_words) {
    throw CapExceeded("|R(" + w.str() + ")| exceeds cap max_words=" +
                      std::to_string(limits.max_words));
  }
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(w.length()));
  Word scratch;
  visit_words(w, prefix, visit, scratch);
}

ReducedWordSet reduced_words(const Permutation& w, const Limits& limits) {
  ReducedWordSet out{w, {}};
  for_each_reduced_word(
      w,
      [&](const Word& word) {
        out.words.push_back(word);
        return true;
      },
      limits);
  return out;
}

Word least_reduced_word(const Permutation& w) {
  Word out;
  Permutation cur = w;
  while (cur.length() > 0) {
    int i = 1;
    while (!cur.has_left_descent(i)) ++i;
    out.letters.push_back(i);
    cur = apply_left(SimpleReflection{i}, cur);
  }
  return out;
}

Word shift(const Word& word, int t) {
  Word out = word;
  for (int& l : out.letters) l += t;
  return out;
}

Word delete_factor(const Word& word, std::size_t start, std::size_t len) {
  if (start > word.size() || len > word.size() - start) {
    throw std::out_of_range("delete_factor: range [" + std::to_string(start) + ", " +
                            std::to_string(start + len) + ") outside word of size " +
                            std::to_string(word.size()));
  }
  Word out;
  out.letters.reserve(word.size() - len);
  out.letters.insert(out.letters.end(), word.letters.begin(),
                     word.letters.begin() + static_cast<std::ptrdiff_t>(start));
  out.letters.insert(out.letters.end(),
                     word.letters.begin() + static_cast<std::ptrdiff_t>(start + len),
                     word.letters.end());
  return out;
}

bool is_subword(const Word& a, const Word& b) {
  std::size_t i = 0;
  for (int l : b.letters) {
    if (i < a.size() && a.letters[i] == l) ++i;
  }
  return i == a.size();
}

}  // namespace bruhat
