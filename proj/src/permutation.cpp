#include "bruhat/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace bruhat {

namespace {

void check_reflection(SimpleReflection s, int n) {
  if (s.index < 1 || s.index >= n) {
    throw std::invalid_argument("simple reflection s_" + std::to_string(s.index) +
                                " out of range for S_" + std::to_string(n));
  }
}

}  // namespace

Permutation::Permutation(std::span<const int> one_line) {
  const auto n = static_cast<int>(one_line.size());
  if (n < 1 || n > kMaxStorage) {
    throw std::invalid_argument("permutation size must be in 1.." +
                                std::to_string(kMaxStorage) + ", got " + std::to_string(n));
  }
  std::array<bool, kMaxStorage + 1> seen{};
  for (int i = 0; i < n; ++i) {
    const int v = one_line[i];
    if (v < 1 || v > n || seen[v]) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
    }
    seen[v] = true;
    entries_[i] = static_cast<std::uint8_t>(v);
  }
  n_ = static_cast<std::uint8_t>(n);
  length_ = static_cast<std::uint8_t>(count_inversions(entries_, n));
}

Permutation::Permutation(std::initializer_list<int> one_line)
    : Permutation(std::span<const int>(one_line.begin(), one_line.size())) {}

Permutation Permutation::identity(int n) {
  if (n < 1 || n > kMaxStorage) {
    throw std::invalid_argument("invalid group size " + std::to_string(n));
  }
  Permutation p;
  p.n_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) p.entries_[i] = static_cast<std::uint8_t>(i + 1);
  return p;
}

Permutation Permutation::longest(int n) {
  if (n < 1 || n > kMaxStorage) {
    throw std::invalid_argument("invalid group size " + std::to_string(n));
  }
  Permutation p;
  p.n_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) p.entries_[i] = static_cast<std::uint8_t>(n - i);
  p.length_ = static_cast<std::uint8_t>(n * (n - 1) / 2);
  return p;
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  const bool separated = text.find_first_of(" ,\t") != std::string_view::npos;
  if (!separated) {
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw std::invalid_argument("bad permutation text '" + std::string(text) + "'");
      }
      values.push_back(c - '0');
    }
  } else {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '\t')) ++i;
      if (i == text.size()) break;
      int v = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
      if (ec != std::errc{}) {
        throw std::invalid_argument("bad permutation text '" + std::string(text) + "'");
      }
      values.push_back(v);
      i = static_cast<std::size_t>(ptr - text.data());
    }
  }
  return Permutation(values);
}

int Permutation::position_of(int value) const {
  for (int i = 0; i < n_; ++i) {
    if (entries_[i] == value) return i + 1;
  }
  throw std::invalid_argument("value " + std::to_string(value) + " not in permutation");
}

std::vector<int> Permutation::one_line() const {
  return {entries_.begin(), entries_.begin() + n_};
}

std::vector<std::pair<int, int>> Permutation::inversions() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (entries_[i] > entries_[j]) out.emplace_back(i + 1, j + 1);
    }
  }
  return out;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.n_ = n_;
  p.length_ = length_;
  for (int i = 0; i < n_; ++i) p.entries_[entries_[i] - 1] = static_cast<std::uint8_t>(i + 1);
  return p;
}

Permutation Permutation::swap_positions(int i, int j) const {
  Permutation p = *this;
  std::swap(p.entries_[i - 1], p.entries_[j - 1]);
  p.length_ = static_cast<std::uint8_t>(count_inversions(p.entries_, n_));
  return p;
}

std::uint64_t Permutation::key() const {
  std::uint64_t k = 0;
  for (int i = 0; i < n_; ++i) k |= static_cast<std::uint64_t>(entries_[i] - 1) << (4 * i);
  return k;
}

std::string Permutation::str() const {
  std::string out;
  for (int i = 0; i < n_; ++i) {
    if (n_ > 9 && i > 0) out += ' ';
    out += std::to_string(entries_[i]);
  }
  return out;
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  const int common = std::min<int>(a.n_, b.n_);
  for (int i = 0; i < common; ++i) {
    if (a.entries_[i] != b.entries_[i]) return a.entries_[i] <=> b.entries_[i];
  }
  return a.n_ <=> b.n_;
}

int Permutation::count_inversions(const std::array<std::uint8_t, kMaxStorage>& e, int n) {
  int count = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) count += e[i] > e[j];
  }
  return count;
}

Permutation apply_left(SimpleReflection s, const Permutation& w) {
  check_reflection(s, w.size());
  const int a = w.position_of(s.index);
  const int b = w.position_of(s.index + 1);
  Permutation p = w;
  std::swap(p.entries_[a - 1], p.entries_[b - 1]);
  p.length_ = static_cast<std::uint8_t>(a < b ? w.length_ + 1 : w.length_ - 1);
  return p;
}

Permutation apply_right(const Permutation& w, SimpleReflection s) {
  check_reflection(s, w.size());
  const int i = s.index - 1;
  Permutation p = w;
  std::swap(p.entries_[i], p.entries_[i + 1]);
  p.length_ = static_cast<std::uint8_t>(w.entries_[i] < w.entries_[i + 1] ? w.length_ + 1
                                                                           : w.length_ - 1);
  return p;
}

Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("compose: size mismatch " + std::to_string(u.size()) + " vs " +
                                std::to_string(v.size()));
  }
  std::vector<int> out(u.size());
  for (int k = 1; k <= u.size(); ++k) out[k - 1] = u(v(k));
  return Permutation(out);
}

Permutation embed(const Permutation& w, int m) {
  if (m < w.size()) {
    throw std::invalid_argument("embed: target size " + std::to_string(m) +
                                " smaller than " + std::to_string(w.size()));
  }
  std::vector<int> out = w.one_line();
  for (int v = w.size() + 1; v <= m; ++v) out.push_back(v);
  return Permutation(out);
}

}  // namespace bruhat
