#include "bruhat/poset.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace bruhat {

RankedPoset::RankedPoset(std::vector<int> ranks, std::vector<std::pair<int, int>> covers)
    : ranks_(std::move(ranks)), covers_(std::move(covers)) {
  const int n = size();
  if (n == 0) throw std::invalid_argument("poset must be nonempty");
  up_.resize(n);
  down_.resize(n);
  for (auto [a, b] : covers_) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw std::invalid_argument("cover endpoint out of range");
    }
    if (ranks_[b] != ranks_[a] + 1) {
      throw std::invalid_argument("cover (" + std::to_string(a) + "," + std::to_string(b) +
                                  ") does not join adjacent ranks");
    }
    up_[a].push_back(b);
    down_[b].push_back(a);
  }
  for (int v = 0; v < n; ++v) {
    std::sort(up_[v].begin(), up_[v].end());
    std::sort(down_[v].begin(), down_[v].end());
    if (std::adjacent_find(up_[v].begin(), up_[v].end()) != up_[v].end()) {
      throw std::invalid_argument("repeated cover at element " + std::to_string(v));
    }
  }
  int minima = 0;
  int maxima = 0;
  for (int v = 0; v < n; ++v) {
    if (down_[v].empty()) {
      ++minima;
      bottom_ = v;
    }
    if (up_[v].empty()) {
      ++maxima;
      top_ = v;
    }
  }
  if (minima != 1 || maxima != 1) {
    throw std::invalid_argument("poset needs a unique minimum and maximum");
  }
  if (ranks_[bottom_] != 0) throw std::invalid_argument("minimum must have rank 0");
}

std::vector<int> RankedPoset::rank_profile() const {
  std::vector<int> profile(static_cast<std::size_t>(length()) + 1, 0);
  for (int r : ranks_) ++profile[r];
  return profile;
}

RankedPoset singleton_poset() { return RankedPoset({0}, {}); }

RankedPoset chain(int length) {
  if (length < 0) throw std::invalid_argument("chain length must be nonnegative");
  std::vector<int> ranks(static_cast<std::size_t>(length) + 1);
  std::iota(ranks.begin(), ranks.end(), 0);
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < length; ++i) covers.emplace_back(i, i + 1);
  return RankedPoset(std::move(ranks), std::move(covers));
}

RankedPoset direct_product(const RankedPoset& p, const RankedPoset& q) {
  const int np = p.size();
  const int nq = q.size();
  std::vector<int> ranks(static_cast<std::size_t>(np * nq));
  std::vector<std::pair<int, int>> covers;
  for (int a = 0; a < np; ++a) {
    for (int b = 0; b < nq; ++b) {
      const int v = a * nq + b;
      ranks[v] = p.rank(a) + q.rank(b);
      for (int a2 : p.up(a)) covers.emplace_back(v, a2 * nq + b);
      for (int b2 : q.up(b)) covers.emplace_back(v, a * nq + b2);
    }
  }
  return RankedPoset(std::move(ranks), std::move(covers));
}

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Individualization-refinement search. Colors are cell indices ordered
// invariantly; a leaf is a discrete coloring, read as a labeling.
class Canonizer {
 public:
  explicit Canonizer(const RankedPoset& p) : p_(p), n_(p.size()) {}

  std::string run() {
    std::vector<int> colors(p_.ranks());
    // Ranks are already cell indices in invariant order.
    search(colors);
    return best_;
  }

 private:
  // Equitable refinement: split cells by the multisets of colors above and
  // below until the number of cells stops growing. Returns the cell count.
  int refine(std::vector<int>& colors) {
    int cells = 1 + *std::max_element(colors.begin(), colors.end());
    keys_.resize(n_);
    while (cells < n_) {
      for (int v = 0; v < n_; ++v) {
        std::uint64_t hu = 0;
        std::uint64_t hd = 0;
        for (int u : p_.up(v)) hu += mix(static_cast<std::uint64_t>(colors[u]));
        for (int u : p_.down(v)) hd += mix(static_cast<std::uint64_t>(colors[u]) ^ 0x5bd1e995ULL);
        keys_[v] = Key{colors[v], hu, hd, v};
      }
      std::sort(keys_.begin(), keys_.end());
      int next = 0;
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && !keys_[i].same_class(keys_[i - 1])) ++next;
        colors[keys_[i].v] = next;
      }
      if (next + 1 == cells) break;
      cells = next + 1;
    }
    return cells;
  }

  void search(std::vector<int> colors) {
    const int cells = refine(colors);
    if (cells == n_) {
      leaf(colors);
      return;
    }
    // Target cell: the first non-singleton cell.
    std::vector<int> count(static_cast<std::size_t>(cells), 0);
    for (int c : colors) ++count[c];
    int target = 0;
    while (count[target] < 2) ++target;

    std::vector<int> members;
    for (int v = 0; v < n_; ++v) {
      if (colors[v] == target) members.push_back(v);
    }
    std::vector<int> explored;
    for (int v : members) {
      if (!explored.empty() && pruned(v, explored)) continue;
      explored.push_back(v);
      std::vector<int> child(colors);
      for (int u = 0; u < n_; ++u) {
        if (child[u] > target || (child[u] == target && u != v)) ++child[u];
      }
      path_.push_back(v);
      search(std::move(child));
      path_.pop_back();
    }
  }

  // v is skipped when an automorphism fixing the current path maps an
  // already explored sibling onto it.
  bool pruned(int v, const std::vector<int>& explored) {
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    bool any = false;
    for (const auto& g : autos_) {
      bool fixes = true;
      for (int u : path_) {
        if (g[u] != u) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      any = true;
      for (int a = 0; a < n_; ++a) {
        const int ra = find(a);
        const int rb = find(g[a]);
        if (ra != rb) parent[ra] = rb;
      }
    }
    if (!any) return false;
    const int rv = find(v);
    return std::any_of(explored.begin(), explored.end(), [&](int e) { return find(e) == rv; });
  }

  void leaf(const std::vector<int>& colors) {
    // colors is a bijection vertex -> label.
    std::vector<int> vertex_at(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) vertex_at[colors[v]] = v;

    std::string cert;
    cert.reserve(static_cast<std::size_t>(4 * (n_ + static_cast<int>(p_.covers().size())) + 4));
    auto put = [&](int x) {
      cert.push_back(static_cast<char>((x >> 8) & 0xff));
      cert.push_back(static_cast<char>(x & 0xff));
    };
    put(n_);
    for (int label = 0; label < n_; ++label) put(p_.rank(vertex_at[label]));
    scratch_.clear();
    for (int label = 0; label < n_; ++label) {
      scratch_.clear();
      for (int u : p_.up(vertex_at[label])) scratch_.push_back(colors[u]);
      std::sort(scratch_.begin(), scratch_.end());
      put(static_cast<int>(scratch_.size()));
      for (int x : scratch_) put(x);
    }

    if (best_.empty() || cert < best_) {
      best_ = std::move(cert);
      best_vertex_at_ = std::move(vertex_at);
    } else if (cert == best_) {
      std::vector<int> g(static_cast<std::size_t>(n_));
      bool identity = true;
      for (int label = 0; label < n_; ++label) {
        g[best_vertex_at_[label]] = vertex_at[label];
        identity = identity && best_vertex_at_[label] == vertex_at[label];
      }
      if (!identity) autos_.push_back(std::move(g));
    }
  }

  struct Key {
    int color;
    std::uint64_t up;
    std::uint64_t down;
    int v;
    bool operator<(const Key& o) const {
      return std::tie(color, up, down, v) < std::tie(o.color, o.up, o.down, o.v);
    }
    bool same_class(const Key& o) const {
      return color == o.color && up == o.up && down == o.down;
    }
  };

  const RankedPoset& p_;
  int n_;
  std::vector<Key> keys_;
  std::vector<int> path_;
  std::vector<int> scratch_;
  std::vector<std::vector<int>> autos_;
  std::string best_;
  std::vector<int> best_vertex_at_;
};

}  // namespace

CanonicalForm canonical_form(const RankedPoset& p) { return CanonicalForm{Canonizer(p).run()}; }

bool is_isomorphic(const RankedPoset& p, const RankedPoset& q) {
  if (p.size() != q.size() || p.covers().size() != q.covers().size()) return false;
  if (p.rank_profile() != q.rank_profile()) return false;
  return canonical_form(p) == canonical_form(q);
}

std::string to_dot(const RankedPoset& p, std::span<const std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != p.size()) {
    throw std::invalid_argument("to_dot: label count does not match poset size");
  }
  std::ostringstream out;
  out << "digraph poset {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=plaintext];\n";
  for (int v = 0; v < p.size(); ++v) {
    out << "  n" << v << " [label=\"" << (labels.empty() ? std::to_string(v) : labels[v])
        << "\"];\n";
  }
  for (int r = 0; r <= p.length(); ++r) {
    out << "  { rank=same;";
    for (int v = 0; v < p.size(); ++v) {
      if (p.rank(v) == r) out << " n" << v << ";";
    }
    out << " }\n";
  }
  for (auto [a, b] : p.covers()) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace bruhat
