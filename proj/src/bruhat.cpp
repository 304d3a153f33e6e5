#include "permlat/bruhat.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "permlat/patterns.hpp"

namespace permlat {

namespace {

bool leq_by_rank(const Permutation& u, const Permutation& w) {
  const int n = w.size();
  std::array<int, Permutation::kMaxSize + 2> cu{};
  std::array<int, Permutation::kMaxSize + 2> cw{};
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= u(i); ++j) ++cu[static_cast<std::size_t>(j)];
    for (int j = 1; j <= w(i); ++j) ++cw[static_cast<std::size_t>(j)];
    for (int j = 1; j <= n; ++j) {
      if (cu[static_cast<std::size_t>(j)] > cw[static_cast<std::size_t>(j)]) return false;
    }
  }
  return true;
}

int rank_at(const Permutation& w, int i, int j) {
  int count = 0;
  for (int m = 1; m <= i; ++m) count += w(m) >= j;
  return count;
}

bool leq_by_bubbles(const Permutation& u, const Permutation& w) {
  for (const Square& b : bubbles(w)) {
    if (rank_at(u, b.row, b.col) > rank_at(w, b.row, b.col)) return false;
  }
  return true;
}

}  // namespace

RankMatrix::RankMatrix(const Permutation& w)
    : n_(w.size()), counts_(static_cast<std::size_t>((w.size() + 2) * (w.size() + 2)), 0) {
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      counts_[static_cast<std::size_t>(i * (n_ + 2) + j)] =
          counts_[static_cast<std::size_t>((i - 1) * (n_ + 2) + j)] + (w(i) >= j ? 1 : 0);
    }
  }
}

RightHull::RightHull(const Permutation& w) : n_(w.size()), rows_(static_cast<std::size_t>(w.size()), 0) {
  // min column over rows >= i, max column over rows <= i
  std::vector<int> min_below(static_cast<std::size_t>(n_ + 2), n_ + 1);
  std::vector<int> max_above(static_cast<std::size_t>(n_ + 2), 0);
  for (int i = n_; i >= 1; --i) {
    min_below[static_cast<std::size_t>(i)] = std::min(min_below[static_cast<std::size_t>(i + 1)], w(i));
  }
  for (int i = 1; i <= n_; ++i) {
    max_above[static_cast<std::size_t>(i)] = std::max(max_above[static_cast<std::size_t>(i - 1)], w(i));
  }
  for (int i = 1; i <= n_; ++i) {
    for (int j = min_below[static_cast<std::size_t>(i)]; j <= max_above[static_cast<std::size_t>(i)]; ++j) {
      rows_[static_cast<std::size_t>(i - 1)] |= 1U << (j - 1);
    }
  }
}

bool RightHull::contains_rooks_of(const Permutation& u) const {
  if (u.size() != n_) throw std::invalid_argument("size mismatch");
  for (int i = 1; i <= n_; ++i) {
    if (!contains(i, u(i))) return false;
  }
  return true;
}

std::vector<Square> RightHull::squares() const {
  std::vector<Square> out;
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      if (contains(i, j)) out.push_back({i, j});
    }
  }
  return out;
}

std::string RightHull::to_string() const {
  std::string out;
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) out.push_back(contains(i, j) ? '#' : '.');
    out.push_back('\n');
  }
  return out;
}

bool bruhat_leq(const Permutation& u, const Permutation& w, BruhatBackend backend) {
  if (u.size() != w.size()) throw std::invalid_argument("bruhat_leq: size mismatch");
  switch (backend) {
    case BruhatBackend::kRankMatrix:
      return leq_by_rank(u, w);
    case BruhatBackend::kBubbles:
      return leq_by_bubbles(u, w);
    case BruhatBackend::kRightHull:
      if (!is_chromobruhatic(w)) {
        throw std::domain_error("right-hull criterion requires a pattern-avoiding upper element, got " +
                                w.to_string());
      }
      return RightHull(w).contains_rooks_of(u);
  }
  return false;
}

std::vector<Square> bubbles(const Permutation& w) {
  std::vector<Square> out;
  for (int i = 1; i <= w.size(); ++i) {
    for (int j = w(i) + 1; j <= w.size(); ++j) {
      if (w.position_of(j) > i) out.push_back({i, j});
    }
  }
  return out;
}

std::uint64_t permanent(const std::vector<std::uint32_t>& row_masks) {
  const int n = static_cast<int>(row_masks.size());
  if (n == 0) return 1;
  if (n > 20) throw std::invalid_argument("permanent: matrix too large");
  std::vector<std::int64_t> row_sums(static_cast<std::size_t>(n), 0);
  std::int64_t total = 0;
  std::uint32_t gray = 0;
  const std::uint32_t subsets = 1U << n;
  for (std::uint32_t k = 1; k < subsets; ++k) {
    const int column = std::countr_zero(k);
    const std::uint32_t bit = 1U << column;
    gray ^= bit;
    const std::int64_t delta = (gray & bit) ? 1 : -1;
    std::int64_t product = 1;
    for (int i = 0; i < n; ++i) {
      auto& sum = row_sums[static_cast<std::size_t>(i)];
      if ((row_masks[static_cast<std::size_t>(i)] >> column) & 1U) sum += delta;
      product *= sum;
    }
    total += (std::popcount(gray) % 2 == 0) ? product : -product;
  }
  if (n % 2 == 1) total = -total;
  return static_cast<std::uint64_t>(total);
}

std::uint64_t hull_permanent(const Permutation& w) {
  const RightHull hull(w);
  std::vector<std::uint32_t> masks;
  for (int i = 1; i <= w.size(); ++i) masks.push_back(hull.row_mask(i));
  return permanent(masks);
}

namespace {

// Lexicographic scan of S_n that abandons a prefix as soon as one of its
// rows exceeds the rank matrix of w.  Only rows already placed are checked,
// so every leaf reached is below w.
template <typename Visit>
void walk_interval(const Permutation& w, Visit&& visit) {
  const int n = w.size();
  const RankMatrix bound(w);
  std::array<int, Permutation::kMaxSize + 2> count{};
  std::array<int, Permutation::kMaxSize> word{};
  auto place = [&](auto& self, int row, std::uint32_t used) -> void {
    if (row > n) {
      visit(Permutation(std::span<const int>(word.data(), static_cast<std::size_t>(n))));
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if ((used >> v) & 1U) continue;
      bool ok = true;
      for (int j = 1; j <= v; ++j) {
        ok = ok && count[static_cast<std::size_t>(j)] + 1 <= bound(row, j);
      }
      if (!ok) continue;
      for (int j = 1; j <= v; ++j) ++count[static_cast<std::size_t>(j)];
      word[static_cast<std::size_t>(row - 1)] = v;
      self(self, row + 1, used | (1U << v));
      for (int j = 1; j <= v; ++j) --count[static_cast<std::size_t>(j)];
    }
  };
  place(place, 1, 0U);
}

}  // namespace

std::vector<Permutation> interval(const Permutation& w) {
  std::vector<Permutation> out;
  walk_interval(w, [&](const Permutation& u) { out.push_back(u); });
  return out;
}

std::uint64_t interval_size_by_filter(const Permutation& w) {
  std::uint64_t count = 0;
  walk_interval(w, [&](const Permutation&) { ++count; });
  return count;
}

std::uint64_t interval_size(const Permutation& w) {
  return is_chromobruhatic(w) ? hull_permanent(w) : interval_size_by_filter(w);
}

std::size_t BruhatGraph::index_of(const Permutation& x) const {
  const auto it = std::lower_bound(vertices.begin(), vertices.end(), x);
  if (it == vertices.end() || *it != x) throw std::out_of_range(x.to_string() + " not in the graph");
  return static_cast<std::size_t>(it - vertices.begin());
}

BruhatGraph bruhat_graph(const Permutation& w) {
  BruhatGraph graph;
  graph.vertices = interval(w);
  std::unordered_map<Permutation, std::size_t> index;
  for (std::size_t k = 0; k < graph.vertices.size(); ++k) index.emplace(graph.vertices[k], k);
  const int n = w.size();
  for (std::size_t from = 0; from < graph.vertices.size(); ++from) {
    const Permutation& x = graph.vertices[from];
    std::vector<BruhatGraph::Edge> out;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        if (x.has_inversion(i, j)) continue;  // tx would be shorter
        const auto it = index.find(x.swap_positions(i, j));
        if (it != index.end()) out.push_back({from, it->second, Transposition(i, j)});
      }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.to < b.to; });
    graph.edges.insert(graph.edges.end(), out.begin(), out.end());
  }
  return graph;
}

std::vector<std::pair<Permutation, int>> directed_distances(const Permutation& w) {
  // Reverse BFS from w.  Every predecessor t y of y with l(ty) < l(y) is
  // Bruhat-below y, so the search never leaves [e, w].
  std::unordered_map<Permutation, int> dist;
  std::deque<Permutation> queue;
  dist.emplace(w, 0);
  queue.push_back(w);
  const int n = w.size();
  while (!queue.empty()) {
    const Permutation y = queue.front();
    queue.pop_front();
    const int d = dist.at(y);
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        if (!y.has_inversion(i, j)) continue;
        const Permutation x = y.swap_positions(i, j);
        if (dist.emplace(x, d + 1).second) queue.push_back(x);
      }
    }
  }
  std::vector<std::pair<Permutation, int>> out(dist.begin(), dist.end());
  std::sort(out.begin(), out.end());
  return out;
}

int directed_distance(const Permutation& u, const Permutation& w) {
  if (!bruhat_leq(u, w)) {
    throw std::invalid_argument(u.to_string() + " is not below " + w.to_string() + " in Bruhat order");
  }
  std::unordered_map<Permutation, int> dist;
  std::deque<Permutation> queue;
  dist.emplace(w, 0);
  queue.push_back(w);
  const int n = w.size();
  while (!queue.empty()) {
    const Permutation y = queue.front();
    queue.pop_front();
    const int d = dist.at(y);
    if (y == u) return d;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        if (!y.has_inversion(i, j)) continue;
        const Permutation x = y.swap_positions(i, j);
        if (dist.emplace(x, d + 1).second) queue.push_back(x);
      }
    }
  }
  throw std::logic_error("directed_distance: " + u.to_string() + " unreachable from " + w.to_string());
}

bool weak_leq_right(const Permutation& u, const Permutation& w) {
  if (u.size() != w.size()) throw std::invalid_argument("weak_leq_right: size mismatch");
  for (int i = 1; i <= u.size(); ++i) {
    for (int j = i + 1; j <= u.size(); ++j) {
      if (u.has_inversion(i, j) && !w.has_inversion(i, j)) return false;
    }
  }
  return true;
}

bool weak_leq_left(const Permutation& u, const Permutation& w) {
  return weak_leq_right(inverse(u), inverse(w));
}

std::vector<Permutation> two_sided_weak_covers(const Permutation& w) {
  std::vector<Permutation> out;
  for (int a = 1; a < w.size(); ++a) {
    if (w(a) > w(a + 1)) out.push_back(w.swap_positions(a, a + 1));                 // s_a w
    if (w.position_of(a) > w.position_of(a + 1)) out.push_back(w.swap_values(a, a + 1));  // w s_a
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

bool descend_to_identity(const Permutation& x, const std::function<bool(const Permutation&)>& keep,
                         std::unordered_set<Permutation>& dead, std::vector<Permutation>& chain) {
  chain.push_back(x);
  if (x.is_identity()) return true;
  for (const Permutation& y : two_sided_weak_covers(x)) {
    if (dead.count(y) || !keep(y)) continue;
    if (descend_to_identity(y, keep, dead, chain)) return true;
    dead.insert(y);
  }
  chain.pop_back();
  return false;
}

}  // namespace

std::optional<std::vector<Permutation>> saturated_weak_chain(
    const Permutation& w, const std::function<bool(const Permutation&)>& keep) {
  if (!keep(w)) return std::nullopt;
  std::unordered_set<Permutation> dead;
  std::vector<Permutation> chain;
  if (descend_to_identity(w, keep, dead, chain)) return chain;
  return std::nullopt;
}

}  // namespace permlat
