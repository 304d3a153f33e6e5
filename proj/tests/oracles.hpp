#pragma once

// Brute-force reference computations used only by the tests.  Each one
// goes back to a definition and shares no code path with the library
// routine it checks.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <vector>

#include "permlat/permutation.hpp"

namespace permlat::oracle {

inline std::vector<int> word_of(const Permutation& w) { return w.word(); }

// Shortest product of transpositions, by BFS from the identity.
inline int absolute_length_bfs(const Permutation& w) {
  const int n = w.size();
  std::map<std::vector<int>, int> dist;
  std::deque<std::vector<int>> queue;
  std::vector<int> e(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = i + 1;
  dist[e] = 0;
  queue.push_back(e);
  const std::vector<int> target = w.word();
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    if (x == target) return dist[x];
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        auto y = x;
        std::swap(y[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(j)]);
        if (dist.emplace(y, dist[x] + 1).second) queue.push_back(y);
      }
    }
  }
  return -1;
}

// Pattern containment by trying every index subset.
inline bool contains_by_subsets(const Permutation& w, const Permutation& p) {
  const int n = w.size();
  const int m = p.size();
  if (m > n) return false;
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + m, true);
  do {
    std::vector<int> vals;
    for (int i = 0; i < n; ++i) {
      if (pick[static_cast<std::size_t>(i)]) vals.push_back(w(i + 1));
    }
    bool match = true;
    for (int a = 0; a < m && match; ++a) {
      for (int b = 0; b < m && match; ++b) {
        match = (vals[static_cast<std::size_t>(a)] < vals[static_cast<std::size_t>(b)]) == (p(a + 1) < p(b + 1));
      }
    }
    if (match) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

// Positions r whose value exceeds every earlier value, by comparing against
// the whole prefix.
inline std::vector<int> records_by_prefix_max(const Permutation& w) {
  std::vector<int> out;
  for (int r = 1; r <= w.size(); ++r) {
    bool record = true;
    for (int s = 1; s < r; ++s) record = record && w(s) < w(r);
    if (record) out.push_back(r);
  }
  return out;
}

// Proper colourings with k colours of a graph on n vertices (0-based edges).
inline std::uint64_t colourings(int n, const std::vector<std::pair<int, int>>& edges, int k) {
  std::uint64_t total = 0;
  std::vector<int> colour(static_cast<std::size_t>(n), 0);
  std::uint64_t combos = 1;
  for (int i = 0; i < n; ++i) combos *= static_cast<std::uint64_t>(k);
  for (std::uint64_t code = 0; code < combos; ++code) {
    std::uint64_t c = code;
    for (int i = 0; i < n; ++i) {
      colour[static_cast<std::size_t>(i)] = static_cast<int>(c % static_cast<std::uint64_t>(k));
      c /= static_cast<std::uint64_t>(k);
    }
    bool proper = true;
    for (const auto& [u, v] : edges) proper = proper && colour[static_cast<std::size_t>(u)] != colour[static_cast<std::size_t>(v)];
    total += proper;
  }
  return total;
}

// Acyclic orientations by trying all 2^m orientations and peeling sources.
inline std::uint64_t acyclic_orientations_brute(int n, const std::vector<std::pair<int, int>>& edges) {
  const std::size_t m = edges.size();
  std::uint64_t total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<int> indegree(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
    for (std::size_t e = 0; e < m; ++e) {
      auto [u, v] = edges[e];
      if ((mask >> e) & 1U) std::swap(u, v);
      out[static_cast<std::size_t>(u)].push_back(v);
      ++indegree[static_cast<std::size_t>(v)];
    }
    std::vector<int> ready;
    for (int v = 0; v < n; ++v) {
      if (indegree[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
    }
    int removed = 0;
    while (!ready.empty()) {
      const int v = ready.back();
      ready.pop_back();
      ++removed;
      for (int x : out[static_cast<std::size_t>(v)]) {
        if (--indegree[static_cast<std::size_t>(x)] == 0) ready.push_back(x);
      }
    }
    total += removed == n;
  }
  return total;
}

inline std::vector<std::pair<int, int>> inversion_edges(const Permutation& w) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= w.size(); ++i) {
    for (int j = i + 1; j <= w.size(); ++j) {
      if (w(i) > w(j)) edges.emplace_back(i - 1, j - 1);
    }
  }
  return edges;
}

// Connected-component partitions of every edge subset of the inversion
// graph, as sorted block lists.
inline std::set<std::vector<std::vector<int>>> bond_partitions(const Permutation& w) {
  const auto edges = inversion_edges(w);
  const int n = w.size();
  std::set<std::vector<std::vector<int>>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if ((mask >> e) & 1U) parent[static_cast<std::size_t>(find(edges[e].first))] = find(edges[e].second);
    }
    std::map<int, std::vector<int>> blocks;
    for (int i = 0; i < n; ++i) blocks[find(i)].push_back(i + 1);
    std::vector<std::vector<int>> partition;
    for (auto& [root, block] : blocks) partition.push_back(block);
    std::sort(partition.begin(), partition.end());
    out.insert(partition);
  }
  return out;
}

// u <= w iff u is the product of some subword of a reduced word for w.
inline std::set<std::vector<int>> interval_by_subwords(const Permutation& w, const std::vector<int>& reduced_letters) {
  const int n = w.size();
  std::set<std::vector<int>> out;
  const std::size_t k = reduced_letters.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<int> x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = i + 1;
    for (std::size_t b = 0; b < k; ++b) {
      if (!((mask >> b) & 1U)) continue;
      const int a = reduced_letters[b];
      // right multiplication by s_a swaps the values a and a+1
      for (int& v : x) {
        if (v == a) {
          v = a + 1;
        } else if (v == a + 1) {
          v = a;
        }
      }
    }
    out.insert(x);
  }
  return out;
}

inline int inversion_count(const std::vector<int>& x) {
  int c = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) c += x[i] > x[j];
  }
  return c;
}

// Forward BFS from u over the Bruhat graph of all of S_n (x -> tx whenever
// l(x) < l(tx)), with no restriction to [e, w].  -1 if w is unreachable.
inline int unrestricted_distance(const Permutation& u, const Permutation& w) {
  const auto start = u.word();
  const auto target = w.word();
  std::map<std::vector<int>, int> dist{{start, 0}};
  std::deque<std::vector<int>> queue{start};
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    if (x == target) return dist[x];
    const int lx = inversion_count(x);
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (std::size_t j = i + 1; j < x.size(); ++j) {
        auto y = x;
        std::swap(y[i], y[j]);
        if (inversion_count(y) <= lx) continue;
        if (dist.emplace(y, dist[x] + 1).second) queue.push_back(y);
      }
    }
  }
  return -1;
}

// Number of permutation matrices supported on the 0/1 mask.
inline std::uint64_t permanent_brute(const std::vector<std::uint32_t>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<int> cols(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cols[static_cast<std::size_t>(i)] = i;
  std::uint64_t total = 0;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = (rows[static_cast<std::size_t>(i)] >> cols[static_cast<std::size_t>(i)]) & 1U;
    total += ok;
  } while (std::next_permutation(cols.begin(), cols.end()));
  return total;
}

}  // namespace permlat::oracle
