#pragma once

// Chromatic polynomials by memoized deletion-contraction, acyclic
// orientation counts, and the distance-generating-function identity.

#include <atomic>
#include <cstdint>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "permlat/permutation.hpp"
#include "permlat/polynomial.hpp"

namespace permlat {

// Simple undirected graph on vertices 0..n-1 (n <= 32) as adjacency bitmasks.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n);
  explicit SimpleGraph(const InversionGraph& g);
  SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges);  // 0-based endpoints

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const;
  std::uint32_t neighbours(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const { return (neighbours(u) >> v) & 1U; }
  int degree(int v) const;
  std::vector<std::pair<int, int>> edges() const;

  void add_edge(int u, int v);
  SimpleGraph without_edge(int u, int v) const;
  // Merges v into u and drops v; vertices above v shift down by one.
  SimpleGraph contracted(int u, int v) const;
  SimpleGraph without_vertex(int v) const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::vector<std::uint32_t> adjacency_;
};

// Memo table shared by concurrent callers: lookups take a shared lock,
// inserts are insert-if-absent under an exclusive lock.
class ChromaticCache {
 public:
  bool lookup(const std::string& key, IntPolynomial& out) const;
  void insert(const std::string& key, const IntPolynomial& value);
  std::size_t size() const;
  std::uint64_t hits() const { return hits_.load(); }
  void clear();

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, IntPolynomial> table_;
  mutable std::atomic<std::uint64_t> hits_{0};
};

ChromaticCache& default_chromatic_cache();

// Relabels vertices by iterated colour refinement (ties broken by original
// index) and serializes the relabelled adjacency.  Equal keys imply
// isomorphic graphs; isomorphic graphs usually, not always, share a key.
std::string canonical_key(const SimpleGraph& g);

IntPolynomial chromatic_polynomial(const SimpleGraph& g, ChromaticCache& cache = default_chromatic_cache());
IntPolynomial chromatic_polynomial(const InversionGraph& g);
// Chromatic polynomial of the inversion graph of w.
IntPolynomial chromatic_polynomial(const Permutation& w);

// (-1)^n chi(-1).
std::uint64_t acyclic_orientations(const SimpleGraph& g);
std::uint64_t acyclic_orientations(const InversionGraph& g);
std::uint64_t acyclic_orientations(const Permutation& w);

// prod (t - e_i) over the record-position exponents.  Throws
// std::domain_error when w is not smooth.
IntPolynomial opy_chromatic(const Permutation& w);

// (-q)^n chi(-1/q) for a degree-n chromatic polynomial, as a polynomial in q.
IntPolynomial reciprocal_chromatic(const IntPolynomial& chi, int n);
// sum over u <= w of q^{al(u, w)}.
IntPolynomial distance_poly(const Permutation& w);
bool chromatic_identity_holds(const Permutation& w);

}  // namespace permlat
