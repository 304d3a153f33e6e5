#include "permlat/chromatic.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>

#include "permlat/bruhat.hpp"
#include "permlat/patterns.hpp"

namespace permlat {

namespace {

std::uint32_t drop_bit(std::uint32_t mask, int v) {
  const std::uint32_t low = mask & ((1U << v) - 1U);
  const std::uint32_t high = v >= 31 ? 0U : (mask >> (v + 1)) << v;
  return low | high;
}

// Vertex masks of the connected components, in order of smallest vertex.
std::vector<std::uint32_t> components(const SimpleGraph& g) {
  std::vector<std::uint32_t> out;
  std::uint32_t unseen = g.vertex_count() == 32 ? ~0U : (1U << g.vertex_count()) - 1U;
  while (unseen != 0) {
    std::uint32_t comp = 1U << std::countr_zero(unseen);
    std::uint32_t frontier = comp;
    while (frontier != 0) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const std::uint32_t fresh = g.neighbours(v) & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

SimpleGraph induced(const SimpleGraph& g, std::uint32_t vertices) {
  std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
  int next = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if ((vertices >> v) & 1U) index[static_cast<std::size_t>(v)] = next++;
  }
  SimpleGraph out(next);
  for (const auto& [u, v] : g.edges()) {
    if (((vertices >> u) & 1U) && ((vertices >> v) & 1U)) {
      out.add_edge(index[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(v)]);
    }
  }
  return out;
}

IntPolynomial falling_factorial(int n) {
  std::vector<int> roots;
  for (int k = 0; k < n; ++k) roots.push_back(k);
  return IntPolynomial::from_roots(roots);
}

bool is_clique(const SimpleGraph& g, std::uint32_t vertices) {
  for (std::uint32_t rest = vertices; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    if ((g.neighbours(v) & vertices) != (vertices & ~(1U << v))) return false;
  }
  return true;
}

IntPolynomial chromatic_connected(const SimpleGraph& g, ChromaticCache& cache);

IntPolynomial chromatic_any(const SimpleGraph& g, ChromaticCache& cache) {
  const int n = g.vertex_count();
  if (n == 0) return IntPolynomial::constant(1);
  const int m = g.edge_count();
  if (m == 0) return IntPolynomial::monomial(n);
  if (2 * m == n * (n - 1)) return falling_factorial(n);
  const auto comps = components(g);
  if (comps.size() == 1) return chromatic_connected(g, cache);
  IntPolynomial out = IntPolynomial::constant(1);
  for (std::uint32_t comp : comps) out = out * chromatic_connected(induced(g, comp), cache);
  return out;
}

IntPolynomial chromatic_connected(const SimpleGraph& g, ChromaticCache& cache) {
  const int n = g.vertex_count();
  if (n == 1) return IntPolynomial::monomial(1);
  if (2 * g.edge_count() == n * (n - 1)) return falling_factorial(n);

  const std::string key = canonical_key(g);
  IntPolynomial result;
  if (cache.lookup(key, result)) return result;

  // A simplicial vertex v contributes the factor (t - deg v).
  int simplicial = -1;
  for (int v = 0; v < n && simplicial < 0; ++v) {
    if (is_clique(g, g.neighbours(v))) simplicial = v;
  }
  if (simplicial >= 0) {
    result = IntPolynomial({-static_cast<std::int64_t>(g.degree(simplicial)), 1}) *
             chromatic_any(g.without_vertex(simplicial), cache);
  } else {
    int u = 0;
    for (int v = 1; v < n; ++v) {
      if (g.degree(v) > g.degree(u)) u = v;
    }
    int v = -1;
    for (std::uint32_t rest = g.neighbours(u); rest != 0; rest &= rest - 1) {
      const int c = std::countr_zero(rest);
      if (v < 0 || g.degree(c) > g.degree(v)) v = c;
    }
    result = chromatic_any(g.without_edge(u, v), cache) - chromatic_any(g.contracted(u, v), cache);
  }
  cache.insert(key, result);
  return result;
}

}  // namespace

SimpleGraph::SimpleGraph(int n) : adjacency_(static_cast<std::size_t>(n), 0) {
  if (n < 0 || n > 32) throw std::invalid_argument("SimpleGraph supports at most 32 vertices");
}

SimpleGraph::SimpleGraph(const InversionGraph& g) : SimpleGraph(g.vertex_count()) {
  for (const auto& [i, j] : g.edges()) add_edge(i - 1, j - 1);
}

SimpleGraph::SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges) : SimpleGraph(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

int SimpleGraph::edge_count() const {
  int twice = 0;
  for (std::uint32_t mask : adjacency_) twice += std::popcount(mask);
  return twice / 2;
}

int SimpleGraph::degree(int v) const { return std::popcount(neighbours(v)); }

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < vertex_count(); ++u) {
    for (int v = u + 1; v < vertex_count(); ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

void SimpleGraph::add_edge(int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) {
    throw std::invalid_argument("bad edge {" + std::to_string(u) + ", " + std::to_string(v) + "}");
  }
  adjacency_[static_cast<std::size_t>(u)] |= 1U << v;
  adjacency_[static_cast<std::size_t>(v)] |= 1U << u;
}

SimpleGraph SimpleGraph::without_edge(int u, int v) const {
  SimpleGraph out = *this;
  out.adjacency_[static_cast<std::size_t>(u)] &= ~(1U << v);
  out.adjacency_[static_cast<std::size_t>(v)] &= ~(1U << u);
  return out;
}

SimpleGraph SimpleGraph::contracted(int u, int v) const {
  SimpleGraph merged = *this;
  std::uint32_t joined = (neighbours(u) | neighbours(v)) & ~(1U << u) & ~(1U << v);
  merged.adjacency_[static_cast<std::size_t>(u)] = joined;
  for (int w = 0; w < vertex_count(); ++w) {
    if (w == u || w == v) continue;
    if ((joined >> w) & 1U) merged.adjacency_[static_cast<std::size_t>(w)] |= 1U << u;
  }
  return merged.without_vertex(v);
}

SimpleGraph SimpleGraph::without_vertex(int v) const {
  SimpleGraph out(vertex_count() - 1);
  int next = 0;
  for (int w = 0; w < vertex_count(); ++w) {
    if (w == v) continue;
    out.adjacency_[static_cast<std::size_t>(next++)] = drop_bit(neighbours(w), v);
  }
  return out;
}

bool ChromaticCache::lookup(const std::string& key, IntPolynomial& out) const {
  std::shared_lock lock(mutex_);
  const auto it = table_.find(key);
  if (it == table_.end()) return false;
  out = it->second;
  ++hits_;
  return true;
}

void ChromaticCache::insert(const std::string& key, const IntPolynomial& value) {
  std::unique_lock lock(mutex_);
  table_.try_emplace(key, value);
}

std::size_t ChromaticCache::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

void ChromaticCache::clear() {
  std::unique_lock lock(mutex_);
  table_.clear();
  hits_ = 0;
}

ChromaticCache& default_chromatic_cache() {
  static ChromaticCache cache;
  return cache;
}

std::string canonical_key(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> colour(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) colour[static_cast<std::size_t>(v)] = g.degree(v);
  int classes = -1;
  for (;;) {
    std::vector<std::vector<int>> signature(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& sig = signature[static_cast<std::size_t>(v)];
      sig.push_back(colour[static_cast<std::size_t>(v)]);
      std::vector<int> around;
      for (std::uint32_t rest = g.neighbours(v); rest != 0; rest &= rest - 1) {
        around.push_back(colour[static_cast<std::size_t>(std::countr_zero(rest))]);
      }
      std::sort(around.begin(), around.end());
      sig.insert(sig.end(), around.begin(), around.end());
    }
    std::map<std::vector<int>, int> ids;
    for (const auto& sig : signature) ids.emplace(sig, 0);
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (int v = 0; v < n; ++v) colour[static_cast<std::size_t>(v)] = ids.at(signature[static_cast<std::size_t>(v)]);
    if (next == classes) break;
    classes = next;
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return colour[static_cast<std::size_t>(a)] < colour[static_cast<std::size_t>(b)];
  });
  std::vector<int> label(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) label[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;

  std::string key(1, static_cast<char>(n));
  for (int k = 0; k < n; ++k) {
    std::uint32_t row = 0;
    for (std::uint32_t rest = g.neighbours(order[static_cast<std::size_t>(k)]); rest != 0; rest &= rest - 1) {
      row |= 1U << label[static_cast<std::size_t>(std::countr_zero(rest))];
    }
    for (int byte = 0; byte < 4; ++byte) key.push_back(static_cast<char>((row >> (8 * byte)) & 0xFFU));
  }
  return key;
}

IntPolynomial chromatic_polynomial(const SimpleGraph& g, ChromaticCache& cache) { return chromatic_any(g, cache); }

IntPolynomial chromatic_polynomial(const InversionGraph& g) { return chromatic_polynomial(SimpleGraph(g)); }

IntPolynomial chromatic_polynomial(const Permutation& w) { return chromatic_polynomial(InversionGraph(w)); }

std::uint64_t acyclic_orientations(const SimpleGraph& g) {
  const std::int64_t value = chromatic_polynomial(g).evaluate(-1);
  return static_cast<std::uint64_t>(g.vertex_count() % 2 == 0 ? value : -value);
}

std::uint64_t acyclic_orientations(const InversionGraph& g) { return acyclic_orientations(SimpleGraph(g)); }

std::uint64_t acyclic_orientations(const Permutation& w) { return acyclic_orientations(InversionGraph(w)); }

IntPolynomial opy_chromatic(const Permutation& w) {
  if (!is_smooth(w)) throw std::domain_error(w.to_string() + " is not smooth (contains 3412 or 4231)");
  return IntPolynomial::from_roots(opy_exponents(w));
}

IntPolynomial reciprocal_chromatic(const IntPolynomial& chi, int n) {
  std::vector<std::int64_t> q(static_cast<std::size_t>(n + 1), 0);
  for (int d = 0; d <= n; ++d) {
    const std::int64_t c = chi.coefficient(n - d);
    q[static_cast<std::size_t>(d)] = d % 2 == 0 ? c : -c;
  }
  return IntPolynomial(std::move(q));
}

IntPolynomial distance_poly(const Permutation& w) {
  std::vector<std::int64_t> counts;
  for (const auto& [u, d] : directed_distances(w)) {
    if (static_cast<int>(counts.size()) <= d) counts.resize(static_cast<std::size_t>(d + 1), 0);
    ++counts[static_cast<std::size_t>(d)];
  }
  return IntPolynomial(std::move(counts));
}

bool chromatic_identity_holds(const Permutation& w) {
  return distance_poly(w) == reciprocal_chromatic(chromatic_polynomial(w), w.size());
}

}  // namespace permlat
