#include <doctest.h>

#include <map>
#include <random>
#include <stdexcept>
#include <thread>

#include "oracles.hpp"
#include "permlat/arrangement.hpp"
#include "permlat/chromatic.hpp"
#include "permlat/patterns.hpp"

using namespace permlat;

TEST_CASE("polynomial arithmetic and printing") {
  const IntPolynomial t = IntPolynomial::monomial(1);
  CHECK((t * t - t).to_string() == "t^2-t");
  CHECK(IntPolynomial::from_roots({1, 0, 1, 2}).to_string() == "t^4-4t^3+5t^2-2t");
  CHECK(IntPolynomial{1, 4, 5, 2}.to_string("q") == "2q^3+5q^2+4q+1");
  CHECK(IntPolynomial().to_string() == "0");
  CHECK(IntPolynomial{0, 0, 0}.is_zero());
  CHECK(IntPolynomial{-1, 0, 1}.evaluate(3) == 8);
  CHECK(factored_string({1, 0, 1, 2}) == "(t-1)(t-0)(t-1)(t-2)");
  CHECK_THROWS_AS(IntPolynomial::constant(INT64_MAX) + IntPolynomial::constant(1), std::overflow_error);
}

TEST_CASE("chromatic polynomials of inversion graphs") {
  CHECK(chromatic_polynomial(Permutation::identity(4)) == IntPolynomial::monomial(4));
  const auto chi = chromatic_polynomial(Permutation::parse("4132"));
  CHECK(chi == IntPolynomial::from_roots({1, 0, 1, 2}));
  CHECK(acyclic_orientations(Permutation::parse("4132")) == 12);
  CHECK(acyclic_orientations(Permutation::identity(3)) == 1);
  for_each_permutation(4, [](const Permutation& w) {
    const auto p = chromatic_polynomial(w);
    const auto edges = oracle::inversion_edges(w);
    for (int k = 1; k <= 3; ++k) REQUIRE(static_cast<std::uint64_t>(p.evaluate(k)) == oracle::colourings(4, edges, k));
  });
}

TEST_CASE("coefficient shape") {
  for_each_permutation(6, [](const Permutation& w) {
    const auto p = chromatic_polynomial(w);
    REQUIRE(p.degree() == 6);
    REQUIRE(p.coefficient(6) == 1);
    REQUIRE(p.coefficient(0) == 0);
    REQUIRE(-p.coefficient(5) == w.length());
    for (int d = 0; d <= 6; ++d) {
      const auto c = p.coefficient(d);
      REQUIRE((c == 0 || (c > 0) == ((6 - d) % 2 == 0)));
    }
    const auto r = reciprocal_chromatic(p, 6);
    for (auto c : r.coefficients()) REQUIRE(c >= 0);
    REQUIRE(acyclic_orientations(w) == region_count(w));
  });
}

TEST_CASE("random graphs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng() % 2) edges.emplace_back(u, v);
      }
    }
    SimpleGraph g(n, edges);
    const auto ao = oracle::acyclic_orientations_brute(n, edges);
    REQUIRE(acyclic_orientations(g) == ao);
    for (int k = 1; k <= 3; ++k) REQUIRE(static_cast<std::uint64_t>(chromatic_polynomial(g).evaluate(k)) == oracle::colourings(n, edges, k));
    if (!edges.empty()) {
      const auto [a, b] = edges.front();
      REQUIRE(ao == acyclic_orientations(g.without_edge(a, b)) + acyclic_orientations(g.contracted(a, b)));
    }
  }
}

TEST_CASE("canonical key") {
  // relabelling a graph whose refinement separates everything up to
  // automorphism gives the same key
  SimpleGraph a(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}});
  SimpleGraph b(5, {{4, 2}, {2, 0}, {0, 3}, {2, 1}});
  CHECK(canonical_key(a) == canonical_key(b));
  SimpleGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
  SimpleGraph path(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(canonical_key(path) != canonical_key(star));
  // equal keys always mean equal polynomials
  std::map<std::string, std::vector<std::pair<int, int>>> seen;
  std::mt19937 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 5; ++u) {
      for (int v = u + 1; v < 5; ++v) {
        if (rng() % 2) edges.emplace_back(u, v);
      }
    }
    const auto key = canonical_key(SimpleGraph(5, edges));
    const auto [it, fresh] = seen.emplace(key, edges);
    if (!fresh) {
      for (int k = 1; k <= 4; ++k) REQUIRE(oracle::colourings(5, it->second, k) == oracle::colourings(5, edges, k));
    }
  }
}

TEST_CASE("shared cache under concurrent use") {
  ChromaticCache cache;
  const auto all = all_permutations(6);
  std::vector<IntPolynomial> serial;
  for (const auto& w : all) serial.push_back(chromatic_polynomial(SimpleGraph(InversionGraph(w))));
  std::vector<IntPolynomial> parallel(all.size());
  std::vector<std::thread> workers;
  for (int k = 0; k < 4; ++k) {
    workers.emplace_back([&, k] {
      for (std::size_t i = static_cast<std::size_t>(k); i < all.size(); i += 4) {
        parallel[i] = chromatic_polynomial(SimpleGraph(InversionGraph(all[i])), cache);
      }
    });
  }
  for (auto& t : workers) t.join();
  CHECK(parallel == serial);
  CHECK(cache.size() > 0);
  CHECK(cache.hits() > 0);
}

TEST_CASE("smooth product formula") {
  CHECK(opy_chromatic(Permutation::identity(4)) == IntPolynomial::monomial(4));
  CHECK(opy_chromatic(Permutation::parse("4132")) == chromatic_polynomial(Permutation::parse("4132")));
  CHECK_THROWS_AS(opy_chromatic(Permutation::parse("3412")), std::domain_error);
  for_each_permutation(6, [](const Permutation& w) {
    if (is_smooth(w)) REQUIRE(opy_chromatic(w) == chromatic_polynomial(w));
  });
}

TEST_CASE("distance polynomial identity") {
  CHECK(distance_poly(Permutation::identity(3)) == IntPolynomial::constant(1));
  CHECK(chromatic_identity_holds(Permutation::identity(3)));
  const auto w = Permutation::parse("4132");
  CHECK(distance_poly(w).to_string("q") == "2q^3+5q^2+4q+1");
  CHECK(reciprocal_chromatic(chromatic_polynomial(w), 4) == distance_poly(w));
  CHECK_FALSE(chromatic_identity_holds(Permutation::parse("4231")));
  for_each_permutation(5, [](const Permutation& x) { REQUIRE(chromatic_identity_holds(x) == is_chromobruhatic(x)); });
}
