#include <doctest.h>

#include <map>
#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "permlat/bruhat.hpp"
#include "permlat/patterns.hpp"

using namespace permlat;

TEST_CASE("rank matrix") {
  const auto w = Permutation::parse("4132");
  RankMatrix r(w);
  CHECK(r(4, 1) == 4);
  CHECK(r(1, 4) == 1);
  CHECK(r(2, 2) == 1);
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j < 4; ++j) CHECK(r(i, j) >= r(i, j + 1));
  }
}

TEST_CASE("bruhat_leq basics") {
  const auto e = Permutation::identity(4);
  for_each_permutation(4, [&](const Permutation& w) { REQUIRE(bruhat_leq(e, w)); });
  CHECK(bruhat_leq(Permutation::parse("1324"), Permutation::parse("4231")));
  CHECK_FALSE(bruhat_leq(Permutation::parse("4231"), Permutation::parse("1324")));
  CHECK_THROWS_AS(bruhat_leq(e, Permutation::identity(3)), std::invalid_argument);
  CHECK_THROWS_AS(bruhat_leq(e, Permutation::parse("4231"), BruhatBackend::kRightHull), std::domain_error);
}

TEST_CASE("rank matrix agrees with the subword property on S5") {
  for_each_permutation(5, [](const Permutation& w) {
    const auto below = oracle::interval_by_subwords(w, reduced_expression(w).letters);
    for_each_permutation(5, [&](const Permutation& u) {
      REQUIRE(bruhat_leq(u, w) == (below.count(u.word()) == 1));
    });
  });
}

TEST_CASE("three backends agree") {
  for (int n = 1; n <= 6; ++n) {
    const auto all = all_permutations(n);
    for (const auto& w : all) {
      const bool hull = is_chromobruhatic(w);
      for (const auto& u : all) {
        const bool r = bruhat_leq(u, w);
        REQUIRE(bruhat_leq(u, w, BruhatBackend::kBubbles) == r);
        if (hull) REQUIRE(bruhat_leq(u, w, BruhatBackend::kRightHull) == r);
        if (r) REQUIRE((u.length() < w.length() || u == w));
      }
    }
  }
}

TEST_CASE("bubbles") {
  // every square above the diagonal of the identity is a bubble, which is
  // what pins u <= e to u = e
  const auto id = bubbles(Permutation::identity(4));
  CHECK(id.size() == 6);
  for (const auto& b : id) CHECK(b.row < b.col);
  CHECK(bubbles(Permutation::longest(4)).empty());
  const std::vector<Square> expected{{2, 2}, {2, 3}};
  CHECK(bubbles(Permutation::parse("4132")) == expected);
}

TEST_CASE("right hull") {
  RightHull id(Permutation::identity(4));
  CHECK(id.squares().size() == 4);
  for (int i = 1; i <= 4; ++i) CHECK(id.contains(i, i));
  CHECK(RightHull(Permutation::parse("35124")).to_string() ==
        "###..\n"
        "#####\n"
        "#####\n"
        ".####\n"
        "...##\n");
  for_each_permutation(5, [](const Permutation& w) {
    RightHull h(w);
    RightHull r(rotate(w));
    for (int i = 1; i <= 5; ++i) {
      REQUIRE(h.contains(i, w(i)));
      for (int j = 1; j <= 5; ++j) REQUIRE(h.contains(i, j) == r.contains(6 - i, 6 - j));
    }
  });
}

TEST_CASE("permanent") {
  CHECK(permanent({0b1}) == 1);
  CHECK(permanent({0b11, 0b11}) == 2);
  CHECK(permanent({0b111, 0b111, 0b111}) == 6);
  CHECK(permanent({0b01, 0b01}) == 0);
  std::vector<std::uint32_t> rows{0b10110, 0b11101, 0b01111, 0b11010, 0b10011};
  CHECK(permanent(rows) == oracle::permanent_brute(rows));
}

TEST_CASE("interval sizes") {
  CHECK(interval_size(Permutation::identity(5)) == 1);
  CHECK(interval_size(Permutation::parse("4132")) == 12);
  CHECK(interval_size(Permutation::parse("4231")) == 20);
  CHECK(interval_size(Permutation::longest(5)) == 120);
  for (int n = 1; n <= 6; ++n) {
    for_each_permutation(n, [](const Permutation& w) {
      if (!is_chromobruhatic(w)) return;
      REQUIRE(hull_permanent(w) == interval_size_by_filter(w));
    });
  }
  for_each_permutation(6, [](const Permutation& w) {
    const auto br = interval_size(w);
    REQUIRE(br == interval_size(inverse(w)));
    REQUIRE(br == interval_size(rotate(w)));
  });
}

TEST_CASE("directed distances") {
  const auto w = Permutation::parse("4132");
  CHECK(directed_distance(w, w) == 0);
  std::map<int, int> histogram;
  for (const auto& [u, d] : directed_distances(w)) ++histogram[d];
  CHECK(histogram == std::map<int, int>{{0, 1}, {1, 4}, {2, 5}, {3, 2}});

  // the pair from the 4231 case: two inversions do not suffice, parity forces 4
  const auto v = Permutation::parse("4231");
  const auto u = Permutation::parse("1324");
  CHECK(absolute_length(u * inverse(v)) == 2);
  CHECK(directed_distance(u, v) == 4);
  CHECK(oracle::unrestricted_distance(u, v) == 4);
  CHECK_THROWS_AS(directed_distance(v, u), std::invalid_argument);

  for_each_permutation(5, [](const Permutation& x) {
    for (const auto& [y, d] : directed_distances(x)) {
      REQUIRE((x.length() - y.length() - d) % 2 == 0);
      REQUIRE(d >= absolute_length(y * inverse(x)));
    }
  });
}

TEST_CASE("restricted distance equals unrestricted distance on S4") {
  for_each_permutation(4, [](const Permutation& w) {
    for (const auto& [u, d] : directed_distances(w)) REQUIRE(oracle::unrestricted_distance(u, w) == d);
  });
}

TEST_CASE("bruhat graph edges") {
  const auto g = bruhat_graph(Permutation::parse("4132"));
  CHECK(g.vertices.size() == 12);
  for (const auto& e : g.edges) {
    const auto& x = g.vertices[e.from];
    const auto& y = g.vertices[e.to];
    CHECK(y == x.swap_positions(e.t.i, e.t.j));
    CHECK((y.length() - x.length()) % 2 == 1);
  }
}

TEST_CASE("weak orders") {
  for_each_permutation(4, [](const Permutation& w) {
    REQUIRE(weak_leq_right(Permutation::identity(4), w));
    REQUIRE(weak_leq_left(Permutation::identity(4), w));
  });
  for_each_permutation(5, [](const Permutation& w) {
    for_each_permutation(5, [&](const Permutation& u) {
      if (weak_leq_right(u, w)) REQUIRE(bruhat_leq(u, w));
      if (weak_leq_left(u, w)) REQUIRE(bruhat_leq(u, w));
    });
  });
  for (const auto& c : two_sided_weak_covers(Permutation::parse("4132"))) {
    CHECK(c.length() == 3);
  }
  for_each_permutation(5, [](const Permutation& w) {
    if (w.is_identity() || !is_chromobruhatic(w)) return;
    const auto chain = saturated_weak_chain(w, [](const Permutation& x) { return is_chromobruhatic(x); });
    REQUIRE(chain.has_value());
    REQUIRE(chain->front() == w);
    REQUIRE(chain->back().is_identity());
    REQUIRE(static_cast<int>(chain->size()) == w.length() + 1);
  });
}

TEST_CASE("interval equals the plain filter") {
  for_each_permutation(5, [](const Permutation& w) {
    std::vector<Permutation> plain;
    for_each_permutation(5, [&](const Permutation& u) {
      if (bruhat_leq(u, w)) plain.push_back(u);
    });
    REQUIRE(interval(w) == plain);
  });
}
