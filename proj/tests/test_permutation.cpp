#include <doctest.h>

#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "permlat/permutation.hpp"

using namespace permlat;

TEST_CASE("parse and print") {
  CHECK(Permutation::parse("4132").to_string() == "4132");
  CHECK(Permutation::parse("4132") == Permutation{4, 1, 3, 2});
  const auto big = Permutation::parse("10,3,1,2,4,5,6,7,8,9");
  CHECK(big.size() == 10);
  CHECK(big(1) == 10);
  CHECK(big.to_string() == "10,3,1,2,4,5,6,7,8,9");
  CHECK_THROWS_AS(Permutation::parse("4133"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("41x2"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Transposition(3, 3), std::invalid_argument);
}

TEST_CASE("compose follows first u then w") {
  const auto w = Permutation::parse("4132");
  CHECK(compose(Permutation::identity(4), w) == w);
  CHECK(compose(w, inverse(w)).is_identity());
  CHECK(compose(Permutation::parse("2134"), w) == Permutation::parse("1432"));
  CHECK_THROWS_AS(compose(w, Permutation::identity(3)), std::invalid_argument);
  // left multiplication by a transposition swaps positions
  CHECK(Permutation::transposition(4, 1, 3) * w == w.swap_positions(1, 3));
  CHECK(w * Permutation::transposition(4, 1, 3) == w.swap_values(1, 3));
}

TEST_CASE("inverse, transpose, rotate") {
  CHECK(rotate(Permutation::identity(4)).is_identity());
  const auto w = Permutation::parse("4132");
  const auto w0 = Permutation::longest(4);
  CHECK(rotate(w) == w0 * w * w0);
  CHECK(rotate(w) == Permutation::parse("3241"));
  CHECK(transpose(Permutation::parse("35124")) == inverse(Permutation::parse("35124")));
  CHECK(inverse(Permutation::parse("35124")) == Permutation::parse("34152"));
  for_each_permutation(6, [](const Permutation& x) {
    REQUIRE(transpose(transpose(x)) == x);
    REQUIRE(rotate(rotate(x)) == x);
  });
}

TEST_CASE("inversions") {
  CHECK(inversions(Permutation::identity(4)).empty());
  const std::vector<Transposition> expected{{1, 2}, {1, 3}, {1, 4}, {3, 4}};
  CHECK(inversions(Permutation::parse("4132")) == expected);
  CHECK(inversions(Permutation::longest(4)).size() == 6);
  InversionGraph g(Permutation::parse("4132"));
  CHECK(g.edges().size() == 4);
  CHECK(g.adjacent(3, 4));
  CHECK_FALSE(g.adjacent(2, 3));
}

TEST_CASE("cycles and absolute length") {
  CHECK(absolute_length(Permutation::identity(4)) == 0);
  const auto w = Permutation::parse("4132");
  CHECK(cycle_string(w) == "(1 4 2)");
  CHECK(absolute_length(w) == 2);
  CHECK(absolute_length(w) == oracle::absolute_length_bfs(w));
  const auto x = from_cycles(4, {{1, 4}, {2, 3}});
  CHECK(x == Permutation::parse("4321"));
  CHECK(absolute_length(x) == 2);
  CHECK(from_cycles(4, {{1, 2}, {2, 3}}) == Permutation::transposition(4, 1, 2) * Permutation::transposition(4, 2, 3));
  for_each_permutation(5, [](const Permutation& y) {
    REQUIRE(absolute_length(y) == oracle::absolute_length_bfs(y));
    REQUIRE(from_cycles(5, cycles(y)) == y);
  });
  for_each_permutation(6, [](const Permutation& y) { REQUIRE(absolute_length(y) <= y.length()); });
}

TEST_CASE("reduced expressions") {
  CHECK(reduced_expression(Permutation::identity(4)).empty());
  CHECK(reduced_expression(Permutation::identity(4)).to_string() == "e");
  CHECK(reduced_expression(Permutation::parse("4132")).to_string() == "s1s2s3s2");
  for_each_permutation(5, [](const Permutation& w) {
    const auto expr = reduced_expression(w);
    REQUIRE(evaluate(expr) == w);
    REQUIRE(static_cast<int>(expr.size()) == w.length());
  });
  const auto all = all_reduced_expressions(Permutation::parse("4132"));
  CHECK(all.size() == 3);
  for (const auto& e : all) CHECK(evaluate(e) == Permutation::parse("4132"));
  CHECK(all_reduced_expressions(Permutation::longest(4)).size() == 16);
}

TEST_CASE("reflection sequence") {
  const auto seq = reflection_sequence(reduced_expression(Permutation::parse("4132")));
  const std::vector<Transposition> expected{{1, 2}, {1, 3}, {1, 4}, {3, 4}};
  CHECK(seq == expected);
  CHECK(reflection_sequence(ReducedExpression{4, {}}).empty());
  CHECK_THROWS_AS(reflection_sequence(ReducedExpression{4, {1, 1}}), std::invalid_argument);
  for_each_permutation(6, [](const Permutation& w) {
    const auto t = reflection_sequence(reduced_expression(w));
    const std::set<Transposition> distinct(t.begin(), t.end());
    REQUIRE(distinct.size() == t.size());
    const auto inv = inversions(w);
    REQUIRE(distinct == std::set<Transposition>(inv.begin(), inv.end()));
  });
}

TEST_CASE("records and exponents") {
  CHECK(opy_exponents(Permutation::identity(4)) == std::vector<int>{0, 0, 0, 0});
  auto e = opy_exponents(Permutation::parse("4132"));
  std::sort(e.begin(), e.end());
  CHECK(e == std::vector<int>{0, 1, 1, 2});
  // 5 at position 2 is the running maximum, so 35124 has records 1 and 2 only
  CHECK(record_positions(Permutation::parse("35124")) == std::vector<int>{1, 2});
  for_each_permutation(6, [](const Permutation& w) {
    REQUIRE(record_positions(w) == oracle::records_by_prefix_max(w));
  });
}

TEST_CASE("delete_rook standardizes") {
  CHECK(delete_rook(Permutation::parse("4132"), 1) == Permutation::parse("132"));
  CHECK(delete_rook(Permutation::parse("4132"), 3) == Permutation::parse("312"));
}

TEST_CASE("lexicographic ranking") {
  CHECK(factorial(7) == 5040);
  std::uint64_t k = 0;
  for_each_permutation(5, [&](const Permutation& w) {
    REQUIRE(lex_rank(w) == k);
    REQUIRE(lex_unrank(5, k) == w);
    ++k;
  });
  CHECK(k == 120);
}
