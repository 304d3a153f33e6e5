#include <doctest.h>

#include <stdexcept>

#include "permlat/bruhat.hpp"
#include "permlat/patterns.hpp"
#include "permlat/phi.hpp"

using namespace permlat;

TEST_CASE("phi on 4132") {
  const auto l = build_lattice(Permutation::parse("4132"));
  const auto table = phi_table(l);
  REQUIRE(table.size() == 12);
  CHECK(table.front().image == Permutation::parse("4132"));
  CHECK(table.front().product.is_identity());
  const std::vector<std::string> images{"4132", "1432", "1342", "1243", "1234", "1324",
                                        "1423", "3142", "2143", "2134", "3124", "4123"};
  for (std::size_t k = 0; k < table.size(); ++k) CHECK(table[k].image.to_string() == images[k]);
  CHECK(table[3].chain.label_word() == "t1t2t4");
  CHECK(table[3].image == Permutation::parse("1243"));
  CHECK(evaluate(table[3].subword) == Permutation::parse("1243"));
}

TEST_CASE("phi rejects foreign chains") {
  const auto l = build_lattice(Permutation::parse("4132"));
  DecreasingChain bad{{0, 2, 1}, {2, 1}};
  CHECK_THROWS_AS(phi(l, bad), std::invalid_argument);
  DecreasingChain wrong_label{{0, 1}, {3}};
  CHECK_THROWS_AS(phi(l, wrong_label), std::invalid_argument);
}

TEST_CASE("identity") {
  const auto l = build_lattice(Permutation::identity(3));
  CHECK(verify_injective(l));
  CHECK(verify_surjective(l).surjective);
  CHECK(verify_going_down(l));
  CHECK(verify_characterization(Permutation::identity(3)));
}

TEST_CASE("4231 misses an even split") {
  const auto w = Permutation::parse("4231");
  const auto l = build_lattice(w);
  CHECK(verify_injective(l));
  const auto s = verify_surjective(l);
  CHECK_FALSE(s.surjective);
  CHECK(s.missed.size() == 2);
  CHECK(s.missed_even == s.missed_odd);
  CHECK(phi_table(l).size() == 18);
  CHECK_FALSE(distances_match_absolute_length(w));
  CHECK(verify_characterization(w));
}

TEST_CASE("length drops by at least the chain length with matching parity") {
  for_each_permutation(5, [](const Permutation& w) {
    for (const auto& img : phi_table(build_lattice(w))) {
      const int drop = w.length() - img.image.length();
      const int m = static_cast<int>(img.chain.length());
      REQUIRE(drop >= m);
      REQUIRE((drop - m) % 2 == 0);
    }
  });
}

TEST_CASE("theorems over S5") {
  for_each_permutation(5, [](const Permutation& w) {
    const auto l = build_lattice(w);
    REQUIRE(verify_injective(l));
    REQUIRE(verify_surjective(l).surjective == is_chromobruhatic(w));
    REQUIRE(verify_going_down(l));
    REQUIRE(verify_characterization(w));
  });
}

TEST_CASE("injective for every reduced expression in S4") {
  for_each_permutation(4, [](const Permutation& w) {
    for (const auto& e : all_reduced_expressions(w)) REQUIRE(verify_injective(w, e));
  });
}

TEST_CASE("going-down walk of 4132 is a directed path") {
  const auto l = build_lattice(Permutation::parse("4132"));
  for (const auto& c : decreasing_chains(l)) {
    const auto walk = going_down_walk(l, c);
    CHECK(walk.size() == c.length() + 1);
    for (std::size_t k = 1; k < walk.size(); ++k) {
      CHECK(bruhat_leq(walk[k], walk[k - 1]));
      CHECK(walk[k].length() < walk[k - 1].length());
    }
  }
}
