#pragma once

// The map from decreasing chains of the intersection lattice into the lower
// Bruhat interval: a chain with labels j_1 < ... < j_m goes to
// p(C) w = t_{j_1} ... t_{j_m} w.

#include <cstdint>
#include <vector>

#include "permlat/arrangement.hpp"
#include "permlat/permutation.hpp"

namespace permlat {

struct PhiImage {
  DecreasingChain chain;
  Permutation product;  // p(C)
  Permutation image;    // p(C) w
  // The letters of the reduced expression that survive after deleting
  // positions j_1..j_m; evaluates to image.
  ReducedExpression subword;
};

// Throws std::invalid_argument if chain is not a decreasing chain of
// lattice, and std::logic_error if check_invariants is set and the image is
// not below w, l'(p(C)) != m, or the cycles of p(C) differ from the blocks
// of the chain's top flat.
PhiImage phi(const IntersectionLattice& lattice, const DecreasingChain& chain, bool check_invariants = true);

// phi on every decreasing chain, in decreasing_chains() order.
std::vector<PhiImage> phi_table(const IntersectionLattice& lattice, bool check_invariants = true);

// No two chains share an image.
bool verify_injective(const IntersectionLattice& lattice);
bool verify_injective(const Permutation& w, const ReducedExpression& expr);

struct SurjectivityReport {
  bool surjective = false;
  std::vector<Permutation> missed;  // [e, w] minus the image, lexicographic
  std::uint64_t missed_even = 0;    // missed elements of even length
  std::uint64_t missed_odd = 0;
};
SurjectivityReport verify_surjective(const IntersectionLattice& lattice, bool check_invariants = true);
SurjectivityReport verify_surjective(const Permutation& w, const ReducedExpression& expr);

// For every chain, t_{j_i} ... t_{j_m} w < t_{j_{i+1}} ... t_{j_m} w strictly
// for all i, and al(phi(C), w) <= m.
bool verify_going_down(const IntersectionLattice& lattice);
bool verify_going_down(const Permutation& w, const ReducedExpression& expr);

// The walk w -> t_{j_m} w -> ... -> p(C) w, starting at w.
std::vector<Permutation> going_down_walk(const IntersectionLattice& lattice, const DecreasingChain& chain);

// (for all u < w: l'(u w^-1) = al(u, w)) holds exactly when w avoids the four
// patterns.
bool distances_match_absolute_length(const Permutation& w);
bool verify_characterization(const Permutation& w);

}  // namespace permlat
