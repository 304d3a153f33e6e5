#pragma once

// The intersection lattice of an inversion arrangement.
//
// In type A a flat of the arrangement {x_i = x_j : (i, j) an inversion} is
// a set partition of [n] whose blocks induce connected subgraphs of the
// inversion graph (the bond lattice).  The rank of a flat is its
// codimension, n minus the number of blocks.
//
// Hyperplanes carry indices 1..k in the order of the reflection sequence of
// a reduced expression, and are ordered H_1 > H_2 > ... > H_k.  A cover
// A < B is labelled by the smallest hyperplane below B and not below A,
// i.e. the LARGEST qualifying index.  A chain is decreasing when its labels
// strictly decrease in hyperplane order, i.e. its label indices strictly
// increase.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permlat/permutation.hpp"

namespace permlat {

class SetPartition {
 public:
  SetPartition() = default;
  // block_of[i] names the block of element i + 1; any labels, canonicalized
  // so blocks are numbered by their minimum element.
  explicit SetPartition(std::span<const int> block_of);

  static SetPartition discrete(int n);
  static SetPartition full(int n);
  // "134|2" (n <= 9) or "1,3,4|2" style for larger n.
  static SetPartition parse(std::string_view text);

  int size() const { return n_; }
  int block_count() const { return blocks_; }
  int rank() const { return n_ - blocks_; }
  bool same_block(int i, int j) const { return label(i) == label(j); }
  // Join with the atom merging i and j.
  SetPartition merged(int i, int j) const;
  // Every block of *this lies inside a block of coarser.
  bool refines(const SetPartition& coarser) const;
  // Blocks sorted by minimum, each sorted.
  std::vector<std::vector<int>> blocks() const;
  std::uint64_t key() const;
  std::string to_string() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  // Rank first, then the restricted growth string.
  friend std::strong_ordering operator<=>(const SetPartition& a, const SetPartition& b);

 private:
  int label(int i) const { return rgs_[static_cast<std::size_t>(i - 1)]; }

  int n_ = 0;
  int blocks_ = 0;
  std::array<std::int8_t, Permutation::kMaxSize> rgs_{};
};

struct Cover {
  std::size_t lower = 0;
  std::size_t upper = 0;
  int label = 0;  // hyperplane index in 1..k
};

class IntersectionLattice {
 public:
  // Throws std::invalid_argument if expr is not a reduced expression of w.
  IntersectionLattice(const Permutation& w, const ReducedExpression& expr);

  const Permutation& permutation() const { return w_; }
  const ReducedExpression& expression() const { return expr_; }
  // hyperplanes()[h - 1] is the transposition t_h of H_h.
  const std::vector<Transposition>& hyperplanes() const { return hyperplanes_; }

  // Sorted by rank, then restricted growth string; element 0 is the bottom.
  const std::vector<SetPartition>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t bottom() const { return 0; }
  std::size_t top() const { return elements_.size() - 1; }
  std::size_t index_of(const SetPartition& x) const;
  int rank(std::size_t element) const { return elements_[element].rank(); }
  int max_rank() const { return elements_.back().rank(); }
  bool leq(std::size_t a, std::size_t b) const { return elements_[a].refines(elements_[b]); }

  // Sorted by (lower, label).
  const std::vector<Cover>& covers() const { return covers_; }
  // Indices into covers() of the covers going up from element.
  const std::vector<std::size_t>& upper_covers(std::size_t element) const { return up_[element]; }

 private:
  Permutation w_;
  ReducedExpression expr_;
  std::vector<Transposition> hyperplanes_;
  std::vector<SetPartition> elements_;
  std::vector<Cover> covers_;
  std::vector<std::vector<std::size_t>> up_;
};

IntersectionLattice build_lattice(const Permutation& w, const ReducedExpression& expr);
// Uses reduced_expression(w).
IntersectionLattice build_lattice(const Permutation& w);

struct DecreasingChain {
  std::vector<std::size_t> elements;  // starts at the bottom
  std::vector<int> labels;            // strictly increasing indices

  std::size_t length() const { return labels.size(); }
  std::size_t top() const { return elements.back(); }
  // "t1t2t4"; "e" for the empty chain.
  std::string label_word() const;
};

// All decreasing saturated chains from the bottom, including the trivial
// chain, in lexicographic order of label words.
std::vector<DecreasingChain> decreasing_chains(const IntersectionLattice& lattice);

// mu(0, X) by the recursion mu(0, X) = -sum_{Y < X} mu(0, Y).
std::vector<std::int64_t> mobius_by_recursion(const IntersectionLattice& lattice);
// Number of decreasing chains ending at each element.
std::vector<std::uint64_t> mobius_by_chains(const IntersectionLattice& lattice);
// |mu(0, X)| per element, computed both ways.  Throws std::logic_error if
// the two disagree.
std::vector<std::uint64_t> mobius_values(const IntersectionLattice& lattice);

// beta^i = sum of |mu(0, X)| over rank-i elements, i = 0..max rank.
std::vector<std::uint64_t> betti_numbers(const IntersectionLattice& lattice);

// Number of regions of the inversion arrangement of w.
std::uint64_t region_count(const Permutation& w);

}  // namespace permlat
