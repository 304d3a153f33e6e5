#pragma once

// Permutations of [n] in one-line notation, acting from the right.
//
// A permutation w is stored as its word 1w 2w ... nw.  Products follow the
// "first u, then w" convention: i(uw) = (iu)w.  Consequently a
// transposition multiplied on the left swaps two positions of the word,
// and on the right swaps two values.
//
// All positions and values on the public surface are 1-based.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace permlat {

class Permutation {
 public:
  static constexpr int kMaxSize = 12;

  Permutation() = default;  // the empty permutation, only useful as a placeholder

  // Throws std::invalid_argument unless word is a bijection on [n], 1 <= n <= kMaxSize.
  explicit Permutation(std::span<const int> word);
  Permutation(std::initializer_list<int> word);

  static Permutation identity(int n);
  static Permutation longest(int n);
  // The transposition (i j) as an element of S_n.
  static Permutation transposition(int n, int i, int j);
  // Parses "4132" (n <= 9) or "10,3,1,..." (comma separated, any n).
  static Permutation parse(std::string_view text);

  int size() const { return n_; }
  // iw for 1 <= i <= n.
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
  // The position holding value v, i.e. v w^{-1}.
  int position_of(int v) const;

  std::vector<int> word() const;
  bool is_identity() const;

  // Number of inversions, i.e. Coxeter length.
  int length() const;
  // True when (i, j), i < j, is an inversion.
  bool has_inversion(int i, int j) const { return (*this)(i) > (*this)(j); }

  // Same permutation with positions i and j exchanged: (i j) * this.
  Permutation swap_positions(int i, int j) const;
  // Same permutation with values a and b exchanged: this * (a b).
  Permutation swap_values(int a, int b) const;

  // Packs the word into 4 bits per letter; injective for a fixed n.
  std::uint64_t key() const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation&, const Permutation&) = default;

 private:
  int n_ = 0;
  std::array<std::int8_t, kMaxSize> word_{};
};

struct Transposition {
  int i = 0;
  int j = 0;

  Transposition() = default;
  // Throws std::invalid_argument unless 1 <= i < j.
  Transposition(int i, int j);

  Permutation as_permutation(int n) const { return Permutation::transposition(n, i, j); }
  std::string to_string() const;

  friend bool operator==(const Transposition&, const Transposition&) = default;
  friend auto operator<=>(const Transposition&, const Transposition&) = default;
};

// Word s_{a_1} ... s_{a_k} of adjacent transpositions s_a = (a a+1) in S_n.
struct ReducedExpression {
  int n = 0;
  std::vector<int> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  // "s1s2s3s2", or "e" for the empty word.
  std::string to_string() const;

  friend bool operator==(const ReducedExpression&, const ReducedExpression&) = default;
};

// Undirected graph on the rooks 1..n with an edge {i, j} for each inversion.
class InversionGraph {
 public:
  explicit InversionGraph(const Permutation& w);

  int vertex_count() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  // Neighbours of vertex v as a bitmask; bit (u - 1) is set for neighbour u.
  std::uint32_t neighbours(int v) const { return adjacency_[static_cast<std::size_t>(v - 1)]; }
  bool adjacent(int u, int v) const { return (neighbours(u) >> (v - 1)) & 1U; }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::uint32_t> adjacency_;
};

// i(uw) = (iu)w.  Throws std::invalid_argument on size mismatch.
Permutation compose(const Permutation& u, const Permutation& w);
inline Permutation operator*(const Permutation& u, const Permutation& w) { return compose(u, w); }

Permutation inverse(const Permutation& w);
// Transposing the rook diagram gives the inverse.
Permutation transpose(const Permutation& w);
// 180 degree rotation of the rook diagram: w0 w w0.
Permutation rotate(const Permutation& w);

// Pairs (i, j), i < j, with iw > jw, in lexicographic order.
std::vector<Transposition> inversions(const Permutation& w);

// Cycles in right-action notation, each starting at its minimum, sorted by
// minimum; fixed points omitted.
std::vector<std::vector<int>> cycles(const Permutation& w);
// "(1 4 2)" style; "e" for the identity.
std::string cycle_string(const Permutation& w);
// Product of cycles, leftmost applied first.
Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycle_list);

// Minimum number of transpositions with product w: n minus the number of cycles.
int absolute_length(const Permutation& w);

// Repeatedly strips the smallest descent position a of the running word
// (w = s_a * (s_a w)) and records s_a.
ReducedExpression reduced_expression(const Permutation& w);
// Every reduced expression of w, in lexicographic order of letter sequences.
std::vector<ReducedExpression> all_reduced_expressions(const Permutation& w);
// The product s_{a_1} ... s_{a_k}.
Permutation evaluate(const ReducedExpression& expr);

// t_i = s_{a_1} ... s_{a_{i-1}} s_{a_i} s_{a_{i-1}} ... s_{a_1}.
// Throws std::invalid_argument if two t_i coincide (expression not reduced).
std::vector<Transposition> reflection_sequence(const ReducedExpression& expr);

// Left-to-right maxima positions; position 1 is always a record.
std::vector<int> record_positions(const Permutation& w);
// e_i = #{r_i <= j < i : jw > iw} + #{r'_i <= k <= n : kw < iw}.
std::vector<int> opy_exponents(const Permutation& w);

// Removes the rook in the given row together with its row and column, then
// standardizes.  Requires n >= 2.
Permutation delete_rook(const Permutation& w, int row);

// Visits S_n in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit);
std::vector<Permutation> all_permutations(int n);
std::uint64_t factorial(int n);
// Index of w in the lexicographic order of S_n.
std::uint64_t lex_rank(const Permutation& w);
Permutation lex_unrank(int n, std::uint64_t rank);

}  // namespace permlat

template <>
struct std::hash<permlat::Permutation> {
  std::size_t operator()(const permlat::Permutation& w) const noexcept {
    return std::hash<std::uint64_t>{}(w.key() * 16 + static_cast<std::uint64_t>(w.size()));
  }
};
