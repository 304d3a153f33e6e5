#pragma once

// Bruhat order on S_n: three comparison criteria, lower intervals, the
// Bruhat graph with directed distances, and the weak orders.
//
// Rook diagrams: the rook of row i sits in column iw; row 1 is the top.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permlat/permutation.hpp"

namespace permlat {

// w[i, j] = #{m <= i : mw >= j}, for 1 <= i, j <= n.
class RankMatrix {
 public:
  explicit RankMatrix(const Permutation& w);

  int size() const { return n_; }
  int operator()(int i, int j) const {
    return counts_[static_cast<std::size_t>(i * (n_ + 2) + j)];
  }

 private:
  int n_;
  std::vector<int> counts_;
};

struct Square {
  int row = 0;
  int col = 0;
  friend bool operator==(const Square&, const Square&) = default;
  friend auto operator<=>(const Square&, const Square&) = default;
};

// Squares of the rook diagram of w with a rook weakly south-west and a rook
// weakly north-east.
class RightHull {
 public:
  explicit RightHull(const Permutation& w);

  int size() const { return n_; }
  bool contains(int row, int col) const { return (rows_[static_cast<std::size_t>(row - 1)] >> (col - 1)) & 1U; }
  // True when every rook of u lies in the hull.
  bool contains_rooks_of(const Permutation& u) const;
  // Bitmask of the hull squares in a row; bit (col - 1) for column col.
  std::uint32_t row_mask(int row) const { return rows_[static_cast<std::size_t>(row - 1)]; }
  std::vector<Square> squares() const;
  // One line per row, '#' for hull squares and '.' otherwise.
  std::string to_string() const;

  friend bool operator==(const RightHull&, const RightHull&) = default;

 private:
  int n_;
  std::vector<std::uint32_t> rows_;
};

enum class BruhatBackend {
  kRankMatrix,  // compare w[i, j] on all of [n]^2
  kBubbles,     // compare only at the bubbles of the upper element
  kRightHull,   // rook containment in the right hull; upper element must avoid the four patterns
};

// u <= w.  Throws std::invalid_argument on size mismatch, and
// std::domain_error if the hull backend is asked about a w that contains one
// of 4231, 35142, 42513, 351624.
bool bruhat_leq(const Permutation& u, const Permutation& w,
                BruhatBackend backend = BruhatBackend::kRankMatrix);

// Squares with a rook strictly left in the same row and strictly below in the
// same column, in row-major order.
std::vector<Square> bubbles(const Permutation& w);

// Permanent of the 0/1 matrix whose row i is row_masks[i] (bit j = column j),
// by Ryser's formula over a Gray code.
std::uint64_t permanent(const std::vector<std::uint32_t>& row_masks);

// Number of permutation matrices inside the right hull of w.
std::uint64_t hull_permanent(const Permutation& w);

// [e, w] in lexicographic order, by filtering S_n with the rank matrix;
// prefixes that already violate it are cut off.
std::vector<Permutation> interval(const Permutation& w);
// |[e, w]| by the same filter.
std::uint64_t interval_size_by_filter(const Permutation& w);
// |[e, w]|: hull permanent when w avoids the four patterns, filter otherwise.
std::uint64_t interval_size(const Permutation& w);

// Directed Bruhat graph on [e, w]: x -> tx whenever l(x) < l(tx).
struct BruhatGraph {
  struct Edge {
    std::size_t from = 0;  // index into vertices
    std::size_t to = 0;
    Transposition t;
  };
  std::vector<Permutation> vertices;  // lexicographic
  std::vector<Edge> edges;            // sorted by (from, to)

  std::size_t index_of(const Permutation& x) const;
};
BruhatGraph bruhat_graph(const Permutation& w);

// Every u <= w paired with al(u, w), the length of a shortest directed path
// u -> ... -> w.  Sorted lexicographically by u.
std::vector<std::pair<Permutation, int>> directed_distances(const Permutation& w);
// al(u, w); throws std::invalid_argument when u is not below w.
int directed_distance(const Permutation& u, const Permutation& w);

// INV(u) subset of INV(w).
bool weak_leq_right(const Permutation& u, const Permutation& w);
// INV(u^-1) subset of INV(w^-1).
bool weak_leq_left(const Permutation& u, const Permutation& w);
// Elements covered by w in the left or right weak order, lexicographic.
std::vector<Permutation> two_sided_weak_covers(const Permutation& w);
// A chain w = x_0 > x_1 > ... > x_l = e of two-sided weak covers with
// keep(x_k) for all k, or nullopt if none exists.
std::optional<std::vector<Permutation>> saturated_weak_chain(
    const Permutation& w, const std::function<bool(const Permutation&)>& keep);

}  // namespace permlat
