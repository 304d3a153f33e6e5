#pragma once

// Classical pattern containment, the chromobruhatic and smooth classes,
// reduction pairs and the witnesses below non-avoiding permutations.

#include <optional>
#include <string>
#include <vector>

#include "permlat/permutation.hpp"

namespace permlat {

struct PatternClass {
  std::string name;
  std::vector<Permutation> patterns;
};

// {4231, 35142, 42513, 351624}
const PatternClass& chromobruhatic_patterns();
// {3412, 4231}
const PatternClass& smooth_patterns();

// Positions i_1 < ... < i_m of the lexicographically first occurrence of p in w.
std::optional<std::vector<int>> find_occurrence(const Permutation& w, const Permutation& p);
// True iff some subsequence of w is order-isomorphic to p.  A pattern longer
// than w is never contained.
bool contains(const Permutation& w, const Permutation& p);
bool avoids(const Permutation& w, const PatternClass& cls);

bool is_chromobruhatic(const Permutation& w);
bool is_smooth(const Permutation& w);

struct Rook {
  int row = 0;
  int col = 0;
  friend bool operator==(const Rook&, const Rook&) = default;
};

enum class PairKind { kLight, kHeavy };

// A descent x, y: y is the rook directly above x (y.row = x.row - 1) and
// lies to its right (x.col < y.col).
struct ReductionPair {
  PairKind kind = PairKind::kLight;
  Rook x;
  Rook y;
};

// The rook pair at descent row `row` (x in that row, y in the row above).
// Throws std::invalid_argument if row is not a descent of w.
std::pair<Rook, Rook> descent_pair(const Permutation& w, int row);
// First descent: x.row = min{i : iw < (i-1)w}.
std::optional<std::pair<Rook, Rook>> first_descent(const Permutation& w);

bool is_light_pair(const Permutation& w, const Rook& x, const Rook& y);
bool is_heavy_pair(const Permutation& w, const Rook& x, const Rook& y);
// The column-split form of the third heavy condition: some x.col <= j < y.col
// with [1, y.row-1] x [x.col+1, j] and [x.row+1, n] x [j+1, y.col-1] rook-free.
bool heavy_split_exists(const Permutation& w, const Rook& x, const Rook& y);

enum class ReductionTarget { kSelf, kInverse, kRotate, kRotateInverse };
std::string to_string(ReductionTarget target);
std::string to_string(PairKind kind);

struct ReductionPairMatch {
  ReductionTarget target = ReductionTarget::kSelf;
  Permutation permutation;  // the image of w the pair lives in
  ReductionPair pair;
};

// Looks at the first descents of w and w^-1, their 180 degree rotations,
// and the first descents of the rotated images.  A light pair anywhere wins;
// a heavy pair is reported only when the same rooks are not light in either
// orientation.  For every non-identity chromobruhatic w a pair exists.
std::optional<ReductionPairMatch> find_reduction_pair(const Permutation& w);

struct ReductionStep {
  Permutation rho;                      // rows y.row and x.row exchanged
  Permutation minus_y;                  // pi - y
  std::optional<Permutation> minus_x;   // heavy only
  std::optional<Permutation> minus_xy;  // heavy only; nullopt when n == 2
};

// Throws std::invalid_argument unless pair is a reduction pair of its kind in w.
ReductionStep reduction_step(const Permutation& w, const ReductionPair& pair);

struct Witness {
  Permutation u;
  Permutation pattern;
  std::vector<int> positions;  // n_1 < ... < n_m
  Permutation product;         // u w^-1, a product of disjoint cycles
};

// For w containing one of the four patterns, an element u < w whose
// u w^-1 is not a product of l'(u w^-1) inversions of w.  Patterns are tried
// in the order 4231, 35142, 42513, 351624; the first occurrence is used.
std::optional<Witness> witness_below(const Permutation& w);

}  // namespace permlat
