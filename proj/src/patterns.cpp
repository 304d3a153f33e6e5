#include "permlat/patterns.hpp"

#include <algorithm>
#include <stdexcept>

namespace permlat {

namespace {

struct Matcher {
  const Permutation& w;
  const Permutation& p;
  std::vector<int> positions;

  bool extend(int next_position) {
    const int k = static_cast<int>(positions.size()) + 1;  // pattern letter being placed
    const int m = p.size();
    if (k > m) return true;
    // Value window implied by the letters already placed.
    int low = 0;
    int high = w.size() + 1;
    for (int l = 1; l < k; ++l) {
      const int placed = w(positions[static_cast<std::size_t>(l - 1)]);
      if (p(l) < p(k)) {
        low = std::max(low, placed);
      } else {
        high = std::min(high, placed);
      }
    }
    if (low >= high) return false;
    for (int pos = next_position; pos <= w.size() - (m - k); ++pos) {
      const int v = w(pos);
      if (v <= low || v >= high) continue;
      positions.push_back(pos);
      if (extend(pos + 1)) return true;
      positions.pop_back();
    }
    return false;
  }
};

PatternClass make_class(std::string name, std::initializer_list<const char*> words) {
  PatternClass cls{std::move(name), {}};
  for (const char* text : words) cls.patterns.push_back(Permutation::parse(text));
  return cls;
}

bool rook_in(const Permutation& w, int row_lo, int row_hi, int col_lo, int col_hi) {
  for (int r = std::max(row_lo, 1); r <= std::min(row_hi, w.size()); ++r) {
    if (w(r) >= col_lo && w(r) <= col_hi) return true;
  }
  return false;
}

bool is_descent_shape(const Permutation& w, const Rook& x, const Rook& y) {
  return x.row >= 2 && x.row <= w.size() && y.row == x.row - 1 && w(x.row) == x.col &&
         w(y.row) == y.col && x.col < y.col;
}

// The same two rooks after a 180 degree rotation: the old y becomes the
// lower rook of the descent.
std::pair<Rook, Rook> rotated(int n, const Rook& x, const Rook& y) {
  return {Rook{n + 1 - y.row, n + 1 - y.col}, Rook{n + 1 - x.row, n + 1 - x.col}};
}

}  // namespace

const PatternClass& chromobruhatic_patterns() {
  static const PatternClass cls = make_class("chromobruhatic", {"4231", "35142", "42513", "351624"});
  return cls;
}

const PatternClass& smooth_patterns() {
  static const PatternClass cls = make_class("smooth", {"3412", "4231"});
  return cls;
}

std::optional<std::vector<int>> find_occurrence(const Permutation& w, const Permutation& p) {
  if (p.size() > w.size()) return std::nullopt;
  Matcher matcher{w, p, {}};
  if (matcher.extend(1)) return matcher.positions;
  return std::nullopt;
}

bool contains(const Permutation& w, const Permutation& p) { return find_occurrence(w, p).has_value(); }

bool avoids(const Permutation& w, const PatternClass& cls) {
  for (const Permutation& p : cls.patterns) {
    if (contains(w, p)) return false;
  }
  return true;
}

bool is_chromobruhatic(const Permutation& w) { return avoids(w, chromobruhatic_patterns()); }

bool is_smooth(const Permutation& w) { return avoids(w, smooth_patterns()); }

std::pair<Rook, Rook> descent_pair(const Permutation& w, int row) {
  if (row < 2 || row > w.size() || w(row) > w(row - 1)) {
    throw std::invalid_argument("row " + std::to_string(row) + " is not a descent of " + w.to_string());
  }
  return {Rook{row, w(row)}, Rook{row - 1, w(row - 1)}};
}

std::optional<std::pair<Rook, Rook>> first_descent(const Permutation& w) {
  for (int i = 2; i <= w.size(); ++i) {
    if (w(i) < w(i - 1)) return descent_pair(w, i);
  }
  return std::nullopt;
}

bool is_light_pair(const Permutation& w, const Rook& x, const Rook& y) {
  if (!is_descent_shape(w, x, y)) return false;
  const int n = w.size();
  if (rook_in(w, 1, y.row - 1, y.col + 1, n)) return false;
  if (rook_in(w, x.row + 1, n, x.col + 1, y.col - 1)) return false;
  return true;
}

bool is_heavy_pair(const Permutation& w, const Rook& x, const Rook& y) {
  if (!is_descent_shape(w, x, y)) return false;
  const int n = w.size();
  if (rook_in(w, x.row + 1, n, 1, x.col - 1)) return false;
  if (rook_in(w, 1, y.row - 1, y.col + 1, n)) return false;
  for (int a_row = 1; a_row < y.row; ++a_row) {
    const int a_col = w(a_row);
    if (a_col <= x.col || a_col >= y.col) continue;
    for (int b_row = x.row + 1; b_row <= n; ++b_row) {
      const int b_col = w(b_row);
      if (b_col > a_col && b_col < y.col) return false;
    }
  }
  return true;
}

bool heavy_split_exists(const Permutation& w, const Rook& x, const Rook& y) {
  const int n = w.size();
  for (int j = x.col; j < y.col; ++j) {
    if (!rook_in(w, 1, y.row - 1, x.col + 1, j) && !rook_in(w, x.row + 1, n, j + 1, y.col - 1)) {
      return true;
    }
  }
  return false;
}

std::string to_string(ReductionTarget target) {
  switch (target) {
    case ReductionTarget::kSelf:
      return "w";
    case ReductionTarget::kInverse:
      return "w^-1";
    case ReductionTarget::kRotate:
      return "rot(w)";
    case ReductionTarget::kRotateInverse:
      return "rot(w)^-1";
  }
  return "?";
}

std::string to_string(PairKind kind) { return kind == PairKind::kLight ? "light" : "heavy"; }

std::optional<ReductionPairMatch> find_reduction_pair(const Permutation& w) {
  if (w.is_identity()) return std::nullopt;
  const int n = w.size();
  struct Candidate {
    ReductionTarget target;
    Permutation image;
    Rook x;
    Rook y;
  };
  const Permutation inv = inverse(w);
  const std::pair<ReductionTarget, Permutation> images[] = {
      {ReductionTarget::kSelf, w},
      {ReductionTarget::kInverse, inv},
      {ReductionTarget::kRotate, rotate(w)},
      {ReductionTarget::kRotateInverse, rotate(inv)},
  };
  auto rotation_partner = [](ReductionTarget t) {
    switch (t) {
      case ReductionTarget::kSelf:
        return 2;
      case ReductionTarget::kInverse:
        return 3;
      case ReductionTarget::kRotate:
        return 0;
      case ReductionTarget::kRotateInverse:
        return 1;
    }
    return 0;
  };

  std::vector<Candidate> candidates;
  for (const auto& [target, image] : images) {
    const auto descent = first_descent(image);
    if (!descent) continue;
    const auto& [x, y] = *descent;
    candidates.push_back({target, image, x, y});
    const auto& partner = images[rotation_partner(target)];
    const auto [rx, ry] = rotated(n, x, y);
    candidates.push_back({partner.first, partner.second, rx, ry});
  }

  for (const Candidate& c : candidates) {
    if (is_light_pair(c.image, c.x, c.y)) {
      return ReductionPairMatch{c.target, c.image, ReductionPair{PairKind::kLight, c.x, c.y}};
    }
  }
  // No candidate (nor its rotation) is light past this point.
  for (const Candidate& c : candidates) {
    if (is_heavy_pair(c.image, c.x, c.y)) {
      return ReductionPairMatch{c.target, c.image, ReductionPair{PairKind::kHeavy, c.x, c.y}};
    }
  }
  return std::nullopt;
}

ReductionStep reduction_step(const Permutation& w, const ReductionPair& pair) {
  const bool valid = pair.kind == PairKind::kLight ? is_light_pair(w, pair.x, pair.y)
                                                   : is_heavy_pair(w, pair.x, pair.y);
  if (!valid) {
    throw std::invalid_argument("not a " + to_string(pair.kind) + " reduction pair of " + w.to_string());
  }
  ReductionStep step{w.swap_positions(pair.y.row, pair.x.row), delete_rook(w, pair.y.row), std::nullopt,
                     std::nullopt};
  if (pair.kind == PairKind::kHeavy) {
    step.minus_x = delete_rook(w, pair.x.row);
    if (w.size() > 2) step.minus_xy = delete_rook(*step.minus_x, pair.y.row);
  }
  return step;
}

std::optional<Witness> witness_below(const Permutation& w) {
  // Cycle shapes of u w^-1, in terms of the occurrence positions n_1..n_m.
  struct Recipe {
    const char* pattern;
    std::vector<std::vector<int>> cycles;
  };
  static const std::vector<Recipe> recipes = {
      {"4231", {{1, 4}, {2, 3}}},
      {"35142", {{1, 3, 4}, {2, 5}}},
      {"42513", {{2, 5, 3}, {1, 4}}},
      {"351624", {{1, 3, 6, 4}, {2, 5}}},
  };
  for (const Recipe& recipe : recipes) {
    const Permutation pattern = Permutation::parse(recipe.pattern);
    const auto positions = find_occurrence(w, pattern);
    if (!positions) continue;
    std::vector<std::vector<int>> actual;
    for (const auto& cycle : recipe.cycles) {
      std::vector<int> mapped;
      for (int k : cycle) mapped.push_back((*positions)[static_cast<std::size_t>(k - 1)]);
      actual.push_back(std::move(mapped));
    }
    const Permutation product = from_cycles(w.size(), actual);
    return Witness{product * w, pattern, *positions, product};
  }
  return std::nullopt;
}

}  // namespace permlat
