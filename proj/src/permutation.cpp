#include "permlat/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <stdexcept>

namespace permlat {

namespace {

void check_size(int n) {
  if (n < 1 || n > Permutation::kMaxSize) {
    throw std::invalid_argument("permutation size " + std::to_string(n) + " outside [1, " +
                                std::to_string(Permutation::kMaxSize) + "]");
  }
}

void check_same_size(const Permutation& u, const Permutation& w) {
  if (u.size() != w.size()) {
    throw std::invalid_argument("size mismatch: " + std::to_string(u.size()) + " vs " +
                                std::to_string(w.size()));
  }
}

}  // namespace

Permutation::Permutation(std::span<const int> word) : n_(static_cast<int>(word.size())) {
  check_size(n_);
  std::uint32_t seen = 0;
  for (int i = 0; i < n_; ++i) {
    const int v = word[static_cast<std::size_t>(i)];
    if (v < 1 || v > n_ || ((seen >> v) & 1U)) {
      throw std::invalid_argument("not a permutation of [" + std::to_string(n_) + "]: bad letter " +
                                  std::to_string(v) + " at position " + std::to_string(i + 1));
    }
    seen |= 1U << v;
    word_[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(v);
  }
}

Permutation::Permutation(std::initializer_list<int> word)
    : Permutation(std::span<const int>(word.begin(), word.size())) {}

Permutation Permutation::identity(int n) {
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  return Permutation(word);
}

Permutation Permutation::longest(int n) {
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) word[static_cast<std::size_t>(i)] = n - i;
  return Permutation(word);
}

Permutation Permutation::transposition(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n || i == j) {
    throw std::invalid_argument("invalid transposition (" + std::to_string(i) + " " +
                                std::to_string(j) + ") in S_" + std::to_string(n));
  }
  return identity(n).swap_positions(i, j);
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> word;
  if (text.empty()) throw std::invalid_argument("empty permutation text");
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw std::invalid_argument("unexpected character '" + std::string(1, c) +
                                    "' in permutation \"" + std::string(text) + "\"");
      }
      word.push_back(c - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = std::min(text.find(',', start), text.size());
      const std::string_view token = text.substr(start, end - start);
      int value = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
        throw std::invalid_argument("bad token \"" + std::string(token) + "\" in permutation \"" +
                                    std::string(text) + "\"");
      }
      word.push_back(value);
      start = end + 1;
    }
  }
  return Permutation(word);
}

int Permutation::position_of(int v) const {
  for (int i = 0; i < n_; ++i) {
    if (word_[static_cast<std::size_t>(i)] == v) return i + 1;
  }
  throw std::out_of_range("value " + std::to_string(v) + " not in permutation");
}

std::vector<int> Permutation::word() const {
  return {word_.begin(), word_.begin() + n_};
}

bool Permutation::is_identity() const {
  for (int i = 0; i < n_; ++i) {
    if (word_[static_cast<std::size_t>(i)] != i + 1) return false;
  }
  return true;
}

int Permutation::length() const {
  int count = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      count += word_[static_cast<std::size_t>(i)] > word_[static_cast<std::size_t>(j)];
    }
  }
  return count;
}

Permutation Permutation::swap_positions(int i, int j) const {
  Permutation result = *this;
  std::swap(result.word_[static_cast<std::size_t>(i - 1)], result.word_[static_cast<std::size_t>(j - 1)]);
  return result;
}

Permutation Permutation::swap_values(int a, int b) const {
  Permutation result = *this;
  for (int i = 0; i < n_; ++i) {
    auto& v = result.word_[static_cast<std::size_t>(i)];
    if (v == a) {
      v = static_cast<std::int8_t>(b);
    } else if (v == b) {
      v = static_cast<std::int8_t>(a);
    }
  }
  return result;
}

std::uint64_t Permutation::key() const {
  std::uint64_t k = 0;
  for (int i = 0; i < n_; ++i) {
    k = (k << 4) | static_cast<std::uint64_t>(word_[static_cast<std::size_t>(i)] - 1);
  }
  return k;
}

std::string Permutation::to_string() const {
  std::string out;
  for (int i = 0; i < n_; ++i) {
    const int v = word_[static_cast<std::size_t>(i)];
    if (n_ <= 9) {
      out.push_back(static_cast<char>('0' + v));
    } else {
      if (i > 0) out.push_back(',');
      out += std::to_string(v);
    }
  }
  return out;
}

Transposition::Transposition(int i_, int j_) : i(i_), j(j_) {
  if (i < 1 || j <= i) {
    throw std::invalid_argument("transposition needs 1 <= i < j, got (" + std::to_string(i) + " " +
                                std::to_string(j) + ")");
  }
}

std::string Transposition::to_string() const {
  return "(" + std::to_string(i) + " " + std::to_string(j) + ")";
}

std::string ReducedExpression::to_string() const {
  if (letters.empty()) return "e";
  std::string out;
  for (int a : letters) out += "s" + std::to_string(a);
  return out;
}

InversionGraph::InversionGraph(const Permutation& w)
    : n_(w.size()), adjacency_(static_cast<std::size_t>(w.size()), 0) {
  for (const Transposition& t : inversions(w)) {
    edges_.emplace_back(t.i, t.j);
    adjacency_[static_cast<std::size_t>(t.i - 1)] |= 1U << (t.j - 1);
    adjacency_[static_cast<std::size_t>(t.j - 1)] |= 1U << (t.i - 1);
  }
}

Permutation compose(const Permutation& u, const Permutation& w) {
  check_same_size(u, w);
  std::vector<int> word(static_cast<std::size_t>(u.size()));
  for (int i = 1; i <= u.size(); ++i) word[static_cast<std::size_t>(i - 1)] = w(u(i));
  return Permutation(word);
}

Permutation inverse(const Permutation& w) {
  std::vector<int> word(static_cast<std::size_t>(w.size()));
  for (int i = 1; i <= w.size(); ++i) word[static_cast<std::size_t>(w(i) - 1)] = i;
  return Permutation(word);
}

Permutation transpose(const Permutation& w) { return inverse(w); }

Permutation rotate(const Permutation& w) {
  const int n = w.size();
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) word[static_cast<std::size_t>(i - 1)] = n + 1 - w(n + 1 - i);
  return Permutation(word);
}

std::vector<Transposition> inversions(const Permutation& w) {
  std::vector<Transposition> result;
  for (int i = 1; i <= w.size(); ++i) {
    for (int j = i + 1; j <= w.size(); ++j) {
      if (w.has_inversion(i, j)) result.emplace_back(i, j);
    }
  }
  return result;
}

std::vector<std::vector<int>> cycles(const Permutation& w) {
  std::vector<std::vector<int>> result;
  std::vector<bool> seen(static_cast<std::size_t>(w.size() + 1), false);
  for (int start = 1; start <= w.size(); ++start) {
    if (seen[static_cast<std::size_t>(start)] || w(start) == start) continue;
    std::vector<int> cycle;
    for (int i = start; !seen[static_cast<std::size_t>(i)]; i = w(i)) {
      seen[static_cast<std::size_t>(i)] = true;
      cycle.push_back(i);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::string cycle_string(const Permutation& w) {
  const auto cs = cycles(w);
  if (cs.empty()) return "e";
  std::string out;
  for (const auto& cycle : cs) {
    out.push_back('(');
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k > 0) out.push_back(' ');
      out += std::to_string(cycle[k]);
    }
    out.push_back(')');
  }
  return out;
}

Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycle_list) {
  Permutation result = Permutation::identity(n);
  for (const auto& cycle : cycle_list) {
    std::vector<int> word = Permutation::identity(n).word();
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int from = cycle[k];
      const int to = cycle[(k + 1) % cycle.size()];
      if (from < 1 || from > n) throw std::invalid_argument("cycle entry out of range");
      word[static_cast<std::size_t>(from - 1)] = to;
    }
    result = result * Permutation(word);
  }
  return result;
}

int absolute_length(const Permutation& w) {
  int fixed_or_cycles = 0;
  std::vector<bool> seen(static_cast<std::size_t>(w.size() + 1), false);
  for (int start = 1; start <= w.size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++fixed_or_cycles;
    for (int i = start; !seen[static_cast<std::size_t>(i)]; i = w(i)) seen[static_cast<std::size_t>(i)] = true;
  }
  return w.size() - fixed_or_cycles;
}

ReducedExpression reduced_expression(const Permutation& w) {
  ReducedExpression expr{w.size(), {}};
  Permutation running = w;
  while (!running.is_identity()) {
    int a = 1;
    while (running(a) < running(a + 1)) ++a;
    expr.letters.push_back(a);
    running = running.swap_positions(a, a + 1);
  }
  return expr;
}

namespace {

void collect_reduced(const Permutation& w, std::vector<int>& prefix, std::vector<ReducedExpression>& out) {
  if (w.is_identity()) {
    out.push_back(ReducedExpression{w.size(), prefix});
    return;
  }
  for (int a = 1; a < w.size(); ++a) {
    if (w(a) > w(a + 1)) {
      prefix.push_back(a);
      collect_reduced(w.swap_positions(a, a + 1), prefix, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

std::vector<ReducedExpression> all_reduced_expressions(const Permutation& w) {
  std::vector<ReducedExpression> out;
  std::vector<int> prefix;
  collect_reduced(w, prefix, out);
  return out;
}

Permutation evaluate(const ReducedExpression& expr) {
  Permutation result = Permutation::identity(expr.n);
  for (int a : expr.letters) {
    if (a < 1 || a >= expr.n) {
      throw std::invalid_argument("letter s" + std::to_string(a) + " outside S_" + std::to_string(expr.n));
    }
    result = result.swap_values(a, a + 1);
  }
  return result;
}

std::vector<Transposition> reflection_sequence(const ReducedExpression& expr) {
  std::vector<Transposition> result;
  std::set<Transposition> seen;
  Permutation prefix = Permutation::identity(expr.n);
  for (int a : expr.letters) {
    if (a < 1 || a >= expr.n) {
      throw std::invalid_argument("letter s" + std::to_string(a) + " outside S_" + std::to_string(expr.n));
    }
    const int p = prefix.position_of(a);
    const int q = prefix.position_of(a + 1);
    const Transposition t(std::min(p, q), std::max(p, q));
    if (!seen.insert(t).second) {
      throw std::invalid_argument("expression " + expr.to_string() + " is not reduced: reflection " +
                                  t.to_string() + " repeats");
    }
    result.push_back(t);
    prefix = prefix.swap_values(a, a + 1);
  }
  return result;
}

std::vector<int> record_positions(const Permutation& w) {
  std::vector<int> records;
  int best = 0;
  for (int r = 1; r <= w.size(); ++r) {
    if (w(r) > best) {
      records.push_back(r);
      best = w(r);
    }
  }
  return records;
}

std::vector<int> opy_exponents(const Permutation& w) {
  const int n = w.size();
  const std::vector<int> records = record_positions(w);
  std::vector<int> exponents;
  for (int i = 1; i <= n; ++i) {
    // records[0] == 1, so r_i always exists.
    auto next = std::upper_bound(records.begin(), records.end(), i);
    const int r = *std::prev(next);
    const int r_next = next == records.end() ? n + 1 : *next;
    int e = 0;
    for (int j = r; j < i; ++j) e += w(j) > w(i);
    for (int k = r_next; k <= n; ++k) e += w(k) < w(i);
    exponents.push_back(e);
  }
  return exponents;
}

Permutation delete_rook(const Permutation& w, int row) {
  if (w.size() < 2) throw std::invalid_argument("cannot delete a rook from S_1");
  if (row < 1 || row > w.size()) throw std::invalid_argument("row out of range");
  const int column = w(row);
  std::vector<int> word;
  for (int i = 1; i <= w.size(); ++i) {
    if (i == row) continue;
    word.push_back(w(i) > column ? w(i) - 1 : w(i));
  }
  return Permutation(word);
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit) {
  std::vector<int> word = Permutation::identity(n).word();
  do {
    visit(Permutation(word));
  } while (std::next_permutation(word.begin(), word.end()));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  for_each_permutation(n, [&](const Permutation& w) { out.push_back(w); });
  return out;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::uint64_t lex_rank(const Permutation& w) {
  const int n = w.size();
  std::uint64_t rank = 0;
  for (int i = 1; i <= n; ++i) {
    std::uint64_t smaller_later = 0;
    for (int j = i + 1; j <= n; ++j) smaller_later += w(j) < w(i);
    rank += smaller_later * factorial(n - i);
  }
  return rank;
}

Permutation lex_unrank(int n, std::uint64_t rank) {
  check_size(n);
  if (rank >= factorial(n)) throw std::out_of_range("rank beyond n!");
  std::vector<int> pool = Permutation::identity(n).word();
  std::vector<int> word;
  for (int i = n; i >= 1; --i) {
    const std::uint64_t f = factorial(i - 1);
    const auto index = static_cast<std::size_t>(rank / f);
    rank %= f;
    word.push_back(pool[index]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(index));
  }
  return Permutation(word);
}

}  // namespace permlat
