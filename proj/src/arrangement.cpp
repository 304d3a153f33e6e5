#include "permlat/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace permlat {

SetPartition::SetPartition(std::span<const int> block_of) : n_(static_cast<int>(block_of.size())) {
  if (n_ < 1 || n_ > Permutation::kMaxSize) throw std::invalid_argument("set partition size out of range");
  std::map<int, int> renumber;
  for (int i = 0; i < n_; ++i) {
    const auto [it, fresh] = renumber.emplace(block_of[static_cast<std::size_t>(i)], static_cast<int>(renumber.size()));
    rgs_[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(it->second);
  }
  blocks_ = static_cast<int>(renumber.size());
}

SetPartition SetPartition::discrete(int n) {
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = i;
  return SetPartition(labels);
}

SetPartition SetPartition::full(int n) {
  const std::vector<int> labels(static_cast<std::size_t>(n), 0);
  return SetPartition(labels);
}

SetPartition SetPartition::parse(std::string_view text) {
  std::vector<std::vector<int>> block_list;
  const bool commas = text.find(',') != std::string_view::npos;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('|', start), text.size());
    const std::string_view block = text.substr(start, end - start);
    std::vector<int> members;
    if (commas) {
      std::size_t s = 0;
      while (s <= block.size()) {
        const std::size_t e = std::min(block.find(',', s), block.size());
        members.push_back(std::stoi(std::string(block.substr(s, e - s))));
        s = e + 1;
      }
    } else {
      for (char c : block) {
        if (c < '1' || c > '9') throw std::invalid_argument("bad character in partition \"" + std::string(text) + "\"");
        members.push_back(c - '0');
      }
    }
    if (members.empty()) throw std::invalid_argument("empty block in partition \"" + std::string(text) + "\"");
    block_list.push_back(std::move(members));
    start = end + 1;
  }
  int n = 0;
  for (const auto& b : block_list) n += static_cast<int>(b.size());
  std::vector<int> labels(static_cast<std::size_t>(n), -1);
  for (std::size_t b = 0; b < block_list.size(); ++b) {
    for (int v : block_list[b]) {
      if (v < 1 || v > n || labels[static_cast<std::size_t>(v - 1)] != -1) {
        throw std::invalid_argument("partition \"" + std::string(text) + "\" does not cover [n] exactly");
      }
      labels[static_cast<std::size_t>(v - 1)] = static_cast<int>(b);
    }
  }
  return SetPartition(labels);
}

SetPartition SetPartition::merged(int i, int j) const {
  const int a = label(i);
  const int b = label(j);
  std::vector<int> labels(static_cast<std::size_t>(n_));
  for (int k = 0; k < n_; ++k) {
    const int l = rgs_[static_cast<std::size_t>(k)];
    labels[static_cast<std::size_t>(k)] = l == b ? a : l;
  }
  return SetPartition(labels);
}

bool SetPartition::refines(const SetPartition& coarser) const {
  if (coarser.n_ != n_) throw std::invalid_argument("partition size mismatch");
  std::array<int, Permutation::kMaxSize> image;
  image.fill(-1);
  for (int k = 0; k < n_; ++k) {
    auto& target = image[static_cast<std::size_t>(rgs_[static_cast<std::size_t>(k)])];
    const int c = coarser.rgs_[static_cast<std::size_t>(k)];
    if (target == -1) {
      target = c;
    } else if (target != c) {
      return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> SetPartition::blocks() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(blocks_));
  for (int k = 0; k < n_; ++k) out[static_cast<std::size_t>(rgs_[static_cast<std::size_t>(k)])].push_back(k + 1);
  return out;
}

std::uint64_t SetPartition::key() const {
  std::uint64_t k = 0;
  for (int i = 0; i < n_; ++i) k = (k << 4) | static_cast<std::uint64_t>(rgs_[static_cast<std::size_t>(i)]);
  return k;
}

std::string SetPartition::to_string() const {
  std::string out;
  bool first_block = true;
  for (const auto& block : blocks()) {
    if (!first_block) out.push_back('|');
    first_block = false;
    for (std::size_t k = 0; k < block.size(); ++k) {
      if (n_ > 9 && k > 0) out.push_back(',');
      out += std::to_string(block[k]);
    }
  }
  return out;
}

std::strong_ordering operator<=>(const SetPartition& a, const SetPartition& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.rank() <=> b.rank(); c != 0) return c;
  return a.rgs_ <=> b.rgs_;
}

IntersectionLattice::IntersectionLattice(const Permutation& w, const ReducedExpression& expr)
    : w_(w), expr_(expr) {
  if (expr.n != w.size() || evaluate(expr) != w) {
    throw std::invalid_argument("expression " + expr.to_string() + " does not evaluate to " + w.to_string());
  }
  hyperplanes_ = reflection_sequence(expr);
  if (static_cast<int>(hyperplanes_.size()) != w.length()) {
    throw std::invalid_argument("expression " + expr.to_string() + " is not reduced");
  }

  // Join-closure from the bottom, one rank at a time.  Every cover of a
  // bond lattice merges two blocks joined by an edge.
  struct PendingCover {
    SetPartition lower;
    SetPartition upper;
    int label;
  };
  std::vector<PendingCover> pending;
  std::vector<SetPartition> level{SetPartition::discrete(w.size())};
  while (!level.empty()) {
    elements_.insert(elements_.end(), level.begin(), level.end());
    std::set<SetPartition> next;
    for (const SetPartition& x : level) {
      std::map<SetPartition, int> labels;
      for (std::size_t h = 0; h < hyperplanes_.size(); ++h) {
        const Transposition& t = hyperplanes_[h];
        if (x.same_block(t.i, t.j)) continue;
        int& label = labels[x.merged(t.i, t.j)];
        label = std::max(label, static_cast<int>(h) + 1);
      }
      for (const auto& [y, label] : labels) {
        next.insert(y);
        pending.push_back({x, y, label});
      }
    }
    level.assign(next.begin(), next.end());
  }

  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::size_t k = 0; k < elements_.size(); ++k) index.emplace(elements_[k].key(), k);
  for (const PendingCover& c : pending) {
    covers_.push_back({index.at(c.lower.key()), index.at(c.upper.key()), c.label});
  }
  std::sort(covers_.begin(), covers_.end(), [](const Cover& a, const Cover& b) {
    return a.lower != b.lower ? a.lower < b.lower : a.label < b.label;
  });
  up_.resize(elements_.size());
  for (std::size_t k = 0; k < covers_.size(); ++k) up_[covers_[k].lower].push_back(k);
}

std::size_t IntersectionLattice::index_of(const SetPartition& x) const {
  const auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
  if (it == elements_.end() || *it != x) throw std::out_of_range(x.to_string() + " is not a flat");
  return static_cast<std::size_t>(it - elements_.begin());
}

IntersectionLattice build_lattice(const Permutation& w, const ReducedExpression& expr) {
  return IntersectionLattice(w, expr);
}

IntersectionLattice build_lattice(const Permutation& w) { return IntersectionLattice(w, reduced_expression(w)); }

std::string DecreasingChain::label_word() const {
  if (labels.empty()) return "e";
  std::string out;
  for (int l : labels) out += "t" + std::to_string(l);
  return out;
}

namespace {

template <typename Visit>
void walk_chains(const IntersectionLattice& lattice, DecreasingChain& chain, Visit& visit) {
  visit(chain);
  const int last = chain.labels.empty() ? 0 : chain.labels.back();
  for (std::size_t c : lattice.upper_covers(chain.top())) {
    const Cover& cover = lattice.covers()[c];
    if (cover.label <= last) continue;
    chain.elements.push_back(cover.upper);
    chain.labels.push_back(cover.label);
    walk_chains(lattice, chain, visit);
    chain.elements.pop_back();
    chain.labels.pop_back();
  }
}

}  // namespace

std::vector<DecreasingChain> decreasing_chains(const IntersectionLattice& lattice) {
  std::vector<DecreasingChain> out;
  DecreasingChain chain{{lattice.bottom()}, {}};
  auto collect = [&](const DecreasingChain& c) { out.push_back(c); };
  walk_chains(lattice, chain, collect);
  return out;
}

std::vector<std::int64_t> mobius_by_recursion(const IntersectionLattice& lattice) {
  std::vector<std::int64_t> mu(lattice.size(), 0);
  mu[lattice.bottom()] = 1;
  for (std::size_t x = 1; x < lattice.size(); ++x) {
    std::int64_t sum = 0;
    for (std::size_t y = 0; y < x && lattice.rank(y) < lattice.rank(x); ++y) {
      if (lattice.leq(y, x)) sum += mu[y];
    }
    mu[x] = -sum;
  }
  return mu;
}

std::vector<std::uint64_t> mobius_by_chains(const IntersectionLattice& lattice) {
  std::vector<std::uint64_t> counts(lattice.size(), 0);
  DecreasingChain chain{{lattice.bottom()}, {}};
  auto tally = [&](const DecreasingChain& c) { ++counts[c.top()]; };
  walk_chains(lattice, chain, tally);
  return counts;
}

std::vector<std::uint64_t> mobius_values(const IntersectionLattice& lattice) {
  const auto recursive = mobius_by_recursion(lattice);
  const auto chains = mobius_by_chains(lattice);
  for (std::size_t x = 0; x < lattice.size(); ++x) {
    const std::int64_t signed_mu = recursive[x];
    const auto magnitude = static_cast<std::uint64_t>(signed_mu < 0 ? -signed_mu : signed_mu);
    const bool sign_ok = (lattice.rank(x) % 2 == 0) ? signed_mu >= 0 : signed_mu <= 0;
    if (magnitude != chains[x] || !sign_ok) {
      throw std::logic_error("Moebius mismatch at " + lattice.elements()[x].to_string() + ": recursion " +
                             std::to_string(signed_mu) + ", decreasing chains " + std::to_string(chains[x]));
    }
  }
  return chains;
}

std::vector<std::uint64_t> betti_numbers(const IntersectionLattice& lattice) {
  const auto mu = mobius_values(lattice);
  std::vector<std::uint64_t> betti(static_cast<std::size_t>(lattice.max_rank() + 1), 0);
  for (std::size_t x = 0; x < lattice.size(); ++x) betti[static_cast<std::size_t>(lattice.rank(x))] += mu[x];
  return betti;
}

std::uint64_t region_count(const Permutation& w) {
  std::uint64_t total = 0;
  for (std::uint64_t c : mobius_by_chains(build_lattice(w))) total += c;
  return total;
}

}  // namespace permlat
