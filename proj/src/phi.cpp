#include "permlat/phi.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "permlat/bruhat.hpp"
#include "permlat/patterns.hpp"

namespace permlat {

namespace {

void check_chain(const IntersectionLattice& lattice, const DecreasingChain& chain) {
  if (chain.elements.empty() || chain.elements.front() != lattice.bottom() ||
      chain.elements.size() != chain.labels.size() + 1) {
    throw std::invalid_argument("chain must start at the bottom and carry one label per cover");
  }
  for (std::size_t k = 0; k < chain.labels.size(); ++k) {
    if (k > 0 && chain.labels[k] <= chain.labels[k - 1]) {
      throw std::invalid_argument("chain " + chain.label_word() + " is not decreasing");
    }
    bool found = false;
    for (std::size_t c : lattice.upper_covers(chain.elements[k])) {
      const Cover& cover = lattice.covers()[c];
      if (cover.upper == chain.elements[k + 1]) {
        found = cover.label == chain.labels[k];
        break;
      }
    }
    if (!found) throw std::invalid_argument("chain " + chain.label_word() + " does not follow labelled covers");
  }
}

SetPartition orbit_partition(const Permutation& p) {
  std::vector<int> labels(static_cast<std::size_t>(p.size()), -1);
  int next = 0;
  for (int start = 1; start <= p.size(); ++start) {
    if (labels[static_cast<std::size_t>(start - 1)] != -1) continue;
    for (int i = start; labels[static_cast<std::size_t>(i - 1)] == -1; i = p(i)) {
      labels[static_cast<std::size_t>(i - 1)] = next;
    }
    ++next;
  }
  return SetPartition(labels);
}

}  // namespace

PhiImage phi(const IntersectionLattice& lattice, const DecreasingChain& chain, bool check_invariants) {
  check_chain(lattice, chain);
  const Permutation& w = lattice.permutation();
  Permutation product = Permutation::identity(w.size());
  for (int label : chain.labels) {
    const Transposition& t = lattice.hyperplanes()[static_cast<std::size_t>(label - 1)];
    product = product * t.as_permutation(w.size());
  }
  ReducedExpression subword{w.size(), {}};
  const auto& letters = lattice.expression().letters;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (std::find(chain.labels.begin(), chain.labels.end(), static_cast<int>(k) + 1) == chain.labels.end()) {
      subword.letters.push_back(letters[k]);
    }
  }
  PhiImage out{chain, product, product * w, std::move(subword)};

  if (check_invariants) {
    const std::string where = " for chain " + chain.label_word() + " of " + w.to_string();
    if (!bruhat_leq(out.image, w)) throw std::logic_error("image not below w" + where);
    if (absolute_length(product) != static_cast<int>(chain.length())) {
      throw std::logic_error("absolute length of p(C) differs from chain length" + where);
    }
    if (orbit_partition(product) != lattice.elements()[chain.top()]) {
      throw std::logic_error("cycles of p(C) differ from the top flat" + where);
    }
    if (evaluate(out.subword) != out.image) throw std::logic_error("subword does not evaluate to the image" + where);
  }
  return out;
}

std::vector<PhiImage> phi_table(const IntersectionLattice& lattice, bool check_invariants) {
  std::vector<PhiImage> out;
  for (const DecreasingChain& chain : decreasing_chains(lattice)) out.push_back(phi(lattice, chain, check_invariants));
  return out;
}

bool verify_injective(const IntersectionLattice& lattice) {
  std::unordered_set<Permutation> seen;
  for (const PhiImage& img : phi_table(lattice)) {
    if (!seen.insert(img.image).second) return false;
  }
  return true;
}

bool verify_injective(const Permutation& w, const ReducedExpression& expr) {
  return verify_injective(build_lattice(w, expr));
}

SurjectivityReport verify_surjective(const IntersectionLattice& lattice, bool check_invariants) {
  std::unordered_set<Permutation> image;
  for (const PhiImage& img : phi_table(lattice, check_invariants)) image.insert(img.image);
  SurjectivityReport report;
  for (const Permutation& u : interval(lattice.permutation())) {
    if (image.count(u)) continue;
    report.missed.push_back(u);
    (u.length() % 2 == 0 ? report.missed_even : report.missed_odd) += 1;
  }
  report.surjective = report.missed.empty();
  return report;
}

SurjectivityReport verify_surjective(const Permutation& w, const ReducedExpression& expr) {
  return verify_surjective(build_lattice(w, expr));
}

std::vector<Permutation> going_down_walk(const IntersectionLattice& lattice, const DecreasingChain& chain) {
  std::vector<Permutation> walk{lattice.permutation()};
  for (auto it = chain.labels.rbegin(); it != chain.labels.rend(); ++it) {
    const Transposition& t = lattice.hyperplanes()[static_cast<std::size_t>(*it - 1)];
    walk.push_back(walk.back().swap_positions(t.i, t.j));
  }
  return walk;
}

bool verify_going_down(const IntersectionLattice& lattice) {
  const Permutation& w = lattice.permutation();
  std::unordered_map<Permutation, int> distance;
  for (const auto& [u, d] : directed_distances(w)) distance.emplace(u, d);
  for (const DecreasingChain& chain : decreasing_chains(lattice)) {
    const auto walk = going_down_walk(lattice, chain);
    for (std::size_t k = 1; k < walk.size(); ++k) {
      if (walk[k] == walk[k - 1] || !bruhat_leq(walk[k], walk[k - 1])) return false;
    }
    const Permutation& image = walk.back();
    const int al = distance.at(image);
    if (al > static_cast<int>(chain.length())) return false;
    if (al != absolute_length(image * inverse(w))) return false;
  }
  return true;
}

bool verify_going_down(const Permutation& w, const ReducedExpression& expr) {
  return verify_going_down(build_lattice(w, expr));
}

bool distances_match_absolute_length(const Permutation& w) {
  const Permutation w_inv = inverse(w);
  for (const auto& [u, d] : directed_distances(w)) {
    if (absolute_length(u * w_inv) != d) return false;
  }
  return true;
}

bool verify_characterization(const Permutation& w) {
  return distances_match_absolute_length(w) == is_chromobruhatic(w);
}

}  // namespace permlat
