#include "permlat/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "permlat/arrangement.hpp"
#include "permlat/bruhat.hpp"
#include "permlat/chromatic.hpp"
#include "permlat/patterns.hpp"
#include "permlat/phi.hpp"

namespace permlat::verifier {

using Json = nlohmann::ordered_json;

std::string to_string(ExpressionRule rule) { return rule == ExpressionRule::kAll ? "all" : "canonical"; }

ExpressionRule parse_expression_rule(const std::string& text) {
  if (text == "canonical") return ExpressionRule::kCanonical;
  if (text == "all") return ExpressionRule::kAll;
  throw UsageError("unknown expression rule \"" + text + "\" (expected canonical or all)");
}

const std::vector<CheckInfo>& checks() {
  static const std::vector<CheckInfo> table{
      {"conjectureA", 8, false, "re(w) <= br(w)"},
      {"conjectureB", 8, false, "re(w) = br(w) iff w avoids the four patterns"},
      {"phi-injective", 7, true, "phi is injective"},
      {"phi-surjective-iff", 7, true, "phi is surjective iff w avoids the four patterns; misses split evenly by parity"},
      {"going-down", 7, true, "chain walks descend strictly from w and al(phi(C), w) = l'(phi(C) w^-1) <= m"},
      {"characterization", 6, false, "l'(u w^-1) = al(u, w) for all u <= w iff w avoids the four patterns"},
      {"betti", 7, true, "Betti number inequalities for avoiding w, equality at maximal r, failure of (1) otherwise"},
      {"chromatic-identity", 6, false, "distance polynomial = (-q)^n chi(-1/q) iff w avoids the four patterns"},
      {"opy", 7, false, "prod (t - e_i) = chi for smooth w"},
      {"recurrences", 7, false, "light and heavy br/ao recurrences, colouring identity, rho stays in the class"},
      {"hull-vs-standard", 6, false, "bubble and hull criteria agree with the rank matrix; hull permanent = br"},
      {"weak-chain", 7, false, "avoiding w reaches e through avoiding two-sided weak covers"},
  };
  return table;
}

const CheckInfo& find_check(const std::string& name) {
  for (const CheckInfo& c : checks()) {
    if (c.name == name) return c;
  }
  std::string known;
  for (const CheckInfo& c : checks()) known += (known.empty() ? "" : ", ") + c.name;
  throw UsageError("unknown check \"" + name + "\" (known: " + known + ")");
}

ReducedExpression cancel_adjacent(const ReducedExpression& word) {
  ReducedExpression out{word.n, {}};
  for (int a : word.letters) {
    if (!out.letters.empty() && out.letters.back() == a) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(a);
    }
  }
  return out;
}

std::string ascending_string(const std::vector<std::int64_t>& coefficients, const std::string& variable) {
  std::string out;
  for (std::size_t d = 0; d < coefficients.size(); ++d) {
    const std::int64_t c = coefficients[d];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? "-" : "+";
    if (out.empty() && c < 0) out += "-";
    const std::int64_t mag = c < 0 ? -c : c;
    if (mag != 1 || d == 0) out += std::to_string(mag);
    if (d >= 1) out += variable;
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out.empty() ? "0" : out;
}

namespace {

// One permutation's contribution to a sweep.
struct Outcome {
  bool applicable = true;
  bool ok = true;
  std::string subject;
  std::string detail;
  std::vector<std::pair<std::string, std::uint64_t>> tallies;

  void fail(std::string what) {
    if (ok) detail = std::move(what);
    ok = false;
  }
  void tally(std::string key, std::uint64_t amount = 1) { tallies.emplace_back(std::move(key), amount); }
};

struct Context {
  ExpressionRule expr = ExpressionRule::kCanonical;
  bool check_invariants = true;
};

std::vector<ReducedExpression> expressions_for(const Permutation& w, const Context& ctx) {
  if (ctx.expr == ExpressionRule::kAll) return all_reduced_expressions(w);
  return {reduced_expression(w)};
}

std::string with_expression(const Permutation& w, const ReducedExpression& e, const Context& ctx) {
  return ctx.expr == ExpressionRule::kAll ? w.to_string() + " " + e.to_string() : w.to_string();
}

std::string counts(std::uint64_t re, std::uint64_t br) {
  return "re=" + std::to_string(re) + " br=" + std::to_string(br);
}

Outcome conjecture_a(const Permutation& w, const Context&) {
  Outcome out;
  const auto br = interval_size(w);
  const auto re = acyclic_orientations(w);
  if (re > br) out.fail(counts(re, br));
  out.tally(re == br ? "equal" : "strict");
  return out;
}

Outcome conjecture_b(const Permutation& w, const Context&) {
  Outcome out;
  const auto br = interval_size(w);
  const auto re = acyclic_orientations(w);
  const bool avoiding = is_chromobruhatic(w);
  if ((re == br) != avoiding) {
    out.fail(counts(re, br) + (avoiding ? " but w avoids the patterns" : " but w contains a pattern"));
  }
  if (avoiding) out.tally("avoiding");
  if (re == br) out.tally("equal");
  return out;
}

Outcome phi_injective(const Permutation& w, const Context& ctx) {
  Outcome out;
  for (const ReducedExpression& e : expressions_for(w, ctx)) {
    const auto table = phi_table(build_lattice(w, e), ctx.check_invariants);
    std::unordered_set<Permutation> seen;
    for (const PhiImage& img : table) {
      if (!seen.insert(img.image).second) {
        out.subject = with_expression(w, e, ctx);
        out.fail("image " + img.image.to_string() + " hit twice, second time by " + img.chain.label_word());
        return out;
      }
    }
    out.tally("expressions");
    out.tally("chains", table.size());
  }
  return out;
}

Outcome phi_surjective_iff(const Permutation& w, const Context& ctx) {
  Outcome out;
  const bool avoiding = is_chromobruhatic(w);
  for (const ReducedExpression& e : expressions_for(w, ctx)) {
    const auto report = verify_surjective(build_lattice(w, e), ctx.check_invariants);
    if (report.surjective != avoiding) {
      out.subject = with_expression(w, e, ctx);
      out.fail(std::string(report.surjective ? "surjective" : "not surjective") +
               (avoiding ? " but w avoids the patterns" : " but w contains a pattern"));
      return out;
    }
    if (report.missed_even != report.missed_odd) {
      out.subject = with_expression(w, e, ctx);
      out.fail("missed " + std::to_string(report.missed_even) + " even and " + std::to_string(report.missed_odd) +
               " odd elements");
      return out;
    }
    out.tally("expressions");
    if (report.surjective) out.tally("surjective");
    out.tally("missed", report.missed.size());
  }
  return out;
}

Outcome going_down(const Permutation& w, const Context& ctx) {
  Outcome out;
  for (const ReducedExpression& e : expressions_for(w, ctx)) {
    const auto lattice = build_lattice(w, e);
    if (ctx.check_invariants) phi_table(lattice, true);
    if (!verify_going_down(lattice)) {
      out.subject = with_expression(w, e, ctx);
      out.fail("a chain walk does not go down, or al exceeds the chain length");
      return out;
    }
    out.tally("expressions");
  }
  return out;
}

Outcome characterization(const Permutation& w, const Context&) {
  Outcome out;
  const bool equality = distances_match_absolute_length(w);
  const bool avoiding = is_chromobruhatic(w);
  if (equality != avoiding) {
    out.fail(std::string(equality ? "al = l' everywhere" : "al != l' somewhere") +
             (avoiding ? " but w avoids the patterns" : " but w contains a pattern"));
  }
  if (avoiding) out.tally("avoiding");
  return out;
}

// Schubert-side Betti numbers: b[i] = #{u <= w : l(u) = i}.
std::vector<std::uint64_t> schubert_betti(const Permutation& w) {
  std::vector<std::uint64_t> b(static_cast<std::size_t>(w.length() + 1), 0);
  for (const Permutation& u : interval(w)) ++b[static_cast<std::size_t>(u.length())];
  return b;
}

Outcome betti(const Permutation& w, const Context& ctx) {
  Outcome out;
  const auto b = schubert_betti(w);
  const int len = w.length();
  auto bw = [&](int i) -> std::uint64_t { return i >= 0 && i <= len ? b[static_cast<std::size_t>(i)] : 0; };
  const bool avoiding = is_chromobruhatic(w);
  for (const ReducedExpression& e : expressions_for(w, ctx)) {
    const auto beta = betti_numbers(build_lattice(w, e));
    auto ba = [&](int i) -> std::uint64_t {
      return i >= 0 && i < static_cast<int>(beta.size()) ? beta[static_cast<std::size_t>(i)] : 0;
    };
    const std::string who = with_expression(w, e, ctx);
    if (!avoiding) {
      std::uint64_t lhs = 0;
      std::uint64_t rhs = 0;
      for (int i = 0; i <= len; ++i) {
        lhs += bw(len - i);
        rhs += ba(i);
      }
      if (lhs <= rhs) {
        out.subject = who;
        out.fail("inequality (1) holds at r = l(w) for a non-avoiding w");
        return out;
      }
      out.tally("non_avoiding_strict");
      continue;
    }
    // (family, maximal r, index on each side)
    struct Family {
      const char* name;
      int max_r;
      std::function<int(int)> schubert;
      std::function<int(int)> arrangement;
    };
    const Family families[] = {
        {"(1)", len, [&](int i) { return len - i; }, [](int i) { return i; }},
        {"(2)", len / 2, [&](int j) { return len - 2 * j; }, [](int j) { return 2 * j; }},
        // empty when l(w) = 0
        {"(3)", len >= 1 ? (len - 1) / 2 : -1, [&](int j) { return len - 2 * j - 1; }, [](int j) { return 2 * j + 1; }},
    };
    for (const Family& f : families) {
      std::uint64_t lhs = 0;
      std::uint64_t rhs = 0;
      for (int r = 0; r <= f.max_r; ++r) {
        lhs += bw(f.schubert(r));
        rhs += ba(f.arrangement(r));
        if (lhs > rhs) {
          out.subject = who;
          out.fail(std::string("inequality ") + f.name + " fails at r = " + std::to_string(r));
          return out;
        }
      }
      if (lhs != rhs) {
        out.subject = who;
        out.fail(std::string("no equality in ") + f.name + " at maximal r = " + std::to_string(f.max_r));
        return out;
      }
    }
    out.tally("avoiding_checked");
  }
  return out;
}

Outcome chromatic_identity(const Permutation& w, const Context&) {
  Outcome out;
  const bool holds = chromatic_identity_holds(w);
  const bool avoiding = is_chromobruhatic(w);
  if (holds != avoiding) {
    out.fail(std::string(holds ? "identity holds" : "identity fails") +
             (avoiding ? " but w avoids the patterns" : " but w contains a pattern"));
  }
  if (holds) out.tally("identity_holds");
  return out;
}

Outcome opy(const Permutation& w, const Context&) {
  Outcome out;
  if (!is_smooth(w)) {
    out.applicable = false;
    return out;
  }
  const auto product = opy_chromatic(w);
  const auto chi = chromatic_polynomial(w);
  if (product != chi) out.fail("product " + product.to_string() + " but chi " + chi.to_string());
  return out;
}

bool first_descent_is_pair(const Permutation& v) {
  const auto d = first_descent(v);
  return d && (is_light_pair(v, d->first, d->second) || is_heavy_pair(v, d->first, d->second));
}

std::uint64_t br_or_empty(const std::optional<Permutation>& p) { return p ? interval_size(*p) : 1; }
std::uint64_t ao_or_empty(const std::optional<Permutation>& p) { return p ? acyclic_orientations(*p) : 1; }
IntPolynomial chi_or_empty(const std::optional<Permutation>& p) {
  return p ? chromatic_polynomial(*p) : IntPolynomial::constant(1);
}

Outcome recurrences(const Permutation& w, const Context&) {
  Outcome out;
  if (w.is_identity() || !is_chromobruhatic(w)) {
    out.applicable = false;
    return out;
  }
  if (!first_descent_is_pair(w) && !first_descent_is_pair(inverse(w))) {
    out.fail("no reduction pair at the first descent of w or of w^-1");
  }
  const auto match = find_reduction_pair(w);
  if (!match) {
    out.fail("no reduction pair found");
    return out;
  }
  const Permutation& pi = match->permutation;
  const auto step = reduction_step(pi, match->pair);
  out.tally(to_string(match->pair.kind));
  out.tally("target_" + to_string(match->target));
  if (!is_chromobruhatic(step.rho)) out.fail("rho = " + step.rho.to_string() + " contains a pattern");
  const std::string where = " in " + pi.to_string() + " (" + to_string(match->target) + ")";
  if (match->pair.kind == PairKind::kLight) {
    if (interval_size(pi) != interval_size(step.rho) + interval_size(step.minus_y)) {
      out.fail("light br recurrence fails" + where);
    }
    if (acyclic_orientations(pi) != acyclic_orientations(step.rho) + acyclic_orientations(step.minus_y)) {
      out.fail("light ao recurrence fails" + where);
    }
    return out;
  }
  const auto br = interval_size(step.rho) + br_or_empty(step.minus_x) + interval_size(step.minus_y);
  if (interval_size(pi) + br_or_empty(step.minus_xy) != br) out.fail("heavy br recurrence fails" + where);
  const auto ao = acyclic_orientations(step.rho) + ao_or_empty(step.minus_x) + acyclic_orientations(step.minus_y);
  if (acyclic_orientations(pi) + ao_or_empty(step.minus_xy) != ao) out.fail("heavy ao recurrence fails" + where);
  const IntPolynomial lhs = chromatic_polynomial(step.rho) - chromatic_polynomial(pi);
  const IntPolynomial rhs = chi_or_empty(step.minus_x) + chromatic_polynomial(step.minus_y) -
                            IntPolynomial::monomial(1) * chi_or_empty(step.minus_xy);
  if (lhs != rhs) out.fail("heavy colouring identity fails" + where);
  return out;
}

Outcome hull_vs_standard(const Permutation& w, const Context&) {
  Outcome out;
  const bool avoiding = is_chromobruhatic(w);
  for_each_permutation(w.size(), [&](const Permutation& u) {
    if (!out.ok) return;
    const bool rank = bruhat_leq(u, w);
    if (bruhat_leq(u, w, BruhatBackend::kBubbles) != rank) out.fail("bubble criterion disagrees at u = " + u.to_string());
    if (avoiding && bruhat_leq(u, w, BruhatBackend::kRightHull) != rank) {
      out.fail("hull criterion disagrees at u = " + u.to_string());
    }
  });
  if (avoiding) {
    const auto perm = hull_permanent(w);
    const auto filtered = interval_size_by_filter(w);
    if (perm != filtered) out.fail("hull permanent " + std::to_string(perm) + " but br " + std::to_string(filtered));
    out.tally("avoiding");
  }
  return out;
}

Outcome weak_chain(const Permutation& w, const Context&) {
  Outcome out;
  if (w.is_identity() || !is_chromobruhatic(w)) {
    out.applicable = false;
    return out;
  }
  if (!saturated_weak_chain(w, [](const Permutation& x) { return is_chromobruhatic(x); })) {
    out.fail("no saturated chain of avoiding two-sided weak covers down to e");
  }
  return out;
}

using Evaluator = Outcome (*)(const Permutation&, const Context&);

Evaluator evaluator_for(const std::string& name) {
  static const std::map<std::string, Evaluator> table{
      {"conjectureA", conjecture_a},
      {"conjectureB", conjecture_b},
      {"phi-injective", phi_injective},
      {"phi-surjective-iff", phi_surjective_iff},
      {"going-down", going_down},
      {"characterization", characterization},
      {"betti", betti},
      {"chromatic-identity", chromatic_identity},
      {"opy", opy},
      {"recurrences", recurrences},
      {"hull-vs-standard", hull_vs_standard},
      {"weak-chain", weak_chain},
  };
  return table.at(name);
}

Outcome guarded(Evaluator eval, const Permutation& w, const Context& ctx) {
  Outcome out;
  try {
    out = eval(w, ctx);
  } catch (const std::exception& e) {
    out = Outcome{};
    out.fail(std::string("exception: ") + e.what());
  }
  if (out.subject.empty()) out.subject = w.to_string();
  return out;
}

// Lexicographic blocks of S_n handed to workers; outcomes come back indexed
// by lexicographic rank so the merge never depends on scheduling.
std::vector<Outcome> sweep(int n, int jobs, Evaluator eval, const Context& ctx) {
  const std::uint64_t total = factorial(n);
  std::vector<Outcome> outcomes(total);
  const std::uint64_t block = std::max<std::uint64_t>(1, total / (static_cast<std::uint64_t>(jobs) * 8));
  const std::uint64_t blocks = (total + block - 1) / block;
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (std::uint64_t b = next++; b < blocks; b = next++) {
      const std::uint64_t begin = b * block;
      const std::uint64_t end = std::min(total, begin + block);
      std::vector<int> word = lex_unrank(n, begin).word();
      for (std::uint64_t k = begin; k < end; ++k) {
        outcomes[k] = guarded(eval, Permutation(word), ctx);
        std::next_permutation(word.begin(), word.end());
      }
    }
  };
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return outcomes;
}

}  // namespace

Report run_check(const VerifyOptions& options) {
  const CheckInfo& info = find_check(options.check);
  if (options.n < 1 || options.n > info.ceiling) {
    throw UsageError("n = " + std::to_string(options.n) + " outside 1.." + std::to_string(info.ceiling) + " for " +
                     info.name);
  }
  if (options.jobs < 1) throw UsageError("jobs must be at least 1");
  if (options.expr == ExpressionRule::kAll) {
    if (!info.uses_expression) throw UsageError(info.name + " does not depend on the reduced expression");
    if (options.n > kAllExpressionsCeiling) {
      throw UsageError("--expr all is limited to n <= " + std::to_string(kAllExpressionsCeiling));
    }
  }

  const auto start = std::chrono::steady_clock::now();
  const Context ctx{options.expr, options.check_invariants};
  const auto outcomes = sweep(options.n, options.jobs, evaluator_for(info.name), ctx);

  Report report;
  report.command = "verify";
  report.check = info.name;
  report.n = options.n;
  report.expression_rule = info.uses_expression ? to_string(options.expr) : "n/a";
  report.population = outcomes.size();
  report.jobs = options.jobs;
  std::map<std::string, std::uint64_t> tallies;
  for (const Outcome& o : outcomes) {
    if (!o.applicable) continue;
    ++report.examined;
    for (const auto& [key, amount] : o.tallies) tallies[key] += amount;
    if (o.ok) continue;
    ++report.failures;
    if (options.full_dump || report.counterexamples.size() < options.counterexample_cap) {
      report.counterexamples.push_back({o.subject, o.detail});
    } else {
      report.truncated = true;
    }
  }
  report.pass = report.failures == 0;
  report.payload["property"] = info.summary;
  for (const auto& [key, amount] : tallies) report.payload[key] = amount;
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

Json cover_json(const IntersectionLattice& l, const Cover& c) {
  return Json{{"lower", l.elements()[c.lower].to_string()},
              {"upper", l.elements()[c.upper].to_string()},
              {"label", c.label}};
}

std::string chain_string(const IntersectionLattice& l, const DecreasingChain& c) {
  std::string out = "0";
  for (std::size_t k = 1; k < c.elements.size(); ++k) out += " < " + l.elements()[c.elements[k]].to_string();
  return out;
}

std::vector<std::string> cover_lines(const IntersectionLattice& l) {
  std::vector<std::string> out;
  for (const Cover& c : l.covers()) {
    out.push_back(l.elements()[c.lower].to_string() + " < " + l.elements()[c.upper].to_string() + " : " +
                  std::to_string(c.label));
  }
  return out;
}

std::vector<std::string> table_lines(const IntersectionLattice& l) {
  std::vector<std::string> out;
  for (const PhiImage& img : phi_table(l)) {
    out.push_back(chain_string(l, img.chain) + " | " + img.chain.label_word() + " | " +
                  cancel_adjacent(img.subword).to_string() + " | " + img.image.to_string());
  }
  return out;
}

Json polynomial_json(const IntPolynomial& p, const std::string& variable) {
  return Json{{"text", p.to_string(variable)}, {"coefficients", p.coefficients()}};
}

}  // namespace

Json analyze(const Permutation& w) {
  if (w.size() > kAnalyzeCeiling) {
    throw UsageError("analyze supports n <= " + std::to_string(kAnalyzeCeiling) + ", got n = " +
                     std::to_string(w.size()));
  }
  const int n = w.size();
  const ReducedExpression expr = reduced_expression(w);
  const IntersectionLattice lattice(w, expr);
  const auto br = interval_size(w);
  const auto re = region_count(w);
  const auto ao = acyclic_orientations(w);
  const auto chi = chromatic_polynomial(w);
  const auto dist = distance_poly(w);
  const bool avoiding = is_chromobruhatic(w);
  const bool smooth = is_smooth(w);

  Json out;
  out["schema_version"] = kSchemaVersion;
  out["command"] = "analyze";
  out["permutation"] = w.to_string();
  out["n"] = n;
  out["length"] = w.length();
  out["absolute_length"] = absolute_length(w);
  out["cycles"] = cycle_string(w);
  Json inv = Json::array();
  for (const Transposition& t : inversions(w)) inv.push_back(t.to_string());
  out["inversions"] = inv;
  out["reduced_expression"] = expr.to_string();
  Json refl = Json::array();
  for (const Transposition& t : lattice.hyperplanes()) refl.push_back(t.to_string());
  out["reflection_sequence"] = refl;
  out["br"] = br;
  out["re"] = re;
  out["ao"] = ao;
  out["br_equals_re"] = br == re;
  out["chromatic_polynomial"] = polynomial_json(chi, "t");
  out["distance_polynomial"] = polynomial_json(dist, "q");
  out["reciprocal_chromatic"] = polynomial_json(reciprocal_chromatic(chi, n), "q");
  out["chromatic_identity_holds"] = dist == reciprocal_chromatic(chi, n);
  out["betti_numbers"] = betti_numbers(lattice);
  out["chromobruhatic"] = avoiding;
  out["smooth"] = smooth;
  if (smooth) {
    auto e = opy_exponents(w);
    out["opy_exponents"] = e;
    out["opy_factorization"] = factored_string(e);
  }
  out["right_hull"] = RightHull(w).to_string();

  if (const auto match = find_reduction_pair(w)) {
    const auto& p = match->pair;
    out["reduction_pair"] = Json{{"target", to_string(match->target)},
                                 {"permutation", match->permutation.to_string()},
                                 {"kind", to_string(p.kind)},
                                 {"x", {p.x.row, p.x.col}},
                                 {"y", {p.y.row, p.y.col}}};
  } else {
    out["reduction_pair"] = nullptr;
  }
  if (const auto wit = witness_below(w)) {
    out["witness"] = Json{{"u", wit->u.to_string()},
                          {"pattern", wit->pattern.to_string()},
                          {"positions", wit->positions},
                          {"product", cycle_string(wit->product)},
                          {"absolute_length", absolute_length(wit->product)},
                          {"directed_distance", directed_distance(wit->u, w)}};
  } else {
    out["witness"] = nullptr;
  }

  Json elements = Json::array();
  for (const SetPartition& x : lattice.elements()) elements.push_back(x.to_string());
  Json covers = Json::array();
  for (const Cover& c : lattice.covers()) covers.push_back(cover_json(lattice, c));
  out["lattice"] = Json{{"elements", elements}, {"covers", covers}};

  Json table = Json::array();
  for (const PhiImage& img : phi_table(lattice)) {
    table.push_back(Json{{"chain", chain_string(lattice, img.chain)},
                         {"labels", img.chain.label_word()},
                         {"product", cycle_string(img.product)},
                         {"subword", cancel_adjacent(img.subword).to_string()},
                         {"image", img.image.to_string()}});
  }
  out["phi_table"] = table;
  const auto surj = verify_surjective(lattice);
  Json missed = Json::array();
  for (const Permutation& u : surj.missed) missed.push_back(u.to_string());
  out["phi_missed"] = missed;
  return out;
}

namespace {

// Transcribed from the worked example of w = 4132.
const std::vector<std::string> kGoldenElements{"1|2|3|4", "12|3|4", "13|2|4", "14|2|3", "1|2|34",
                                               "123|4",   "124|3",  "12|34",  "134|2",  "1234"};

const std::vector<std::string> kGoldenCovers{
    "1|2|3|4 < 12|3|4 : 1", "1|2|3|4 < 13|2|4 : 2", "1|2|3|4 < 14|2|3 : 3", "1|2|3|4 < 1|2|34 : 4",
    "12|3|4 < 123|4 : 2",   "12|3|4 < 124|3 : 3",   "12|3|4 < 12|34 : 4",   "13|2|4 < 123|4 : 1",
    "13|2|4 < 134|2 : 4",   "14|2|3 < 124|3 : 1",   "14|2|3 < 134|2 : 4",   "1|2|34 < 12|34 : 1",
    "1|2|34 < 134|2 : 3",   "123|4 < 1234 : 4",     "124|3 < 1234 : 4",     "12|34 < 1234 : 3",
    "134|2 < 1234 : 1",
};

const std::vector<std::string> kGoldenTable{
    "0 | e | s1s2s3s2 | 4132",
    "0 < 12|3|4 | t1 | s2s3s2 | 1432",
    "0 < 12|3|4 < 123|4 | t1t2 | s3s2 | 1342",
    "0 < 12|3|4 < 123|4 < 1234 | t1t2t4 | s3 | 1243",
    "0 < 12|3|4 < 124|3 | t1t3 | e | 1234",
    "0 < 12|3|4 < 124|3 < 1234 | t1t3t4 | s2 | 1324",
    "0 < 12|3|4 < 12|34 | t1t4 | s2s3 | 1423",
    "0 < 13|2|4 | t2 | s1s3s2 | 3142",
    "0 < 13|2|4 < 134|2 | t2t4 | s1s3 | 2143",
    "0 < 14|2|3 | t3 | s1 | 2134",
    "0 < 14|2|3 < 134|2 | t3t4 | s1s2 | 3124",
    "0 < 1|2|34 | t4 | s1s2s3 | 4123",
};

const std::vector<std::string> kGoldenReflections{"(1 2)", "(1 3)", "(1 4)", "(3 4)"};
const std::vector<int> kGoldenChiRoots{1, 0, 1, 2};
const std::string kGoldenDistance = "1+4q+5q^2+2q^3";

// Lines only in expected are prefixed "-", lines only in actual "+".
std::vector<std::string> line_diff(const std::vector<std::string>& expected, const std::vector<std::string>& actual) {
  std::vector<std::string> out;
  const std::size_t rows = std::max(expected.size(), actual.size());
  for (std::size_t k = 0; k < rows; ++k) {
    const std::string* e = k < expected.size() ? &expected[k] : nullptr;
    const std::string* a = k < actual.size() ? &actual[k] : nullptr;
    if (e && a && *e == *a) continue;
    const std::string row = "row " + std::to_string(k + 1) + ": ";
    if (e) out.push_back(row + "-" + *e);
    if (a) out.push_back(row + "+" + *a);
  }
  return out;
}

}  // namespace

Report golden() {
  const auto start = std::chrono::steady_clock::now();
  Report report;
  report.command = "golden";
  report.check = "golden-4132";
  report.n = 4;
  report.expression_rule = "canonical";

  const Permutation w = Permutation::parse("4132");
  const ReducedExpression expr = reduced_expression(w);
  const IntersectionLattice lattice(w, expr);
  Json items = Json::array();
  auto compare = [&](const std::string& name, const std::vector<std::string>& expected,
                     const std::vector<std::string>& actual) {
    const auto diff = line_diff(expected, actual);
    ++report.examined;
    items.push_back(Json{{"item", name}, {"pass", diff.empty()}, {"rows", actual.size()}});
    if (diff.empty()) return;
    ++report.failures;
    std::string detail;
    for (const auto& d : diff) detail += (detail.empty() ? "" : "; ") + d;
    report.counterexamples.push_back({name, detail});
  };
  auto compare_one = [&](const std::string& name, const std::string& expected, const std::string& actual) {
    compare(name, {expected}, {actual});
  };

  compare_one("reduced expression", "s1s2s3s2", expr.to_string());
  std::vector<std::string> refl;
  for (const Transposition& t : lattice.hyperplanes()) refl.push_back(t.to_string());
  compare("reflection sequence", kGoldenReflections, refl);
  std::vector<std::string> elements;
  for (const SetPartition& x : lattice.elements()) elements.push_back(x.to_string());
  compare("lattice elements", kGoldenElements, elements);
  compare("labelled covers", kGoldenCovers, cover_lines(lattice));
  compare("chain table", kGoldenTable, table_lines(lattice));
  compare_one("br", "12", std::to_string(interval_size(w)));
  compare_one("re", "12", std::to_string(region_count(w)));

  // The product formula fixes the factors only up to order.
  auto sorted = [](std::vector<int> roots) {
    std::sort(roots.begin(), roots.end());
    return factored_string(roots);
  };
  compare_one("chi factorization", sorted(kGoldenChiRoots), sorted(opy_exponents(w)));
  const auto chi = chromatic_polynomial(w);
  compare_one("chi by deletion-contraction", IntPolynomial::from_roots(kGoldenChiRoots).to_string(), chi.to_string());
  const auto dist = distance_poly(w);
  compare_one("distance polynomial", kGoldenDistance, ascending_string(dist.coefficients(), "q"));
  compare_one("reciprocal chromatic", kGoldenDistance,
              ascending_string(reciprocal_chromatic(chi, w.size()).coefficients(), "q"));

  report.population = report.examined;
  report.pass = report.failures == 0;
  report.payload["items"] = items;
  report.payload["lattice_elements"] = lattice.size();
  report.payload["chains"] = decreasing_chains(lattice).size();
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Json to_json(const Report& report, bool with_timing) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["command"] = report.command;
  out["check"] = report.check;
  out["n"] = report.n;
  out["expression_rule"] = report.expression_rule;
  out["population"] = report.population;
  out["examined"] = report.examined;
  out["pass"] = report.pass;
  out["failures"] = report.failures;
  Json ce = Json::array();
  for (const Counterexample& c : report.counterexamples) ce.push_back(Json{{"subject", c.subject}, {"detail", c.detail}});
  out["counterexamples"] = ce;
  out["counterexamples_truncated"] = report.truncated;
  out["payload"] = report.payload;
  if (with_timing) out["timing"] = Json{{"elapsed_seconds", report.elapsed_seconds}, {"jobs", report.jobs}};
  return out;
}

namespace {

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace

std::string to_text(const Report& report, bool with_timing) {
  std::ostringstream out;
  out << report.check << " n=" << report.n;
  if (report.expression_rule != "n/a") out << " expr=" << report.expression_rule;
  out << ": " << (report.pass ? "PASS" : "FAIL") << " (" << report.examined << " examined of " << report.population
      << ", " << report.failures << " failing)\n";
  for (const auto& [key, value] : report.payload.items()) {
    if (value.is_array()) {
      for (const auto& item : value) {
        if (item.is_object() && item.contains("item")) {
          out << "  " << (item["pass"].get<bool>() ? "ok   " : "FAIL ") << item["item"].get<std::string>() << "\n";
        }
      }
      continue;
    }
    out << "  " << key << ": " << scalar_text(value) << "\n";
  }
  for (const Counterexample& c : report.counterexamples) out << "  counterexample " << c.subject << ": " << c.detail << "\n";
  if (report.truncated) out << "  (more counterexamples omitted; use --all-counterexamples)\n";
  if (with_timing) out << "  elapsed " << report.elapsed_seconds << " s with " << report.jobs << " job(s)\n";
  return out.str();
}

std::string analyze_text(const Json& a) {
  std::ostringstream out;
  for (const auto& [key, value] : a.items()) {
    if (key == "schema_version" || key == "command" || key == "lattice" || key == "phi_table") continue;
    if (key == "right_hull") {
      out << "right_hull:\n";
      std::istringstream rows(value.get<std::string>());
      for (std::string row; std::getline(rows, row);) out << "  " << row << "\n";
      continue;
    }
    if (value.is_object() && value.contains("text")) {
      out << key << ": " << value["text"].get<std::string>() << "\n";
    } else if (value.is_object()) {
      out << key << ":";
      for (const auto& [k, v] : value.items()) out << " " << k << "=" << scalar_text(v);
      out << "\n";
    } else if (value.is_array()) {
      out << key << ":";
      for (const auto& v : value) out << " " << scalar_text(v);
      out << "\n";
    } else {
      out << key << ": " << scalar_text(value) << "\n";
    }
  }
  out << "lattice (" << a["lattice"]["elements"].size() << " elements):\n";
  for (const auto& c : a["lattice"]["covers"]) {
    out << "  " << c["lower"].get<std::string>() << " < " << c["upper"].get<std::string>() << " : "
        << c["label"].get<int>() << "\n";
  }
  out << "phi table (" << a["phi_table"].size() << " chains):\n";
  for (const auto& row : a["phi_table"]) {
    out << "  " << row["chain"].get<std::string>() << " | " << row["labels"].get<std::string>() << " | "
        << row["product"].get<std::string>() << " | " << row["subword"].get<std::string>() << " | "
        << row["image"].get<std::string>() << "\n";
  }
  return out.str();
}

}  // namespace permlat::verifier
