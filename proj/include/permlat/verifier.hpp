#pragma once

// Exhaustive property sweeps over S_n, single-permutation analysis and the
// 4132 golden comparison, all producing JSON-ready reports.

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "permlat/permutation.hpp"

namespace permlat::verifier {

inline constexpr int kSchemaVersion = 1;

// Bad input on the command surface (unknown check, ceiling exceeded, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ExpressionRule { kCanonical, kAll };
std::string to_string(ExpressionRule rule);
// Throws UsageError.
ExpressionRule parse_expression_rule(const std::string& text);

struct CheckInfo {
  std::string name;
  int ceiling = 0;             // largest n accepted
  bool uses_expression = false;
  std::string summary;
};
const std::vector<CheckInfo>& checks();
// Throws UsageError naming the known checks.
const CheckInfo& find_check(const std::string& name);

// --expr all is refused above this n: the number of reduced expressions
// explodes (768 for the longest element of S_5, 292864 for S_6).
inline constexpr int kAllExpressionsCeiling = 5;
inline constexpr int kAnalyzeCeiling = 8;

struct VerifyOptions {
  std::string check;
  int n = 0;
  int jobs = 1;
  ExpressionRule expr = ExpressionRule::kCanonical;
  std::size_t counterexample_cap = 10;
  bool full_dump = false;
  bool check_invariants = true;  // eager phi invariant checks
};

struct Counterexample {
  std::string subject;  // permutation, plus the expression when relevant
  std::string detail;
};

struct Report {
  std::string command;
  std::string check;
  int n = 0;
  std::string expression_rule;
  std::uint64_t population = 0;  // permutations swept
  std::uint64_t examined = 0;    // those the property applies to
  std::uint64_t failures = 0;
  bool pass = true;
  std::vector<Counterexample> counterexamples;
  bool truncated = false;
  nlohmann::ordered_json payload = nlohmann::ordered_json::object();
  // Not part of the comparison payload.
  double elapsed_seconds = 0.0;
  int jobs = 1;
};

// Throws UsageError for an unknown check, n outside [1, ceiling], jobs < 1,
// or --expr all where it does not apply.
Report run_check(const VerifyOptions& options);

// Every quantity of one permutation.  Throws UsageError when n exceeds
// kAnalyzeCeiling.
nlohmann::ordered_json analyze(const Permutation& w);

// The 4132 example against embedded fixtures.
Report golden();

nlohmann::ordered_json to_json(const Report& report, bool with_timing);
std::string to_text(const Report& report, bool with_timing);
std::string analyze_text(const nlohmann::ordered_json& analysis);

// Cancels adjacent equal letters until none remain: s2s2 -> e.
ReducedExpression cancel_adjacent(const ReducedExpression& word);
// Ascending text form, e.g. "1+4q+5q^2+2q^3".
std::string ascending_string(const std::vector<std::int64_t>& coefficients, const std::string& variable);

}  // namespace permlat::verifier
