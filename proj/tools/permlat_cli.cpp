#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

#include "permlat/permutation.hpp"
#include "permlat/verifier.hpp"

namespace v = permlat::verifier;

namespace {

constexpr int kPass = 0;
constexpr int kPropertyFailure = 1;
constexpr int kUsage = 2;

int emit(const v::Report& report, bool json, bool timing) {
  if (json) {
    std::cout << v::to_json(report, timing).dump(2) << "\n";
  } else {
    std::cout << v::to_text(report, timing);
  }
  return report.pass ? kPass : kPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bruhat intervals, inversion arrangements and exhaustive checks over S_n"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  bool no_timing = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--no-timing", no_timing, "Leave elapsed time out of the report");

  auto* analyze = app.add_subcommand("analyze", "Every quantity of one permutation");
  std::string perm_text;
  analyze->add_option("perm", perm_text, "One-line notation, e.g. 4132 or 10,3,1,2,...")->required();

  auto* verify = app.add_subcommand("verify", "Exhaustive property check over S_n");
  v::VerifyOptions options;
  std::string expr = "canonical";
  bool skip_invariants = false;
  verify->add_option("--check", options.check, "Property to check")->required();
  verify->add_option("--n", options.n, "Size of the symmetric group")->required();
  verify->add_option("--jobs", options.jobs, "Worker threads");
  verify->add_option("--expr", expr, "Reduced expression rule: canonical or all");
  verify->add_option("--cap", options.counterexample_cap, "Counterexamples kept in the report");
  verify->add_flag("--all-counterexamples", options.full_dump, "Keep every counterexample");
  verify->add_flag("--skip-invariants", skip_invariants, "Skip the per-chain phi invariant checks");

  auto* golden = app.add_subcommand("golden", "Compare the 4132 example with its fixtures");
  auto* list = app.add_subcommand("checks", "List the available checks and their n ceilings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const bool json = format == "json";
  const bool timing = !no_timing;
  try {
    if (analyze->parsed()) {
      permlat::Permutation w;
      try {
        w = permlat::Permutation::parse(perm_text);
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: cannot parse permutation \"" << perm_text << "\": " << e.what() << "\n";
        return kUsage;
      }
      const auto a = v::analyze(w);
      std::cout << (json ? a.dump(2) + "\n" : v::analyze_text(a));
      return kPass;
    }
    if (verify->parsed()) {
      options.expr = v::parse_expression_rule(expr);
      options.check_invariants = !skip_invariants;
      return emit(v::run_check(options), json, timing);
    }
    if (golden->parsed()) return emit(v::golden(), json, timing);
    if (list->parsed()) {
      nlohmann::ordered_json out = nlohmann::ordered_json::array();
      for (const auto& c : v::checks()) {
        if (json) {
          out.push_back({{"name", c.name}, {"ceiling", c.ceiling}, {"uses_expression", c.uses_expression},
                         {"property", c.summary}});
        } else {
          std::cout << c.name << " (n <= " << c.ceiling << "): " << c.summary << "\n";
        }
      }
      if (json) std::cout << nlohmann::ordered_json{{"schema_version", v::kSchemaVersion}, {"checks", out}}.dump(2) << "\n";
      return kPass;
    }
  } catch (const v::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
