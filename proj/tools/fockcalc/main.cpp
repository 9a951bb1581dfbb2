#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fockcalc/errors.hpp"
#include "fockcalc/expr.hpp"
#include "fockcalc/json.hpp"
#include "fockcalc/suites.hpp"
#include "fockcalc/vertex.hpp"

namespace {

using namespace fockcalc;
using nlohmann::json;

enum Exit { kOk = 0, kFailedCheck = 1, kParse = 2, kWindow = 3, kCharge = 4 };

std::vector<std::string> split_windows(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    parts.push_back(text.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return parts;
}

void print_series_text(const LaurentSeries<FockVector>& s, const std::string& var) {
  std::cout << var << "-window [" << s.window().lo << "," << s.window().hi << "]";
  if (s.zero_below()) std::cout << " zero_below";
  if (s.zero_above()) std::cout << " zero_above";
  std::cout << "\n";
  for (const auto& [k, v] : s.terms()) std::cout << "  " << var << "^" << k << ": " << to_string(v) << "\n";
}

int run_eval(const std::string& expr_text, const std::string& seed_text, const std::string& window_text,
             const std::string& format) {
  const FockVector seed = cli::parse_seed(seed_text);
  std::optional<Window> zwin, wwin;
  if (!window_text.empty()) {
    auto parts = split_windows(window_text);
    if (parts.size() > 2) throw cli::ParseError("at most two windows (z,w) are accepted");
    zwin = cli::parse_window(parts[0]);
    if (parts.size() == 2) wwin = cli::parse_window(parts[1]);
  }

  // The DJKM generating function is the one bivariate output.
  if (expr_text == "djkm_gen" || wwin) {
    if (expr_text != "djkm_gen") throw cli::ParseError("a bivariate window needs the expression djkm_gen");
    if (!zwin || !wwin) throw InsufficientWindow("djkm_gen needs --window ZLO:ZHI,WLO:WHI");
    auto g = djkm_generating(seed, *zwin, *wwin);
    if (format == "json") {
      std::cout << series_to_json(g, "z", "w").dump() << "\n";
    } else {
      for (const auto& [i, inner] : g.terms()) {
        for (const auto& [e, v] : inner.terms()) std::cout << "z^" << i << " w^" << e << ": " << to_string(v) << "\n";
      }
    }
    return kOk;
  }

  const auto expr = cli::parse_expr(expr_text);
  const auto result = cli::eval_expr(expr, seed, zwin);
  if (format == "json") {
    std::cout << (result.is_series ? series_to_json(result.series) : json(result.vector)).dump() << "\n";
  } else if (result.is_series) {
    print_series_text(result.series, "z");
  } else {
    std::cout << to_string(result.vector) << "\n";
  }
  return kOk;
}

int run_check(const std::string& name, const std::string& size, bool inject) {
  cli::SuiteOptions options;
  options.size = size == "small" ? cli::SuiteSize::Small : cli::SuiteSize::Default;
  options.inject_sign_fault = inject;
  std::vector<std::string> names;
  if (name == "all") {
    names = cli::suite_names();
  } else {
    names.push_back(name);
  }
  bool all_ok = true;
  for (const auto& n : names) {
    auto report = cli::run_suite(n, options);
    std::cout << report.name << ": " << (report.ok() ? "PASS " : "FAIL ") << report.passed << "/" << report.total
              << "\n";
    if (!report.ok()) {
      all_ok = false;
      if (report.counterexample) std::cout << "counterexample: " << report.counterexample->dump() << "\n";
    }
  }
  return all_ok ? kOk : kFailedCheck;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fockcalc: exact Schubert derivations, vertex operators and the DJKM action on the fermionic Fock space"};
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "Apply an operator expression to a Fock basis vector");
  std::string expr_text, seed_text, window_text, format = "json";
  eval->add_option("--expr", expr_text, "Operator expression, applied right to left")->required();
  eval->add_option("--seed", seed_text, R"(Seed vector: {"charge":m,"shape":[..]} or a term list)")->required();
  eval->add_option("--window", window_text, "LO:HI, or ZLO:ZHI,WLO:WHI for djkm_gen");
  eval->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  eval->footer(cli::grammar_help() +
               "\n\n  djkm_gen                 (alone) the DJKM generating function; needs --window ZLO:ZHI,WLO:WHI");

  auto* check = app.add_subcommand("check", "Run an identity suite");
  std::string suite = "all", size = "default";
  bool inject = false;
  std::vector<std::string> suite_choices = cli::suite_names();
  suite_choices.push_back("all");
  check->add_option("suite", suite, "Suite name")->check(CLI::IsMember(suite_choices));
  check->add_option("--size", size, "Case ranges")->check(CLI::IsMember({"small", "default"}));
  check->add_flag("--inject-sign-fault", inject, "Corrupt one comparison per suite (failure-path test)")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*eval) return run_eval(expr_text, seed_text, window_text, format);
    return run_check(suite, size, inject);
  } catch (const cli::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const InsufficientWindow& e) {
    std::cerr << "insufficient window: " << e.what() << "\n";
    return kWindow;
  } catch (const ChargeMixed& e) {
    std::cerr << "charge error: " << e.what() << "\n";
    return kCharge;
  } catch (const DimensionMismatch& e) {
    std::cerr << "dimension error: " << e.what() << "\n";
    return kCharge;
  } catch (const ShapeOutOfBox& e) {
    std::cerr << "dimension error: " << e.what() << "\n";
    return kCharge;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailedCheck;
  }
}
