// Command-line front end: comparison table, verification suites, single
// evaluations and the sharp constants.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "toader/bounds.hpp"
#include "toader/errors.hpp"
#include "toader/harness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

// Writes to `path` or stdout.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw toader::ConfigError("cannot open '" + path + "' for writing");
  }
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toader mean, elliptic integrals and their sharp bounds"};
  app.require_subcommand(1);

  auto* table = app.add_subcommand("table", "Reproduce the J/D/Q/Y comparison table as CSV");
  std::string grid;
  std::optional<int> table_digits;
  std::string table_out;
  table->add_option("--grid", grid, "start:stop:step (default 0.1:0.9:0.1)");
  table->add_option("--digits", table_digits, "Fixed decimals instead of round-trip output");
  table->add_option("--out", table_out, "Write CSV to FILE instead of stdout");

  auto* verify = app.add_subcommand("verify", "Run one verification suite");
  std::string suite;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string verify_out;
  verify->add_option("--suite", suite,
                     "THM31, THM32, EQ14_15, EQ16, EQ41, DOMINANCE or IDENTITIES")
      ->required();
  verify->add_option("--samples", samples, "Number of pairs or grid points")->required();
  verify->add_option("--seed", seed, "64-bit seed")->required();
  verify->add_option("--threads", threads, "Worker threads (0 = all cores)");
  verify->add_option("--out", verify_out, "Write the JSON report to FILE");

  auto* eval = app.add_subcommand("eval", "Evaluate a single mean, bound or integral");
  std::string target;
  std::string args_text;
  std::optional<int> eval_digits;
  eval->add_option("--target", target, "Target name, e.g. toader, ellip_k, UPPER_42_D")
      ->required();
  eval->add_option("--args", args_text, "Comma-separated arguments, e.g. 1,0.5")->required();
  eval->add_option("--digits", eval_digits, "Fixed decimals instead of round-trip output");

  auto* constants = app.add_subcommand("constants", "Print the sharp constants");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*table) {
      toader::TableSpec spec;
      if (!grid.empty()) {
        spec.grid = toader::parse_grid(grid);
      }
      spec.precision = table_digits;
      const auto rows = toader::build_table(spec);
      std::ostringstream csv;
      toader::write_table_csv(csv, spec, rows);
      emit(table_out, csv.str());
      return kExitOk;
    }
    if (*verify) {
      toader::VerifyOptions options;
      options.threads = threads;
      const auto report =
          toader::run_verification(toader::parse_suite(suite), samples, seed, options);
      const std::string json = toader::to_json(report) + "\n";
      std::cout << json;
      if (!verify_out.empty()) {
        emit(verify_out, json);
      }
      return report.violations == 0 ? kExitOk : kExitViolation;
    }
    if (*eval) {
      const auto args = toader::parse_args(args_text);
      const double value = toader::eval_single(target, args);
      std::cout << toader::format_number(value, eval_digits) << '\n';
      return kExitOk;
    }
    if (*constants) {
      const auto& c = toader::kSharp;
      std::printf("alpha1 %#.17g\nbeta1 %#.17g\nalpha2 %#.17g\nbeta2 %#.17g\n", c.alpha1,
                  c.beta1, c.alpha2, c.beta2);
      return kExitOk;
    }
  } catch (const toader::DivergentIntegral& e) {
    std::cerr << "error: divergent integral: " << e.what() << '\n';
    return kExitUsage;
  } catch (const toader::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
