#pragma once

// Table reproduction, seeded verification suites and single-value evaluation
// behind the command-line tool.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "toader/bounds.hpp"
#include "toader/means.hpp"

namespace toader {

/// Shortest round-trip decimal, or fixed with `digits` decimals.
std::string format_number(double value, std::optional<int> digits = std::nullopt);

// ---------------------------------------------------------------------------
// Comparison table

struct TableSpec {
  std::vector<double> grid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  std::vector<BoundFamily> families = {kAllFamilies.begin(), kAllFamilies.end()};
  std::optional<int> precision;  ///< decimals in CSV output; unset = round-trip
};

/// Parses "start:stop:step" (stop inclusive). Points are snapped to 1e-12 so
/// that 0.1:0.9:0.1 yields the decimals 0.1, ..., 0.9. Throws ConfigError.
std::vector<double> parse_grid(std::string_view text);

/// Throws ConfigError unless the grid is non-empty, inside (0, 1) and
/// strictly increasing, and the family list is non-empty.
void validate(const TableSpec& spec);

std::vector<TightnessRow> build_table(const TableSpec& spec);

/// Header "r,E,<columns>" followed by one LF-terminated line per row.
void write_table_csv(std::ostream& out, const TableSpec& spec,
                     const std::vector<TightnessRow>& rows);

// ---------------------------------------------------------------------------
// Verification suites

enum class Suite { Thm31, Thm32, Eq14_15, Eq16, Eq41, Dominance, Identities };

std::string_view suite_name(Suite suite) noexcept;

/// Accepts the names printed by suite_name(), case-insensitively. Throws ConfigError.
Suite parse_suite(std::string_view name);

struct VerificationReport {
  std::string suite_name;
  std::uint64_t samples = 0;
  std::uint64_t violations = 0;
  double worst_margin = 0.0;  ///< smallest slack observed over all checks
  std::string worst_case_input;
  std::uint64_t seed = 0;
};

/// Single-line JSON with the report's fields.
std::string to_json(const VerificationReport& report);

/// Draws the pair for (seed, index, attempt): a = 1 and b log-uniform in
/// [1e-6, 1). Depends only on its arguments.
std::pair<double, double> sample_pair(std::uint64_t seed, std::uint64_t index,
                                      std::uint64_t attempt);

using PairSampler =
    std::function<std::pair<double, double>(std::uint64_t seed, std::uint64_t index,
                                            std::uint64_t attempt)>;

struct VerifyOptions {
  unsigned threads = 0;           ///< 0 = hardware concurrency
  PairSampler sampler = sample_pair;
};

/// Runs one suite. Pair suites (THM31, THM32, EQ14_15, EQ16) draw `samples`
/// pairs, resampling any draw with a = b; grid suites (EQ41, DOMINANCE,
/// IDENTITIES) use `samples` grid points. The report depends only on
/// (suite, samples, seed, sampler), never on the thread count.
VerificationReport run_verification(Suite suite, std::uint64_t samples, std::uint64_t seed,
                                    const VerifyOptions& options = {});

/// Tolerances of the IDENTITIES suite.
inline constexpr double kLandenTolerance = 1e-12;
inline constexpr double kPolynomialTolerance = 1e-10;
inline constexpr double kDerivativeTolerance = 1e-6;
inline constexpr double kDerivativeStep = 1e-6;

/// |poly - (1-x)^4| / scale, where scale is the square of the leading
/// polynomial operand. Used for both gap identities.
double poly_identity_residual_42(double x);
double poly_identity_residual_L(double x);

// ---------------------------------------------------------------------------
// Single evaluation

/// Evaluates a named target: arithmetic, centroidal, quadratic, geometric,
/// toader (a,b); power (q,a,b); ellip_k, ellip_e, f31, f32, lemma21,
/// lemma23 or any bound family (r). Throws ConfigError on an unknown target
/// or wrong arity, and the library's DomainError family on bad arguments.
double eval_single(std::string_view target, std::span<const double> args);

/// Comma-separated reals, e.g. "1,0.5". Throws ConfigError.
std::vector<double> parse_args(std::string_view text);

}  // namespace toader
