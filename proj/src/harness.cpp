#include "toader/harness.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "toader/elliptic.hpp"
#include "toader/errors.hpp"

namespace toader {
namespace {

constexpr double kLogMinRatio = -13.815510557964274;  // ln(1e-6)
constexpr std::uint64_t kMaxResamples = 64;

bool iequals(std::string_view lhs, std::string_view rhs) {
  return lhs.size() == rhs.size() &&
         std::equal(lhs.begin(), lhs.end(), rhs.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_real(std::string_view text) {
  text = trim(text);
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ConfigError("not a number: '" + std::string(text) + "'");
  }
  return value;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Outcome of one sample: the smallest slack over its checks and whether any
// check failed.
struct Outcome {
  double margin = std::numeric_limits<double>::infinity();
  bool violated = false;
  std::string input;

  void slack(double value) {
    if (!(value > 0.0)) {
      violated = true;
    }
    if (std::isnan(value)) {
      value = -std::numeric_limits<double>::infinity();
    }
    margin = std::min(margin, value);
  }
};

struct Aggregate {
  std::uint64_t violations = 0;
  double worst = std::numeric_limits<double>::infinity();
  std::uint64_t worst_index = std::numeric_limits<std::uint64_t>::max();
  std::string worst_input;

  void add(std::uint64_t index, Outcome&& outcome) {
    violations += outcome.violated ? 1 : 0;
    if (outcome.margin < worst || (outcome.margin == worst && index < worst_index)) {
      worst = outcome.margin;
      worst_index = index;
      worst_input = std::move(outcome.input);
    }
  }

  void merge(Aggregate&& other) {
    violations += other.violations;
    if (other.worst < worst || (other.worst == worst && other.worst_index < worst_index)) {
      worst = other.worst;
      worst_index = other.worst_index;
      worst_input = std::move(other.worst_input);
    }
  }
};

// Evaluates fn(i) for i in [0, count) over contiguous chunks. min and sum
// with index tie-breaking make the result independent of the split.
template <typename Fn>
Aggregate evaluate_all(std::uint64_t count, unsigned threads, Fn&& fn) {
  if (threads == 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(count, 1)));
  std::vector<Aggregate> partial(threads);
  auto work = [&](unsigned t) {
    const std::uint64_t begin = count * t / threads;
    const std::uint64_t end = count * (t + 1) / threads;
    for (std::uint64_t i = begin; i < end; ++i) {
      partial[t].add(i, fn(i));
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back(work, t);
    }
  }
  Aggregate total;
  for (auto& part : partial) {
    total.merge(std::move(part));
  }
  return total;
}

std::string describe_pair(const PositivePair& p) {
  return "a=" + format_number(p.a()) + ",b=" + format_number(p.b());
}

// r_i = (i + 1)/(n + 1): n interior points of (0, 1).
double interior_point(std::uint64_t i, std::uint64_t n) {
  return static_cast<double>(i + 1) / static_cast<double>(n + 1);
}

// n points from lo to hi inclusive.
double closed_point(std::uint64_t i, std::uint64_t n, double lo, double hi) {
  if (n == 1) {
    return lo;
  }
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

Outcome pair_outcome(Suite suite, const PositivePair& p) {
  Outcome out;
  out.input = describe_pair(p);
  switch (suite) {
    case Suite::Thm31: {
      const Envelope s = envelope_31_slack(p);
      out.slack(s.lower);
      out.slack(s.upper);
      break;
    }
    case Suite::Thm32: {
      const Envelope s = envelope_32_slack(p);
      out.slack(s.lower);
      out.slack(s.upper);
      break;
    }
    case Suite::Eq14_15: {
      const double upper_exponent = std::numbers::ln2 / std::log(0.5 * std::numbers::pi);
      out.slack(toader_power_gap(1.5, p));
      out.slack(-toader_power_gap(upper_exponent, p));
      break;
    }
    case Suite::Eq16: {
      const double t_excess = toader_excess(p);
      out.slack(t_excess);
      out.slack(classical_excess(MeanKind::Quadratic, p) - t_excess);
      break;
    }
    default:
      throw ConfigError("not a pair suite");
  }
  return out;
}

Outcome identities_outcome(std::uint64_t i, std::uint64_t n) {
  Outcome out;
  const double r_landen = closed_point(i, n, 0.001, 0.99);
  const double r_deriv = closed_point(i, n, 0.01, 0.99);
  const double x = interior_point(i, n);
  out.input = "r=" + format_number(r_landen) + ",r_deriv=" + format_number(r_deriv) +
              ",x=" + format_number(x);

  const LandenSides sides = landen_check(Modulus(r_landen));
  out.slack(1.0 - std::abs(sides.lhs - sides.rhs) / kLandenTolerance);

  const double h = kDerivativeStep;
  const EllipticDerivatives d = elliptic_derivatives(Modulus(r_deriv));
  const double dk_fd =
      (ellip_k(Modulus(r_deriv + h)) - ellip_k(Modulus(r_deriv - h))) / (2.0 * h);
  const double de_fd =
      (ellip_e(Modulus(r_deriv + h)) - ellip_e(Modulus(r_deriv - h))) / (2.0 * h);
  out.slack(1.0 - std::abs(d.dk_dr - dk_fd) / (kDerivativeTolerance * std::abs(d.dk_dr)));
  out.slack(1.0 - std::abs(d.de_dr - de_fd) / (kDerivativeTolerance * std::abs(d.de_dr)));

  out.slack(1.0 - poly_identity_residual_42(x) / kPolynomialTolerance);
  out.slack(1.0 - poly_identity_residual_L(x) / kPolynomialTolerance);
  return out;
}

Outcome grid_outcome(Suite suite, std::uint64_t i, std::uint64_t n) {
  switch (suite) {
    case Suite::Eq41: {
      const double r = interior_point(i, n);
      const Modulus m(r);
      Outcome out;
      out.input = "r=" + format_number(r);
      out.slack(e_bound_slack(BoundFamily::Lower41, m));
      out.slack(e_bound_slack(BoundFamily::Upper41J, m));
      return out;
    }
    case Suite::Dominance: {
      const double x = interior_point(i, n);
      Outcome out;
      out.input = "x=" + format_number(x);
      out.slack(gap_lower41_vs_lower42(x));
      out.slack(bracket_gap_lower41_vs_lowerL(x));
      if (poly_identity_residual_42(x) > kPolynomialTolerance ||
          poly_identity_residual_L(x) > kPolynomialTolerance) {
        out.violated = true;
      }
      return out;
    }
    case Suite::Identities:
      return identities_outcome(i, n);
    default:
      throw ConfigError("not a grid suite");
  }
}

constexpr std::array<std::pair<Suite, std::string_view>, 7> kSuiteNames = {{
    {Suite::Thm31, "THM31"},
    {Suite::Thm32, "THM32"},
    {Suite::Eq14_15, "EQ14_15"},
    {Suite::Eq16, "EQ16"},
    {Suite::Eq41, "EQ41"},
    {Suite::Dominance, "DOMINANCE"},
    {Suite::Identities, "IDENTITIES"},
}};

}  // namespace

std::string format_number(double value, std::optional<int> digits) {
  std::array<char, 512> buf{};
  std::to_chars_result res{};
  if (digits) {
    res = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed,
                        *digits);
  } else {
    res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  }
  if (res.ec != std::errc()) {
    throw ConfigError("cannot format number");
  }
  return std::string(buf.data(), res.ptr);
}

std::vector<double> parse_grid(std::string_view text) {
  std::array<double, 3> parts{};
  std::size_t count = 0;
  while (true) {
    const auto colon = text.find(':');
    if (count == parts.size()) {
      throw ConfigError("grid must be start:stop:step");
    }
    parts[count++] = parse_real(text.substr(0, colon));
    if (colon == std::string_view::npos) {
      break;
    }
    text.remove_prefix(colon + 1);
  }
  if (count != 3) {
    throw ConfigError("grid must be start:stop:step");
  }
  const auto [start, stop, step] = parts;
  if (!(step > 0.0) || !(stop >= start)) {
    throw ConfigError("grid needs step > 0 and stop >= start");
  }
  const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  if (n > 10'000'000) {
    throw ConfigError("grid too large");
  }
  std::vector<double> grid;
  grid.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double raw = start + static_cast<double>(i) * step;
    grid.push_back(std::round(raw * 1e12) / 1e12);
  }
  return grid;
}

void validate(const TableSpec& spec) {
  if (spec.grid.empty()) {
    throw ConfigError("table grid is empty");
  }
  if (spec.families.empty()) {
    throw ConfigError("table needs at least one bound family");
  }
  for (std::size_t i = 0; i < spec.grid.size(); ++i) {
    const double r = spec.grid[i];
    if (!(r > 0.0 && r < 1.0)) {
      throw ConfigError("grid values must lie strictly inside (0, 1)");
    }
    if (i > 0 && !(r > spec.grid[i - 1])) {
      throw ConfigError("grid values must be strictly increasing");
    }
  }
  if (spec.precision && (*spec.precision < 0 || *spec.precision > 40)) {
    throw ConfigError("precision must be between 0 and 40");
  }
}

std::vector<TightnessRow> build_table(const TableSpec& spec) {
  validate(spec);
  std::vector<TightnessRow> rows;
  rows.reserve(spec.grid.size());
  for (double r : spec.grid) {
    rows.push_back(comparison_row(Modulus(r), spec.families));
  }
  return rows;
}

void write_table_csv(std::ostream& out, const TableSpec& spec,
                     const std::vector<TightnessRow>& rows) {
  out << "r,E";
  for (BoundFamily family : spec.families) {
    out << ',' << family_column(family);
  }
  out << '\n';
  for (const auto& row : rows) {
    out << format_number(row.r) << ',' << format_number(row.e_true, spec.precision);
    for (const auto& v : row.values) {
      out << ',' << format_number(v.value, spec.precision);
    }
    out << '\n';
  }
}

std::string_view suite_name(Suite suite) noexcept {
  for (const auto& [s, name] : kSuiteNames) {
    if (s == suite) {
      return name;
    }
  }
  return "UNKNOWN";
}

Suite parse_suite(std::string_view name) {
  for (const auto& [s, spelled] : kSuiteNames) {
    if (iequals(name, spelled)) {
      return s;
    }
  }
  throw ConfigError("unknown suite '" + std::string(name) + "'");
}

std::string to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["suite_name"] = report.suite_name;
  j["samples"] = report.samples;
  j["violations"] = report.violations;
  j["worst_margin"] = report.worst_margin;
  j["worst_case_input"] = report.worst_case_input;
  j["seed"] = report.seed;
  return j.dump();
}

std::pair<double, double> sample_pair(std::uint64_t seed, std::uint64_t index,
                                      std::uint64_t attempt) {
  const std::uint64_t bits = splitmix64(splitmix64(splitmix64(seed) ^ index) ^ attempt);
  const double u = static_cast<double>(bits >> 11) * 0x1.0p-53;  // [0, 1)
  return {1.0, std::exp(kLogMinRatio * (1.0 - u))};
}

VerificationReport run_verification(Suite suite, std::uint64_t samples, std::uint64_t seed,
                                    const VerifyOptions& options) {
  if (samples < 1) {
    throw ConfigError("samples must be >= 1");
  }
  Aggregate total;
  switch (suite) {
    case Suite::Thm31:
    case Suite::Thm32:
    case Suite::Eq14_15:
    case Suite::Eq16: {
      const PairSampler& sampler = options.sampler;
      total = evaluate_all(samples, options.threads, [&](std::uint64_t i) {
        for (std::uint64_t attempt = 0; attempt < kMaxResamples; ++attempt) {
          const auto [a, b] = sampler(seed, i, attempt);
          const PositivePair p(a, b);
          if (!p.diagonal()) {
            return pair_outcome(suite, p);
          }
        }
        throw ConfigError("sampler kept producing a = b");
      });
      break;
    }
    case Suite::Eq41:
    case Suite::Dominance:
    case Suite::Identities:
      total = evaluate_all(samples, options.threads,
                           [&](std::uint64_t i) { return grid_outcome(suite, i, samples); });
      break;
  }
  VerificationReport report;
  report.suite_name = std::string(suite_name(suite));
  report.samples = samples;
  report.violations = total.violations;
  report.worst_margin = total.worst;
  report.worst_case_input = total.worst_input;
  report.seed = seed;
  return report;
}

double poly_identity_residual_42(double x) {
  const double d = 1.0 - x;
  const double p = 3.0 * x * x + 2.0 * x + 3.0;
  return std::abs(poly_gap_lower42(x) - d * d * d * d) / (p * p);
}

double poly_identity_residual_L(double x) {
  const double d = 1.0 - x;
  const double p = 5.0 * x * x + 6.0 * x + 5.0;
  return std::abs(gap_lower41_vs_lowerL(x) - d * d * d * d) / (p * p);
}

std::vector<double> parse_args(std::string_view text) {
  std::vector<double> values;
  while (true) {
    const auto comma = text.find(',');
    values.push_back(parse_real(text.substr(0, comma)));
    if (comma == std::string_view::npos) {
      break;
    }
    text.remove_prefix(comma + 1);
  }
  return values;
}

double eval_single(std::string_view target, std::span<const double> args) {
  auto require_arity = [&](std::size_t n) {
    if (args.size() != n) {
      throw ConfigError("target '" + std::string(target) + "' takes " + std::to_string(n) +
                        " argument(s), got " + std::to_string(args.size()));
    }
  };
  constexpr std::array<std::pair<std::string_view, MeanKind>, 4> kMeans = {{
      {"arithmetic", MeanKind::Arithmetic},
      {"centroidal", MeanKind::Centroidal},
      {"quadratic", MeanKind::Quadratic},
      {"geometric", MeanKind::Geometric},
  }};
  for (const auto& [name, kind] : kMeans) {
    if (iequals(target, name)) {
      require_arity(2);
      return classical_mean(kind, PositivePair(args[0], args[1]));
    }
  }
  if (iequals(target, "toader")) {
    require_arity(2);
    return toader(PositivePair(args[0], args[1]));
  }
  if (iequals(target, "power")) {
    require_arity(3);
    return power_mean(args[0], PositivePair(args[1], args[2]));
  }

  using ModulusFn = double (*)(const Modulus&);
  constexpr std::array<std::pair<std::string_view, ModulusFn>, 6> kModulusFns = {{
      {"ellip_k", &ellip_k},
      {"ellip_e", &ellip_e},
      {"f31", &quotient_f31},
      {"f32", &quotient_f32},
      {"lemma21", &lemma21_ratio},
      {"lemma23", &lemma23_value},
  }};
  for (const auto& [name, fn] : kModulusFns) {
    if (iequals(target, name)) {
      require_arity(1);
      return fn(Modulus(args[0]));
    }
  }
  BoundFamily family{};
  try {
    family = parse_family(target);
  } catch (const ConfigError&) {
    throw ConfigError("unknown target '" + std::string(target) + "'");
  }
  require_arity(1);
  return e_bound(family, Modulus(args[0]));
}

}  // namespace toader
