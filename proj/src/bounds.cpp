#include "toader/bounds.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "toader/errors.hpp"

namespace toader {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

struct FamilyInfo {
  BoundFamily family;
  std::string_view name;
  std::string_view column;
};

constexpr std::array<FamilyInfo, 8> kFamilyInfo = {{
    {BoundFamily::Upper41J, "UPPER_41_J", "J"},
    {BoundFamily::Upper42D, "UPPER_42_D", "D"},
    {BoundFamily::Upper43Q, "UPPER_43_Q", "Q"},
    {BoundFamily::UpperLY, "UPPER_L_Y", "Y"},
    {BoundFamily::Lower41, "LOWER_41", "lower41"},
    {BoundFamily::Lower42, "LOWER_42", "lower42"},
    {BoundFamily::Lower43, "LOWER_43", "lower43"},
    {BoundFamily::LowerL, "LOWER_L", "lowerL"},
}};

bool iequals(std::string_view lhs, std::string_view rhs) {
  return lhs.size() == rhs.size() &&
         std::equal(lhs.begin(), lhs.end(), rhs.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

void require_open(const Modulus& m, const char* what) {
  if (m.r() <= 0.0 || m.r() >= 1.0) {
    throw DomainError(std::string(what) + " requires 0 < r < 1");
  }
}

// The modulus rho = (1 - r')/(1 + r') = r^2/(1 + r')^2 that maps E(r) onto
// the Toader mean of the pair (1, r').
Modulus descended(const Modulus& m) {
  const double r = m.r();
  const double rp = m.r_prime();
  const double rho = r * r / ((1.0 + rp) * (1.0 + rp));
  const double rho_prime = 2.0 * std::sqrt(rp) / (1.0 + rp);
  if (rho <= rho_prime) {
    return Modulus(rho);
  }
  return Modulus::from_complement(std::min(rho_prime, 1.0));
}

// Linear-envelope slack from the Landen modulus rho of the pair:
//   (T - A)/A = rho^2/4 + tail,  (C - A)/A = rho^2/3.
Envelope linear_slack(const Modulus& rho, double alpha, double beta) {
  const double x = rho.r() * rho.r();
  const double tail = landen_excess_tail(rho);
  return {tail + (0.25 - alpha / 3.0) * x, (beta / 3.0 - 0.25) * x - tail};
}

}  // namespace

bool is_upper(BoundFamily family) noexcept {
  switch (family) {
    case BoundFamily::Upper41J:
    case BoundFamily::Upper42D:
    case BoundFamily::Upper43Q:
    case BoundFamily::UpperLY:
      return true;
    default:
      return false;
  }
}

std::string_view family_name(BoundFamily family) noexcept {
  for (const auto& entry : kFamilyInfo) {
    if (entry.family == family) {
      return entry.name;
    }
  }
  return "UNKNOWN";
}

std::string_view family_column(BoundFamily family) noexcept {
  for (const auto& entry : kFamilyInfo) {
    if (entry.family == family) {
      return entry.column;
    }
  }
  return "unknown";
}

BoundFamily parse_family(std::string_view name) {
  for (const auto& entry : kFamilyInfo) {
    if (iequals(name, entry.name) || iequals(name, entry.column)) {
      return entry.family;
    }
  }
  throw ConfigError("unknown bound family '" + std::string(name) + "'");
}

Modulus to_modulus(const PositivePair& p) {
  if (p.diagonal()) {
    throw DegenerateInput("to_modulus requires a != b");
  }
  return pair_modulus(p);
}

Envelope toader_envelope_31(const PositivePair& p) {
  if (p.diagonal()) {
    throw DegenerateInput("envelope requires a != b");
  }
  const double a = classical_mean(MeanKind::Arithmetic, p);
  const double c = classical_mean(MeanKind::Centroidal, p);
  return {kSharp.alpha1 * c + (1.0 - kSharp.alpha1) * a,
          kSharp.beta1 * c + (1.0 - kSharp.beta1) * a};
}

Envelope toader_envelope_32(const PositivePair& p) {
  if (p.diagonal()) {
    throw DegenerateInput("envelope requires a != b");
  }
  const double a = classical_mean(MeanKind::Arithmetic, p);
  const double c = classical_mean(MeanKind::Centroidal, p);
  return {1.0 / (kSharp.beta2 / a + (1.0 - kSharp.beta2) / c),
          1.0 / (kSharp.alpha2 / a + (1.0 - kSharp.alpha2) / c)};
}

Envelope envelope_31_slack(const PositivePair& p, double alpha, double beta) {
  return linear_slack(to_modulus(p), alpha, beta);
}

Envelope envelope_32_slack(const PositivePair& p, double alpha, double beta) {
  const Modulus rho = to_modulus(p);
  const double x = rho.r() * rho.r();
  const double tail = landen_excess_tail(rho);
  const double n_t = landen_excess(rho);
  const double n_c = x / 3.0;
  const double denom = (1.0 + n_t) * (1.0 + n_c);
  // A (beta/A + (1-beta)/C - 1/T) and A (1/T - alpha/A - (1-alpha)/C).
  const double lower = (tail + (beta / 3.0 - 1.0 / 12.0) * x + beta * n_t * n_c) / denom;
  const double upper = ((1.0 / 12.0 - alpha / 3.0) * x - tail - alpha * n_t * n_c) / denom;
  return {lower, upper};
}

double quotient_f31(const Modulus& m) {
  require_open(m, "quotient_f31");
  const double r = m.r();
  return 3.0 * landen_excess(m) / (r * r);
}

double quotient_f32(const Modulus& m) {
  require_open(m, "quotient_f32");
  // With N = (2/pi)(2E - r'^2 K) - 1 the quotient is (1 - 3N/r^2)/(1 + N).
  const double n = landen_excess(m);
  return (1.0 - quotient_f31(m)) / (1.0 + n);
}

double lemma21_ratio(const Modulus& m) {
  require_open(m, "lemma21_ratio");
  return ellip_b(m);
}

double lemma23_value(const Modulus& m) {
  const double r = m.r();
  if (r == 0.0) {
    return kPi;
  }
  if (r == 1.0) {
    return 5.0;
  }
  // 5E - 3r'^2 K = 2E + 3(E - r'^2 K)
  return 2.0 * ellip_e(m) + 3.0 * r * r * ellip_b(m);
}

double e_bound(BoundFamily family, const Modulus& m) {
  require_open(m, "e_bound");
  const double r = m.r();
  const double rp = m.r_prime();
  const double rp2 = rp * rp;
  switch (family) {
    case BoundFamily::Lower41:
      return kHalfPi * ((1.0 + rp + rp2) / (2.0 * (1.0 + rp)) + (1.0 + rp) / 8.0);
    case BoundFamily::Upper41J:
      return kHalfPi * ((8.0 / kPi - 2.0) * (1.0 + rp + rp2) / (1.0 + rp) +
                        (2.0 - 6.0 / kPi) * (1.0 + rp));
    case BoundFamily::Lower42:
      return kHalfPi * (0.5 * std::sqrt(0.5 * (1.0 + rp2)) + 0.25 * (1.0 + rp));
    case BoundFamily::Upper42D: {
      const double denom = (kSqrt2 - 1.0) * kPi;
      return kHalfPi * ((4.0 - kPi) / denom * std::sqrt(0.5 * (1.0 + rp2)) +
                        (kSqrt2 * kPi - 4.0) * (1.0 + rp) / (2.0 * denom));
    }
    case BoundFamily::Lower43:
      // ln((1+r)^(1-r) / (1-r)^(1+r))
      return kHalfPi - 0.5 * ((1.0 - r) * std::log1p(r) - (1.0 + r) * std::log1p(-r));
    case BoundFamily::Upper43Q:
      // ln((1+r)/(1-r)) = 2 atanh(r)
      return 0.5 * (kPi - 1.0) + (1.0 - r) * (1.0 + r) * std::atanh(r) / (2.0 * r);
    case BoundFamily::LowerL:
      return kHalfPi * std::sqrt(6.0 + 2.0 * rp - 3.0 * r * r) / (2.0 * kSqrt2);
    case BoundFamily::UpperLY:
      return kHalfPi * std::sqrt(10.0 - 2.0 * rp - 5.0 * r * r) / (2.0 * kSqrt2);
  }
  throw DomainError("unknown bound family");
}

double e_bound_slack(BoundFamily family, const Modulus& m) {
  require_open(m, "e_bound_slack");
  if (family == BoundFamily::Lower41 || family == BoundFamily::Upper41J) {
    // E(r) = (pi/2) T(1, r') and the bound is (pi/2) times the envelope.
    const double scale = kHalfPi * 0.5 * (1.0 + m.r_prime());
    const Envelope slack = linear_slack(descended(m), kSharp.alpha1, kSharp.beta1);
    return scale * (family == BoundFamily::Lower41 ? slack.lower : slack.upper);
  }
  const double e = ellip_e(m);
  const double bound = e_bound(family, m);
  return is_upper(family) ? bound - e : e - bound;
}

const BoundValue& TightnessRow::at(BoundFamily family) const {
  for (const auto& v : values) {
    if (v.family == family) {
      return v;
    }
  }
  throw DomainError("row has no column " + std::string(family_name(family)));
}

bool TightnessRow::all_ok() const noexcept {
  return std::all_of(values.begin(), values.end(), [](const BoundValue& v) { return v.ok; });
}

TightnessRow comparison_row(const Modulus& m) {
  return comparison_row(m, {kAllFamilies.begin(), kAllFamilies.end()});
}

TightnessRow comparison_row(const Modulus& m, const std::vector<BoundFamily>& families) {
  require_open(m, "comparison_row");
  TightnessRow row{m.r(), ellip_e(m), {}};
  row.values.reserve(families.size());
  for (BoundFamily family : families) {
    const double value = e_bound(family, m);
    const bool ok = is_upper(family) ? value >= row.e_true : value <= row.e_true;
    row.values.push_back({family, value, ok});
  }
  return row;
}

double gap_lower41_vs_lower42(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("gap_lower41_vs_lower42 requires 0 <= x <= 1");
  }
  const double p = 3.0 * x * x + 2.0 * x + 3.0;
  const double q = 2.0 * (1.0 + x) * std::sqrt(2.0 * (1.0 + x * x));
  const double d = 1.0 - x;
  // p - q = (p^2 - q^2)/(p + q) and p^2 - q^2 = (1 - x)^4.
  return d * d * d * d / (8.0 * (1.0 + x) * (p + q));
}

double poly_gap_lower42(double x) {
  const double p = 3.0 * x * x + 2.0 * x + 3.0;
  return p * p - 8.0 * (1.0 + x) * (1.0 + x) * (1.0 + x * x);
}

double gap_lower41_vs_lowerL(double x) {
  const double p = 5.0 * x * x + 6.0 * x + 5.0;
  return p * p - 8.0 * (x + 1.0) * (x + 1.0) * (3.0 * x * x + 2.0 * x + 3.0);
}

double bracket_gap_lower41_vs_lowerL(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("bracket_gap_lower41_vs_lowerL requires 0 <= x <= 1");
  }
  const double p = 5.0 * x * x + 6.0 * x + 5.0;
  const double q = 2.0 * kSqrt2 * (1.0 + x) * std::sqrt(3.0 * x * x + 2.0 * x + 3.0);
  const double d = 1.0 - x;
  return d * d * d * d / (8.0 * (1.0 + x) * (p + q));
}

}  // namespace toader
