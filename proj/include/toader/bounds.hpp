#pragma once

// Sharp convex-combination bounds for the Toader mean in terms of the
// centroidal and arithmetic means, the elementary bounds on E(r) that follow
// from them, and the comparison bounds they are measured against.

#include <array>
#include <numbers>
#include <string_view>
#include <vector>

#include "toader/elliptic.hpp"
#include "toader/means.hpp"

namespace toader {

/// Best-possible weights:
///   alpha1 C + (1-alpha1) A < T < beta1 C + (1-beta1) A
///   alpha2/A + (1-alpha2)/C < 1/T < beta2/A + (1-beta2)/C
struct SharpConstants {
  double alpha1 = 0.75;
  double beta1 = 12.0 / std::numbers::pi - 3.0;
  double alpha2 = std::numbers::pi - 3.0;
  double beta2 = 0.25;
};

inline constexpr SharpConstants kSharp{};

/// The eight elementary bounds on E(r). Closed set; the order below is the
/// column order of the comparison table.
enum class BoundFamily {
  Upper41J,
  Upper42D,
  Upper43Q,
  UpperLY,
  Lower41,
  Lower42,
  Lower43,
  LowerL,
};

inline constexpr std::array<BoundFamily, 8> kAllFamilies = {
    BoundFamily::Upper41J, BoundFamily::Upper42D, BoundFamily::Upper43Q,
    BoundFamily::UpperLY,  BoundFamily::Lower41,  BoundFamily::Lower42,
    BoundFamily::Lower43,  BoundFamily::LowerL,
};

bool is_upper(BoundFamily family) noexcept;

/// Enum spelling, e.g. "UPPER_41_J".
std::string_view family_name(BoundFamily family) noexcept;

/// Short CSV column label, e.g. "J" or "lower41".
std::string_view family_column(BoundFamily family) noexcept;

/// Parses either spelling, case-insensitively. Throws ConfigError.
BoundFamily parse_family(std::string_view name);

/// r = (1-t)/(1+t) with t = min/max. Throws DegenerateInput when a = b.
Modulus to_modulus(const PositivePair& p);

struct Envelope {
  double lower;
  double upper;
};

/// (3/4) C + (1/4) A and (12/pi - 3) C + (4 - 12/pi) A. Throws DegenerateInput when a = b.
Envelope toader_envelope_31(const PositivePair& p);

/// The reciprocal bound restated for T:
///   1/((1/4)/A + (3/4)/C)  <  T  <  1/((pi-3)/A + (4-pi)/C).
Envelope toader_envelope_32(const PositivePair& p);

/// Signed slack of an envelope relative to A: (T - lower)/A and (upper - T)/A
/// for the linear envelope; for the reciprocal envelope the slack is measured
/// on 1/T and scaled by A. Both are evaluated from the excess forms so that
/// the order-r^4 gaps near the diagonal stay resolvable. Weights default to
/// the sharp constants; any other weights may be probed.
Envelope envelope_31_slack(const PositivePair& p, double alpha = kSharp.alpha1,
                           double beta = kSharp.beta1);
Envelope envelope_32_slack(const PositivePair& p, double alpha = kSharp.alpha2,
                           double beta = kSharp.beta2);

/// f(r) = 3 ((2/pi)(2E - r'^2 K) - 1) / r^2, increasing from 3/4 to 12/pi - 3.
double quotient_f31(const Modulus& m);

/// f(r) = (3 + r^2 - (6/pi)(2E - r'^2 K)) / ((2/pi) r^2 (2E - r'^2 K)),
/// decreasing from 1/4 to pi - 3.
double quotient_f32(const Modulus& m);

/// (E - r'^2 K)/r^2 on (0, 1); increasing onto (pi/4, 1).
double lemma21_ratio(const Modulus& m);

/// 5E - 3 r'^2 K on [0, 1]; equals pi at 0 and 5 at 1.
double lemma23_value(const Modulus& m);

/// Closed-form value of a bound family at r in (0, 1).
double e_bound(BoundFamily family, const Modulus& m);

/// E - bound for lower families, bound - E for upper families. LOWER_41 and
/// UPPER_41_J are the linear envelope at the pair (1, r'), so their slack is
/// taken from envelope_31_slack and stays resolvable as r -> 0.
double e_bound_slack(BoundFamily family, const Modulus& m);

struct BoundValue {
  BoundFamily family;
  double value;
  bool ok;  ///< value <= E for lower families, value >= E for upper ones
};

/// One row of the comparison table.
struct TightnessRow {
  double r;
  double e_true;
  std::vector<BoundValue> values;

  const BoundValue& at(BoundFamily family) const;
  bool all_ok() const noexcept;
};

TightnessRow comparison_row(const Modulus& m);
TightnessRow comparison_row(const Modulus& m, const std::vector<BoundFamily>& families);

/// g(x) = (3x^2+2x+3 - 2(1+x) sqrt(2(1+x^2))) / (8(1+x)), the bracketed
/// difference LOWER_41 - LOWER_42 (divided by pi/2) at r' = x.
/// Evaluated as (1-x)^4 / (8(1+x)(P + Q)).
double gap_lower41_vs_lower42(double x);

/// (3x^2+2x+3)^2 - 8(1+x)^2(1+x^2), identically (1-x)^4.
double poly_gap_lower42(double x);

/// (5x^2+6x+5)^2 - 8(x+1)^2(3x^2+2x+3), identically (x-1)^4.
double gap_lower41_vs_lowerL(double x);

/// LOWER_41 - LOWER_L divided by pi/2 at r' = x,
/// (5x^2+6x+5)/(8(1+x)) - sqrt(3x^2+2x+3)/(2 sqrt 2), evaluated stably.
double bracket_gap_lower41_vs_lowerL(double x);

}  // namespace toader
