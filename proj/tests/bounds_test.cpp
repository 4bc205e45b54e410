#include "toader/bounds.hpp"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "published_table.hpp"
#include "test_util.hpp"
#include "toader/errors.hpp"

namespace toader {
namespace {

using testing::interior_grid;
using testing::kPublishedTable;
using testing::kTableTolerance;
using testing::PairGen;
using testing::rel_err;

constexpr double kPi = std::numbers::pi;

// Pair (1, t) whose Landen modulus is r.
PositivePair pair_with_modulus(double r) {
  return PositivePair(1.0, (1.0 - r) / (1.0 + r));
}

TEST(SharpConstantsTest, ValuesAndOrdering) {
  EXPECT_EQ(kSharp.alpha1, 0.75);
  EXPECT_DOUBLE_EQ(kSharp.beta1, 12.0 / kPi - 3.0);
  EXPECT_DOUBLE_EQ(kSharp.alpha2, kPi - 3.0);
  EXPECT_EQ(kSharp.beta2, 0.25);
  EXPECT_LT(0.0, kSharp.alpha1);
  EXPECT_LT(kSharp.alpha1, kSharp.beta1);
  EXPECT_LT(kSharp.beta1, 1.0);
  EXPECT_LT(0.0, kSharp.alpha2);
  EXPECT_LT(kSharp.alpha2, kSharp.beta2);
  EXPECT_LT(kSharp.beta2, 1.0);
}

TEST(BoundFamilyTest, NamesRoundTrip) {
  EXPECT_EQ(kAllFamilies.size(), 8u);
  for (BoundFamily family : kAllFamilies) {
    EXPECT_EQ(parse_family(family_name(family)), family);
    EXPECT_EQ(parse_family(family_column(family)), family);
  }
  EXPECT_EQ(parse_family("upper_42_d"), BoundFamily::Upper42D);
  EXPECT_THROW(parse_family("UPPER_99"), ConfigError);
  EXPECT_TRUE(is_upper(BoundFamily::UpperLY));
  EXPECT_FALSE(is_upper(BoundFamily::Lower43));
}

TEST(ToModulusTest, Examples) {
  EXPECT_DOUBLE_EQ(to_modulus(PositivePair(3, 1)).r(), 0.5);
  EXPECT_DOUBLE_EQ(to_modulus(PositivePair(1, 3)).r(), 0.5);
  EXPECT_THROW(to_modulus(PositivePair(1, 1)), DegenerateInput);
  // Homogeneity-free: the same r for every scaling.
  for (double lambda : {1e-6, 0.3, 7.0, 1e9}) {
    EXPECT_DOUBLE_EQ(to_modulus(PositivePair(3 * lambda, lambda)).r(), 0.5);
  }
}

TEST(EnvelopeTest, CentroidalArithmeticExamples) {
  const PositivePair near(1.0, 1.0 + 1e-9);
  const Envelope e = toader_envelope_31(near);
  EXPECT_NEAR(e.lower, 1.0, 1e-8);
  EXPECT_NEAR(e.upper, 1.0, 1e-8);
  EXPECT_LE(e.lower, toader(near));
  EXPECT_GE(e.upper, toader(near));

  const PositivePair half(1.0, 0.5);
  const Envelope h = toader_envelope_31(half);
  EXPECT_LT(h.lower, toader(half));
  EXPECT_LT(toader(half), h.upper);

  const PositivePair extreme(1e6, 1.0);
  const Envelope x = toader_envelope_31(extreme);
  EXPECT_LT(x.lower, toader(extreme));
  EXPECT_LT(toader(extreme), x.upper);
  const PositivePair scaled(1.0, 1e-6);
  EXPECT_NEAR((toader(extreme) - x.lower) / 1e6,
              toader(scaled) - toader_envelope_31(scaled).lower, 1e-15);

  EXPECT_THROW(toader_envelope_31(PositivePair(2, 2)), DegenerateInput);
}

TEST(EnvelopeTest, ReciprocalExamples) {
  const PositivePair near(1.0, 1.0 + 1e-9);
  const Envelope e = toader_envelope_32(near);
  EXPECT_NEAR(e.lower, 1.0, 1e-8);
  EXPECT_NEAR(e.upper, 1.0, 1e-8);

  const PositivePair half(1.0, 0.5);
  const Envelope h = toader_envelope_32(half);
  EXPECT_LT(h.lower, toader(half));
  EXPECT_LT(toader(half), h.upper);

  const Envelope small = toader_envelope_32(PositivePair(2, 1));
  const Envelope big = toader_envelope_32(PositivePair(4, 2));
  EXPECT_DOUBLE_EQ(big.lower, 2 * small.lower);
  EXPECT_DOUBLE_EQ(big.upper, 2 * small.upper);

  // Reciprocal form: (pi-3)/A + (4-pi)/C < 1/T < (1/4)/A + (3/4)/C.
  const double a = classical_mean(MeanKind::Arithmetic, half);
  const double c = classical_mean(MeanKind::Centroidal, half);
  const double inv_t = 1.0 / toader(half);
  EXPECT_LT((kPi - 3) / a + (4 - kPi) / c, inv_t);
  EXPECT_LT(inv_t, 0.25 / a + 0.75 / c);

  EXPECT_THROW(toader_envelope_32(PositivePair(2, 2)), DegenerateInput);
}

TEST(EnvelopeTest, SlackMatchesDirectDifferenceWhereResolvable) {
  PairGen gen(9);
  int checked = 0;
  for (int i = 0; i < 2000; ++i) {
    const auto [a, b] = gen();
    const PositivePair p(a, b);
    if (to_modulus(p).r() < 0.2) {
      continue;
    }
    ++checked;
    const double arith = classical_mean(MeanKind::Arithmetic, p);
    const double t = toader(p);
    const Envelope env31 = toader_envelope_31(p);
    const Envelope s31 = envelope_31_slack(p);
    ASSERT_NEAR(s31.lower, (t - env31.lower) / arith, 1e-14);
    ASSERT_NEAR(s31.upper, (env31.upper - t) / arith, 1e-14);

    const double c = classical_mean(MeanKind::Centroidal, p);
    const Envelope s32 = envelope_32_slack(p);
    ASSERT_NEAR(s32.lower, arith * (0.25 / arith + 0.75 / c - 1.0 / t), 1e-14);
    ASSERT_NEAR(s32.upper, arith * (1.0 / t - (kPi - 3) / arith - (4 - kPi) / c), 1e-14);
  }
  EXPECT_GT(checked, 1000);
}

TEST(EnvelopeTest, SlackIsPositiveDownToTheDiagonal) {
  for (double r = 1e-8; r < 1.0; r *= 1.2) {
    const PositivePair p = pair_with_modulus(r);
    const Envelope s31 = envelope_31_slack(p);
    const Envelope s32 = envelope_32_slack(p);
    ASSERT_GT(s31.lower, 0.0) << r;
    ASSERT_GT(s31.upper, 0.0) << r;
    ASSERT_GT(s32.lower, 0.0) << r;
    ASSERT_GT(s32.upper, 0.0) << r;
  }
}

TEST(EnvelopeTest, ConstantsAreSharp) {
  // A larger alpha1 fails near the diagonal, a smaller beta1 near r = 1.
  EXPECT_LT(envelope_31_slack(pair_with_modulus(1e-3), kSharp.alpha1 + 1e-3).lower, 0.0);
  EXPECT_LT(
      envelope_31_slack(pair_with_modulus(1 - 1e-6), kSharp.alpha1, kSharp.beta1 - 1e-3).upper,
      0.0);
  EXPECT_LT(envelope_32_slack(pair_with_modulus(1e-3), kSharp.alpha2, kSharp.beta2 - 1e-3).lower,
            0.0);
  EXPECT_LT(envelope_32_slack(pair_with_modulus(1 - 1e-6), kSharp.alpha2 + 1e-3).upper, 0.0);
}

TEST(QuotientTest, LimitProbes) {
  const double f31_low = quotient_f31(Modulus(1e-3));
  EXPECT_GT(f31_low, 0.75);
  EXPECT_LT(f31_low, 0.751);
  const double f31_high = quotient_f31(Modulus(1 - 1e-6));
  EXPECT_GT(f31_high, kSharp.beta1 - 1e-3);
  EXPECT_LT(f31_high, kSharp.beta1);

  const double f32_low = quotient_f32(Modulus(1e-3));
  EXPECT_GT(f32_low, 0.249);
  EXPECT_LT(f32_low, 0.25);
  const double f32_high = quotient_f32(Modulus(1 - 1e-6));
  EXPECT_GT(f32_high, kSharp.alpha2);
  EXPECT_LT(f32_high, kSharp.alpha2 + 1e-3);
}

TEST(QuotientTest, MatchesReferenceValues) {
  // 40-digit mpmath evaluations of the defining quotients.
  EXPECT_LE(rel_err(quotient_f31(Modulus(1e-3)), 0.75000004687501171875), 1e-14);
  EXPECT_LE(rel_err(quotient_f31(Modulus(0.5)), 0.76253291968037941191), 1e-14);
  EXPECT_LE(rel_err(quotient_f31(Modulus(0.999999)), 0.81971836378942936782), 1e-12);
  EXPECT_LE(rel_err(quotient_f32(Modulus(1e-3)), 0.24999989062501171874), 1e-14);
  EXPECT_LE(rel_err(quotient_f32(Modulus(0.5)), 0.22327895111175247858), 1e-14);
  EXPECT_LE(rel_err(quotient_f32(Modulus(0.999999)), 0.14159293677026499521), 1e-11);
}

TEST(QuotientTest, StrictlyMonotoneOnGrid) {
  double prev31 = 0.75;
  double prev32 = 0.25;
  for (double r : interior_grid(10000)) {
    const Modulus m(r);
    const double f31 = quotient_f31(m);
    const double f32 = quotient_f32(m);
    ASSERT_GT(f31, prev31) << r;
    ASSERT_LT(f32, prev32) << r;
    prev31 = f31;
    prev32 = f32;
  }
  EXPECT_LT(prev31, kSharp.beta1);
  EXPECT_GT(prev32, kSharp.alpha2);
}

TEST(QuotientTest, RejectsEndpoints) {
  for (double r : {0.0, 1.0}) {
    EXPECT_THROW(quotient_f31(Modulus(r)), DomainError);
    EXPECT_THROW(quotient_f32(Modulus(r)), DomainError);
    EXPECT_THROW(lemma21_ratio(Modulus(r)), DomainError);
  }
}

TEST(LemmaTest, Lemma21Ratio) {
  EXPECT_NEAR(lemma21_ratio(Modulus(1e-3)), kPi / 4, 1e-4);
  EXPECT_NEAR(lemma21_ratio(Modulus(1 - 1e-8)), 1.0, 1e-3);
  EXPECT_LE(rel_err(lemma21_ratio(Modulus(0.5)), 0.81259777291992049323), 1e-14);
  double prev = kPi / 4;
  for (double r : interior_grid(10000)) {
    const double v = lemma21_ratio(Modulus(r));
    ASSERT_GT(v, prev) << r;
    ASSERT_LT(v, 1.0);
    prev = v;
  }
}

TEST(LemmaTest, Lemma23Value) {
  EXPECT_EQ(lemma23_value(Modulus(0.0)), kPi);
  EXPECT_EQ(lemma23_value(Modulus(1.0)), 5.0);
  EXPECT_LE(rel_err(lemma23_value(Modulus(0.5)), 3.5443727483687946808), 1e-14);
  double prev = kPi;
  for (double r : interior_grid(10000)) {
    const double v = lemma23_value(Modulus(r));
    ASSERT_GT(v, prev) << r;
    ASSERT_LT(v, 5.0);
    prev = v;
  }
}

TEST(EBoundTest, PublishedValues) {
  for (const auto& row : kPublishedTable) {
    const Modulus m(row.r);
    EXPECT_NEAR(e_bound(BoundFamily::Upper41J, m), row.j, kTableTolerance) << row.r;
    EXPECT_NEAR(e_bound(BoundFamily::Upper42D, m), row.d, kTableTolerance) << row.r;
    EXPECT_NEAR(e_bound(BoundFamily::Upper43Q, m), row.q, kTableTolerance) << row.r;
    EXPECT_NEAR(e_bound(BoundFamily::UpperLY, m), row.y, kTableTolerance) << row.r;
  }
}

TEST(EBoundTest, CollapseToHalfPiAtSmallModulus) {
  const Modulus m(1e-8);
  for (BoundFamily family : kAllFamilies) {
    if (family == BoundFamily::Lower43) {
      continue;
    }
    EXPECT_NEAR(e_bound(family, m), kPi / 2, 1e-10) << family_name(family);
  }
  // The logarithmic lower bound departs linearly: pi/2 - r + O(r^3).
  EXPECT_NEAR(e_bound(BoundFamily::Lower43, m), kPi / 2 - 1e-8, 1e-15);
}

TEST(EBoundTest, RejectsEndpoints) {
  for (BoundFamily family : kAllFamilies) {
    EXPECT_THROW(e_bound(family, Modulus(0.0)), DomainError);
    EXPECT_THROW(e_bound(family, Modulus(1.0)), DomainError);
  }
}

TEST(EBoundTest, SlackMatchesDirectDifference) {
  for (double r = 0.3; r < 0.999; r += 0.01) {
    const Modulus m(r);
    const double e = ellip_e(m);
    for (BoundFamily family : kAllFamilies) {
      const double bound = e_bound(family, m);
      const double direct = is_upper(family) ? bound - e : e - bound;
      ASSERT_NEAR(e_bound_slack(family, m), direct, 1e-14) << family_name(family) << " " << r;
    }
  }
  // E(1e-4) - LOWER_41(1e-4) from a 90-digit mpmath evaluation at the same binary64 r.
  EXPECT_LE(rel_err(e_bound_slack(BoundFamily::Lower41, Modulus(1e-4)),
                    9.5873800920644121485e-37),
            1e-12);
}

TEST(EBoundTest, CentroidalBoundsSandwichE) {
  for (double r : interior_grid(9999)) {
    const Modulus m(r);
    ASSERT_GT(e_bound_slack(BoundFamily::Lower41, m), 0.0) << r;
    ASSERT_GT(e_bound_slack(BoundFamily::Upper41J, m), 0.0) << r;
  }
}

TEST(EBoundTest, ComparisonBoundsHoldOnResolvableGrid) {
  for (double r = 0.05; r < 0.999; r += 0.001) {
    const TightnessRow row = comparison_row(Modulus(r));
    ASSERT_TRUE(row.all_ok()) << r;
  }
}

TEST(ComparisonRowTest, Examples) {
  const TightnessRow r3 = comparison_row(Modulus(0.3));
  EXPECT_EQ(r3.values.size(), 8u);
  EXPECT_TRUE(r3.all_ok());
  for (BoundFamily family : {BoundFamily::Upper41J, BoundFamily::Upper42D,
                             BoundFamily::Upper43Q, BoundFamily::UpperLY}) {
    EXPECT_GE(r3.at(family).value, r3.e_true);
  }

  const TightnessRow r5 = comparison_row(Modulus(0.5));
  EXPECT_LT(r5.at(BoundFamily::Upper41J).value, r5.at(BoundFamily::Upper42D).value);
  EXPECT_LT(r5.at(BoundFamily::Upper42D).value, r5.at(BoundFamily::UpperLY).value);
  EXPECT_LT(r5.at(BoundFamily::UpperLY).value, r5.at(BoundFamily::Upper43Q).value);

  const TightnessRow r9 = comparison_row(Modulus(0.9));
  EXPECT_LT(r9.at(BoundFamily::Upper41J).value, r9.at(BoundFamily::Upper42D).value);
  EXPECT_LT(r9.at(BoundFamily::Upper42D).value, r9.at(BoundFamily::Upper43Q).value);
  EXPECT_LT(r9.at(BoundFamily::Upper43Q).value, r9.at(BoundFamily::UpperLY).value);

  const TightnessRow subset = comparison_row(Modulus(0.5), {BoundFamily::Upper41J});
  EXPECT_EQ(subset.values.size(), 1u);
  EXPECT_THROW(subset.at(BoundFamily::Lower41), DomainError);
  EXPECT_THROW(comparison_row(Modulus(1.0)), DomainError);
}

TEST(GapTest, Examples) {
  EXPECT_EQ(gap_lower41_vs_lower42(1.0), 0.0);
  EXPECT_NEAR(gap_lower41_vs_lower42(0.0), (3 - 2 * std::sqrt(2.0)) / 8, 1e-16);
  EXPECT_EQ(gap_lower41_vs_lowerL(1.0), 0.0);
  EXPECT_EQ(gap_lower41_vs_lowerL(0.0), 1.0);
  EXPECT_NEAR(gap_lower41_vs_lowerL(0.5), 0.0625, 1e-12);
  EXPECT_EQ(poly_gap_lower42(0.0), 1.0);
  EXPECT_THROW(gap_lower41_vs_lower42(1.5), DomainError);
}

TEST(GapTest, StableFormsMatchDefinitions) {
  for (double x = 0.0; x <= 0.9; x += 0.05) {
    const double direct =
        (3 * x * x + 2 * x + 3 - 2 * (1 + x) * std::sqrt(2 * (1 + x * x))) / (8 * (1 + x));
    EXPECT_NEAR(gap_lower41_vs_lower42(x), direct, 1e-15) << x;
    const double bracket =
        (5 * x * x + 6 * x + 5) / (8 * (1 + x)) - std::sqrt(3 * x * x + 2 * x + 3) / (2 * std::sqrt(2.0));
    EXPECT_NEAR(bracket_gap_lower41_vs_lowerL(x), bracket, 1e-15) << x;
  }
  // The brackets are the bound differences divided by pi/2.
  for (double r = 0.2; r < 0.99; r += 0.1) {
    const Modulus m(r);
    const double x = m.r_prime();
    EXPECT_NEAR(kPi / 2 * gap_lower41_vs_lower42(x),
                e_bound(BoundFamily::Lower41, m) - e_bound(BoundFamily::Lower42, m), 1e-14);
    EXPECT_NEAR(kPi / 2 * bracket_gap_lower41_vs_lowerL(x),
                e_bound(BoundFamily::Lower41, m) - e_bound(BoundFamily::LowerL, m), 1e-14);
  }
}

TEST(GapTest, DominanceAndPolynomialIdentitiesOnGrid) {
  for (double x : interior_grid(9999)) {
    ASSERT_GT(gap_lower41_vs_lower42(x), 0.0) << x;
    ASSERT_GT(bracket_gap_lower41_vs_lowerL(x), 0.0) << x;
    const double d4 = std::pow(1 - x, 4);
    const double scale42 = std::pow(3 * x * x + 2 * x + 3, 2);
    const double scaleL = std::pow(5 * x * x + 6 * x + 5, 2);
    ASSERT_LE(std::abs(poly_gap_lower42(x) - d4), 1e-10 * scale42) << x;
    ASSERT_LE(std::abs(gap_lower41_vs_lowerL(x) - d4), 1e-10 * scaleL) << x;
  }
}

}  // namespace
}  // namespace toader
