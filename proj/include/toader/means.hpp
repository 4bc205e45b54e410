#pragma once

// Bivariate means of two positive reals: arithmetic, centroidal, quadratic,
// geometric, power and Toader.

#include "toader/elliptic.hpp"

namespace toader {

/// Two positive, finite reals. Equal values are allowed.
class PositivePair {
 public:
  /// Throws DomainError unless a and b are finite and > 0.
  PositivePair(double a, double b);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double max() const noexcept { return a_ < b_ ? b_ : a_; }
  double min() const noexcept { return a_ < b_ ? a_ : b_; }
  bool diagonal() const noexcept { return a_ == b_; }

 private:
  double a_;
  double b_;
};

enum class MeanKind { Arithmetic, Centroidal, Quadratic, Geometric };

/// A = (a+b)/2, C = 2(a^2+ab+b^2)/(3(a+b)), S = sqrt((a^2+b^2)/2), G = sqrt(ab).
double classical_mean(MeanKind kind, const PositivePair& p);

/// M_q = ((a^q + b^q)/2)^(1/q), and sqrt(ab) for q = 0.
double power_mean(double exponent, const PositivePair& p);

/// T(a,b) = (2/pi) int_0^{pi/2} sqrt(a^2 cos^2 + b^2 sin^2),
/// evaluated as (2 max/pi) E(sqrt(1 - (min/max)^2)).
double toader(const PositivePair& p);

/// The modulus r = |a-b|/(a+b) with complement r' = 2 sqrt(ab)/(a+b).
/// r = 0 on the diagonal.
Modulus pair_modulus(const PositivePair& p);

// Relative excess over the arithmetic mean, (M - A)/A, as a function of
// r = |a-b|/(a+b). These avoid the cancellation in M - A near the diagonal,
// where the sharp inequalities differ only at order r^4.

double classical_excess(MeanKind kind, const PositivePair& p);
double power_mean_excess(double exponent, const PositivePair& p);
double toader_excess(const PositivePair& p);

/// (T - M_q)/A, cancellation-free near the diagonal.
double toader_power_gap(double exponent, const PositivePair& p);

}  // namespace toader
