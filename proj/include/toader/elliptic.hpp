#pragma once

// Legendre's complete elliptic integrals K(r) and E(r) on the modulus r,
// evaluated by the arithmetic-geometric mean, plus the combinations that the
// mean inequalities need in cancellation-free form.

#include <cstddef>

namespace toader {

/// Elliptic modulus r in [0, 1] together with its complement r' = sqrt(1 - r^2).
///
/// Both values are stored so that callers who know r' exactly (for example
/// r' = b/a for a pair of means) do not lose precision recomputing it near
/// r = 1.
class Modulus {
 public:
  /// Throws DomainError unless 0 <= r <= 1.
  explicit Modulus(double r);

  /// Build from the complementary modulus r' in [0, 1].
  static Modulus from_complement(double r_prime);

  /// Build from both components; they must satisfy r^2 + r'^2 = 1 to 1e-15.
  static Modulus from_components(double r, double r_prime);

  double r() const noexcept { return r_; }
  double r_prime() const noexcept { return r_prime_; }

  /// The modulus r' (swaps the roles of r and r').
  Modulus complement() const noexcept { return Modulus(r_prime_, r_, Unchecked{}); }

 private:
  struct Unchecked {};
  Modulus(double r, double r_prime, Unchecked) noexcept : r_(r), r_prime_(r_prime) {}

  double r_;
  double r_prime_;
};

struct EllipticValues {
  double k;
  double e;
};

/// K(r) together with a flag raised when r > 1 - 1e-12, where K grows like
/// log(4/r') and the caller is probing the singular end.
struct KValue {
  double value;
  bool near_singular;
};

/// r threshold above which ellip_k_status() raises near_singular.
inline constexpr double kNearSingularThreshold = 1.0 - 1e-12;

/// K(r) for r in [0, 1). Throws DivergentIntegral at r = 1.
double ellip_k(const Modulus& m);
KValue ellip_k_status(const Modulus& m);

/// E(r) for r in [0, 1]; E(0) = pi/2 and E(1) = 1 exactly.
double ellip_e(const Modulus& m);

/// K and E from a single AGM pass; r in [0, 1).
EllipticValues elliptic_values(const Modulus& m);

/// B(r) = (E - r'^2 K) / r^2, with B(0) = pi/4 and B(1) = 1.
double ellip_b(const Modulus& m);

/// D(r) = (K - E) / r^2 for r in [0, 1), with D(0) = pi/4.
double ellip_d(const Modulus& m);

/// (2/pi) (2E - r'^2 K) - 1, the amount by which the Toader mean exceeds the
/// arithmetic mean (relative to it) when r = |a - b| / (a + b).
double landen_excess(const Modulus& m);

/// landen_excess(m) - r^2/4. Near r = 0 this is evaluated from the
/// hypergeometric series sum_{n>=2} binom(1/2, n)^2 r^(2n).
double landen_excess_tail(const Modulus& m);

struct EllipticDerivatives {
  double dk_dr;
  double de_dr;
};

/// dK/dr = (E - r'^2 K)/(r r'^2) and dE/dr = (E - K)/r for r in (0, 1).
EllipticDerivatives elliptic_derivatives(const Modulus& m);

struct LandenSides {
  double lhs;  ///< E(2 sqrt(r) / (1 + r))
  double rhs;  ///< (2E(r) - r'^2 K(r)) / (1 + r)
};

/// Both sides of E(2 sqrt(r)/(1+r)) = (2E - r'^2 K)/(1+r), r in [0, 1).
LandenSides landen_check(const Modulus& m);

enum class IntegralKind { First, Second };

/// Default number of Gauss-Legendre nodes per panel used by the oracle.
inline constexpr int kOracleOrder = 8;

/// Direct composite Gauss-Legendre quadrature of the defining integral over
/// [0, pi/2]. Cross-check oracle only; panels >= 8.
double elliptic_oracle(IntegralKind kind, const Modulus& m, std::size_t panels);

}  // namespace toader
