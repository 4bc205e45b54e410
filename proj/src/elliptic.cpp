#include "toader/elliptic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "toader/errors.hpp"

namespace toader {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;

// Successive a_n, g_n agree to this relative tolerance at termination.
constexpr double kAgmTolerance = 1e-16;
constexpr int kAgmMaxIterations = 64;

// Below this modulus landen_excess_tail() switches to the series.
constexpr double kTailSeriesCutoff = 0.25;

// State of the AGM ladder started at (a_0, g_0, c_0) = (1, r', r).
//   a    = a_N = AGM(1, r'), so K = pi / (2 a)
//   sum_c  = sum_{n>=1} c_n           (equals 1 - a_N)
//   sum_sq = sum_{n>=1} 2^(n-1) c_n^2 (K - E = K (r^2/2 + sum_sq))
// c_{n+1} is taken from c_n^2 / (4 a_{n+1}) instead of (a_n - g_n)/2 so the
// c's keep full relative precision.
struct AgmLadder {
  double a;
  double sum_c;
  double sum_sq;
};

AgmLadder run_agm(const Modulus& m) {
  double a = 1.0;
  double g = m.r_prime();
  double c = m.r();
  double sum_c = 0.0;
  double sum_sq = 0.0;
  double weight = 0.5;
  for (int n = 0; n < kAgmMaxIterations; ++n) {
    const double a_next = 0.5 * (a + g);
    const double c_next = 0.25 * c * c / a_next;
    g = std::sqrt(a * g);
    a = a_next;
    c = c_next;
    weight *= 2.0;
    sum_c += c;
    sum_sq += weight * c * c;
    // a_n - g_n = 2 c_{n+1}
    if (2.0 * c <= kAgmTolerance * a) {
      break;
    }
  }
  return {a, sum_c, sum_sq};
}

void require_open(const Modulus& m, const char* what) {
  if (m.r() <= 0.0 || m.r() >= 1.0) {
    throw DomainError(std::string(what) + " requires 0 < r < 1");
  }
}

void require_below_one(const Modulus& m, const char* what) {
  if (m.r() >= 1.0) {
    throw DivergentIntegral(std::string(what) + ": K(1) is divergent");
  }
}

}  // namespace

Modulus::Modulus(double r) {
  if (!(r >= 0.0 && r <= 1.0)) {
    throw DomainError("modulus must lie in [0, 1], got " + std::to_string(r));
  }
  r_ = r;
  r_prime_ = std::sqrt((1.0 - r) * (1.0 + r));
}

Modulus Modulus::from_complement(double r_prime) {
  Modulus m(r_prime);
  return m.complement();
}

Modulus Modulus::from_components(double r, double r_prime) {
  if (!(r >= 0.0 && r <= 1.0) || !(r_prime >= 0.0 && r_prime <= 1.0)) {
    throw DomainError("modulus components must lie in [0, 1]");
  }
  if (std::abs(r * r + r_prime * r_prime - 1.0) > 1e-15) {
    throw DomainError("modulus components must satisfy r^2 + r'^2 = 1");
  }
  return Modulus(r, r_prime, Unchecked{});
}

double ellip_k(const Modulus& m) {
  require_below_one(m, "ellip_k");
  if (m.r() == 0.0) {
    return kHalfPi;
  }
  return kHalfPi / run_agm(m).a;
}

KValue ellip_k_status(const Modulus& m) {
  return {ellip_k(m), m.r() > kNearSingularThreshold};
}

double ellip_e(const Modulus& m) {
  if (m.r() == 0.0) {
    return kHalfPi;
  }
  if (m.r() == 1.0) {
    return 1.0;
  }
  const AgmLadder ladder = run_agm(m);
  const double k = kHalfPi / ladder.a;
  const double rp = m.r_prime();
  return k * (0.5 * (1.0 + rp * rp) - ladder.sum_sq);
}

EllipticValues elliptic_values(const Modulus& m) {
  require_below_one(m, "elliptic_values");
  return {ellip_k(m), ellip_e(m)};
}

double ellip_b(const Modulus& m) {
  const double r = m.r();
  if (r == 0.0) {
    return 0.25 * kPi;
  }
  if (r == 1.0) {
    return 1.0;
  }
  const AgmLadder ladder = run_agm(m);
  const double k = kHalfPi / ladder.a;
  return k * (0.5 - ladder.sum_sq / (r * r));
}

double ellip_d(const Modulus& m) {
  require_below_one(m, "ellip_d");
  const double r = m.r();
  if (r == 0.0) {
    return 0.25 * kPi;
  }
  const AgmLadder ladder = run_agm(m);
  const double k = kHalfPi / ladder.a;
  return k * (0.5 + ladder.sum_sq / (r * r));
}

double landen_excess(const Modulus& m) {
  if (m.r() == 0.0) {
    return 0.0;
  }
  if (m.r() == 1.0) {
    return 4.0 / kPi - 1.0;
  }
  // (2/pi) K (1 - 2 sum_sq) - 1 with 1 - a_N = sum_c.
  const AgmLadder ladder = run_agm(m);
  return (ladder.sum_c - 2.0 * ladder.sum_sq) / ladder.a;
}

double landen_excess_tail(const Modulus& m) {
  const double r = m.r();
  if (r > kTailSeriesCutoff) {
    return landen_excess(m) - 0.25 * r * r;
  }
  // sum_{n>=2} binom(1/2, n)^2 x^n, x = r^2; binom(1/2, n+1)/binom(1/2, n) = (1/2 - n)/(n + 1).
  const double x = r * r;
  double binom = -0.125;  // binom(1/2, 2)
  double power = x * x;
  double sum = 0.0;
  for (int n = 2; n < 200; ++n) {
    const double term = binom * binom * power;
    sum += term;
    if (term <= std::numeric_limits<double>::epsilon() * 0.25 * sum) {
      break;
    }
    binom *= (0.5 - n) / (n + 1.0);
    power *= x;
  }
  return sum;
}

EllipticDerivatives elliptic_derivatives(const Modulus& m) {
  require_open(m, "elliptic_derivatives");
  const double r = m.r();
  const double rp = m.r_prime();
  // E - r'^2 K = r^2 B and E - K = -r^2 D.
  return {r * ellip_b(m) / (rp * rp), -r * ellip_d(m)};
}

LandenSides landen_check(const Modulus& m) {
  require_below_one(m, "landen_check");
  const double r = m.r();
  // The transformed modulus 2 sqrt(r)/(1 + r) has complement (1 - r)/(1 + r).
  const Modulus lifted = Modulus::from_complement((1.0 - r) / (1.0 + r));
  const double k = ellip_k(m);
  const double e = ellip_e(m);
  const double rp = m.r_prime();
  return {ellip_e(lifted), (2.0 * e - rp * rp * k) / (1.0 + r)};
}

}  // namespace toader
