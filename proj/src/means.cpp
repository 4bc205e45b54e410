#include "toader/means.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "toader/errors.hpp"

namespace toader {
namespace {

// Near-diagonal series are used for r <= kSeriesCutoff (x = r^2 <= 1e-2).
constexpr double kSeriesCutoff = 0.1;
constexpr int kSeriesTerms = 24;

using Coefficients = std::array<double, kSeriesTerms>;

// Coefficients in x = r^2 of M_q/A = (sum_k binom(q, 2k) x^k)^(1/q).
// Uses F = G^alpha  =>  n f_n = sum_{k=1}^n (alpha k - (n - k)) g_k f_{n-k}.
Coefficients power_mean_series(double q) {
  Coefficients g{};
  double binom = 1.0;  // binom(q, j)
  for (int j = 0; j < 2 * kSeriesTerms; ++j) {
    if (j % 2 == 0) {
      g[j / 2] = binom;
    }
    binom *= (q - j) / (j + 1.0);
  }
  const double alpha = 1.0 / q;
  Coefficients f{};
  f[0] = 1.0;
  for (int n = 1; n < kSeriesTerms; ++n) {
    double acc = 0.0;
    for (int k = 1; k <= n; ++k) {
      acc += (alpha * k - (n - k)) * g[k] * f[n - k];
    }
    f[n] = acc / n;
  }
  return f;
}

// Coefficients in x of T/A = sum_n binom(1/2, n)^2 x^n.
Coefficients toader_series() {
  Coefficients b{};
  double binom = 1.0;
  for (int n = 0; n < kSeriesTerms; ++n) {
    b[n] = binom * binom;
    binom *= (0.5 - n) / (n + 1.0);
  }
  return b;
}

// ((1+r)^q + (1-r)^q)/2 - 1 without forming 1 + small.
double power_sum_excess(double q, double r) {
  return 0.5 * (std::expm1(q * std::log1p(r)) + std::expm1(q * std::log1p(-r)));
}

}  // namespace

PositivePair::PositivePair(double a, double b) : a_(a), b_(b) {
  if (!(std::isfinite(a) && std::isfinite(b) && a > 0.0 && b > 0.0)) {
    throw DomainError("means require two positive finite arguments");
  }
}

double classical_mean(MeanKind kind, const PositivePair& p) {
  const double hi = p.max();
  const double lo = p.min();
  if (p.diagonal()) {
    return hi;
  }
  switch (kind) {
    case MeanKind::Arithmetic:
      return 0.5 * (hi + lo);
    case MeanKind::Centroidal:
      return 2.0 * (hi * hi + hi * lo + lo * lo) / (3.0 * (hi + lo));
    case MeanKind::Quadratic:
      return std::sqrt(0.5 * (hi * hi + lo * lo));
    case MeanKind::Geometric:
      return std::sqrt(hi) * std::sqrt(lo);
  }
  throw DomainError("unknown mean kind");
}

double power_mean(double exponent, const PositivePair& p) {
  const double hi = p.max();
  const double lo = p.min();
  if (p.diagonal()) {
    return hi;
  }
  if (exponent == 0.0) {
    return std::sqrt(hi) * std::sqrt(lo);
  }
  const double direct =
      std::pow(0.5 * (std::pow(hi, exponent) + std::pow(lo, exponent)), 1.0 / exponent);
  if (std::isfinite(direct) && direct > 0.0) {
    return direct;
  }
  // Rescale by the argument that keeps the ratio's power bounded.
  if (exponent > 0.0) {
    return hi * std::pow(0.5 * (1.0 + std::pow(lo / hi, exponent)), 1.0 / exponent);
  }
  return lo * std::pow(0.5 * (1.0 + std::pow(hi / lo, exponent)), 1.0 / exponent);
}

double toader(const PositivePair& p) {
  if (p.diagonal()) {
    return p.a();
  }
  const double hi = p.max();
  const double ratio = p.min() / hi;
  return 2.0 * hi / std::numbers::pi * ellip_e(Modulus::from_complement(ratio));
}

Modulus pair_modulus(const PositivePair& p) {
  const double hi = p.max();
  const double lo = p.min();
  const double sum = hi + lo;
  const double r = (hi - lo) / sum;
  const double r_prime = 2.0 * std::sqrt(hi) * std::sqrt(lo) / sum;
  // Derive the larger component from the smaller one, which is accurate.
  if (r <= r_prime) {
    return Modulus(r);
  }
  return Modulus::from_complement(std::min(r_prime, 1.0));
}

double classical_excess(MeanKind kind, const PositivePair& p) {
  const double r = pair_modulus(p).r();
  const double x = r * r;
  switch (kind) {
    case MeanKind::Arithmetic:
      return 0.0;
    case MeanKind::Centroidal:
      return x / 3.0;
    case MeanKind::Quadratic:
      return x / (1.0 + std::sqrt(1.0 + x));
    case MeanKind::Geometric:
      return -x / (1.0 + std::sqrt((1.0 - r) * (1.0 + r)));
  }
  throw DomainError("unknown mean kind");
}

double power_mean_excess(double exponent, const PositivePair& p) {
  if (exponent == 0.0) {
    return classical_excess(MeanKind::Geometric, p);
  }
  const double r = pair_modulus(p).r();
  if (r == 0.0) {
    return 0.0;
  }
  const double h = power_sum_excess(exponent, r);
  return std::expm1(std::log1p(h) / exponent);
}

double toader_excess(const PositivePair& p) {
  return landen_excess(pair_modulus(p));
}

double toader_power_gap(double exponent, const PositivePair& p) {
  const double r = pair_modulus(p).r();
  if (r == 0.0) {
    return 0.0;
  }
  if (exponent != 0.0 && r <= kSeriesCutoff) {
    const double x = r * r;
    const Coefficients f = power_mean_series(exponent);
    const Coefficients b = toader_series();
    double sum = 0.0;
    double power = 1.0;
    double last = 0.0;
    for (int n = 1; n < kSeriesTerms; ++n) {
      power *= x;
      last = (b[n] - f[n]) * power;
      sum += last;
    }
    // Accept the series only if it has converged well below the size of
    // the leading terms.
    const double scale = x * (std::abs(b[1]) + std::abs(f[1]));
    if (std::abs(last) <= 1e-20 * scale) {
      return sum;
    }
  }
  return toader_excess(p) - power_mean_excess(exponent, p);
}

}  // namespace toader
