#pragma once

// Gauss-Legendre rules and a composite integrator. Used as the independent
// oracle for the AGM evaluation of the elliptic integrals.

#include <cmath>
#include <cstddef>
#include <vector>

#include "toader/elliptic.hpp"

namespace toader {

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  explicit GaussLegendreRule(int order);
  int order() const noexcept { return static_cast<int>(nodes.size()); }
};

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

/// Integrate f over [lo, hi] with `panels` equal panels, each carrying the
/// given rule. Panel contributions are accumulated with compensation.
template <typename F>
double composite_gauss_legendre(F&& f, double lo, double hi, std::size_t panels,
                                const GaussLegendreRule& rule) {
  const double width = (hi - lo) / static_cast<double>(panels);
  const double half = 0.5 * width;
  CompensatedSum total;
  for (std::size_t p = 0; p < panels; ++p) {
    const double mid = lo + (static_cast<double>(p) + 0.5) * width;
    double panel = 0.0;
    for (int i = 0; i < rule.order(); ++i) {
      panel += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    total.add(half * panel);
  }
  return total.value();
}

/// Reusable quadrature of the K and E integrands. The values sin^2(theta) at
/// every node are tabulated once, so sweeping many moduli costs one sqrt per
/// node.
class EllipticOracle {
 public:
  /// Throws DomainError if panels < 8 or order < 1.
  explicit EllipticOracle(std::size_t panels, int order = kOracleOrder);

  /// Throws DivergentIntegral for (First, r = 1).
  double operator()(IntegralKind kind, const Modulus& m) const;

  std::size_t panels() const noexcept { return panels_; }

 private:
  std::size_t panels_;
  int order_;
  std::vector<double> sin2_;
  std::vector<double> weights_;  // one per node, already scaled by the panel half-width
};

}  // namespace toader
