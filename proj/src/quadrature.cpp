#include "toader/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "toader/errors.hpp"

namespace toader {

GaussLegendreRule::GaussLegendreRule(int order) {
  if (order < 1) {
    throw DomainError("Gauss-Legendre order must be positive");
  }
  const int n = order;
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton on P_n from the Tricomi initial guess.
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0;
      double p0 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p_prev = p0;
        p0 = p1;
        p1 = ((2.0 * j - 1.0) * z * p0 - (j - 1.0) * p_prev) / j;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double step = p1 / dp;
      z -= step;
      if (std::abs(step) <= 1e-16) {
        break;
      }
    }
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    nodes[i] = -z;
    nodes[n - 1 - i] = z;
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) {
    nodes[n / 2] = 0.0;
  }
}

EllipticOracle::EllipticOracle(std::size_t panels, int order) : panels_(panels), order_(order) {
  if (panels < 8) {
    throw DomainError("oracle needs at least 8 panels");
  }
  const GaussLegendreRule rule(order);
  const double hi = 0.5 * std::numbers::pi;
  const double width = hi / static_cast<double>(panels);
  const double half = 0.5 * width;
  sin2_.reserve(panels * rule.nodes.size());
  weights_.reserve(panels * rule.nodes.size());
  for (std::size_t p = 0; p < panels; ++p) {
    const double mid = (static_cast<double>(p) + 0.5) * width;
    for (int i = 0; i < rule.order(); ++i) {
      const double s = std::sin(mid + half * rule.nodes[i]);
      sin2_.push_back(s * s);
      weights_.push_back(half * rule.weights[i]);
    }
  }
}

double EllipticOracle::operator()(IntegralKind kind, const Modulus& m) const {
  if (kind == IntegralKind::First && m.r() == 1.0) {
    throw DivergentIntegral("K(1) is divergent");
  }
  const double r2 = m.r() * m.r();
  const bool first = kind == IntegralKind::First;
  const auto order = static_cast<std::size_t>(order_);
  CompensatedSum total;
  for (std::size_t start = 0; start < sin2_.size(); start += order) {
    double panel = 0.0;
    for (std::size_t i = start; i < start + order; ++i) {
      const double root = std::sqrt(1.0 - r2 * sin2_[i]);
      panel += first ? weights_[i] / root : weights_[i] * root;
    }
    total.add(panel);
  }
  return total.value();
}

double elliptic_oracle(IntegralKind kind, const Modulus& m, std::size_t panels) {
  if (panels < 8) {
    throw DomainError("oracle needs at least 8 panels");
  }
  if (kind == IntegralKind::First && m.r() == 1.0) {
    throw DivergentIntegral("K(1) is divergent");
  }
  const GaussLegendreRule rule(kOracleOrder);
  const double r2 = m.r() * m.r();
  const double hi = 0.5 * std::numbers::pi;
  if (kind == IntegralKind::First) {
    return composite_gauss_legendre(
        [r2](double theta) {
          const double s = std::sin(theta);
          return 1.0 / std::sqrt(1.0 - r2 * s * s);
        },
        0.0, hi, panels, rule);
  }
  return composite_gauss_legendre(
      [r2](double theta) {
        const double s = std::sin(theta);
        return std::sqrt(1.0 - r2 * s * s);
      },
      0.0, hi, panels, rule);
}

}  // namespace toader
