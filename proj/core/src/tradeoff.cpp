#include "irtr/tradeoff.hpp"

#include <algorithm>
#include <cmath>

#include "irtr/errors.hpp"

namespace irtr {

namespace {

void require_mu(double mu) {
  if (!(mu >= 0.0 && mu <= 1.0))
    throw OutOfRangeMu("tradeoff: mu must lie in [0, 1]");
}

// Regret variable of an error value, clamped against roundoff below zero.
double regret_sq(double e) {
  return std::max(0.0, 1.0 - 1.0 / (2.0 * e));
}

}  // namespace

double irtr_lhs(double d1, double d2, double c) {
  return d1 * d1 + d2 * d2 +
         2.0 * std::sqrt(std::max(0.0, 1.0 - c * c)) * d1 * d2;
}

double error_tradeoff_lhs(const ErrorPoint& pt, double mu) {
  const double a = regret_sq(pt.e_a);
  const double b = regret_sq(pt.e_b);
  return a + b + 2.0 * std::sqrt(1.0 - mu * mu) * std::sqrt(a * b);
}

bool feasible(const ErrorPoint& pt, double mu) {
  require_mu(mu);
  if (pt.e_a < 0.5 - 1e-9 || pt.e_b < 0.5 - 1e-9)
    throw InvalidErrorPoint(
        "feasible: variance below the single-parameter quantum limit");
  return error_tradeoff_lhs(pt, mu) >= mu * mu - 1e-12;
}

double boundary_eb(double e_a, double mu) {
  require_mu(mu);
  if (!(e_a >= 0.5 - 1e-9))
    throw InvalidErrorPoint(
        "boundary_eb: variance below the single-parameter quantum limit");
  const double a = regret_sq(e_a);
  if (a >= mu * mu) return 0.5;
  const double sqrt_b =
      mu * std::sqrt(1.0 - a) - std::sqrt((1.0 - mu * mu) * a);
  const double b = sqrt_b * sqrt_b;
  return 1.0 / (2.0 * (1.0 - b));
}

double equal_weight_error(double mu) {
  require_mu(mu);
  const double a = mu * mu / (2.0 * (1.0 + std::sqrt(1.0 - mu * mu)));
  return 1.0 / (2.0 * (1.0 - a));
}

BoundaryCurve boundary_curve(double mu, int n) {
  require_mu(mu);
  if (n < 2)
    throw InvalidArgument("boundary_curve: need at least two points");
  BoundaryCurve curve{mu, {}};
  if (mu == 0.0) {
    // The allowed region touches the optimum only at the corner.
    curve.points.push_back({0.5, 0.5});
    return curve;
  }
  curve.points.reserve(static_cast<std::size_t>(n));
  const double mu2 = mu * mu;
  for (int i = 0; i < n; ++i) {
    const double a = mu2 * static_cast<double>(i) / (n - 1);
    const double e_a = 1.0 / (2.0 * (1.0 - a));
    curve.points.push_back({e_a, boundary_eb(e_a, mu)});
  }
  return curve;
}

}  // namespace irtr
