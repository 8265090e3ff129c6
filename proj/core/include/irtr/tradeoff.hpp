#pragma once

#include <vector>

namespace irtr {

/// Pair of estimation variances in rescaled-parameter units. Each is bounded
/// below by the single-parameter quantum limit of 1/2.
struct ErrorPoint {
  double e_a, e_b;
};

/// Tradeoff boundary sampled at fixed incompatibility mu. Points run from
/// (1/2, e_max) to (e_max, 1/2) with e_b non-increasing, where
/// e_max = 1/(2(1 - mu^2)); for mu = 0 the curve degenerates to the single
/// corner point (1/2, 1/2).
struct BoundaryCurve {
  double mu;
  std::vector<ErrorPoint> points;
};

/// Left side of the information-regret tradeoff relation:
/// d1^2 + d2^2 + 2 sqrt(1 - c^2) d1 d2.
double irtr_lhs(double d1, double d2, double c);

/// Left side of the error-space tradeoff inequality at incompatibility mu;
/// the pair is allowed iff this is >= mu^2.
double error_tradeoff_lhs(const ErrorPoint& pt, double mu);

/// Whether the error pair is allowed at incompatibility mu (up to 1e-12
/// slack on the inequality). Throws InvalidErrorPoint if either variance
/// is below 1/2 - 1e-9.
bool feasible(const ErrorPoint& pt, double mu);

/// Smallest allowed e_b at the given e_a, in closed form. With
/// a = 1 - 1/(2 e_a): returns 1/2 once a >= mu^2 (e_a sacrificed enough),
/// else 1/(2(1 - b)) with sqrt(b) = mu sqrt(1-a) - sqrt((1-mu^2) a).
double boundary_eb(double e_a, double mu);

/// Variance at the symmetric point of the boundary (equal weights):
/// 1/(2(1 - a)) with a = mu^2 / (2(1 + sqrt(1 - mu^2))).
double equal_weight_error(double mu);

/// Boundary sampled uniformly in the regret variable a = 1 - 1/(2 e_a)
/// over [0, mu^2]; n points (a single point for mu = 0).
BoundaryCurve boundary_curve(double mu, int n);

}  // namespace irtr
