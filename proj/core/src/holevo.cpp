#include "irtr/holevo.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "irtr/errors.hpp"

namespace irtr {

namespace {

// Evaluations with either cosine this close to zero are masked to +inf;
// the objective there exceeds 1e12, far above any minimum of interest.
constexpr double kPoleMask = 1e-6;

}  // namespace

HolevoResult hcrb(double w, double mu, const Tolerances& tol) {
  if (!(w > 0.0 && w < 1.0))
    throw InvalidArgument("hcrb: weight must lie in (0, 1)");
  if (!(mu >= 0.0 && mu <= 1.0))
    throw OutOfRangeMu("hcrb: mu must lie in [0, 1]");

  const double shift = std::asin(mu);
  auto objective = [&](double phi) {
    const double c1 = std::cos(phi);
    const double c2 = std::cos(phi + shift);
    if (std::abs(c1) < kPoleMask || std::abs(c2) < kPoleMask)
      return std::numeric_limits<double>::infinity();
    return w / (c1 * c1) + (1.0 - w) / (c2 * c2);
  };

  // The interval is open at zero; the upper endpoint pi is included.
  const MinimizeResult r =
      minimize_scalar(objective, 1e-9, std::numbers::pi, tol);
  return {r.minimum, r.argmin, w};
}

std::vector<ErrorPoint> holevo_line(const HolevoResult& res, int n) {
  if (n < 2) throw InvalidArgument("holevo_line: need at least two points");
  const double w = res.weight;
  // Figure-style box: each axis starts slightly below the single-parameter
  // limit of 1/2, and the segment ends where the other axis reaches it.
  const double margin = 0.45;
  const double ea_lo = margin;
  const double ea_hi = (res.sigma - 2.0 * (1.0 - w) * margin) / (2.0 * w);
  std::vector<ErrorPoint> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / (n - 1);
    const double e_a = ea_lo + (ea_hi - ea_lo) * t;
    const double e_b = (res.sigma - 2.0 * w * e_a) / (2.0 * (1.0 - w));
    pts.push_back({e_a, e_b});
  }
  return pts;
}

double tangency_gap(double w, double mu, int n) {
  if (!(w > 0.0 && w < 1.0))
    throw InvalidArgument("tangency_gap: weight must lie in (0, 1)");
  const HolevoResult res = hcrb(w, mu);
  const BoundaryCurve curve = boundary_curve(mu, n);
  double gap = std::numeric_limits<double>::infinity();
  for (const ErrorPoint& pt : curve.points) {
    const double weighted = 2.0 * w * pt.e_a + 2.0 * (1.0 - w) * pt.e_b;
    gap = std::min(gap, weighted - res.sigma);
  }
  return gap;
}

}  // namespace irtr
