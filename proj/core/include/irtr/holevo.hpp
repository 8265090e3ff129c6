#pragma once

#include <vector>

#include "irtr/numerics.hpp"
#include "irtr/tradeoff.hpp"

namespace irtr {

/// Outcome of the Holevo-bound minimization at weight w.
struct HolevoResult {
  double sigma;     ///< bound on 2[w e_a + (1-w) e_b], >= 1
  double phi_star;  ///< minimizing angle in (0, pi]
  double weight;    ///< w used
};

/// Holevo bound for the coherent encoding:
/// min over phi in (0, pi] of w/cos^2(phi) + (1-w)/cos^2(phi + asin(mu)),
/// with the pole neighbourhoods masked to +infinity before the scan.
HolevoResult hcrb(double w, double mu, const Tolerances& tol = {});

/// n points on the line 2 w e_a + 2 (1-w) e_b = sigma, clipped to a
/// figure-style box that starts slightly below the single-parameter limit.
std::vector<ErrorPoint> holevo_line(const HolevoResult& res, int n);

/// Minimum of (2 w e_a + 2 (1-w) e_b - sigma) over the sampled tradeoff
/// boundary. Non-negative up to roundoff, and ~0 at a dense sampling, when
/// the Holevo line is tangent to the boundary.
double tangency_gap(double w, double mu, int n);

}  // namespace irtr
