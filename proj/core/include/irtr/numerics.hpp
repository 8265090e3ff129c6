#pragma once

#include <functional>
#include <span>
#include <vector>

namespace irtr {

/// Stopping tolerances shared by the scalar solvers.
struct Tolerances {
  double abs_tol = 1e-10;
  double rel_tol = 1e-9;
  int max_iter = 200;
};

struct MinimizeResult {
  double argmin;
  double minimum;
};

/// Minimizes f over [lo, hi] by a coarse grid scan (1024 points) followed by
/// golden-section refinement of the best bracket. Non-finite evaluations are
/// treated as +infinity, so objectives with poles can be passed unmasked.
/// The result never exceeds the minimum seen on the initial grid, and the
/// argmin is refined to within max(abs_tol, rel_tol*(hi-lo)) for a unimodal
/// basin around the grid minimum.
///
/// Throws NoFiniteValue if every grid evaluation is non-finite.
MinimizeResult minimize_scalar(const std::function<double(double)>& f,
                               double lo, double hi,
                               const Tolerances& tol = {});

/// Bisection root find on [lo, hi]. Requires f(lo) and f(hi) of opposite sign
/// (or zero); returns x with |f(x)| <= abs_tol or bracket width <= abs_tol.
///
/// Throws NoBracket if the endpoint signs agree.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              const Tolerances& tol = {});

/// Central-difference gradient (f(x + h e_j) - f(x - h e_j)) / (2h).
std::vector<double> finite_diff_gradient(
    const std::function<double(std::span<const double>)>& f,
    std::span<const double> x, double h = 1e-5);

/// Axis-aligned integration box.
struct Box2 {
  double lo1, hi1, lo2, hi2;
};

/// Composite midpoint rule on an n-by-n grid. Second-order convergent:
/// halving the step reduces the error by about 4x on smooth integrands.
/// Requires n >= 64 per axis; throws NonFiniteIntegrand on a bad evaluation.
double grid_integrate_2d(const std::function<double(double, double)>& f,
                         const Box2& box, int n);

}  // namespace irtr
