#include "irtr/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "irtr/errors.hpp"

namespace irtr {

namespace {

// 512 points localize every basin that appears in this library; the extra
// factor of two costs nothing and buys margin on narrow pole-split basins.
constexpr int kGridPoints = 1024;

constexpr double kInf = std::numeric_limits<double>::infinity();

double masked(const std::function<double(double)>& f, double x) {
  const double v = f(x);
  return std::isfinite(v) ? v : kInf;
}

}  // namespace

MinimizeResult minimize_scalar(const std::function<double(double)>& f,
                               double lo, double hi, const Tolerances& tol) {
  if (!(lo < hi)) throw InvalidArgument("minimize_scalar: requires lo < hi");

  const double step = (hi - lo) / (kGridPoints - 1);
  double best_x = lo;
  double best_v = kInf;
  int best_i = -1;
  for (int i = 0; i < kGridPoints; ++i) {
    const double x = (i == kGridPoints - 1) ? hi : lo + i * step;
    const double v = masked(f, x);
    if (v < best_v) {
      best_v = v;
      best_x = x;
      best_i = i;
    }
  }
  if (best_i < 0)
    throw NoFiniteValue("minimize_scalar: no finite evaluation on the grid");

  // Golden-section refinement of the bracket around the grid minimum.
  double a = lo + std::max(0, best_i - 1) * step;
  double b = (best_i + 1 >= kGridPoints - 1) ? hi : lo + (best_i + 1) * step;
  constexpr double kInvPhi = 0.6180339887498949;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = masked(f, c);
  double fd = masked(f, d);
  const double width_goal = std::max(tol.abs_tol, tol.rel_tol * (hi - lo));
  for (int iter = 0; iter < tol.max_iter && (b - a) > width_goal; ++iter) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = masked(f, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = masked(f, d);
    }
  }

  double xm = 0.5 * (a + b);
  double vm = masked(f, xm);
  // The refined point must not be worse than anything already seen.
  if (fc < vm) {
    xm = c;
    vm = fc;
  }
  if (fd < vm) {
    xm = d;
    vm = fd;
  }
  if (best_v < vm) {
    xm = best_x;
    vm = best_v;
  }
  return {xm, vm};
}

double bisect(const std::function<double(double)>& f, double lo, double hi,
              const Tolerances& tol) {
  if (!(lo <= hi)) throw InvalidArgument("bisect: requires lo <= hi");
  double fa = f(lo);
  double fb = f(hi);
  if (!std::isfinite(fa) || !std::isfinite(fb))
    throw InvalidArgument("bisect: endpoint evaluation is not finite");
  if (fa == 0.0) return lo;
  if (fb == 0.0) return hi;
  if ((fa > 0.0) == (fb > 0.0))
    throw NoBracket("bisect: f(lo) and f(hi) have the same sign");

  for (int i = 0; i < tol.max_iter && (hi - lo) > tol.abs_tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (std::abs(fm) <= tol.abs_tol) return mid;
    if ((fm > 0.0) == (fa > 0.0)) {
      lo = mid;
      fa = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> finite_diff_gradient(
    const std::function<double(std::span<const double>)>& f,
    std::span<const double> x, double h) {
  if (!(h > 0.0))
    throw InvalidArgument("finite_diff_gradient: step must be positive");
  std::vector<double> point(x.begin(), x.end());
  std::vector<double> grad(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double xj = point[j];
    point[j] = xj + h;
    const double fp = f(point);
    point[j] = xj - h;
    const double fm = f(point);
    point[j] = xj;
    grad[j] = (fp - fm) / (2.0 * h);
  }
  return grad;
}

double grid_integrate_2d(const std::function<double(double, double)>& f,
                         const Box2& box, int n) {
  if (n < 64)
    throw InvalidArgument("grid_integrate_2d: need at least 64 points per axis");
  if (!(box.hi1 > box.lo1) || !(box.hi2 > box.lo2))
    throw InvalidArgument("grid_integrate_2d: empty box");
  const double h1 = (box.hi1 - box.lo1) / n;
  const double h2 = (box.hi2 - box.lo2) / n;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = box.lo1 + (i + 0.5) * h1;
    double row = 0.0;
    for (int j = 0; j < n; ++j) {
      const double v = f(x, box.lo2 + (j + 0.5) * h2);
      if (!std::isfinite(v))
        throw NonFiniteIntegrand("grid_integrate_2d: non-finite integrand");
      row += v;
    }
    sum += row;
  }
  return sum * h1 * h2;
}

}  // namespace irtr
