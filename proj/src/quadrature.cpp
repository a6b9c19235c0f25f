#include "langevin/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "langevin/errors.hpp"

namespace langevin {

namespace {

double simpson(double fa, double fm, double fb, double a, double b) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double b, double fa,
                     double fm, double fb, double whole, double abs_tol, double rel_tol,
                     int depth, double scale) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(fa, flm, fm, a, m);
  const double right = simpson(fm, frm, fb, m, b);
  const double err = (left + right - whole) / 15.0;
  const double tol = abs_tol + rel_tol * std::max(scale, std::abs(left + right));
  if (std::abs(err) <= tol) return left + right + err;
  if (depth <= 0) throw NumericError("adaptive_simpson: depth limit exhausted");
  return adaptive_step(f, a, m, fa, flm, fm, left, 0.5 * abs_tol, rel_tol, depth - 1, scale) +
         adaptive_step(f, m, b, fm, frm, fb, right, 0.5 * abs_tol, rel_tol, depth - 1, scale);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, double rel_tol, int max_depth) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  // Seed the scale with an 8-panel estimate so a deceptively smooth first
  // panel cannot terminate the recursion immediately.
  double coarse = 0.0;
  const int pieces = 8;
  double prev = fa;
  for (int i = 1; i <= pieces; ++i) {
    const double x = a + (b - a) * i / pieces;
    const double fx = f(x);
    const double mid = f(a + (b - a) * (i - 0.5) / pieces);
    coarse += simpson(prev, mid, fx, a + (b - a) * (i - 1) / pieces, x);
    prev = fx;
  }
  const double scale = std::abs(coarse);
  const double flm = f(0.5 * (a + m)), frm = f(0.5 * (m + b));
  return adaptive_step(f, a, m, fa, flm, fm, simpson(fa, flm, fm, a, m), abs_tol, rel_tol,
                       max_depth, scale) +
         adaptive_step(f, m, b, fm, frm, fb, simpson(fm, frm, fb, m, b), abs_tol, rel_tol,
                       max_depth, scale);
}

double log_radial_integral(const std::function<double(double)>& g, double power, double lo,
                           double rel_tol) {
  if (power <= 0.0) throw std::invalid_argument("log_radial_integral: power must be positive");
  lo = std::max(lo, 0.0);
  const auto log_integrand = [&](double r) {
    if (r <= 0.0) return -std::numeric_limits<double>::infinity();
    return (power - 1.0) * std::log(r) - g(r);
  };

  // Locate the mode of the log-integrand by geometric scan + ternary refine.
  double best_r = std::max(lo, 1e-12), best_v = log_integrand(best_r);
  for (double r = 1e-6; r < 1e8; r *= 1.25) {
    if (r < lo) continue;
    const double v = log_integrand(r);
    if (v > best_v) {
      best_v = v;
      best_r = r;
    }
  }
  {
    double a = best_r / 1.6, b = best_r * 1.6;
    a = std::max(a, lo);
    for (int it = 0; it < 200; ++it) {
      const double m1 = a + (b - a) / 3.0, m2 = b - (b - a) / 3.0;
      if (log_integrand(m1) < log_integrand(m2)) a = m1; else b = m2;
    }
    best_r = 0.5 * (a + b);
    best_v = log_integrand(best_r);
  }

  // Upper cutoff: integrand below e^-60 of the peak contributes < 1e-26.
  const double drop = 60.0;
  double hi = std::max(best_r * 2.0, lo + 1.0);
  while (log_integrand(hi) > best_v - drop) {
    hi *= 1.5;
    if (hi > 1e12) throw NumericError("log_radial_integral: tail does not decay");
  }
  double lo_eff = lo;
  if (lo < best_r) {
    double a = lo;
    // Shrink the lower end where the integrand is negligible.
    while (best_r - a > 1e-12 && log_integrand(0.5 * (a + best_r)) < best_v - drop)
      a = 0.5 * (a + best_r);
    lo_eff = a;
  }

  const double shift = best_v;
  const auto f = [&](double r) {
    const double lv = log_integrand(r) - shift;
    return lv < -700.0 ? 0.0 : std::exp(lv);
  };
  const double integral = adaptive_simpson(f, lo_eff, hi, 1e-300, rel_tol, 60);
  if (!(integral > 0.0) || !std::isfinite(integral))
    throw NumericError("log_radial_integral: quadrature failed");
  return shift + std::log(integral);
}

double radial_moment(const std::function<double(double)>& g, int p, double a, double rel_tol) {
  if (p < 1) throw std::invalid_argument("radial_moment: p must be >= 1");
  const double log_num = log_radial_integral(g, static_cast<double>(p) + a, 0.0, rel_tol);
  const double log_den = log_radial_integral(g, static_cast<double>(p), 0.0, rel_tol);
  return std::exp(log_num - log_den);
}

}  // namespace langevin
