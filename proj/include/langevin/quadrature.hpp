#pragma once

#include <functional>

namespace langevin {

// Adaptive Simpson integration of f on [a, b]. Terminates when the local
// error estimate is below abs_tol + rel_tol * |whole|; throws NumericError
// if the recursion depth limit is exhausted before converging.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol = 1e-12, double rel_tol = 1e-12, int max_depth = 60);

// log of integral_lo^inf r^(power-1) exp(-g(r)) dr for a potential profile g
// growing at least linearly. The integrand is shifted by its log-maximum so
// the accumulation never overflows for large powers; the upper limit is
// truncated where the integrand drops below 1e-300 absolutely or 1e-16 of
// the running total.
double log_radial_integral(const std::function<double(double)>& g, double power, double lo,
                           double rel_tol = 1e-10);

// a-th radial moment int r^(p+a-1) e^{-g} / int r^(p-1) e^{-g} of the density
// proportional to exp(-g(||theta||)) on R^p.
double radial_moment(const std::function<double(double)>& g, int p, double a,
                     double rel_tol = 1e-10);

}  // namespace langevin
