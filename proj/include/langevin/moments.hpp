#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "langevin/potentials.hpp"

namespace langevin {

// Upper incomplete gamma function Gamma(k, x) = int_x^inf t^(k-1) e^-t dt,
// series expansion for x < k+1 and continued fraction otherwise; relative
// accuracy around 1e-13.
double upper_incomplete_gamma(double k, double x);

// The tail envelope B x^(q-1) e^-x, valid as an upper bound on Gamma(q, x)
// whenever x >= (B/(B-1))(q-1); arguments outside that region are rejected.
// With verify set, Gamma(q, x) is evaluated and checked against the envelope.
double incomplete_gamma_tail_bound(double B, double q, double x, bool verify = false);

// Moment bound for m-strongly convex potentials:
//   mu_a* <= (p/m)^{a/2} * { 2^{a-1} (1 + (1+a/p)^{a/2-1}) }^{1(a>2)}.
double moment_bound_strong(int p, double m, double a);

struct MomentBoundReport {
  double a = 0.0;
  ConvexityClass regime;
  double bound = 0.0;
  std::map<std::string, double> components;
  std::string dominating_term;
};

// Potentials strongly convex inside a ball of radius R around the minimizer:
// bound = max(A, B) + residual with
//   A = { 3/(mR) ((p+a) log(p+a) + p log_+(2M/(m^2 R^2))) }^a,
//   B = moment_bound_strong(p, m, a),
//   residual = 2^{a+1} / ((mR)^a Gamma(p/2)).
MomentBoundReport moment_bound_inside_ball(int p, double m, double R, double M, double a);

// Potentials strongly convex outside a ball of radius R (needs p >= 3):
//   (1 + 2/Gamma(p/2)) * max(4R, sqrt(4(p+a)/m log(pM/m)))^a.
MomentBoundReport moment_bound_outside_ball(int p, double m, double R, double M, double a);

// Same regime, any p: e^{m R^2/2} * moment_bound_strong(p, m, a).
double moment_bound_outside_ball_general(int p, double m, double R, double a);

// (2 (M/2)^{p/2} / Gamma(p/2)) int_A^inf r^{p+a-1} e^{-mtilde(r) r^2/2} dr
// with mtilde(r) = 2 int_0^1 profile_m(r y)(1-y) dy; profile_m maps into
// [0, M].
double tail_moment_integral(const std::function<double(double)>& profile_m, double M, int p,
                            double a, double A);

// mtilde transform of a curvature profile (exposed for testing).
double averaged_curvature(const std::function<double(double)>& profile_m, double r);

struct LowerBoundMomentResult {
  double numeric_moment = 0.0;
  double reference_lower_bound = 0.0;  // 0.1 Gamma(p+a)/Gamma(p)
};

// a-th moment of the capped-quadratic radial density, computed by quadrature,
// together with its closed-form lower bound; valid for p >= max(2, a-1).
LowerBoundMomentResult lower_bound_moment_oracle(int p, double a);

struct KhintchineResult {
  double k = 0.0;
  double lambda_opt = 0.0;
  double gamma_opt = 0.0;
  double a_k = 0.0;
  std::string grid_resolution;
};

// Objective A_k(lambda, gamma) of the log-concave moment-comparison
// inequality mu_k <= A_k mu2^{k/2}; defined for k > 2, lambda > 2, gamma > 1.
double khintchine_objective(double k, double lambda, double gamma);

// Minimizes A_k over (lambda, gamma) by a 220x220 log-grid scan followed by
// Nelder-Mead refinement. k = 2 returns the trivial constant 1.
KhintchineResult khintchine_constant(double k);

// mu2 of the penalized density pi_gamma (potential + gamma r^2/2) for each
// penalty in gammas, computed by radial quadrature. The sequence is
// non-increasing in the penalty; check_monotone enforces that.
std::vector<double> mu2_under_penalty(const PotentialSpec& potential,
                                      const std::vector<double>& gammas,
                                      bool check_monotone = false);

}  // namespace langevin
