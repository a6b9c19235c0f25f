#include "langevin/moments.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "langevin/errors.hpp"
#include "langevin/quadrature.hpp"

namespace langevin {

namespace {

double log_plus(double x) { return std::max(0.0, std::log(x)); }

// Regularized lower series P(k, x), x < k+1.
double gamma_p_series(double k, double x) {
  double ap = k;
  double sum = 1.0 / k;
  double del = sum;
  for (int n = 0; n < 500; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * 1e-16)
      return sum * std::exp(-x + k * std::log(x) - std::lgamma(k));
  }
  throw NumericError("incomplete gamma series did not converge");
}

// Regularized upper continued fraction Q(k, x), x >= k+1 (modified Lentz).
double gamma_q_cf(double k, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - k;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double frac = d;
  for (int i = 1; i < 500; ++i) {
    const double an = -i * (i - k);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    frac *= delta;
    if (std::abs(delta - 1.0) < 1e-16)
      return frac * std::exp(-x + k * std::log(x) - std::lgamma(k));
  }
  throw NumericError("incomplete gamma continued fraction did not converge");
}

}  // namespace

double upper_incomplete_gamma(double k, double x) {
  if (!(k > 0.0) || x < 0.0)
    throw std::invalid_argument("upper_incomplete_gamma needs k > 0 and x >= 0");
  const double gamma_k = std::tgamma(k);
  if (x == 0.0) return gamma_k;
  if (x < k + 1.0) return gamma_k * (1.0 - gamma_p_series(k, x));
  return gamma_k * gamma_q_cf(k, x);
}

double incomplete_gamma_tail_bound(double B, double q, double x, bool verify) {
  if (!(B > 1.0) || !(q >= 1.0))
    throw std::invalid_argument("incomplete_gamma_tail_bound needs B > 1 and q >= 1");
  const double x_min = B / (B - 1.0) * (q - 1.0);
  if (x < x_min)
    throw std::domain_error("incomplete_gamma_tail_bound: x below the admissible threshold");
  const double envelope = B * std::pow(x, q - 1.0) * std::exp(-x);
  if (verify && upper_incomplete_gamma(q, x) > envelope * (1.0 + 1e-12))
    throw NumericError("incomplete_gamma_tail_bound: envelope fails to dominate the tail");
  return envelope;
}

double moment_bound_strong(int p, double m, double a) {
  if (p < 1 || !(m > 0.0) || !(a > 0.0))
    throw std::invalid_argument("moment_bound_strong needs p >= 1, m > 0, a > 0");
  double bound = std::pow(p / m, a / 2.0);
  if (a > 2.0)
    bound *= std::pow(2.0, a - 1.0) * (1.0 + std::pow(1.0 + a / p, a / 2.0 - 1.0));
  return bound;
}

MomentBoundReport moment_bound_inside_ball(int p, double m, double R, double M, double a) {
  if (p < 1 || !(m > 0.0) || !(R > 0.0) || !(M > 0.0) || !(a > 0.0))
    throw std::invalid_argument("moment_bound_inside_ball needs positive arguments");
  const double pa = static_cast<double>(p) + a;
  const double A =
      std::pow(3.0 / (m * R) * (pa * std::log(pa) + p * log_plus(2.0 * M / (m * m * R * R))), a);
  const double B = moment_bound_strong(p, m, a);
  const double residual = std::pow(2.0, a + 1.0) / (std::pow(m * R, a) * std::tgamma(p / 2.0));
  MomentBoundReport report;
  report.a = a;
  report.regime = ConvexityClass::strong_inside_ball(m, R);
  report.components = {{"A", A}, {"B", B}, {"residual", residual}};
  report.dominating_term = A >= B ? "A" : "B";
  report.bound = std::max(A, B) + residual;
  return report;
}

MomentBoundReport moment_bound_outside_ball(int p, double m, double R, double M, double a) {
  if (p < 3) throw std::domain_error("moment_bound_outside_ball needs p >= 3");
  if (!(m > 0.0) || !(R > 0.0) || !(M > 0.0) || !(a > 0.0))
    throw std::invalid_argument("moment_bound_outside_ball needs positive arguments");
  const double pa = static_cast<double>(p) + a;
  const double ball_term = 4.0 * R;
  const double tail_term = std::sqrt(4.0 * pa / m * std::log(p * M / m));
  const double prefactor = 1.0 + 2.0 / std::tgamma(p / 2.0);
  MomentBoundReport report;
  report.a = a;
  report.regime = ConvexityClass::strong_outside_ball(m, R);
  report.components = {{"ball_term", ball_term}, {"tail_term", tail_term}, {"prefactor", prefactor}};
  report.dominating_term = ball_term >= tail_term ? "ball_term" : "tail_term";
  report.bound = prefactor * std::pow(std::max(ball_term, tail_term), a);
  return report;
}

double moment_bound_outside_ball_general(int p, double m, double R, double a) {
  if (p < 1 || !(m > 0.0) || R < 0.0 || !(a > 0.0))
    throw std::invalid_argument("moment_bound_outside_ball_general needs positive arguments");
  return std::exp(m * R * R / 2.0) * moment_bound_strong(p, m, a);
}

double averaged_curvature(const std::function<double(double)>& profile_m, double r) {
  if (r == 0.0) return profile_m(0.0);
  return 2.0 * adaptive_simpson([&](double y) { return profile_m(r * y) * (1.0 - y); }, 0.0, 1.0,
                                1e-14, 1e-12, 60);
}

double tail_moment_integral(const std::function<double(double)>& profile_m, double M, int p,
                            double a, double A) {
  if (p < 1 || !(a > 0.0) || !(A > 0.0) || !(M > 0.0))
    throw std::invalid_argument("tail_moment_integral needs positive arguments");
  const auto exponent = [&](double r) { return averaged_curvature(profile_m, r) * r * r / 2.0; };
  const double log_tail = log_radial_integral(exponent, static_cast<double>(p) + a, A, 1e-10);
  const double log_prefactor =
      std::log(2.0) + 0.5 * p * std::log(M / 2.0) - std::lgamma(p / 2.0);
  return std::exp(log_prefactor + log_tail);
}

LowerBoundMomentResult lower_bound_moment_oracle(int p, double a) {
  if (!(a > 0.0)) throw std::invalid_argument("lower_bound_moment_oracle needs a > 0");
  if (p < std::max(2.0, a - 1.0))
    throw std::domain_error("lower_bound_moment_oracle needs p >= max(2, a-1)");
  const auto profile = [](double r) { return r <= 1.0 ? 0.5 * r * r : r; };
  LowerBoundMomentResult result;
  result.numeric_moment = radial_moment(profile, p, a, 1e-9);
  result.reference_lower_bound =
      0.1 * std::exp(std::lgamma(static_cast<double>(p) + a) - std::lgamma(p));
  return result;
}

double khintchine_objective(double k, double lambda, double gamma) {
  if (!(k > 2.0)) throw std::invalid_argument("khintchine_objective needs k > 2");
  if (!(lambda > 2.0) || !(gamma > 1.0)) return std::numeric_limits<double>::infinity();
  const double log_lm1 = std::log(lambda - 1.0);
  const double first = std::sqrt(lambda - 1.0) / lambda *
                       std::pow(2.0 * std::sqrt(lambda) / log_lm1, k) * k *
                       upper_incomplete_gamma(k, std::sqrt(gamma) * log_lm1 / 2.0);
  const double second = (k * std::pow(gamma * lambda, k / 2.0 - 1.0) - 2.0) / (k - 2.0);
  return first + second;
}

namespace {

struct GridMin {
  double value = std::numeric_limits<double>::infinity();
  double lambda = 0.0;
  double gamma = 0.0;
};

// Nelder-Mead on the unconstrained parametrization
// (log(lambda-2), log(gamma-1)).
GridMin nelder_mead_refine(double k, double lambda0, double gamma0) {
  const auto eval = [&](double x, double y) {
    return khintchine_objective(k, 2.0 + std::exp(x), 1.0 + std::exp(y));
  };
  struct Vertex {
    double x, y, f;
  };
  std::array<Vertex, 3> simplex;
  const double x0 = std::log(lambda0 - 2.0), y0 = std::log(gamma0 - 1.0);
  simplex[0] = {x0, y0, eval(x0, y0)};
  simplex[1] = {x0 + 0.05, y0, eval(x0 + 0.05, y0)};
  simplex[2] = {x0, y0 + 0.05, eval(x0, y0 + 0.05)};

  for (int it = 0; it < 500; ++it) {
    std::sort(simplex.begin(), simplex.end(),
              [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
    if (std::abs(simplex[2].f - simplex[0].f) <= 1e-7 * (std::abs(simplex[0].f) + 1e-300)) break;
    const double cx = 0.5 * (simplex[0].x + simplex[1].x);
    const double cy = 0.5 * (simplex[0].y + simplex[1].y);
    const double rx = cx + (cx - simplex[2].x), ry = cy + (cy - simplex[2].y);
    const double fr = eval(rx, ry);
    if (fr < simplex[0].f) {
      const double ex = cx + 2.0 * (cx - simplex[2].x), ey = cy + 2.0 * (cy - simplex[2].y);
      const double fe = eval(ex, ey);
      simplex[2] = fe < fr ? Vertex{ex, ey, fe} : Vertex{rx, ry, fr};
    } else if (fr < simplex[1].f) {
      simplex[2] = {rx, ry, fr};
    } else {
      const double kx = cx + 0.5 * (simplex[2].x - cx), ky = cy + 0.5 * (simplex[2].y - cy);
      const double fk = eval(kx, ky);
      if (fk < simplex[2].f) {
        simplex[2] = {kx, ky, fk};
      } else {
        for (int i = 1; i < 3; ++i) {
          simplex[i].x = simplex[0].x + 0.5 * (simplex[i].x - simplex[0].x);
          simplex[i].y = simplex[0].y + 0.5 * (simplex[i].y - simplex[0].y);
          simplex[i].f = eval(simplex[i].x, simplex[i].y);
        }
      }
    }
  }
  std::sort(simplex.begin(), simplex.end(),
            [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
  return {simplex[0].f, 2.0 + std::exp(simplex[0].x), 1.0 + std::exp(simplex[0].y)};
}

}  // namespace

KhintchineResult khintchine_constant(double k) {
  if (!(k > 2.0)) {
    if (k == 2.0) {
      // Trivial case: mu_2 <= 1 * mu2 by definition.
      return {2.0, 0.0, 0.0, 1.0, "trivial k=2"};
    }
    throw std::invalid_argument("khintchine_constant needs k >= 2");
  }
  const int n_lambda = 220, n_gamma = 220;
  const double l_lo = std::log(2.1), l_hi = std::log(200.0);
  const double g_lo = std::log(1.01), g_hi = std::log(50.0);
  GridMin best;
  for (int i = 0; i < n_lambda; ++i) {
    const double lambda = std::exp(l_lo + (l_hi - l_lo) * i / (n_lambda - 1));
    for (int j = 0; j < n_gamma; ++j) {
      const double gamma = std::exp(g_lo + (g_hi - g_lo) * j / (n_gamma - 1));
      const double v = khintchine_objective(k, lambda, gamma);
      const bool tie_break = v == best.value && (lambda < best.lambda ||
                                                 (lambda == best.lambda && gamma < best.gamma));
      if (v < best.value || tie_break) best = {v, lambda, gamma};
    }
  }
  const GridMin refined = nelder_mead_refine(k, best.lambda, best.gamma);
  const GridMin& winner = refined.value <= best.value ? refined : best;
  return {k, winner.lambda, winner.gamma, winner.value, "220x220 log grid + Nelder-Mead"};
}

std::vector<double> mu2_under_penalty(const PotentialSpec& potential,
                                      const std::vector<double>& gammas, bool check_monotone) {
  if (!potential.is_radial())
    throw CapabilityError("mu2_under_penalty needs a radial potential profile");
  std::vector<double> out;
  out.reserve(gammas.size());
  for (double g : gammas) {
    if (g < 0.0) throw std::invalid_argument("penalty must be >= 0");
    const auto profile = potential.radial_profile;
    const auto penalized = [profile, g](double r) { return profile(r) + 0.5 * g * r * r; };
    out.push_back(radial_moment(penalized, potential.dim, 2.0, 1e-10));
  }
  if (check_monotone) {
    for (std::size_t i = 1; i < out.size(); ++i) {
      if (gammas[i] >= gammas[i - 1] && out[i] > out[i - 1] * (1.0 + 1e-8))
        throw NumericError("mu2_under_penalty: sequence is not non-increasing");
    }
  }
  return out;
}

}  // namespace langevin
