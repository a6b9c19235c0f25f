#include "langevin/planner.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "langevin/errors.hpp"

namespace langevin {

namespace {

// (1 - rate)^K without underflow of (1 - rate) to 1.0 when rate is tiny.
double contraction_power(double rate, double K) {
  if (rate >= 1.0) return 0.0;
  return std::exp(K * std::log1p(-rate));
}

void check_q(int q) {
  if (q != 1 && q != 2) throw std::invalid_argument("q must be 1 or 2");
}

void check_epsilon(double eps) {
  if (!(eps > 0.0) || !(eps < 1.0))
    throw std::invalid_argument("epsilon must lie in (0, 1)");
}

double require_mu2(const PlannerInputs& in) {
  const double mu2 = in.mu2_effective();
  if (!(mu2 > 0.0)) throw std::invalid_argument("mu2 must be positive");
  return mu2;
}

double require_m2(const PlannerInputs& in, const char* who) {
  if (!in.M2.has_value())
    throw CapabilityError(std::string(who) + " requires the Hessian smoothness constant M2");
  if (*in.M2 < 0.0) throw std::invalid_argument("M2 must be >= 0");
  return *in.M2;
}

void enforce(bool ok, const char* constraint, double lhs, double rhs) {
  if (ok) return;
  std::ostringstream detail;
  detail << lhs << " > " << rhs;
  throw InfeasiblePlanError(constraint, detail.str());
}

std::int64_t ceil_steps(double k_raw) {
  if (!(k_raw >= 0.0) || !std::isfinite(k_raw) || k_raw > 9.0e18)
    throw NumericError("iteration count out of range");
  return static_cast<std::int64_t>(std::ceil(k_raw));
}

}  // namespace

double BiasConstants::c_q(int q) {
  check_q(q);
  return q == 1 ? C1 : C2;
}

BiasBounds bias_bounds(double alpha, double mu2, int q) {
  check_q(q);
  if (alpha < 0.0 || !(mu2 > 0.0))
    throw std::invalid_argument("bias_bounds needs alpha >= 0 and mu2 > 0");
  BiasBounds b;
  b.tv_bound = alpha * mu2;
  b.wq_bound = std::pow(BiasConstants::c_q(q) * alpha * std::pow(mu2, (q + 2) / 2.0), 1.0 / q);
  return b;
}

double PlannerInputs::mu2_effective() const {
  if (mu2.has_value()) return *mu2;
  if (D.has_value() && beta.has_value()) return *D * std::pow(static_cast<double>(p), *beta);
  throw std::invalid_argument("either mu2 or (D, beta) must be provided");
}

std::optional<double> PlannerInputs::kappa() const {
  if (!D.has_value()) return std::nullopt;
  return M * *D;
}

std::optional<double> PlannerInputs::kappa2() const {
  if (!D.has_value() || !M2.has_value()) return std::nullopt;
  return std::pow(*M2, 2.0 / 3.0) * *D;
}

BoundTerms lmc_error_bound(int q, double M, int p, double mu2, double alpha, double h, double K) {
  check_q(q);
  BoundTerms t;
  t.finiteness = std::sqrt(mu2) * contraction_power(alpha * h, K / 2.0);
  t.discretization = std::sqrt(2.1 * h * M * p / alpha);
  t.lack_of_strong_convexity = bias_bounds(alpha, mu2, q).wq_bound;
  return t;
}

BoundTerms lmc_hessian_error_bound(int q, double M, double M2, int p, double mu2, double alpha,
                                   double h, double K) {
  check_q(q);
  BoundTerms t;
  t.finiteness = std::sqrt(mu2) * contraction_power(alpha * h, K);
  t.discretization = M2 * h * p / (2.0 * alpha) + 2.8 * std::pow(M, 1.5) * h * std::sqrt(p) / alpha;
  t.lack_of_strong_convexity = bias_bounds(alpha, mu2, q).wq_bound;
  return t;
}

BoundTerms klmc_error_bound(int q, double M, int p, double mu2, double alpha, double h,
                            double gamma, double K) {
  check_q(q);
  BoundTerms t;
  t.finiteness = std::sqrt(2.0 * mu2) * contraction_power(3.0 * alpha * h / (4.0 * gamma), K);
  t.discretization = 1.5 * M * std::sqrt(p) * h / alpha;
  t.lack_of_strong_convexity = bias_bounds(alpha, mu2, q).wq_bound;
  return t;
}

BoundTerms klmc2_error_bound(int q, double M, double M2, int p, double mu2, double alpha, double h,
                             double gamma, double K) {
  check_q(q);
  const double Q = M2 + std::pow(M, 1.5) / std::sqrt(p);
  BoundTerms t;
  t.finiteness = std::sqrt(2.0 * mu2) * contraction_power(alpha * h / (4.0 * gamma), K);
  const double ratio = alpha / h;
  const double exp_term =
      M2 > 0.0 ? 1.6 / std::sqrt(M) * std::exp(-ratio * ratio / (160.0 * M2 * M2)) : 0.0;
  t.discretization = 2.0 * h * h * Q * p / alpha + exp_term;
  t.lack_of_strong_convexity = bias_bounds(alpha, mu2, q).wq_bound;
  return t;
}

namespace {

Plan finish_plan(Algorithm alg, bool hessian_variant, const PlannerInputs& in, double mu2,
                 double alpha, double h, double gamma, double k_raw, ComplexityAlgorithm calg) {
  Plan plan;
  plan.algorithm = alg;
  plan.hessian_variant = hessian_variant;
  plan.q = in.q;
  plan.alpha = alpha;
  plan.h = h;
  plan.gamma = gamma;
  plan.k_raw = k_raw;
  plan.K = ceil_steps(k_raw);
  plan.epsilon = in.epsilon;
  plan.mu2 = mu2;
  plan.target = scaled_error_target(mu2, in.epsilon);
  const double K = static_cast<double>(plan.K);
  switch (calg) {
    case ComplexityAlgorithm::LMC:
      plan.bound_terms = lmc_error_bound(in.q, in.M, in.p, mu2, alpha, h, K);
      break;
    case ComplexityAlgorithm::LMC_HESSIAN:
      plan.bound_terms = lmc_hessian_error_bound(in.q, in.M, *in.M2, in.p, mu2, alpha, h, K);
      break;
    case ComplexityAlgorithm::KLMC:
      plan.bound_terms = klmc_error_bound(in.q, in.M, in.p, mu2, alpha, h, gamma, K);
      break;
    case ComplexityAlgorithm::KLMC2:
      plan.bound_terms = klmc2_error_bound(in.q, in.M, *in.M2, in.p, mu2, alpha, h, gamma, K);
      break;
    default:
      break;
  }
  plan.predicted_error = plan.bound_terms.total();
  try {
    plan.complexity_formula_value =
        complexity_reference(in, calg, in.q == 1 ? Metric::W1 : Metric::W2);
  } catch (const CapabilityError&) {
    // No evaluable printed formula for this input (e.g. M2 = 0).
    plan.complexity_formula_value = std::numeric_limits<double>::quiet_NaN();
  }
  return plan;
}

}  // namespace

Plan plan_lmc(const PlannerInputs& in) {
  check_q(in.q);
  check_epsilon(in.epsilon);
  const double mu2 = require_mu2(in);
  const double eps = in.epsilon, M = in.M, p = in.p;
  double h, alpha;
  if (in.q == 1) {
    h = eps * eps * eps / (322.0 * M * p);
    alpha = std::cbrt(2.1 * h * M * p) / (std::pow(44.0, 2.0 / 3.0) * mu2);
  } else {
    h = std::pow(eps, 4) / (3900.0 * M * p);
    alpha = std::sqrt(2.1 * h * M * p) / (std::sqrt(111.0) * mu2);
  }
  enforce(alpha <= M / 20.0, "alpha <= M/20", alpha, M / 20.0);
  enforce(h <= 1.0 / (M + alpha), "h <= 1/(M+alpha)", h, 1.0 / (M + alpha));
  const double k_raw = 2.0 / (alpha * h) * std::log(100.0 / eps);
  return finish_plan(Algorithm::LMC, false, in, mu2, alpha, h, 0.0, k_raw,
                     ComplexityAlgorithm::LMC);
}

Plan plan_lmc_hessian(const PlannerInputs& in) {
  check_q(in.q);
  check_epsilon(in.epsilon);
  const double mu2 = require_mu2(in);
  const double M2 = require_m2(in, "plan_lmc_hessian");
  const double eps = in.epsilon, M = in.M, p = in.p;
  const double Q = M2 + 5.6 * std::pow(M, 1.5) / std::sqrt(p);
  double h, alpha;
  if (in.q == 1) {
    h = eps * eps / (45.0 * std::sqrt(mu2) * Q * p);
    alpha = std::sqrt(h * Q * p / (44.0 * std::pow(mu2, 1.5)));
  } else {
    h = eps * eps * eps / (387.0 * std::sqrt(mu2) * Q * p);
    alpha = std::pow(h * Q * p, 2.0 / 3.0) / std::cbrt(111.0 * mu2 * mu2);
  }
  enforce(alpha <= M / 20.0, "alpha <= M/20", alpha, M / 20.0);
  enforce(h <= 1.0 / (M + alpha), "h <= 1/(M+alpha)", h, 1.0 / (M + alpha));
  // The Hessian-smooth bound contracts as (1-alpha h)^K, so log(100/eps)
  // iterations per unit of alpha*h hold the finiteness term below 1% of the
  // target; the tabulated complexity constants correspond to exactly this K.
  const double k_raw = 1.0 / (alpha * h) * std::log(100.0 / eps);
  return finish_plan(Algorithm::LMC, true, in, mu2, alpha, h, 0.0, k_raw,
                     ComplexityAlgorithm::LMC_HESSIAN);
}

Plan plan_klmc(const PlannerInputs& in) {
  check_q(in.q);
  check_epsilon(in.epsilon);
  const double mu2 = require_mu2(in);
  const double eps = in.epsilon, M = in.M, p = in.p;
  double h, alpha;
  if (in.q == 1) {
    h = eps * eps / (143.0 * M * std::sqrt(mu2 * p));
    alpha = std::sqrt(1.5 * h * M * std::sqrt(p)) / std::sqrt(22.0 * std::pow(mu2, 1.5));
  } else {
    h = std::pow(eps, 4) / (1200.0 * M * std::sqrt(mu2 * p));
    alpha = std::pow(3.0 * h * M * std::sqrt(p), 2.0 / 3.0) / std::cbrt(111.0 * mu2 * mu2);
  }
  const double gamma = std::sqrt(M + 2.0 * alpha);  // lowest admissible friction
  enforce(alpha <= M / 20.0, "alpha <= M/20", alpha, M / 20.0);
  const double h_cap = alpha / (4.0 * gamma * (M + alpha));
  enforce(h <= h_cap, "h <= alpha/(4*gamma*(M+alpha))", h, h_cap);
  const double k_raw = 4.0 * gamma / (3.0 * alpha * h) * std::log(150.0 / eps);
  return finish_plan(Algorithm::KLMC, false, in, mu2, alpha, h, gamma, k_raw,
                     ComplexityAlgorithm::KLMC);
}

Plan plan_klmc2(const PlannerInputs& in) {
  check_q(in.q);
  check_epsilon(in.epsilon);
  const double mu2 = require_mu2(in);
  const double M2 = require_m2(in, "plan_klmc2");
  const double eps = in.epsilon, M = in.M, p = in.p;
  const double Q = M2 + std::pow(M, 1.5) / std::sqrt(p);
  const double alpha = in.q == 1 ? eps / (23.0 * mu2) : eps * eps / (116.0 * mu2);
  const double log_branch =
      160.0 * M2 * M2 * std::log(160.0 / (eps * std::sqrt(M * mu2)));
  const double poly_branch = 100.0 * alpha * Q * p / (eps * std::sqrt(mu2));
  const double h = alpha / std::sqrt(std::max(log_branch, poly_branch));
  const double gamma = std::sqrt(M + 2.0 * alpha);
  enforce(alpha <= M / 20.0, "alpha <= M/20", alpha, M / 20.0);
  // The step-size admissibility region is the intersection of the two caps
  // (the conservative reading); both are enforced.
  const double cap1 = alpha / (5.0 * gamma * (M + alpha));
  enforce(h <= cap1, "h <= alpha/(5*gamma*(M+alpha))", h, cap1);
  if (M2 > 0.0) {
    const double cap2 = alpha / (4.0 * M2 * std::sqrt(5.0 * p));
    enforce(h <= cap2, "h <= alpha/(4*M2*sqrt(5p))", h, cap2);
  }
  const double k_raw = 4.0 * gamma / (alpha * h) * std::log(142.0 / eps);
  return finish_plan(Algorithm::KLMC2, false, in, mu2, alpha, h, gamma, k_raw,
                     ComplexityAlgorithm::KLMC2);
}

Metric metric_from_name(const std::string& name) {
  if (name == "tv" || name == "TV") return Metric::TV;
  if (name == "w1" || name == "W1") return Metric::W1;
  if (name == "w2" || name == "W2") return Metric::W2;
  throw std::invalid_argument("unknown metric: " + name);
}

std::string metric_name(Metric metric) {
  switch (metric) {
    case Metric::TV: return "tv";
    case Metric::W1: return "w1";
    case Metric::W2: return "w2";
  }
  return "unknown";
}

ComplexityAlgorithm complexity_algorithm_from_name(const std::string& name) {
  if (name == "lmca") return ComplexityAlgorithm::LMCA;
  if (name == "lmc") return ComplexityAlgorithm::LMC;
  if (name == "lmc_hessian") return ComplexityAlgorithm::LMC_HESSIAN;
  if (name == "klmc") return ComplexityAlgorithm::KLMC;
  if (name == "klmc2") return ComplexityAlgorithm::KLMC2;
  if (name == "mala") return ComplexityAlgorithm::MALA;
  throw std::invalid_argument("unknown complexity algorithm: " + name);
}

double complexity_reference(const PlannerInputs& in, ComplexityAlgorithm algorithm,
                            Metric metric) {
  const double eps = in.epsilon;
  const double p = in.p;
  if (!(eps > 0.0)) throw std::invalid_argument("epsilon must be positive");

  const auto need_kappa = [&]() {
    const auto k = in.kappa();
    if (!k.has_value())
      throw CapabilityError("this complexity formula needs the flatness constants (D, beta)");
    return *k;
  };
  const auto need_beta = [&]() {
    if (!in.beta.has_value())
      throw CapabilityError("this complexity formula needs the flatness constants (D, beta)");
    return *in.beta;
  };
  // mu2 enters the Wasserstein rows through the product M mu2; when only
  // (D, beta) are given the Condition-2 envelope D p^beta stands in for mu2.
  const auto mu2 = [&]() { return require_mu2(in); };

  switch (algorithm) {
    case ComplexityAlgorithm::LMCA:
      if (metric != Metric::TV) break;
      return need_kappa() * std::pow(p, 1.0 + need_beta()) / (2.0 * std::pow(eps, 4));
    case ComplexityAlgorithm::MALA: {
      if (metric != Metric::TV) break;
      const double kappa = need_kappa();
      const double lg = std::log(p * kappa / eps);
      return std::pow(p, 3) * std::pow(kappa, 1.5) * std::pow(eps, -1.5) * std::pow(lg, 1.5);
    }
    case ComplexityAlgorithm::LMC: {
      if (metric == Metric::TV)
        return std::pow(p, 1.0 + 2.0 * need_beta()) / std::pow(eps, 4);
      const double c = metric == Metric::W1 ? 4.3e4 : 3.6e6;
      const double pe = metric == Metric::W1 ? 4.0 : 6.0;
      return c * in.M * mu2() * p / std::pow(eps, pe) * std::log(100.0 / eps);
    }
    case ComplexityAlgorithm::LMC_HESSIAN: {
      if (metric == Metric::TV) break;
      const double M2 = require_m2(in, "lmc_hessian complexity");
      const double Q = M2 + 5.6 * std::pow(in.M, 1.5) / std::sqrt(p);
      const double c = metric == Metric::W1 ? 2.0e3 : 9.9e4;
      const double pe = metric == Metric::W1 ? 3.0 : 5.0;
      return c * std::pow(mu2(), 1.5) * Q * p / std::pow(eps, pe) * std::log(100.0 / eps);
    }
    case ComplexityAlgorithm::KLMC: {
      if (metric == Metric::TV) break;
      const double c = metric == Metric::W1 ? 9.2e3 : 4.4e5;
      const double pe = metric == Metric::W1 ? 3.0 : 5.0;
      return c * std::pow(in.M * mu2(), 1.5) * std::sqrt(p) / std::pow(eps, pe) *
             std::log(150.0 / eps);
    }
    case ComplexityAlgorithm::KLMC2: {
      if (metric == Metric::TV) break;
      const double M2 = require_m2(in, "klmc2 complexity");
      if (M2 <= 0.0)
        throw CapabilityError("the klmc2 complexity formula is printed for M2 > 0 only");
      const double m2v = mu2();
      const double Q = M2 + std::pow(in.M, 1.5) / std::sqrt(p);
      const double lg = 1.6 * std::log(160.0 / (eps * std::sqrt(in.M * m2v)));
      double brace, c, pe;
      if (metric == Metric::W1) {
        brace = std::max(lg, Q * p / (23.0 * M2 * M2 * std::pow(m2v, 1.5)));
        c = 2.2e4;
        pe = 2.0;
      } else {
        brace = std::max(lg, eps * Q * p / (116.0 * M2 * M2 * std::pow(m2v, 1.5)));
        c = 5.4e6;
        pe = 4.0;
      }
      return c * std::sqrt(in.M) * M2 * m2v * m2v / std::pow(eps, pe) * std::sqrt(brace) *
             std::log(142.0 / eps);
    }
  }
  throw UnsupportedCombinationError("no tabulated complexity formula for this (algorithm, metric)");
}

double scaled_error_target(double mu2, double epsilon) {
  if (!(mu2 > 0.0) || !(epsilon > 0.0))
    throw std::invalid_argument("scaled_error_target needs mu2 > 0 and epsilon > 0");
  return epsilon * std::sqrt(mu2);
}

}  // namespace langevin
