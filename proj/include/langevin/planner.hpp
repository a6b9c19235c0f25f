#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "langevin/samplers.hpp"

namespace langevin {

// Constants C_q of the surrogate-bias inequality
//   W_q^q(pi, pi_alpha) <= C_q alpha mu2^{(q+2)/2}.
struct BiasConstants {
  static constexpr double C1 = 22.0;
  static constexpr double C2 = 111.0;
  static double c_q(int q);
};

struct BiasBounds {
  double tv_bound = 0.0;  // alpha * mu2
  double wq_bound = 0.0;  // (C_q alpha mu2^{(q+2)/2})^{1/q}
};

// d_TV(pi, pi_alpha) and W_q(pi, pi_alpha) upper bounds.
BiasBounds bias_bounds(double alpha, double mu2, int q);

struct PlannerInputs {
  int p = 1;
  double M = 1.0;
  std::optional<double> M2;
  std::optional<double> mu2;   // direct second moment; wins over D p^beta
  std::optional<double> D;     // flatness constant, mu2 <= D p^beta
  std::optional<double> beta;
  double epsilon = 0.1;        // scaled precision, in (0,1)
  int q = 1;                   // Wasserstein order, 1 or 2

  double mu2_effective() const;             // direct mu2 if given, else D p^beta
  std::optional<double> kappa() const;      // M D (when D present)
  std::optional<double> kappa2() const;     // M2^{2/3} D (when M2, D present)
};

struct BoundTerms {
  double finiteness = 0.0;
  double discretization = 0.0;
  double lack_of_strong_convexity = 0.0;
  double total() const { return finiteness + discretization + lack_of_strong_convexity; }
};

struct Plan {
  Algorithm algorithm = Algorithm::LMC;
  bool hessian_variant = false;  // LMC planned under the Hessian-smooth bound
  int q = 1;
  double alpha = 0.0;
  double h = 0.0;
  double gamma = 0.0;  // kinetic only, 0 otherwise
  double k_raw = 0.0;  // iteration count before ceiling
  std::int64_t K = 0;
  BoundTerms bound_terms;
  double predicted_error = 0.0;
  double complexity_formula_value = 0.0;
  double epsilon = 0.0;
  double mu2 = 0.0;
  double target = 0.0;  // epsilon * sqrt(mu2)
};

// Error-bound evaluators at arbitrary admissible parameters. The contraction
// powers are computed through log1p so that alpha*h below machine epsilon
// still decays.
BoundTerms lmc_error_bound(int q, double M, int p, double mu2, double alpha, double h, double K);
BoundTerms lmc_hessian_error_bound(int q, double M, double M2, int p, double mu2, double alpha,
                                   double h, double K);
BoundTerms klmc_error_bound(int q, double M, int p, double mu2, double alpha, double h,
                            double gamma, double K);
BoundTerms klmc2_error_bound(int q, double M, double M2, int p, double mu2, double alpha, double h,
                             double gamma, double K);

// Tuning recipes. Each returns parameters satisfying the preconditions of its
// error bound or throws InfeasiblePlanError naming the violated constraint.
Plan plan_lmc(const PlannerInputs& inputs);
Plan plan_lmc_hessian(const PlannerInputs& inputs);
Plan plan_klmc(const PlannerInputs& inputs);
Plan plan_klmc2(const PlannerInputs& inputs);

enum class Metric { TV, W1, W2 };
Metric metric_from_name(const std::string& name);
std::string metric_name(Metric metric);

// Reference algorithm labels for the tabulated complexity formulas; LMCA is
// the averaged chain, MALA the Metropolis-adjusted one (reference calculators
// only, not implemented as samplers).
enum class ComplexityAlgorithm { LMCA, LMC, LMC_HESSIAN, KLMC, KLMC2, MALA };
ComplexityAlgorithm complexity_algorithm_from_name(const std::string& name);

// Scalar value of the tabulated iteration-complexity formula for the pair
// (algorithm, metric), logarithmic factors included as printed. Untabulated
// pairs throw UnsupportedCombinationError.
double complexity_reference(const PlannerInputs& inputs, ComplexityAlgorithm algorithm,
                            Metric metric);

// Absolute error threshold of the scaled criterion: epsilon * sqrt(mu2).
double scaled_error_target(double mu2, double epsilon);

}  // namespace langevin
