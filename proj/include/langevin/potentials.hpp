#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <string>

namespace langevin {

enum class ConvexityKind { Convex, StronglyConvex, StrongInsideBall, StrongOutsideBall };

struct ConvexityClass {
  ConvexityKind kind = ConvexityKind::Convex;
  double m = 0.0;  // strong-convexity modulus (where applicable)
  double R = 0.0;  // ball radius (where applicable)

  static ConvexityClass convex() { return {ConvexityKind::Convex, 0.0, 0.0}; }
  static ConvexityClass strongly_convex(double m) { return {ConvexityKind::StronglyConvex, m, 0.0}; }
  static ConvexityClass strong_inside_ball(double m, double R) {
    return {ConvexityKind::StrongInsideBall, m, R};
  }
  static ConvexityClass strong_outside_ball(double m, double R) {
    return {ConvexityKind::StrongOutsideBall, m, R};
  }
};

// A target potential f with its oracles and smoothness metadata. Oracles are
// pure functions of their inputs; concurrent evaluation is safe.
struct PotentialSpec {
  int dim = 0;
  std::function<double(const Eigen::VectorXd&)> value;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> grad;
  // Optional Hessian-vector product (theta, v) -> H(theta) v.
  std::function<Eigen::VectorXd(const Eigen::VectorXd&, const Eigen::VectorXd&)> hess_vec;
  double grad_lipschitz = 0.0;                 // M
  std::optional<double> hess_lipschitz;        // M2
  ConvexityClass convexity;
  std::optional<Eigen::VectorXd> minimizer;

  // Set when f(theta) = sum_i lambda_i theta_i^2 / 2: enables exact chain-law
  // propagation and iid sampling oracles.
  std::optional<Eigen::VectorXd> quadratic_precision;
  // Set when f(theta) = profile(||theta||): enables radial quadrature.
  std::function<double(double)> radial_profile;
  std::string name;

  bool has_hess_vec() const { return static_cast<bool>(hess_vec); }
  bool is_quadratic() const { return quadratic_precision.has_value(); }
  bool is_radial() const { return static_cast<bool>(radial_profile); }
};

// Target with the quadratic penalty alpha ||theta||^2 / 2 added to the
// potential; alpha-strongly convex whenever the base is convex.
struct SurrogatePotential {
  PotentialSpec base;
  double alpha = 0.0;

  double value(const Eigen::VectorXd& theta) const {
    return base.value(theta) + 0.5 * alpha * theta.squaredNorm();
  }
  Eigen::VectorXd grad(const Eigen::VectorXd& theta) const {
    return base.grad(theta) + alpha * theta;
  }
  Eigen::VectorXd hess_vec(const Eigen::VectorXd& theta, const Eigen::VectorXd& v) const {
    return base.hess_vec(theta, v) + alpha * v;
  }
  double grad_lipschitz() const { return base.grad_lipschitz + alpha; }
  double strong_convexity() const {
    const auto& c = base.convexity;
    return alpha + (c.kind == ConvexityKind::StronglyConvex ? c.m : 0.0);
  }
};

// f(theta) = sum_i lambda_i theta_i^2 / 2 with exact oracles.
PotentialSpec make_gaussian_potential(int p, const Eigen::VectorXd& precision_diagonal);

// Radial potential r^2/2 inside the unit ball, r outside. The gradient is
// continuous across r = 1 (unit norm on both sides); the value jumps by 1/2.
PotentialSpec make_capped_quadratic_potential(int p);

// Radial potential m r^2/2 for r <= R with the C^1 linear continuation
// m R r - m R^2/2 beyond.
PotentialSpec make_smoothed_huber_potential(int p, double m, double R);

SurrogatePotential surrogate(PotentialSpec base, double alpha);

}  // namespace langevin
