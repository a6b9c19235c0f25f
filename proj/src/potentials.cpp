#include "langevin/potentials.hpp"

#include <cmath>
#include <stdexcept>

#include "langevin/errors.hpp"

namespace langevin {

namespace {

void check_dim(int p) {
  if (p < 1) throw std::invalid_argument("potential dimension must be >= 1");
}

// Assembles a radial potential f(theta) = profile(r), r = ||theta||, from the
// scalar profile, the ratio profile'(r)/r (finite at r = 0 by construction)
// and the second derivative profile''(r). The gradient is slope_over_r * theta
// and the Hessian-vector product follows from the chain rule; at r = 0 the
// analytic limit gives grad = 0 and H v = profile''(0) v.
PotentialSpec make_radial(int p, std::function<double(double)> profile,
                          std::function<double(double)> slope_over_r,
                          std::function<double(double)> second_derivative) {
  PotentialSpec spec;
  spec.dim = p;
  spec.radial_profile = profile;
  spec.value = [profile](const Eigen::VectorXd& theta) { return profile(theta.norm()); };
  spec.grad = [slope_over_r](const Eigen::VectorXd& theta) -> Eigen::VectorXd {
    return slope_over_r(theta.norm()) * theta;
  };
  spec.hess_vec = [slope_over_r, second_derivative](const Eigen::VectorXd& theta,
                                                    const Eigen::VectorXd& v) -> Eigen::VectorXd {
    const double r = theta.norm();
    const double s = slope_over_r(r);
    if (r == 0.0) return second_derivative(0.0) * v;
    const double radial = (second_derivative(r) - s) / (r * r);
    return s * v + radial * theta.dot(v) * theta;
  };
  spec.minimizer = Eigen::VectorXd::Zero(p);
  return spec;
}

}  // namespace

PotentialSpec make_gaussian_potential(int p, const Eigen::VectorXd& precision_diagonal) {
  check_dim(p);
  if (precision_diagonal.size() != p)
    throw std::invalid_argument("precision diagonal must have length p");
  if ((precision_diagonal.array() <= 0.0).any())
    throw std::invalid_argument("precision diagonal entries must be positive");

  const Eigen::VectorXd lambda = precision_diagonal;
  PotentialSpec spec;
  spec.dim = p;
  spec.value = [lambda](const Eigen::VectorXd& theta) {
    return 0.5 * (lambda.array() * theta.array().square()).sum();
  };
  spec.grad = [lambda](const Eigen::VectorXd& theta) -> Eigen::VectorXd {
    return (lambda.array() * theta.array()).matrix();
  };
  spec.hess_vec = [lambda](const Eigen::VectorXd&, const Eigen::VectorXd& v) -> Eigen::VectorXd {
    return (lambda.array() * v.array()).matrix();
  };
  spec.grad_lipschitz = lambda.maxCoeff();
  spec.hess_lipschitz = 0.0;
  spec.convexity = ConvexityClass::strongly_convex(lambda.minCoeff());
  spec.minimizer = Eigen::VectorXd::Zero(p);
  spec.quadratic_precision = lambda;
  if ((lambda.array() == lambda(0)).all()) {
    const double l0 = lambda(0);
    spec.radial_profile = [l0](double r) { return 0.5 * l0 * r * r; };
  }
  spec.name = "gaussian";
  return spec;
}

PotentialSpec make_capped_quadratic_potential(int p) {
  check_dim(p);
  auto profile = [](double r) { return r <= 1.0 ? 0.5 * r * r : r; };
  auto slope_over_r = [](double r) { return r <= 1.0 ? 1.0 : 1.0 / r; };
  auto second = [](double r) { return r <= 1.0 ? 1.0 : 0.0; };
  PotentialSpec spec = make_radial(p, profile, slope_over_r, second);
  spec.grad_lipschitz = 1.0;
  spec.convexity = ConvexityClass::strong_inside_ball(1.0, 1.0);
  spec.name = "capped_quadratic";
  return spec;
}

PotentialSpec make_smoothed_huber_potential(int p, double m, double R) {
  check_dim(p);
  if (!(m > 0.0) || !(R > 0.0))
    throw std::invalid_argument("smoothed huber potential needs m > 0 and R > 0");
  auto profile = [m, R](double r) { return r <= R ? 0.5 * m * r * r : m * R * r - 0.5 * m * R * R; };
  auto slope_over_r = [m, R](double r) { return r <= R ? m : m * R / r; };
  auto second = [m, R](double r) { return r <= R ? m : 0.0; };
  PotentialSpec spec = make_radial(p, profile, slope_over_r, second);
  spec.grad_lipschitz = m;
  spec.convexity = ConvexityClass::strong_inside_ball(m, R);
  spec.name = "smoothed_huber";
  return spec;
}

SurrogatePotential surrogate(PotentialSpec base, double alpha) {
  if (alpha < 0.0) throw std::invalid_argument("surrogate penalty alpha must be >= 0");
  return SurrogatePotential{std::move(base), alpha};
}

}  // namespace langevin
