#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "langevin/potentials.hpp"
#include "langevin/samplers.hpp"

namespace langevin {

struct SampleCloud {
  Eigen::MatrixXd points;  // n x p
  std::string provenance;

  SampleCloud() = default;
  SampleCloud(Eigen::MatrixXd pts, std::string origin);
  int n() const { return static_cast<int>(points.rows()); }
  int p() const { return static_cast<int>(points.cols()); }
};

// Exact empirical W_q between two equal-size 1-D samples via the sorted
// (quantile) coupling. Inputs may be unsorted; they are sorted internally.
double wasserstein_1d(std::vector<double> xs, std::vector<double> ys, int q);

// Exact empirical W_q via minimum-cost perfect matching on the n x n matrix
// of |a_i - b_j|^q costs (shortest augmenting paths, O(n^3)); n <= 4096.
double wasserstein_empirical(const SampleCloud& a, const SampleCloud& b, int q);

struct GaussianLaw {
  Eigen::VectorXd mean;
  Eigen::MatrixXd covariance;
};

// Closed-form W2 between Gaussian laws:
//   W2^2 = |mu_a - mu_b|^2 + tr(Sa + Sb - 2 (Sb^{1/2} Sa Sb^{1/2})^{1/2}).
// Eigenvalues are clamped at zero to absorb symmetric-roundoff noise;
// genuinely indefinite covariances are rejected.
double gaussian_w2(const GaussianLaw& a, const GaussianLaw& b);

// Exact law of the K-th position iterate of any of the three samplers on a
// quadratic potential: every update is affine-Gaussian, so the per-coordinate
// mean and covariance propagate exactly. The returned covariance is diagonal.
GaussianLaw gaussian_chain_law(const SamplerConfig& config, const PotentialSpec& potential);

struct KineticCoordinateLaw {
  Eigen::Vector2d mean;       // (v, theta)
  Eigen::Matrix2d covariance;
};

// Joint per-coordinate (v, theta) law of a kinetic chain on a quadratic
// potential after K steps.
std::vector<KineticCoordinateLaw> gaussian_chain_law_joint(const SamplerConfig& config,
                                                           const PotentialSpec& potential);

// dist <= epsilon * sqrt(mu2)?
bool scaled_error_check(double dist, double mu2, double epsilon);

// iid draws from a diagonal-precision Gaussian target (reference clouds for
// empirical comparisons); counter-based and reproducible.
Eigen::MatrixXd sample_gaussian_target(const PotentialSpec& potential, int n, std::uint64_t seed);

}  // namespace langevin
