#include "langevin/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "langevin/errors.hpp"
#include "langevin/kinetic_kernels.hpp"
#include "langevin/rng.hpp"

namespace langevin {

SampleCloud::SampleCloud(Eigen::MatrixXd pts, std::string origin)
    : points(std::move(pts)), provenance(std::move(origin)) {
  if (points.rows() < 1) throw std::invalid_argument("sample cloud needs n >= 1");
  if (!points.allFinite()) throw std::invalid_argument("sample cloud has non-finite entries");
}

namespace {

void check_order(int q) {
  if (q != 1 && q != 2) throw std::invalid_argument("Wasserstein order q must be 1 or 2");
}

// Jonker-Volgenant style shortest-augmenting-path assignment; returns the
// minimum total cost of a perfect matching of the n x n cost matrix.
double assignment_cost(const Eigen::MatrixXd& cost) {
  const int n = static_cast<int>(cost.rows());
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> match(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    match[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = match[j0];
      int j1 = 0;
      double delta = inf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  double total = 0.0;
  for (int j = 1; j <= n; ++j) total += cost(match[j] - 1, j - 1);
  return total;
}

}  // namespace

double wasserstein_1d(std::vector<double> xs, std::vector<double> ys, int q) {
  check_order(q);
  if (xs.size() != ys.size())
    throw std::invalid_argument("wasserstein_1d needs equal sample counts");
  if (xs.empty()) throw std::invalid_argument("wasserstein_1d needs n >= 1");
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  double acc = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double d = std::abs(xs[i] - ys[i]);
    acc += q == 1 ? d : d * d;
  }
  acc /= static_cast<double>(xs.size());
  return q == 1 ? acc : std::sqrt(acc);
}

double wasserstein_empirical(const SampleCloud& a, const SampleCloud& b, int q) {
  check_order(q);
  if (a.n() != b.n()) throw std::invalid_argument("wasserstein_empirical needs equal sample counts");
  if (a.p() != b.p()) throw std::invalid_argument("wasserstein_empirical needs equal dimensions");
  if (a.n() > 4096)
    throw CapacityError("wasserstein_empirical caps at n = 4096; subsample the clouds");
  const int n = a.n();
  Eigen::MatrixXd cost(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double d = (a.points.row(i) - b.points.row(j)).norm();
      cost(i, j) = q == 1 ? d : d * d;
    }
  }
  const double total = assignment_cost(cost);
  const double mean = total / n;
  return q == 1 ? mean : std::sqrt(mean);
}

namespace {

Eigen::MatrixXd psd_sqrt(const Eigen::MatrixXd& S, const char* who) {
  if (!S.isApprox(S.transpose(), 1e-12))
    throw std::invalid_argument(std::string(who) + ": covariance is not symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(S);
  const double scale = std::max(1.0, solver.eigenvalues().cwiseAbs().maxCoeff());
  if (solver.eigenvalues().minCoeff() < -1e-12 * scale)
    throw std::invalid_argument(std::string(who) + ": covariance is not positive semidefinite");
  const Eigen::VectorXd clamped = solver.eigenvalues().cwiseMax(0.0);
  return solver.eigenvectors() * clamped.cwiseSqrt().asDiagonal() *
         solver.eigenvectors().transpose();
}

}  // namespace

double gaussian_w2(const GaussianLaw& a, const GaussianLaw& b) {
  if (a.mean.size() != b.mean.size())
    throw std::invalid_argument("gaussian_w2: dimension mismatch");
  const Eigen::MatrixXd rb = psd_sqrt(b.covariance, "gaussian_w2");
  const Eigen::MatrixXd inner = rb * a.covariance * rb;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(inner);
  const double cross = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
  // Also validates a's covariance.
  (void)psd_sqrt(a.covariance, "gaussian_w2");
  const double w2sq = (a.mean - b.mean).squaredNorm() + a.covariance.trace() +
                      b.covariance.trace() - 2.0 * cross;
  return std::sqrt(std::max(0.0, w2sq));
}

namespace {

struct CoordinateMaps {
  // theta' = t_scalar * theta + noise, or kinetic 2x2 blocks
  bool kinetic = false;
  std::vector<double> t_scalar, n_scalar;
  std::vector<Eigen::Matrix2d> t_block, n_block;
};

CoordinateMaps build_maps(const SamplerConfig& config, const PotentialSpec& potential) {
  if (!potential.is_quadratic())
    throw CapabilityError("gaussian_chain_law needs a quadratic potential");
  const Eigen::VectorXd lambda = *potential.quadratic_precision;
  const int p = potential.dim;
  CoordinateMaps maps;
  maps.kinetic = config.algorithm != Algorithm::LMC;
  if (!maps.kinetic) {
    maps.t_scalar.resize(p);
    maps.n_scalar.resize(p);
    for (int i = 0; i < p; ++i) {
      maps.t_scalar[i] = 1.0 - config.h * (lambda(i) + config.alpha);
      maps.n_scalar[i] = 2.0 * config.h;
    }
    return maps;
  }
  const KineticKernels k = eval_kernels(config.gamma, config.h);
  const NoiseCovariance cov = noise_covariance(config.gamma, config.h);
  maps.t_block.resize(p);
  maps.n_block.resize(p);
  for (int i = 0; i < p; ++i) {
    const double la = lambda(i) + config.alpha;
    Eigen::Matrix2d T;
    if (config.algorithm == Algorithm::KLMC) {
      T << k.psi0, -k.psi1 * la, k.psi1, 1.0 - k.psi2 * la;
      maps.n_block[i] = 2.0 * config.gamma * cov.C.topLeftCorner<2, 2>();
    } else {
      T << k.psi0 - k.phi2 * la, -k.psi1 * la, k.psi1 - k.phi3 * la, 1.0 - k.psi2 * la;
      Eigen::Matrix<double, 2, 4> B = Eigen::Matrix<double, 2, 4>::Zero();
      B(0, 0) = 1.0;
      B(0, 2) = -la;
      B(1, 1) = 1.0;
      B(1, 3) = -la;
      maps.n_block[i] = 2.0 * config.gamma * B * cov.C * B.transpose();
    }
    maps.t_block[i] = T;
  }
  return maps;
}

}  // namespace

std::vector<KineticCoordinateLaw> gaussian_chain_law_joint(const SamplerConfig& config,
                                                           const PotentialSpec& potential) {
  if (config.algorithm == Algorithm::LMC)
    throw std::invalid_argument("gaussian_chain_law_joint applies to kinetic chains");
  const CoordinateMaps maps = build_maps(config, potential);
  const int p = potential.dim;
  std::vector<KineticCoordinateLaw> out(p);
  for (int i = 0; i < p; ++i) {
    KineticCoordinateLaw law;
    const double theta0 = config.initial_theta.size() ? config.initial_theta(i) : 0.0;
    law.mean << 0.0, theta0;
    law.covariance << 1.0, 0.0, 0.0, 0.0;  // v0 ~ N(0,1), theta0 deterministic
    const Eigen::Matrix2d& T = maps.t_block[i];
    for (std::int64_t step = 0; step < config.steps; ++step) {
      law.mean = T * law.mean;
      law.covariance = T * law.covariance * T.transpose() + maps.n_block[i];
    }
    out[i] = law;
  }
  return out;
}

GaussianLaw gaussian_chain_law(const SamplerConfig& config, const PotentialSpec& potential) {
  const int p = potential.dim;
  GaussianLaw law;
  law.mean = Eigen::VectorXd::Zero(p);
  law.covariance = Eigen::MatrixXd::Zero(p, p);
  if (config.algorithm == Algorithm::LMC) {
    const CoordinateMaps maps = build_maps(config, potential);
    for (int i = 0; i < p; ++i) {
      double mean = config.initial_theta.size() ? config.initial_theta(i) : 0.0;
      double var = 0.0;
      const double T = maps.t_scalar[i];
      for (std::int64_t step = 0; step < config.steps; ++step) {
        mean *= T;
        var = T * T * var + maps.n_scalar[i];
      }
      law.mean(i) = mean;
      law.covariance(i, i) = var;
    }
    return law;
  }
  const auto joint = gaussian_chain_law_joint(config, potential);
  for (int i = 0; i < p; ++i) {
    law.mean(i) = joint[i].mean(1);
    law.covariance(i, i) = joint[i].covariance(1, 1);
  }
  return law;
}

bool scaled_error_check(double dist, double mu2, double epsilon) {
  if (!(mu2 > 0.0) || !(epsilon > 0.0))
    throw std::invalid_argument("scaled_error_check needs mu2 > 0 and epsilon > 0");
  return dist <= epsilon * std::sqrt(mu2);
}

Eigen::MatrixXd sample_gaussian_target(const PotentialSpec& potential, int n, std::uint64_t seed) {
  if (!potential.is_quadratic())
    throw CapabilityError("sample_gaussian_target needs a quadratic potential");
  if (n < 1) throw std::invalid_argument("sample_gaussian_target needs n >= 1");
  const Eigen::VectorXd lambda = *potential.quadratic_precision;
  const GaussianStream stream(seed, /*chain=*/0xFEEDFACEull);
  Eigen::MatrixXd draws(n, potential.dim);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < potential.dim; ++j)
      draws(i, j) = stream.normal(static_cast<std::uint64_t>(i), static_cast<std::uint32_t>(j), 0) /
                    std::sqrt(lambda(j));
  return draws;
}

}  // namespace langevin
