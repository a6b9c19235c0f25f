#pragma once

#include <Eigen/Dense>

namespace langevin {

// Scalar kernel functions of one kinetic discretization step:
//   psi0(t) = exp(-gamma t),  psi_{k+1}(t) = int_0^t psi_k,
//   phi_{k+1}(t) = int_0^t exp(-gamma (t-s)) psi_k(s) ds,
// evaluated at t = h. Stable over gamma*h in [1e-12, 50]: below gamma*h = 1/2
// every expression switches to its Taylor series (truncation < 1e-16
// relative), above it the closed forms carry no harmful cancellation.
struct KineticKernels {
  double gamma = 0.0;
  double h = 0.0;
  double psi0 = 0.0;
  double psi1 = 0.0;
  double psi2 = 0.0;
  double phi2 = 0.0;
  double phi3 = 0.0;
};

KineticKernels eval_kernels(double gamma, double h);

// Per-coordinate covariance of the correlated Gaussian increments
// (xi1, xi2, xi3, xi4):
//   C_ij = int_0^h v_i(t) v_j(t) dt,  v = [psi0, psi1, phi2, phi3],
// together with a lower-triangular factor L with C = L L^T. The top-left
// 2x2 block is the covariance consumed by the first-order kinetic sampler.
struct NoiseCovariance {
  double gamma = 0.0;
  double h = 0.0;
  Eigen::Matrix4d C = Eigen::Matrix4d::Zero();
  Eigen::Matrix4d L = Eigen::Matrix4d::Zero();
};

NoiseCovariance noise_covariance(double gamma, double h);

}  // namespace langevin
