#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "langevin/kinetic_kernels.hpp"
#include "langevin/potentials.hpp"

namespace langevin {

enum class Algorithm { LMC, KLMC, KLMC2 };

std::string algorithm_name(Algorithm alg);
Algorithm algorithm_from_name(const std::string& name);

struct SamplerConfig {
  Algorithm algorithm = Algorithm::LMC;
  double alpha = 0.0;            // quadratic penalty
  double h = 0.0;                // step size
  double gamma = 0.0;            // friction (kinetic only)
  std::int64_t steps = 0;        // K
  std::uint64_t seed = 0;
  std::uint64_t chain_id = 0;
  std::int64_t thin = 1;         // keep every thin-th iterate (final always kept)
  Eigen::VectorXd initial_theta; // empty = origin
};

struct Trajectory {
  SamplerConfig config;
  std::vector<std::int64_t> kept_steps;     // iterate index of each stored state
  std::vector<Eigen::VectorXd> states;      // positions, kept_steps order
  std::vector<Eigen::VectorXd> velocities;  // kinetic only, same order
  std::uint64_t rng_draw_count = 0;

  const Eigen::VectorXd& final_state() const { return states.back(); }
};

// One Euler step of the penalized overdamped dynamics:
//   theta' = (1 - alpha h) theta - h grad f(theta) + sqrt(2h) noise.
Eigen::VectorXd lmc_step(const Eigen::VectorXd& theta, const SurrogatePotential& pot, double h,
                         const Eigen::VectorXd& noise);

struct KineticState {
  Eigen::VectorXd v;
  Eigen::VectorXd theta;
};

// One exponential-integrator step of the kinetic dynamics. noise4 holds the
// correlated increments as a 4 x p matrix (row i = xi^(i), already L g); the
// first-order step consumes rows 1-2 only.
KineticState klmc_step(const KineticState& state, const SurrogatePotential& pot,
                       const KineticKernels& kernels, const Eigen::Matrix<double, 4, Eigen::Dynamic>& noise4);

// Second-order variant: adds Hessian-vector corrections and consumes all four
// noise rows. The gradient and Hessian are both evaluated at the pre-step
// position. With a zero Hessian-vector oracle and alpha = 0 this reproduces
// klmc_step bitwise on the same noise.
KineticState klmc2_step(const KineticState& state, const SurrogatePotential& pot,
                        const KineticKernels& kernels, const Eigen::Matrix<double, 4, Eigen::Dynamic>& noise4);

// Runs K steps of the selected kernel from (v0, theta0) with v0 ~ N(0, I_p)
// (kinetic) and theta0 = config.initial_theta (origin when empty). The noise
// stream is counter-based: a chain is a pure function of (config, potential)
// and chains with distinct (seed, chain_id) are independent.
Trajectory run(const SamplerConfig& config, const PotentialSpec& potential);

// Final states of chains 0..n_chains-1 (chain c runs with chain_id = c),
// executed on up to `threads` workers; result is thread-count independent.
Eigen::MatrixXd run_chain_finals(SamplerConfig config, const PotentialSpec& potential,
                                 int n_chains, int threads, std::uint64_t* total_draws = nullptr);

}  // namespace langevin
