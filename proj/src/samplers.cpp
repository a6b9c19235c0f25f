#include "langevin/samplers.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "langevin/errors.hpp"
#include "langevin/rng.hpp"

namespace langevin {

std::string algorithm_name(Algorithm alg) {
  switch (alg) {
    case Algorithm::LMC: return "lmc";
    case Algorithm::KLMC: return "klmc";
    case Algorithm::KLMC2: return "klmc2";
  }
  return "unknown";
}

Algorithm algorithm_from_name(const std::string& name) {
  if (name == "lmc") return Algorithm::LMC;
  if (name == "klmc") return Algorithm::KLMC;
  if (name == "klmc2") return Algorithm::KLMC2;
  throw std::invalid_argument("unknown algorithm: " + name);
}

Eigen::VectorXd lmc_step(const Eigen::VectorXd& theta, const SurrogatePotential& pot, double h,
                         const Eigen::VectorXd& noise) {
  Eigen::VectorXd out =
      (1.0 - pot.alpha * h) * theta - h * pot.base.grad(theta) + std::sqrt(2.0 * h) * noise;
  if (!out.allFinite())
    throw DivergenceError("lmc_step produced a non-finite state", -1);
  return out;
}

KineticState klmc_step(const KineticState& state, const SurrogatePotential& pot,
                       const KineticKernels& kernels,
                       const Eigen::Matrix<double, 4, Eigen::Dynamic>& noise4) {
  const Eigen::VectorXd g = pot.grad(state.theta);
  const double root = std::sqrt(2.0 * kernels.gamma);
  KineticState out;
  out.v = kernels.psi0 * state.v - kernels.psi1 * g + root * noise4.row(0).transpose();
  out.theta = state.theta + kernels.psi1 * state.v - kernels.psi2 * g +
              root * noise4.row(1).transpose();
  if (!out.v.allFinite() || !out.theta.allFinite())
    throw DivergenceError("klmc_step produced a non-finite state", -1);
  return out;
}

KineticState klmc2_step(const KineticState& state, const SurrogatePotential& pot,
                        const KineticKernels& kernels,
                        const Eigen::Matrix<double, 4, Eigen::Dynamic>& noise4) {
  if (!pot.base.has_hess_vec())
    throw CapabilityError("klmc2_step requires a Hessian-vector oracle");
  const Eigen::VectorXd g = pot.grad(state.theta);
  const Eigen::VectorXd Hv = pot.hess_vec(state.theta, state.v);
  const Eigen::VectorXd Hx3 = pot.hess_vec(state.theta, noise4.row(2).transpose());
  const Eigen::VectorXd Hx4 = pot.hess_vec(state.theta, noise4.row(3).transpose());
  const double root = std::sqrt(2.0 * kernels.gamma);
  KineticState out;
  out.v = kernels.psi0 * state.v - kernels.psi1 * g - kernels.phi2 * Hv +
          root * (noise4.row(0).transpose() - Hx3);
  out.theta = state.theta + kernels.psi1 * state.v - kernels.psi2 * g - kernels.phi3 * Hv +
              root * (noise4.row(1).transpose() - Hx4);
  if (!out.v.allFinite() || !out.theta.allFinite())
    throw DivergenceError("klmc2_step produced a non-finite state", -1);
  return out;
}

namespace {

void validate(const SamplerConfig& config, const PotentialSpec& potential) {
  if (potential.dim < 1) throw std::invalid_argument("potential dimension must be >= 1");
  if (!(config.h > 0.0)) throw std::invalid_argument("step size h must be positive");
  if (config.alpha < 0.0) throw std::invalid_argument("penalty alpha must be >= 0");
  if (config.steps < 0) throw std::invalid_argument("steps must be >= 0");
  // one counter field addresses the step index
  if (config.steps >= (std::int64_t{1} << 32))
    throw std::invalid_argument("steps must be below 2^32");
  if (config.thin < 1) throw std::invalid_argument("thin must be >= 1");
  if (config.algorithm != Algorithm::LMC && !(config.gamma > 0.0))
    throw std::invalid_argument("kinetic samplers need gamma > 0");
  if (config.algorithm == Algorithm::KLMC2 && !potential.has_hess_vec())
    throw CapabilityError("klmc2 requires a potential with a Hessian-vector oracle");
  if (config.initial_theta.size() != 0 && config.initial_theta.size() != potential.dim)
    throw std::invalid_argument("initial_theta dimension mismatch");
}

std::vector<double> to_std(const Eigen::VectorXd& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

}  // namespace

Trajectory run(const SamplerConfig& config, const PotentialSpec& potential) {
  validate(config, potential);
  const int p = potential.dim;
  const SurrogatePotential pot = surrogate(potential, config.alpha);
  const GaussianStream stream(config.seed, config.chain_id);
  const bool kinetic = config.algorithm != Algorithm::LMC;

  Trajectory traj;
  traj.config = config;

  Eigen::VectorXd theta = config.initial_theta.size() ? config.initial_theta
                                                      : Eigen::VectorXd::Zero(p);
  Eigen::VectorXd v;
  KineticKernels kernels;
  Eigen::Matrix4d L;
  if (kinetic) {
    kernels = eval_kernels(config.gamma, config.h);
    L = noise_covariance(config.gamma, config.h).L;
    v.resize(p);
    for (int j = 0; j < p; ++j) v(j) = stream.normal(0, static_cast<std::uint32_t>(j), 0);
    traj.rng_draw_count += static_cast<std::uint64_t>(p);
  }

  const auto keep = [&](std::int64_t k) {
    return k % config.thin == 0 || k == config.steps;
  };
  const auto store = [&](std::int64_t k) {
    traj.kept_steps.push_back(k);
    traj.states.push_back(theta);
    if (kinetic) traj.velocities.push_back(v);
  };
  store(0);

  Eigen::VectorXd noise(p);
  Eigen::Matrix<double, 4, Eigen::Dynamic> g4(4, p), z4(4, p);
  for (std::int64_t k = 0; k < config.steps; ++k) {
    const std::uint64_t draw_step = static_cast<std::uint64_t>(k) + 1;
    try {
      if (config.algorithm == Algorithm::LMC) {
        for (int j = 0; j < p; ++j)
          noise(j) = stream.normal(draw_step, static_cast<std::uint32_t>(j), 0);
        traj.rng_draw_count += static_cast<std::uint64_t>(p);
        theta = lmc_step(theta, pot, config.h, noise);
      } else {
        for (int j = 0; j < p; ++j) {
          const auto pair0 = stream.normal_pair(draw_step, static_cast<std::uint32_t>(j), 0);
          const auto pair1 = stream.normal_pair(draw_step, static_cast<std::uint32_t>(j), 1);
          g4(0, j) = pair0.first;
          g4(1, j) = pair0.second;
          g4(2, j) = pair1.first;
          g4(3, j) = pair1.second;
        }
        traj.rng_draw_count += 4 * static_cast<std::uint64_t>(p);
        z4.noalias() = L * g4;
        KineticState state{v, theta};
        state = config.algorithm == Algorithm::KLMC ? klmc_step(state, pot, kernels, z4)
                                                    : klmc2_step(state, pot, kernels, z4);
        v = state.v;
        theta = state.theta;
      }
    } catch (const DivergenceError& e) {
      throw DivergenceError(std::string(e.what()) + " at step " + std::to_string(k + 1), k + 1,
                            to_std(traj.states.back()));
    }
    if (keep(k + 1)) store(k + 1);
  }
  return traj;
}

Eigen::MatrixXd run_chain_finals(SamplerConfig config, const PotentialSpec& potential,
                                 int n_chains, int threads, std::uint64_t* total_draws) {
  if (n_chains < 1) throw std::invalid_argument("n_chains must be >= 1");
  if (threads < 1) threads = 1;
  Eigen::MatrixXd finals(n_chains, potential.dim);
  std::atomic<std::uint64_t> draws{0};
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  const auto worker = [&]() {
    for (;;) {
      const int c = next.fetch_add(1);
      if (c >= n_chains || failed.load()) return;
      try {
        SamplerConfig chain_config = config;
        chain_config.chain_id = static_cast<std::uint64_t>(c);
        chain_config.thin = std::max<std::int64_t>(chain_config.steps, 1);
        Trajectory traj = run(chain_config, potential);
        finals.row(c) = traj.final_state().transpose();
        draws += traj.rng_draw_count;
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  const int n_workers = std::min(threads, n_chains);
  pool.reserve(n_workers);
  for (int t = 0; t < n_workers; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failed.load()) std::rethrow_exception(error);
  if (total_draws) *total_draws = draws.load();
  return finals;
}

}  // namespace langevin
