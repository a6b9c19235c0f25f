#pragma once

// Shared oracles for the test suites. Everything here is independent of the
// library implementation paths it is used to check: quadrature oracles
// integrate the defining expressions directly, the assignment oracle
// enumerates permutations.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace testsupport {

// --- adaptive Simpson (oracle-side implementation) --------------------------

inline double simpson_rec(const std::function<double(double)>& f, double a, double b, double fa,
                          double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double flm = f(0.5 * (a + m)), frm = f(0.5 * (m + b));
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double err = (left + right - whole) / 15.0;
  if (std::abs(err) <= tol || depth <= 0) return left + right + err;
  return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-13, int depth = 55) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_rec(f, a, b, fa, fm, fb, whole, tol, depth);
}

// --- 64-node Gauss-Legendre --------------------------------------------------

static constexpr double kGL64Nodes[64] = {
    -9.99305041735772170e-01, -9.96340116771955220e-01, -9.91013371476744287e-01,
    -9.83336253884625977e-01, -9.73326827789910975e-01, -9.61008799652053769e-01,
    -9.46411374858402765e-01, -9.29569172131939570e-01, -9.10522137078502825e-01,
    -8.89315445995114140e-01, -8.65999398154092770e-01, -8.40629296252580316e-01,
    -8.13265315122797539e-01, -7.83972358943341385e-01, -7.52819907260531940e-01,
    -7.19881850171610771e-01, -6.85236313054233270e-01, -6.48965471254657311e-01,
    -6.11155355172393278e-01, -5.71895646202634000e-01, -5.31279464019894565e-01,
    -4.89403145707052956e-01, -4.46366017253464087e-01, -4.02270157963991626e-01,
    -3.57220158337668126e-01, -3.11322871990210970e-01, -2.64687162208767424e-01,
    -2.17423643740007083e-01, -1.69644420423992803e-01, -1.21462819296120558e-01,
    -7.29931217877990424e-02, -2.43502926634244291e-02, +2.43502926634244291e-02,
    +7.29931217877990424e-02, +1.21462819296120558e-01, +1.69644420423992803e-01,
    +2.17423643740007083e-01, +2.64687162208767424e-01, +3.11322871990210970e-01,
    +3.57220158337668126e-01, +4.02270157963991626e-01, +4.46366017253464087e-01,
    +4.89403145707052956e-01, +5.31279464019894565e-01, +5.71895646202634000e-01,
    +6.11155355172393278e-01, +6.48965471254657311e-01, +6.85236313054233270e-01,
    +7.19881850171610771e-01, +7.52819907260531940e-01, +7.83972358943341385e-01,
    +8.13265315122797539e-01, +8.40629296252580316e-01, +8.65999398154092770e-01,
    +8.89315445995114140e-01, +9.10522137078502825e-01, +9.29569172131939570e-01,
    +9.46411374858402765e-01, +9.61008799652053769e-01, +9.73326827789910975e-01,
    +9.83336253884625977e-01, +9.91013371476744287e-01, +9.96340116771955220e-01,
    +9.99305041735772170e-01};
static constexpr double kGL64Weights[64] = {
    +1.78328072169421517e-03, +4.14703326056292329e-03, +6.50445796897965427e-03,
    +8.84675982636439102e-03, +1.11681394601314665e-02, +1.34630478967182315e-02,
    +1.57260304760250824e-02, +1.79517157756973016e-02, +2.01348231535300945e-02,
    +2.22701738083830071e-02, +2.43527025687108531e-02, +2.63774697150546272e-02,
    +2.83396726142597019e-02, +3.02346570724024953e-02, +3.20579283548514532e-02,
    +3.38051618371417867e-02, +3.54722132568823234e-02, +3.70551285402401509e-02,
    +3.85501531786155913e-02, +3.99537411327203495e-02, +4.12625632426234859e-02,
    +4.24735151236535977e-02, +4.35837245293234643e-02, +4.45905581637565454e-02,
    +4.54916279274181143e-02, +4.62847965813143747e-02, +4.69681828162099996e-02,
    +4.75401657148303014e-02, +4.79993885964583172e-02, +4.83447622348029543e-02,
    +4.85754674415034560e-02, +4.86909570091397514e-02, +4.86909570091397514e-02,
    +4.85754674415034560e-02, +4.83447622348029543e-02, +4.79993885964583172e-02,
    +4.75401657148303014e-02, +4.69681828162099996e-02, +4.62847965813143747e-02,
    +4.54916279274181143e-02, +4.45905581637565454e-02, +4.35837245293234643e-02,
    +4.24735151236535977e-02, +4.12625632426234859e-02, +3.99537411327203495e-02,
    +3.85501531786155913e-02, +3.70551285402401509e-02, +3.54722132568823234e-02,
    +3.38051618371417867e-02, +3.20579283548514532e-02, +3.02346570724024953e-02,
    +2.83396726142597019e-02, +2.63774697150546272e-02, +2.43527025687108531e-02,
    +2.22701738083830071e-02, +2.01348231535300945e-02, +1.79517157756973016e-02,
    +1.57260304760250824e-02, +1.34630478967182315e-02, +1.11681394601314665e-02,
    +8.84675982636439102e-03, +6.50445796897965427e-03, +4.14703326056292329e-03,
    +1.78328072169421517e-03};


inline double gauss_legendre_64(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (b - a), d = 0.5 * (a + b);
  double acc = 0.0;
  for (int i = 0; i < 64; ++i) acc += kGL64Weights[i] * f(c * kGL64Nodes[i] + d);
  return c * acc;
}

// --- brute-force minimum-cost perfect matching -------------------------------

inline double brute_force_matching(const Eigen::MatrixXd& cost) {
  const int n = static_cast<int>(cost.rows());
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  double best = std::numeric_limits<double>::infinity();
  do {
    double total = 0.0;
    for (int i = 0; i < n; ++i) total += cost(i, perm[i]);
    best = std::min(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// --- finite differences ------------------------------------------------------

// 5-point central difference gradient with step 1e-4 (1 + ||theta||).
inline Eigen::VectorXd fd_gradient(const std::function<double(const Eigen::VectorXd&)>& f,
                                   const Eigen::VectorXd& theta) {
  const double step = 1e-4 * (1.0 + theta.norm());
  Eigen::VectorXd grad(theta.size());
  for (Eigen::Index i = 0; i < theta.size(); ++i) {
    Eigen::VectorXd t = theta;
    const auto at = [&](double delta) {
      t(i) = theta(i) + delta;
      return f(t);
    };
    grad(i) = (-at(2.0 * step) + 8.0 * at(step) - 8.0 * at(-step) + at(-2.0 * step)) /
              (12.0 * step);
  }
  return grad;
}

inline Eigen::VectorXd random_vector(std::mt19937_64& rng, int p, double scale = 1.0) {
  std::normal_distribution<double> normal(0.0, scale);
  Eigen::VectorXd v(p);
  for (int i = 0; i < p; ++i) v(i) = normal(rng);
  return v;
}

}  // namespace testsupport
