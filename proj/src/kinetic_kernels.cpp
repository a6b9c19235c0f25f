#include "langevin/kinetic_kernels.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "langevin/errors.hpp"

namespace langevin {

namespace {

constexpr double kSeriesCutoff = 0.5;

// (u - 1 + e^-u)/u^2 = sum_k (-u)^k / (k+2)!
double e2_series(double u) {
  double term = 0.5, sum = 0.5;
  for (int k = 1; k <= 24; ++k) {
    term *= -u / (k + 2);
    sum += term;
  }
  return sum;
}

// (1 - (1+u) e^-u)/u^2 = sum_k (-1)^k (k+1) u^k / (k+2)!
double f2_series(double u) {
  double term = 0.5, sum = 0.5;
  for (int k = 0; k < 24; ++k) {
    term *= -u * (k + 2) / ((k + 1.0) * (k + 3));
    sum += term;
  }
  return sum;
}

// (u(1 + e^-u) - 2(1 - e^-u))/u^3 = sum_k (-1)^k (k+1) u^k / (k+3)!
double f3_series(double u) {
  double term = 1.0 / 6.0, sum = term;
  for (int k = 0; k < 24; ++k) {
    term *= -u * (k + 2) / ((k + 1.0) * (k + 4));
    sum += term;
  }
  return sum;
}

// Taylor coefficients of the scaled covariance entries f_ij(u) with
// C_ij = h^(i+j-1) f_ij(gamma h); valid for u <= 1/2 with truncation far
// below double precision.
constexpr int kNCoef = 20;
using Coef = std::array<double, kNCoef>;

constexpr Coef kF11 = {1.0, -1.0, 0.66666666666666667, -0.33333333333333333, 0.13333333333333333,
                       -0.044444444444444444, 0.012698412698412698, -0.0031746031746031746,
                       7.0546737213403880e-4, -1.4109347442680776e-4, 2.5653358986692320e-5,
                       -4.2755598311153867e-6, 6.5777843555621333e-7, -9.3968347936601905e-8,
                       1.2529113058213587e-8, -1.5661391322766984e-9, 1.8425166262078805e-10,
                       -2.0472406957865339e-11, 2.1549902060910883e-12, -2.1549902060910883e-13};
constexpr Coef kF12 = {0.5, -0.5, 0.29166666666666667, -0.125, 0.043055555555555556, -0.0125,
                       0.0031498015873015873, -7.0271164021164021e-4, 1.4081790123456790e-4,
                       -2.5628306878306878e-5, 4.2734721554165999e-6, -6.5761784511784512e-7,
                       9.3956877191004175e-8, -1.2528348341840405e-8, 1.5660913375033745e-9,
                       -1.8424885116353370e-10, 2.0472250765795653e-11, -2.1549819854558417e-12,
                       2.1549860957734650e-13, -2.0523696675545492e-14};
constexpr Coef kF13 = {0.16666666666666667, -0.20833333333333333, 0.14166666666666667,
                       -0.068055555555555556, 0.025595238095238095, -0.0079613095238095238,
                       0.0021191578483245150, -4.9410273368606702e-4, 1.0263848805515472e-4,
                       -1.9242106915718027e-5, 3.2890527682194349e-6, -5.1683738439690821e-7,
                       7.5175443065654706e-8, -1.0179952154571864e-8, 1.2897644498027707e-9,
                       -1.5354320837605973e-10, 1.7239929869363953e-11, -1.8317420862091874e-12,
                       1.8471346580932006e-13, -1.7725028558826619e-14};
constexpr Coef kF14 = {0.041666666666666667, -0.05, 0.031944444444444444, -0.014285714285714286,
                       0.0049851190476190476, -0.0014384920634920635, 3.5576499118165785e-4,
                       -7.7260702260702261e-5, 1.4991599192988082e-5, -2.6333620083620084e-6,
                       4.2302962689867452e-7, -6.2657800753038848e-8, 8.6145777386683471e-9,
                       -1.1055605819553065e-9, 1.3307361287544873e-10, -1.5085095855342551e-11,
                       1.6162512862353252e-12, -1.6419016059259584e-13, 1.5859255745541632e-14,
                       -1.4601862741029674e-15};
constexpr Coef kF22 = {0.33333333333333333, -0.25, 0.11666666666666667, -0.041666666666666667,
                       0.012301587301587302, -0.003125, 6.9995590828924162e-4,
                       -1.4054232804232804e-4, 2.5603254769921437e-5, -4.2713844797178131e-6,
                       6.5745725467947690e-7, -9.3945406445406445e-8, 1.2527583625467223e-8,
                       -1.5660435427300507e-9, 1.8424603970627936e-10, -2.0472094573725967e-11,
                       2.1549737648205950e-12, -2.1549819854558417e-13, 2.0523677102604428e-14,
                       -1.8657906068677720e-15};
constexpr Coef kF23 = {0.125, -0.11666666666666667, 0.0625, -0.024603174603174603, 0.0078125,
                       -0.0020998677248677249, 4.9189814814814815e-4, -1.0241301907968575e-4,
                       1.9221230158730159e-5, -3.2872862733973845e-6, 5.1669973544973545e-7,
                       -7.5165501752803340e-8, 1.0179283027745329e-8, -1.2897222779439555e-9,
                       1.5354070930294475e-10, -1.7239790118564760e-11, 1.8317346876374654e-12,
                       -1.8471309392343986e-13, 1.7725010765243834e-14, -1.6224273883016619e-15};
constexpr Coef kF24 = {0.033333333333333333, -0.027777777777777778, 0.013492063492063492,
                       -0.0048611111111111111, 0.0014219576719576720, -3.5383597883597884e-4,
                       7.7060285393618727e-5, -1.4972810111699001e-5, 2.6317561039783262e-6,
                       -4.2290344869709949e-7, 6.2648624156560664e-8, -8.6139564066151368e-9,
                       1.1055212215537457e-9, -1.3307126999440345e-10, 1.5084964325178605e-11,
                       -1.6162442986953655e-12, 1.6418980827965669e-13, -1.5859238841637986e-14,
                       1.4601855004689333e-15, -1.2844223593352622e-16};
constexpr Coef kF33 = {0.05, -0.055555555555555556, 0.033730158730158730, -0.014583333333333333,
                       0.0049768518518518519, -0.0014153439153439153, 3.4677128427128427e-4,
                       -7.4864050558495003e-5, 1.4474658571880794e-5, -2.5374206921825969e-6,
                       4.0721605701764432e-7, -6.0297694846305957e-8, 8.2914091616530926e-9,
                       -1.0645701599552276e-9, 1.2822219676401814e-10, -1.4546198688258290e-11,
                       1.5598031786567386e-12, -1.5859238841637986e-13, 1.5331947754923799e-14,
                       -1.4128645952687884e-15};
constexpr Coef kF34 = {0.013888888888888889, -0.013888888888888889, 0.0076388888888888889,
                       -0.0030092592592592593, 9.4080687830687831e-4, -2.4636243386243386e-4,
                       5.5849500293944738e-5, -1.1206643151087596e-5, 2.0223612733533368e-6,
                       -3.3217902761553555e-7, 5.0127731799358783e-8, -7.0023166501341105e-9,
                       9.1106927963005270e-10, -1.1098477418840441e-10, 1.2714596763880057e-11,
                       -1.3750971309920816e-12, 1.4086773263311258e-13, -1.3709537386570888e-14,
                       1.2709029434151509e-15, -1.1248839098469862e-16};
constexpr Coef kF44 = {0.0039682539682539683, -0.0034722222222222222, 0.0016975308641975309,
                       -6.0185185185185185e-4, 1.7105579605579606e-4, -4.1060405643738977e-5,
                       8.5922308144530367e-6, -1.6009490215839422e-6, 2.6964816978044491e-7,
                       -4.1522378451941944e-8, 5.8973802116892686e-9, -7.7803518334823449e-10,
                       9.5902029434742390e-11, -1.1098477418840441e-11, 1.2109139775123864e-12,
                       -1.2500883009018923e-13, 1.2249368055053268e-14, -1.1424614488809074e-15,
                       1.0167223547321207e-16, -8.6529531526691247e-18};

double horner(const Coef& c, double u) {
  double s = c[kNCoef - 1];
  for (int i = kNCoef - 2; i >= 0; --i) s = s * u + c[i];
  return s;
}

void check_inputs(double gamma, double h) {
  if (!(gamma > 0.0) || !(h > 0.0))
    throw std::invalid_argument("kinetic kernels need gamma > 0 and h > 0");
}

}  // namespace

KineticKernels eval_kernels(double gamma, double h) {
  check_inputs(gamma, h);
  const double u = gamma * h;
  KineticKernels k;
  k.gamma = gamma;
  k.h = h;
  k.psi0 = std::exp(-u);
  k.psi1 = -std::expm1(-u) / gamma;
  if (u <= kSeriesCutoff) {
    k.psi2 = h * h * e2_series(u);
    k.phi2 = h * h * f2_series(u);
    k.phi3 = h * h * h * f3_series(u);
  } else {
    const double e = std::exp(-u);
    k.psi2 = (u - 1.0 + e) / (gamma * gamma);
    k.phi2 = (1.0 - e - u * e) / (gamma * gamma);
    k.phi3 = (u * (1.0 + e) - 2.0 * (1.0 - e)) / (gamma * gamma * gamma);
  }
  return k;
}

NoiseCovariance noise_covariance(double gamma, double h) {
  check_inputs(gamma, h);
  const double u = gamma * h;
  double f[4][4];
  if (u <= kSeriesCutoff) {
    f[0][0] = horner(kF11, u);
    f[0][1] = horner(kF12, u);
    f[0][2] = horner(kF13, u);
    f[0][3] = horner(kF14, u);
    f[1][1] = horner(kF22, u);
    f[1][2] = horner(kF23, u);
    f[1][3] = horner(kF24, u);
    f[2][2] = horner(kF33, u);
    f[2][3] = horner(kF34, u);
    f[3][3] = horner(kF44, u);
  } else {
    const double e = std::exp(-u);
    const double e2 = e * e;
    const double u2 = u * u, u3 = u2 * u, u4 = u3 * u, u5 = u4 * u, u6 = u5 * u, u7 = u6 * u;
    f[0][0] = (1.0 - e2) / (2.0 * u);
    f[0][1] = (1.0 - e) * (1.0 - e) / (2.0 * u2);
    f[0][2] = (2.0 * u * e2 + 1.0 - 4.0 * e + 3.0 * e2) / (4.0 * u3);
    f[0][3] = (0.25 + e - u * e - 1.25 * e2 - 0.5 * u * e2) / u4;
    f[1][1] = (2.0 * u - 3.0 + 4.0 * e - e2) / (2.0 * u3);
    f[1][2] = (u - 2.25 + 3.0 * e + u * e - 0.75 * e2 - 0.5 * u * e2) / u4;
    f[1][3] = (2.0 * u2 - 8.0 * u + 11.0 - 16.0 * e + 5.0 * e2 + 2.0 * u * e2) / (4.0 * u5);
    f[2][2] =
        (4.0 * u - 11.0 + 16.0 * e + 8.0 * u * e - 5.0 * e2 - 6.0 * u * e2 - 2.0 * u2 * e2) /
        (4.0 * u5);
    f[2][3] = (u2 - 4.0 * u + 4.0 - 8.0 * e + 2.0 * u2 * e + 4.0 * e2 + 4.0 * u * e2 + u2 * e2) /
              (2.0 * u6);
    f[3][3] = (4.0 * u3 - 24.0 * u2 + 48.0 * u - 9.0 + 48.0 * e - 48.0 * u * e - 24.0 * u2 * e -
               39.0 * e2 - 30.0 * u * e2 - 6.0 * u2 * e2) /
              (12.0 * u7);
  }

  NoiseCovariance cov;
  cov.gamma = gamma;
  cov.h = h;
  double hp = h;  // h^(i+j-1) running over the upper triangle
  for (int i = 0; i < 4; ++i) {
    double scale = hp;
    for (int j = i; j < 4; ++j) {
      cov.C(i, j) = f[i][j] * scale;
      cov.C(j, i) = cov.C(i, j);
      scale *= h;
    }
    hp *= h * h;
  }

  // Cholesky with escalating diagonal jitter: C degenerates towards rank one
  // as h -> 0 and the factorization must not abort valid runs.
  const double trace = cov.C.trace();
  for (double jitter : {0.0, 1e-16, 1e-14, 1e-12}) {
    Eigen::Matrix4d attempt = cov.C + jitter * trace * Eigen::Matrix4d::Identity();
    Eigen::LLT<Eigen::Matrix4d> llt(attempt);
    if (llt.info() == Eigen::Success) {
      cov.L = llt.matrixL();
      return cov;
    }
  }
  std::ostringstream msg;
  msg << "noise covariance factorization failed for gamma=" << gamma << " h=" << h;
  throw NumericError(msg.str());
}

}  // namespace langevin
