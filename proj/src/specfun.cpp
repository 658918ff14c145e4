#include "hextrap/specfun.hpp"

#include <quadmath.h>

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace hextrap::specfun {

double SignedLogValue::value() const {
  if (sign == 0) return 0.0;
  return sign * std::exp(log_magnitude);
}

SignedLogValue SignedLogValue::from_value(double x) {
  if (x == 0.0) return {0.0, 0};
  return {std::log(std::fabs(x)), x > 0 ? +1 : -1};
}

double laguerre(int n, int alpha, double x) {
  assert(n >= 0 && alpha >= 0);
  if (n == 0) return 1.0;
  double lkm1 = 1.0;
  double lk = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double lkp1 = ((2.0 * k + 1.0 + alpha - x) * lk - (k + alpha) * lkm1) / (k + 1.0);
    lkm1 = lk;
    lk = lkp1;
  }
  return lk;
}

double hermite(int n, double x) {
  assert(n >= 0);
  if (n == 0) return 1.0;
  double hkm1 = 1.0;
  double hk = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double hkp1 = 2.0 * x * hk - 2.0 * k * hkm1;
    hkm1 = hk;
    hk = hkp1;
  }
  return hk;
}

namespace {

// log Gamma(k/2) for k = 1..kTableSize-1 in quad precision, built once by
// the recursion Gamma(a+1) = a Gamma(a) from Gamma(1/2) = sqrt(pi) and
// Gamma(1) = 1.  Covers every index reachable with 2*nu + mu <= ~1000.
constexpr int kTableSize = 4096;

const std::vector<__float128>& quad_log_gamma_table() {
  static const std::vector<__float128> table = [] {
    std::vector<__float128> t(kTableSize);
    t[1] = logq(M_PIq) / 2;
    t[2] = 0;
    for (int k = 3; k < kTableSize; ++k) t[k] = t[k - 2] + logq((k - 2) / __float128(2));
    return t;
  }();
  return table;
}

__float128 quad_log_gamma_half(int two_a) {
  if (two_a <= 0) throw std::domain_error("log_gamma_half: argument must be positive");
  const auto& table = quad_log_gamma_table();
  if (two_a < kTableSize) return table[two_a];
  __float128 lg = table[kTableSize - 2 + (two_a - kTableSize) % 2];
  for (int k = kTableSize - (two_a - kTableSize) % 2; k <= two_a; k += 2)
    lg += logq((k - 2) / __float128(2));
  return lg;
}

__float128 quad_log_factorial(int n) { return quad_log_gamma_half(2 * (n + 1)); }

}  // namespace

SignedLogValue log_gamma_half(int two_a) {
  return {static_cast<double>(quad_log_gamma_half(two_a)), +1};
}

double log_factorial(int n) {
  assert(n >= 0);
  return static_cast<double>(quad_log_factorial(n));
}

double radial_R(int nu_p, int mu_p, int nu, int mu) {
  assert(nu_p >= 0 && mu_p >= 0 && nu >= 0 && mu >= 0);

  // log of C(n, k)
  const auto log_binom = [](int n, int k) {
    return quad_log_factorial(n) - quad_log_factorial(k) - quad_log_factorial(n - k);
  };

  const __float128 log_norm =
      (quad_log_factorial(nu) + quad_log_factorial(nu_p) - quad_log_factorial(nu + mu) -
       quad_log_factorial(nu_p + mu_p)) /
          2 -
      logq(2 * M_PIq);

  // Neumaier-compensated accumulation of the exponentiated signed-log terms.
  __float128 sum = 0;
  __float128 comp = 0;
  for (int a = 0; a <= nu; ++a) {
    const __float128 lb1 = log_binom(nu + mu, nu - a) - quad_log_factorial(a);
    for (int b = 0; b <= nu_p; ++b) {
      const __float128 lb2 = log_binom(nu_p + mu_p, nu_p - b) - quad_log_factorial(b);
      const __float128 log_mag =
          lb1 + lb2 + quad_log_gamma_half(2 * (a + b) + mu + mu_p + 1) + log_norm;
      __float128 term = expq(log_mag);
      if ((a + b) & 1) term = -term;
      const __float128 s = sum + term;
      if (fabsq(sum) >= fabsq(term))
        comp += (sum - s) + term;
      else
        comp += (term - s) + sum;
      sum = s;
    }
  }
  return static_cast<double>(sum + comp);
}

bool radial_certified(int nu_p, int mu_p, int nu, int mu) {
  return 2 * nu + mu <= kRadialCertifiedNTilde && 2 * nu_p + mu_p <= kRadialCertifiedNTilde;
}

}  // namespace hextrap::specfun
