#pragma once

// Special functions for the trapped three-body matrix elements: Hermite and
// generalized Laguerre polynomials, log-gamma at integer and half-integer
// arguments, and the closed-form radial integral R(nu',mu',nu,mu) of the
// contact interaction in the relative cylindrical oscillator basis.

namespace hextrap::specfun {

// Sign-and-log representation of a real value: value = sign * exp(log_magnitude).
// sign == 0 iff the represented value is exactly zero.
struct SignedLogValue {
  double log_magnitude = 0.0;
  int sign = 0;

  double value() const;
  static SignedLogValue from_value(double x);
};

// Generalized Laguerre polynomial L^alpha_n(x), three-term recurrence in n.
double laguerre(int n, int alpha, double x);

// Physicists' Hermite polynomial H_n(x).
double hermite(int n, double x);

// log Gamma(two_a / 2), accumulated exactly from Gamma(a+1) = a Gamma(a)
// down to Gamma(1) = 1 or Gamma(1/2) = sqrt(pi).  Requires two_a >= 1.
SignedLogValue log_gamma_half(int two_a);

// log n!
double log_factorial(int n);

// Radial integral of the contact interaction between relative cylindrical
// oscillator states,
//
//   R(nu',mu',nu,mu) = sqrt(nu! nu'! / ((nu+mu)! (nu'+mu')!)) / (2 pi)
//     * Integral_0^inf dt t^{(mu+mu'-1)/2} L^mu_nu(t) L^mu'_nu'(t) e^{-t},
//
// evaluated by expanding both Laguerre polynomials into their power series:
//
//   R = norm/(2 pi) * Sum_{a=0}^{nu} Sum_{b=0}^{nu'} (-1)^{a+b}
//       C(nu+mu, nu-a) C(nu'+mu', nu'-b) Gamma(a+b+(mu+mu'+1)/2) / (a! b!).
//
// Every factor is carried in signed-log form and the exponentiated terms are
// combined with compensated summation.  The alternating sum cancels up to
// ~15 decimal digits at the largest certified indices, so the accumulation
// runs in quad precision internally; the result is returned as double.
// Symmetric under (nu,mu) <-> (nu',mu') exchange to within round-off.
double radial_R(int nu_p, int mu_p, int nu, int mu);

// Truncation 2*nu + mu up to which radial_R is certified (tested) against the
// independent quadrature oracle at <= 1e-7 relative.  Larger indices still
// evaluate, but consumers should propagate the uncertified-precision flag.
inline constexpr int kRadialCertifiedNTilde = 40;

bool radial_certified(int nu_p, int mu_p, int nu, int mu);

}  // namespace hextrap::specfun
