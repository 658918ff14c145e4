#pragma once

// Independent brute-force verifiers for every computed quantity: adapted
// Gauss-Laguerre quadrature for the radial integral, root-of-unity sums for
// the angular integral, an unsymmetrized signed-mu diagonalization that must
// reproduce the union of the sector spectra, and closed-form physical limits
// (perturbative slope, hard-wall fermionization energies).

#include <complex>
#include <vector>

#include "hextrap/symmetry.hpp"

namespace hextrap::oracle {

// Relative basis vector with signed angular quantum number, spanning the
// full distinguishable-particle relative space.
struct ComplexRelState {
  int nu = 0;
  int m = 0;  // signed
  double h0_energy() const { return 2 * nu + std::abs(m) + 1; }
};

// Quadrature evaluation of the radial integral: generalized Gauss-Laguerre
// with weight t^{(mu+mu'-1)/2} e^{-t}, node count 2(nu+nu') + mu + mu' + 16,
// times the closed-form normalization.  Independent of the series expansion
// used by specfun::radial_R.
double radial_quadrature(int nu_p, int mu_p, int nu, int mu);

// Sum_{i=1}^{6} exp(i delta_mu (2i-1) pi/6): 6*(-1)^k for delta_mu = 6k,
// zero otherwise.
std::complex<double> angular_sum_complex(int delta_mu);

// Closed forms of the six-ray angular sum per irrep family:
// A^{++}(6j,6k) = 6(-1)^{j+k}, A^{--}(6j+3,6k+3) = 6(-1)^{j+k},
// A^{++/--} = 3(-1)^{j+k} within one E family, zero otherwise.
double angular_closed_form(Tag tag_p, int mu_p, Tag tag, int mu);

// Largest truncation accepted by full_relative_spectrum.
inline constexpr int kFullSpectrumCap = 14;

// Eigenvalue multiset of the Hamiltonian over all signed-mu states with
// 2 nu + |m| <= n_tilde, V = (c/sqrt(2)) R(nu',|m'|,nu,|m|) S(m - m').
// Must equal the union of the eight sector-block spectra at the same
// (n_tilde, c).  Throws above kFullSpectrumCap.
std::vector<double> full_relative_spectrum(int n_tilde, double c);

// dE0/dc of the A1 sector at c = 0 from first principles: three identical
// pair contributions of |psi_HO,0(0)|^2 / sqrt(2) each, i.e. 3/sqrt(2 pi).
double perturbative_slope_A1();

// c -> +infinity limiting relative energies from the hard-wall wedge
// construction: wedge levels 2 nu + 3k + 1 with k odd entering A1 and k even
// entering B2.  Lowest A1 value is 4 (three-fermion ground energy 9/2 minus
// the center-of-mass 1/2).  Throws for sectors other than A1/B2.
std::vector<double> tonks_reference(const Sector& sector, int k_levels);

}  // namespace hextrap::oracle
