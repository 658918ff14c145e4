#pragma once

// Per-sector Hamiltonian assembly.  In trap units (energies in hbar*omega,
// lengths in sigma = sqrt(hbar/(m omega)), dimensionless coupling
// c = g/(hbar omega sigma)) the block Hamiltonian is
//
//   H(c) = diag(h0) + c * W,
//
// with h0_i = 2 nu_i + mu_i + 1 and W the coupling-independent interaction
// coefficients assembled from the angular ray sum and the radial integral.

#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

#include "hextrap/symmetry.hpp"

namespace hextrap {

// Sum over the six coincidence rays phi_i = (2i-1) pi/6 of
// trig(mu' phi_i) * trig(mu phi_i), cos for Plus/Zero and sin for Minus.
// The ray angles are reduced mod 2 pi in integer arithmetic, so family
// selection rules hold exactly (fermionic A2/B1 entries are exactly zero).
double angular_A(Tag tag_p, int mu_p, Tag tag, int mu);

// Interaction coefficient w with <s'|V|s> = w * c in hbar*omega units:
// w = pref * R(nu',mu',nu,mu) * A(mu',mu), pref = 1/sqrt(2) for
// <nu',0|V|nu,0>, 1 for <nu',0|V|nu,mu,+>, sqrt(2) for <nu',mu',+-|V|nu,mu,+->.
// Throws std::invalid_argument when the states belong to different sectors.
double v_coefficient(const RelState& s_p, const RelState& s);

// Relative energy plus the center-of-mass shift eta + 1/2.
double total_energy(double rel_energy, int eta);

struct HamiltonianBlock {
  Sector sector;
  int n_tilde = 0;
  std::vector<RelState> basis;   // sector_basis ordering
  Eigen::VectorXd h0_diag;       // 2 nu + mu + 1
  Eigen::MatrixXd w;             // symmetric by construction
  bool radial_certified = true;  // all radial integrals inside certified range

  int dim() const { return static_cast<int>(basis.size()); }
};

// Assemble the block for one sector and truncation.  Each w entry is
// computed once and mirrored, so w is exactly symmetric.
HamiltonianBlock build_block(const Sector& sector, int n_tilde);

// Matrix-element dump (CLI `ame`): full upper triangle, header
// sector,n_tilde,i,j,nu_i,mu_i,tag_i,nu_j,mu_j,tag_j,w, 17 significant digits.
void write_matrix_elements_csv(std::ostream& os, const HamiltonianBlock& block);

}  // namespace hextrap
