#pragma once

// Coordinate-space evaluation: basis wavefunctions on the relative plane,
// center-of-mass oscillator states, particle <-> Jacobi coordinate maps,
// and eigenstate density grids for plotting.

#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hextrap/hamiltonian.hpp"

namespace hextrap::wavefield {

// Point on the relative plane; rho = 0 is the triple-coincidence point,
// where the hyperangle is undefined (flagged degenerate, phi = 0).
struct RelPoint {
  double rho = 0.0;
  double phi = 0.0;  // [0, 2 pi)
  bool degenerate = false;
};

// Relative wavefunction: psi_{nu,0}(rho) for tag Zero, the cos/sin
// recombinations psi^+- otherwise.  Normalized against rho drho dphi.
double psi_rel(const RelState& state, const RelPoint& p);

// 1D oscillator state of the center of mass.
double psi_cm(int eta, double z);

// r = J q; the third component is the normalized center of mass.
Eigen::Vector3d particle_to_jacobi(const Eigen::Vector3d& q);

// Polar coordinates on the relative plane via atan2, reduced to [0, 2 pi).
RelPoint jacobi_to_polar(double x, double y);

struct GridSpec {
  int n_rho = 400;       // nodes, uniformly spaced on [0, rho_max]
  int n_phi = 720;       // nodes, uniformly spaced on [0, 2 pi)
  double rho_max = 6.0;
};

struct DensityField {
  GridSpec grid;
  bool rho_weighted = false;
  std::vector<double> values;  // row-major over (rho, phi)
  double norm_residual = 0.0;  // |integral of |Psi|^2 rho drho dphi - 1|

  double rho(int i) const;
  double phi(int j) const;
  double at(int i, int j) const { return values[static_cast<std::size_t>(i) * grid.n_phi + j]; }
};

// |Psi|^2 of the eigenvector (normalized to unit Euclidean norm first) on
// the grid; rho_weighted multiplies by the radial measure.  Throws when the
// coefficient count does not match the block dimension.
DensityField eigen_density(const HamiltonianBlock& block, const Eigen::VectorXd& coefficients,
                           const GridSpec& grid, bool rho_weighted = false);

// '#'-prefixed header lines (sector, coupling, level, grid spec, weighting),
// then rho,phi,density rows.
void write_density_csv(std::ostream& os, const DensityField& field, const std::string& sector,
                       double coupling, int level);

}  // namespace hextrap::wavefield
