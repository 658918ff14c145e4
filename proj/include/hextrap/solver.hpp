#pragma once

// Dense symmetric eigensolution per sector block, coupling sweeps,
// convergence studies over the truncation, and spectrum-table assembly.

#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hextrap/hamiltonian.hpp"

namespace hextrap {

// Strictly increasing, finite, nonempty list of dimensionless couplings.
struct CouplingGrid {
  std::vector<double> values;

  static CouplingGrid single(double c);
  // "start:stop:step" or a single value; throws std::invalid_argument on
  // malformed specs or non-increasing grids.
  static CouplingGrid parse(const std::string& spec);
};

struct EigenSolution {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // orthonormal columns
};

// Dense symmetric eigensolver.  Rejects matrices whose symmetry residual
// exceeds 1e-12 * max(1, max|a_ij|).
EigenSolution eigensolve_symmetric(const Eigen::MatrixXd& a);

// Eigenvalues of diag(h0) + c*W, ascending, in hbar*omega.
Eigen::VectorXd block_spectrum(const HamiltonianBlock& block, double c);
Eigen::VectorXd spectrum(const Sector& sector, int n_tilde, double c);

// Sorted eigenvalues per grid point with provenance metadata.  Rows of
// `energies` follow the grid; each row is ascending.
struct SpectrumTable {
  std::string sector;
  int n_tilde = 0;
  std::vector<double> couplings;
  Eigen::MatrixXd energies;  // |grid| x dim
  bool radial_certified = true;

  // metadata (kept out of the CSV body)
  double solver_tolerance = 0.0;
  std::string library_version;
  std::string timestamp;  // ISO 8601 UTC
};

// W is built once and reused across the grid; grid points are solved in
// parallel with order-deterministic assembly.
SpectrumTable sweep(const Sector& sector, int n_tilde, const CouplingGrid& grid);

// CSV schema: sector,n_tilde,c,level,rel_energy,total_energy_eta0 with
// 12 significant digits.  Optional Tonks reference rows are labeled
// "<sector>:tonks" with an empty coupling field.
void write_spectrum_csv(std::ostream& os, const SpectrumTable& table,
                        const std::vector<double>* tonks_reference = nullptr);

// JSON sidecar with tolerances and versions.
void write_spectrum_metadata_json(std::ostream& os, const SpectrumTable& table);

struct ConvergenceRow {
  int n_tilde = 0;
  std::vector<double> energies;  // lowest k_levels eigenvalues
};

// Lowest k_levels eigenvalues at fixed coupling across ascending truncations.
// Throws when k_levels exceeds the smallest block dimension.
std::vector<ConvergenceRow> convergence_study(const Sector& sector, double c,
                                              const std::vector<int>& n_tilde_list,
                                              int k_levels);

// Worker count for parallel sweeps: HEXTRAP_THREADS or hardware concurrency.
int thread_count();

inline constexpr double kEigenResidualTolerance = 1e-10;
inline constexpr double kSymmetryTolerance = 1e-12;

std::string library_version_string();

}  // namespace hextrap
