#pragma once

// C6v/C2v group data for three equal-mass particles on a line, sector
// classification of the relative cylindrical basis, and basis enumeration
// with truncation bookkeeping.
//
// The relative plane of Jacobi coordinates carries the point symmetry C6v
// (isomorphic to S3 x Z2: particle permutations plus parity).  The contact
// interaction only couples states within one irreducible representation, so
// the Hamiltonian splits into eight separately diagonalizable blocks:
// A1, A2, B1, B2 and the +/- halves of E1 and E2.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace hextrap {

// Angular label of a relative basis vector: |nu,0> carries Zero, the
// cos/sin recombinations |nu,mu,+-> carry Plus/Minus.
enum class Tag : std::uint8_t { Zero, Plus, Minus };

std::string_view to_string(Tag tag);

// One relative-motion basis vector.  Invariant: tag == Zero iff mu == 0.
struct RelState {
  int nu = 0;
  int mu = 0;
  Tag tag = Tag::Zero;

  int excitation() const { return 2 * nu + mu; }
  double h0_energy() const { return 2 * nu + mu + 1; }  // hbar*omega units

  friend bool operator==(const RelState&, const RelState&) = default;
};

// Center-of-mass oscillator state; the interaction never mixes different eta.
struct CmState {
  int eta = 0;
  double energy() const { return eta + 0.5; }
};

enum class C6vIrrep : std::uint8_t { A1, A2, B1, B2, E1, E2 };
enum class C2vIrrep : std::uint8_t { A1, A2, B1, B2 };

// Particle-content classes compatible with a sector.
enum class Content : std::uint8_t { BBB, FFF, BBX, FFX, XYZ };

std::string_view to_string(C6vIrrep irrep);
std::string_view to_string(C2vIrrep irrep);
std::string_view to_string(Content content);

// One superselection block: a C6v irrep together with the Plus/Minus block
// selector (E-type irreps split into two identically-sized 1D blocks; for
// the 1D irreps the selector is fixed by the irrep).
struct Sector {
  C6vIrrep c6v = C6vIrrep::A1;
  bool minus_block = false;       // true for A2, B2, E1-, E2-
  C2vIrrep c2v = C2vIrrep::A1;    // classification when two particles are identical
  int parity = +1;                // character of C2 (relative-plane inversion)
  std::array<bool, 5> content{};  // indexed by Content

  bool contains(Content c) const { return content[static_cast<int>(c)]; }
  std::string name() const;  // "A1", "A2", "B1", "B2", "E1+", "E1-", "E2+", "E2-"

  friend bool operator==(const Sector& a, const Sector& b) {
    return a.c6v == b.c6v && a.minus_block == b.minus_block;
  }
};

// The eight blocks, in the order A1, B2, B1, A2, E1+, E1-, E2+, E2-.
const std::array<Sector, 8>& all_sectors();

// Lookup by canonical name ("A1", ..., "E2-"); throws std::invalid_argument.
const Sector& sector_by_name(std::string_view name);

// Sector of the basis vector (mu, tag).  Periodic with period 6 in mu.
// Rejects (mu == 0, +/-) and (mu > 0, Zero).
Sector classify(int mu, Tag tag);

// All RelState of the sector with 2*nu + mu <= n_tilde, ordered by
// (H0 energy, mu, nu) ascending.  The ordering is part of the contract.
std::vector<RelState> sector_basis(const Sector& sector, int n_tilde);

// One row of the truncation dimension table.
struct DimensionRow {
  int n = 0;                   // total excitation number N
  std::int64_t d_total = 0;    // (N+1)(N+2)(N+3)/6, all states up to N
  std::int64_t d_relative = 0; // (N+1)(N+2)/2, relative states at eta = 0
  int dim_a1 = 0;              // bosonic, positive parity
  int dim_b2 = 0;              // bosonic, negative parity
  int dim_b1 = 0;              // three-fermion block opening at N = 3
  int dim_a2 = 0;              // three-fermion block opening at N = 6
};

std::vector<DimensionRow> dimension_table(int n_max);

// One of the twelve C6v elements with its affine hyperangle action
// phi -> a*phi + b, b an exact multiple of pi/3.
struct GroupElement {
  std::string_view name;        // C6v label, e.g. "sigma_v'"
  std::string_view perm_label;  // S3 x Z2 label, e.g. "s23" or "p.s23"
  int a = +1;                   // +1 rotation-like, -1 reflection-like
  int b_sixths = 0;             // offset in units of pi/3, reduced to 0..5
  bool has_parity = false;      // element includes the inversion p
  std::array<int, 3> image{};   // particle permutation, image[i-1] = image of i

  double offset() const;        // b in radians
};

const std::array<GroupElement, 12>& group_elements();

// Lookup by C6v name or S3 x Z2 label; throws std::invalid_argument.
const GroupElement& group_element(std::string_view label);

// a*phi + b reduced to [0, 2*pi).
double group_action(const GroupElement& g, double phi);

// Element implementing g1 after g2 (exact integer composition of the
// affine actions; the twelve elements close).
const GroupElement& compose(const GroupElement& g1, const GroupElement& g2);

// Signed permutation matrix of the element in particle-coordinate space.
Eigen::Matrix3d particle_matrix(const GroupElement& g);

// Conjugate J S J^T in Jacobi coordinates; block-diagonal with a 2x2
// rotation/reflection on (x, y) and +-1 on the center-of-mass axis.
Eigen::Matrix3d jacobi_conjugate(const GroupElement& g);

// The exact block form jacobi_conjugate must equal: 2x2 block
// [[cos b, sin b], [-a sin b, a cos b]] and z-entry (-1)^parity.
Eigen::Matrix3d expected_jacobi_form(const GroupElement& g);

// Orthogonal rotation from particle coordinates q to Jacobi (x, y, z);
// row 3 is (1,1,1)/sqrt(3), the normalized center of mass.
const Eigen::Matrix3d& jacobi_matrix();

enum class Group { C6v, C2v };

// Tabulated character.  C6v classes: "E","C2","C3","C6","sigma_v","sigma_d";
// C2v classes: "E","C2","sigma_v","sigma_d".  Throws on invalid labels.
int character(std::string_view irrep, std::string_view cls, Group group);

}  // namespace hextrap
