#include "hextrap/hamiltonian.hpp"

#include <cassert>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "hextrap/specfun.hpp"

namespace hextrap {

namespace {

// cos and sin at k pi/6, k = 0..11.  The ray angles mu (2i-1) pi/6 are
// reduced mod 2 pi in integer arithmetic before lookup, so entries that
// vanish by symmetry (the fermionic families) come out exactly zero.
constexpr double kHalfSqrt3 = 0.86602540378443864676;
constexpr double kCosSixths[12] = {1,  kHalfSqrt3,  0.5, 0, -0.5, -kHalfSqrt3,
                                   -1, -kHalfSqrt3, -0.5, 0, 0.5, kHalfSqrt3};
constexpr double kSinSixths[12] = {0,    0.5,  kHalfSqrt3,  1,  kHalfSqrt3,  0.5,
                                   0,   -0.5, -kHalfSqrt3, -1, -kHalfSqrt3, -0.5};

constexpr double kSqrtHalf = 0.70710678118654752440;
constexpr double kSqrt2 = 1.41421356237309504880;

}  // namespace

double angular_A(Tag tag_p, int mu_p, Tag tag, int mu) {
  assert(mu >= 0 && mu_p >= 0);
  assert((mu == 0) == (tag == Tag::Zero));
  assert((mu_p == 0) == (tag_p == Tag::Zero));
  double sum = 0.0;
  for (int i = 1; i <= 6; ++i) {
    const int k = (mu * (2 * i - 1)) % 12;
    const int k_p = (mu_p * (2 * i - 1)) % 12;
    const double f = tag == Tag::Minus ? kSinSixths[k] : kCosSixths[k];
    const double f_p = tag_p == Tag::Minus ? kSinSixths[k_p] : kCosSixths[k_p];
    sum += f_p * f;
  }
  return sum;
}

double v_coefficient(const RelState& s_p, const RelState& s) {
  if (!(classify(s_p.mu, s_p.tag) == classify(s.mu, s.tag)))
    throw std::invalid_argument("v_coefficient: states belong to different sectors");
  double pref;
  if (s_p.tag == Tag::Zero && s.tag == Tag::Zero)
    pref = kSqrtHalf;
  else if (s_p.tag == Tag::Zero || s.tag == Tag::Zero)
    pref = 1.0;
  else
    pref = kSqrt2;
  return pref * specfun::radial_R(s_p.nu, s_p.mu, s.nu, s.mu) *
         angular_A(s_p.tag, s_p.mu, s.tag, s.mu);
}

double total_energy(double rel_energy, int eta) {
  assert(eta >= 0);
  return rel_energy + eta + 0.5;
}

HamiltonianBlock build_block(const Sector& sector, int n_tilde) {
  assert(n_tilde >= 0);
  HamiltonianBlock block;
  block.sector = sector;
  block.n_tilde = n_tilde;
  block.basis = sector_basis(sector, n_tilde);
  block.radial_certified = n_tilde <= specfun::kRadialCertifiedNTilde;

  const int dim = block.dim();
  block.h0_diag.resize(dim);
  block.w.resize(dim, dim);
  for (int i = 0; i < dim; ++i) {
    block.h0_diag[i] = block.basis[i].h0_energy();
    for (int j = i; j < dim; ++j) {
      const double w = v_coefficient(block.basis[i], block.basis[j]);
      block.w(i, j) = w;
      block.w(j, i) = w;
    }
  }
  return block;
}

void write_matrix_elements_csv(std::ostream& os, const HamiltonianBlock& block) {
  os << "sector,n_tilde,i,j,nu_i,mu_i,tag_i,nu_j,mu_j,tag_j,w\n";
  const std::string name = block.sector.name();
  char buf[40];
  for (int i = 0; i < block.dim(); ++i)
    for (int j = i; j < block.dim(); ++j) {
      const RelState& a = block.basis[i];
      const RelState& b = block.basis[j];
      std::snprintf(buf, sizeof buf, "%.17g", block.w(i, j));
      os << name << ',' << block.n_tilde << ',' << i << ',' << j << ',' << a.nu << ',' << a.mu
         << ',' << to_string(a.tag) << ',' << b.nu << ',' << b.mu << ',' << to_string(b.tag)
         << ',' << buf << '\n';
    }
}

}  // namespace hextrap
