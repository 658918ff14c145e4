#include "hextrap/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "hextrap/hamiltonian.hpp"
#include "hextrap/oracle.hpp"
#include "hextrap/solver.hpp"
#include "hextrap/specfun.hpp"
#include "hextrap/symmetry.hpp"
#include "hextrap/wavefield.hpp"

namespace hextrap::verify {

namespace {

// All states (nu, mu) with 2 nu + mu <= n_tilde, tags ignored.
std::vector<std::pair<int, int>> index_range(int n_tilde) {
  std::vector<std::pair<int, int>> out;
  for (int mu = 0; mu <= n_tilde; ++mu)
    for (int nu = 0; 2 * nu + mu <= n_tilde; ++nu) out.emplace_back(nu, mu);
  return out;
}

// Relative deviation with an absolute floor: values whose true magnitude is
// below the floor are compared absolutely at floor * tolerance.
double floored_rel_dev(double a, double b, double floor) {
  return std::fabs(a - b) / std::max({std::fabs(a), std::fabs(b), floor});
}

CheckResult check_dimension_reference() {
  // N, D_N, D_rel, A1, B2, B1, A2 for N = 0..12
  static constexpr int kReference[13][7] = {
      {0, 1, 1, 1, 0, 0, 0},       {1, 4, 3, 1, 0, 0, 0},       {2, 10, 6, 2, 0, 0, 0},
      {3, 20, 10, 2, 1, 1, 0},     {4, 35, 15, 3, 1, 1, 0},     {5, 56, 21, 3, 2, 2, 0},
      {6, 84, 28, 5, 2, 2, 1},     {7, 120, 36, 5, 3, 3, 1},    {8, 165, 45, 7, 3, 3, 2},
      {9, 220, 55, 7, 5, 5, 2},    {10, 286, 66, 9, 5, 5, 3},   {11, 364, 78, 9, 7, 7, 3},
      {12, 455, 91, 12, 7, 7, 5},
  };
  const auto rows = dimension_table(12);
  long worst = 0;
  for (int i = 0; i <= 12; ++i) {
    const long got[7] = {rows[i].n,      rows[i].d_total, rows[i].d_relative, rows[i].dim_a1,
                         rows[i].dim_b2, rows[i].dim_b1,  rows[i].dim_a2};
    for (int j = 0; j < 7; ++j) worst = std::max(worst, std::labs(got[j] - kReference[i][j]));
  }
  return {"dimension_table_reference", static_cast<double>(worst), 0.0, worst == 0,
          "13 rows x 7 columns, integer equality"};
}

CheckResult check_sector_sizes() {
  const auto a1 = sector_basis(sector_by_name("A1"), 30).size();
  const auto b2 = sector_basis(sector_by_name("B2"), 30).size();
  const double dev = std::fabs(static_cast<double>(a1) - 51) + std::fabs(static_cast<double>(b2) - 40);
  return {"sector_sizes_ntilde30", dev, 0.0, dev == 0, "A1 = 51 and B2 = 40 states"};
}

CheckResult check_group_closure() {
  int failures = 0;
  for (const GroupElement& g1 : group_elements())
    for (const GroupElement& g2 : group_elements()) {
      const GroupElement& g12 = compose(g1, g2);
      // numerical composition of the phi actions at a generic angle
      const double phi = 0.7391;
      const double composed = group_action(g1, group_action(g2, phi));
      const double direct = group_action(g12, phi);
      double diff = std::fabs(composed - direct);
      diff = std::min(diff, std::fabs(diff - 2 * M_PI));
      if (diff > 1e-12) ++failures;
    }
  return {"group_closure", static_cast<double>(failures), 0.0, failures == 0,
          "144 compositions resolve within the 12 elements"};
}

CheckResult check_character_orthogonality() {
  const std::array<std::string_view, 6> irreps6 = {"A1", "A2", "B1", "B2", "E1", "E2"};
  const std::array<std::string_view, 6> classes6 = {"E", "C2", "C3", "C6", "sigma_v", "sigma_d"};
  const std::array<int, 6> weight6 = {1, 1, 2, 2, 3, 3};
  double worst = 0;
  for (std::size_t i = 0; i < irreps6.size(); ++i)
    for (std::size_t j = 0; j < irreps6.size(); ++j) {
      int inner = 0;
      for (std::size_t k = 0; k < classes6.size(); ++k)
        inner += weight6[k] * character(irreps6[i], classes6[k], Group::C6v) *
                 character(irreps6[j], classes6[k], Group::C6v);
      worst = std::max(worst, std::fabs(inner - (i == j ? 12.0 : 0.0)));
    }
  const std::array<std::string_view, 4> irreps2 = {"A1", "A2", "B1", "B2"};
  const std::array<std::string_view, 4> classes2 = {"E", "C2", "sigma_v", "sigma_d"};
  for (std::size_t i = 0; i < irreps2.size(); ++i)
    for (std::size_t j = 0; j < irreps2.size(); ++j) {
      int inner = 0;
      for (const auto& cls : classes2)
        inner += character(irreps2[i], cls, Group::C2v) * character(irreps2[j], cls, Group::C2v);
      worst = std::max(worst, std::fabs(inner - (i == j ? 4.0 : 0.0)));
    }
  return {"character_orthogonality", worst, 0.0, worst == 0,
          "class-weighted row orthogonality, C6v and C2v"};
}

CheckResult check_jacobi() {
  const Eigen::Matrix3d& j = jacobi_matrix();
  double dev = (j * j.transpose() - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
  for (const GroupElement& g : group_elements())
    dev = std::max(dev, (jacobi_conjugate(g) - expected_jacobi_form(g)).cwiseAbs().maxCoeff());
  return {"jacobi_rotation", dev, 1e-14, dev <= 1e-14,
          "J J^T = I and J S J^T block-diagonal per the hyperangle actions"};
}

CheckResult check_sector_partition(bool quick) {
  const int n_max = quick ? 10 : 20;
  long worst = 0;
  for (int n = 0; n <= n_max; ++n) {
    long total = 0;
    for (const Sector& s : all_sectors()) total += static_cast<long>(sector_basis(s, n).size());
    worst = std::max(worst, std::labs(total - static_cast<long>(n + 1) * (n + 2) / 2));
  }
  return {"sector_partition", static_cast<double>(worst), 0.0, worst == 0,
          "eight blocks partition the relative space at every truncation"};
}

CheckResult check_classification_period() {
  int failures = 0;
  for (int mu = 1; mu <= 48; ++mu)
    for (Tag tag : {Tag::Plus, Tag::Minus})
      if (!(classify(mu, tag) == classify(mu + 6, tag))) ++failures;
  return {"classification_period6", static_cast<double>(failures), 0.0, failures == 0,
          "classify(mu, t) = classify(mu+6, t)"};
}

CheckResult check_angular_complex_identity() {
  // A^{++} = (S(mu-mu') + S(mu+mu'))/2, A^{--} = (S(mu-mu') - S(mu+mu'))/2
  double worst = 0;
  const auto s = [](int d) { return oracle::angular_sum_complex(d); };
  for (int mu_p = 0; mu_p <= 48; ++mu_p)
    for (int mu = 0; mu <= 48; ++mu) {
      const double s_minus = s(mu - mu_p).real();
      const double s_plus = s(mu + mu_p).real();
      worst = std::max(worst, std::fabs(s(mu - mu_p).imag()));
      const Tag tp = mu_p == 0 ? Tag::Zero : Tag::Plus;
      const Tag t = mu == 0 ? Tag::Zero : Tag::Plus;
      worst = std::max(worst, std::fabs(angular_A(tp, mu_p, t, mu) - 0.5 * (s_minus + s_plus)));
      if (mu > 0 && mu_p > 0)
        worst = std::max(worst, std::fabs(angular_A(Tag::Minus, mu_p, Tag::Minus, mu) -
                                          0.5 * (s_minus - s_plus)));
    }
  return {"angular_complex_identity", worst, 1e-11, worst <= 1e-11,
          "ray sums against root-of-unity combinations"};
}

CheckResult check_fermionic_nullity(bool quick) {
  const int n_tilde = quick ? 12 : 40;
  double worst = 0;
  for (const char* name : {"A2", "B1"}) {
    const HamiltonianBlock block = build_block(sector_by_name(name), n_tilde);
    if (block.dim() > 0) worst = std::max(worst, block.w.cwiseAbs().maxCoeff());
  }
  return {"fermionic_w_nullity", worst, 0.0, worst == 0.0,
          "A2 and B1 interaction matrices exactly zero, n_tilde = " + std::to_string(n_tilde)};
}

CheckResult check_radial_symmetry(bool quick) {
  const auto states = index_range(quick ? 10 : 20);
  double worst = 0;
  for (std::size_t i = 0; i < states.size(); ++i)
    for (std::size_t j = i; j < states.size(); ++j) {
      const auto [nu, mu] = states[i];
      const auto [nu_p, mu_p] = states[j];
      worst = std::max(worst, floored_rel_dev(specfun::radial_R(nu_p, mu_p, nu, mu),
                                              specfun::radial_R(nu, mu, nu_p, mu_p), 1e-4));
    }
  return {"radial_exchange_symmetry", worst, 1e-12, worst <= 1e-12,
          "R(nu',mu',nu,mu) = R(nu,mu,nu',mu'), relative with absolute floor 1e-16"};
}

CheckResult check_radial_positivity() {
  double min_value = 1e300;
  for (int mu = 0; mu <= 40; ++mu)
    for (int mu_p = 0; mu_p <= 40; ++mu_p)
      min_value = std::min(min_value, specfun::radial_R(0, mu_p, 0, mu));
  return {"radial_nodeless_positivity", std::min(min_value, 0.0), 0.0, min_value > 0,
          "single-term R(0,mu',0,mu) strictly positive"};
}

CheckResult radial_quadrature_check(int n_tilde, double tolerance, const char* name) {
  const auto states = index_range(n_tilde);
  double worst = 0;
  for (std::size_t i = 0; i < states.size(); ++i)
    for (std::size_t j = i; j < states.size(); ++j) {
      const auto [nu, mu] = states[i];
      const auto [nu_p, mu_p] = states[j];
      worst = std::max(worst, floored_rel_dev(specfun::radial_R(nu_p, mu_p, nu, mu),
                                              oracle::radial_quadrature(nu_p, mu_p, nu, mu), 1e-4));
    }
  std::ostringstream detail;
  detail << "closed sum vs adapted Gauss-Laguerre, all " << states.size() * (states.size() + 1) / 2
         << " index pairs with excitations <= " << n_tilde << ", absolute floor 1e-4*tol";
  return {name, worst, tolerance, worst <= tolerance, detail.str()};
}

CheckResult check_radial_examples() {
  // closed forms: R(0,0,0,0) = Gamma(1/2)/(2 pi), R(0,1,0,1) = Gamma(3/2)/(2 pi),
  // R(0,3,0,3) = Gamma(7/2)/(2 pi 3!)
  double worst = std::fabs(specfun::radial_R(0, 0, 0, 0) - 1.0 / (2.0 * std::sqrt(M_PI)));
  worst = std::max(worst, std::fabs(specfun::radial_R(0, 1, 0, 1) - 1.0 / (4.0 * std::sqrt(M_PI))));
  worst = std::max(worst,
                   std::fabs(specfun::radial_R(0, 3, 0, 3) - std::tgamma(3.5) / (2.0 * M_PI * 6.0)));
  return {"radial_closed_form_examples", worst, 1e-15, worst <= 1e-15,
          "nodeless integrals against their Gamma-function values"};
}

CheckResult check_slope_closed_form() {
  const double expected = 3.0 / std::sqrt(2.0 * M_PI);
  const RelState ground{0, 0, Tag::Zero};
  double worst = std::fabs(v_coefficient(ground, ground) - expected);
  worst = std::max(worst, std::fabs(oracle::perturbative_slope_A1() - expected));
  return {"perturbative_slope_closed_form", worst, 1e-12, worst <= 1e-12,
          "v_coefficient((0,0),(0,0)) = 3/sqrt(2 pi)"};
}

CheckResult check_slope_finite_difference(bool quick) {
  const int n_tilde = quick ? 12 : 30;
  const HamiltonianBlock block = build_block(sector_by_name("A1"), n_tilde);
  const double h = 1e-4;
  const double slope =
      (block_spectrum(block, h)[0] - block_spectrum(block, -h)[0]) / (2.0 * h);
  const double dev = std::fabs(slope - oracle::perturbative_slope_A1());
  return {"perturbative_slope_finite_difference", dev, 1e-6, dev <= 1e-6,
          "central difference of the lowest A1 eigenvalue at c = 0, n_tilde = " +
              std::to_string(n_tilde)};
}

CheckResult check_c0_exactness(bool quick) {
  const int n_tilde = quick ? 8 : 30;
  double worst = 0;
  for (const Sector& s : all_sectors()) {
    const HamiltonianBlock block = build_block(s, n_tilde);
    if (block.dim() == 0) continue;
    Eigen::VectorXd h0 = block.h0_diag;
    std::sort(h0.data(), h0.data() + h0.size());
    worst = std::max(worst, (block_spectrum(block, 0.0) - h0).cwiseAbs().maxCoeff());
  }
  return {"free_spectrum_exactness", worst, 1e-12, worst <= 1e-12,
          "c = 0 reproduces the oscillator multiset 2 nu + mu + 1"};
}

CheckResult check_sector_union(bool quick) {
  const std::vector<int> truncations = quick ? std::vector<int>{4, 6} : std::vector<int>{4, 6, 8, 10};
  const std::vector<double> couplings =
      quick ? std::vector<double>{-1, 1} : std::vector<double>{-4, -1, 0, 1, 4};
  double worst = 0;
  for (int n_tilde : truncations)
    for (double c : couplings) {
      const std::vector<double> full = oracle::full_relative_spectrum(n_tilde, c);
      std::vector<double> un;
      for (const Sector& s : all_sectors()) {
        const Eigen::VectorXd ev = spectrum(s, n_tilde, c);
        un.insert(un.end(), ev.data(), ev.data() + ev.size());
      }
      std::sort(un.begin(), un.end());
      for (std::size_t i = 0; i < full.size(); ++i)
        worst = std::max(worst, std::fabs(full[i] - un[i]));
    }
  return {"sector_union_equivalence", worst, 1e-8, worst <= 1e-8,
          "unsymmetrized signed-mu spectrum equals the union of the eight blocks"};
}

CheckResult check_e_block_degeneracy(bool quick) {
  const int n_tilde = quick ? 10 : 30;
  double worst = 0;
  for (const char* pair : {"E1", "E2"}) {
    const HamiltonianBlock plus = build_block(sector_by_name(std::string(pair) + "+"), n_tilde);
    const HamiltonianBlock minus = build_block(sector_by_name(std::string(pair) + "-"), n_tilde);
    for (double c : {-5.0, 5.0})
      worst = std::max(worst,
                       (block_spectrum(plus, c) - block_spectrum(minus, c)).cwiseAbs().maxCoeff());
  }
  return {"e_block_degeneracy", worst, 1e-10, worst <= 1e-10,
          "E1+/E1- and E2+/E2- spectra coincide entrywise"};
}

CheckResult check_e_even_multiplicity() {
  // Remove the four 1D-sector spectra from the full multiset; the remainder
  // (the E subspaces) must pair up.
  const int n_tilde = 8;
  const double c = 2.5;
  std::vector<double> remaining = oracle::full_relative_spectrum(n_tilde, c);
  for (const char* name : {"A1", "A2", "B1", "B2"}) {
    const Eigen::VectorXd ev = spectrum(sector_by_name(name), n_tilde, c);
    for (int i = 0; i < ev.size(); ++i) {
      auto it = std::min_element(remaining.begin(), remaining.end(), [&](double a, double b) {
        return std::fabs(a - ev[i]) < std::fabs(b - ev[i]);
      });
      remaining.erase(it);
    }
  }
  std::sort(remaining.begin(), remaining.end());
  double worst = remaining.size() % 2 == 0 ? 0.0 : 1.0;
  for (std::size_t i = 0; i + 1 < remaining.size(); i += 2)
    worst = std::max(worst, std::fabs(remaining[i + 1] - remaining[i]));
  return {"e_even_multiplicity", worst, 1e-8, worst <= 1e-8,
          "E-type eigenvalues appear in degenerate pairs in the full spectrum"};
}

CheckResult check_coupling_monotonicity(bool quick) {
  const int n_tilde = quick ? 10 : 30;
  double min_increment = 1e300;
  CouplingGrid grid = CouplingGrid::parse("-10:10:0.1");
  for (const Sector& s : all_sectors()) {
    const SpectrumTable table = sweep(s, n_tilde, grid);
    for (int i = 1; i < table.energies.rows(); ++i)
      min_increment =
          std::min(min_increment,
                   (table.energies.row(i) - table.energies.row(i - 1)).minCoeff());
  }
  const double dev = std::max(0.0, -min_increment);
  return {"coupling_monotonicity", dev, 1e-9, dev <= 1e-9,
          "ordered eigenvalues nondecreasing in c over [-10, 10], all sectors"};
}

CheckResult check_variational_convergence(bool quick) {
  const std::vector<int> truncations =
      quick ? std::vector<int>{6, 10, 14} : std::vector<int>{6, 10, 14, 18, 22, 26, 30};
  const auto rows = convergence_study(sector_by_name("A1"), 5.0, truncations, 1);
  double worst = 0;
  for (std::size_t i = 1; i < rows.size(); ++i)
    worst = std::max(worst, rows[i].energies[0] - rows[i - 1].energies[0]);
  // lowest eigenvalue at the smallest truncation is contained in the full oracle spectrum
  const std::vector<double> full = oracle::full_relative_spectrum(6, 5.0);
  double membership = 1e300;
  for (double e : full) membership = std::min(membership, std::fabs(e - rows[0].energies[0]));
  worst = std::max(worst, membership > 1e-8 ? membership : 0.0);
  return {"variational_convergence", std::max(worst, 0.0), 1e-10, worst <= 1e-10,
          "lowest A1 eigenvalue nonincreasing with the truncation at c = 5"};
}

CheckResult check_tonks_limit() {
  const Sector& a1 = sector_by_name("A1");
  double prev0 = 1e300, prev1 = 1e300;
  bool monotone = true;
  double dev0 = 0, dev1 = 0;
  for (int n_tilde = 20; n_tilde <= 40; n_tilde += 4) {
    const Eigen::VectorXd ev = spectrum(a1, n_tilde, 100.0);
    dev0 = std::fabs(ev[0] - 4.0);
    dev1 = std::fabs(ev[1] - 6.0);
    if (dev0 > prev0 + 1e-12 || dev1 > prev1 + 1e-12) monotone = false;
    prev0 = dev0;
    prev1 = dev1;
  }
  const bool pass = monotone && dev0 <= 0.3 && dev1 <= 0.4;
  return {"tonks_unitary_limit", std::max(dev0, dev1), 0.4, pass,
          "lowest two A1 levels at c = 100 approach the hard-wall wedge values 4 and 6"};
}

CheckResult check_trimer_channel() {
  const double a1 = spectrum(sector_by_name("A1"), 30, -8.0)[0];
  const double b2 = spectrum(sector_by_name("B2"), 30, -8.0)[0];
  const double dev = std::max(0.0, a1 - b2);
  std::ostringstream detail;
  detail << "A1 ground " << a1 << " below B2 ground " << b2 << " at c = -8";
  return {"trimer_channel", dev, 0.0, a1 < b2, detail.str()};
}

CheckResult check_avoided_crossings(bool quick) {
  const int n_tilde = quick ? 10 : 30;
  double min_gap = 1e300;
  const CouplingGrid grid = CouplingGrid::parse("-10:10:0.05");
  for (const char* name : {"A1", "B2"}) {
    const SpectrumTable table = sweep(sector_by_name(name), n_tilde, grid);
    for (Eigen::Index i = 0; i < table.energies.rows(); ++i) {
      if (std::fabs(table.couplings[i]) < 1e-12) continue;  // H0 degeneracies at c = 0
      for (Eigen::Index k = 0; k + 1 < table.energies.cols(); ++k)
        min_gap = std::min(min_gap, table.energies(i, k + 1) - table.energies(i, k));
    }
  }
  return {"avoided_crossings", min_gap, 1e-8, min_gap > 1e-8,
          "minimum consecutive gap off c = 0 must exceed the tolerance (lower bound)"};
}

// Tabulated wavefunction on a (rho, phi) node grid: rho_i = i h including 0
// (odd count, composite Simpson), phi_j = j dphi (periodic trapezoid).
struct PsiTable {
  int n_rho, n_phi;
  double h, dphi;
  std::vector<double> values;  // row-major (rho, phi)
  double at(int i, int j) const { return values[static_cast<std::size_t>(i) * n_phi + j]; }
};

PsiTable tabulate_psi(const RelState& state, int n_rho, int n_phi, double rho_max) {
  PsiTable t{n_rho, n_phi, rho_max / (n_rho - 1), 2.0 * M_PI / n_phi, {}};
  t.values.resize(static_cast<std::size_t>(n_rho) * n_phi);
  for (int i = 0; i < n_rho; ++i)
    for (int j = 0; j < n_phi; ++j)
      t.values[static_cast<std::size_t>(i) * n_phi + j] =
          wavefield::psi_rel(state, {i * t.h, j * t.dphi, false});
  return t;
}

// Simpson in rho of the phi-trapezoid ring sums of a(i,j) * b(i, map(j)).
double grid_overlap(const PsiTable& a, const PsiTable& b, const std::function<int(int)>& map_phi) {
  double overlap = 0;
  for (int i = 0; i < a.n_rho; ++i) {
    double ring = 0;
    for (int j = 0; j < a.n_phi; ++j) ring += a.at(i, j) * b.at(i, map_phi(j));
    const double simpson = (i == 0 || i == a.n_rho - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    overlap += simpson * ring * (i * a.h);
  }
  return overlap * a.h / 3.0 * a.dphi;
}

CheckResult check_wavefield_orthonormality(bool quick) {
  const int n_rho = quick ? 301 : 601;
  const int n_phi = quick ? 360 : 720;
  const auto identity = [](int j) { return j; };
  double worst = 0;
  for (const Sector& s : all_sectors()) {
    const auto basis = sector_basis(s, 8);
    if (basis.empty()) continue;
    std::vector<PsiTable> tables;
    tables.reserve(basis.size());
    for (const RelState& st : basis) tables.push_back(tabulate_psi(st, n_rho, n_phi, 8.0));
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = a; b < basis.size(); ++b)
        worst = std::max(worst,
                         std::fabs(grid_overlap(tables[a], tables[b], identity) - (a == b ? 1.0 : 0.0)));
    if (quick) break;
  }
  return {"wavefunction_orthonormality", worst, 1e-6, worst <= 1e-6,
          "Gram matrix of each sector basis (excitations <= 8) equals identity"};
}

CheckResult check_wavefield_symmetry() {
  // 1D irreps: <psi | g psi> equals the character of g's class.  The phi grid
  // size is a multiple of 6, so every group action maps grid nodes to grid
  // nodes exactly.
  const int n_rho = 601, n_phi = 360;
  double worst = 0;
  for (const char* name : {"A1", "A2", "B1", "B2"}) {
    const Sector& s = sector_by_name(name);
    for (const RelState& state : sector_basis(s, 8)) {
      const PsiTable table = tabulate_psi(state, n_rho, n_phi, 8.0);
      for (const GroupElement& g : group_elements()) {
        const std::string cls = g.name[0] == 'E' ? "E"
                                : g.name[0] == 'C' ? std::string(g.name.substr(0, 2))
                                                   : std::string(g.name.substr(0, 7));
        const int chi = character(name, cls, Group::C6v);
        const int shift = g.b_sixths * (n_phi / 6);
        const auto action = [&](int j) { return ((g.a * j + shift) % n_phi + n_phi) % n_phi; };
        worst = std::max(worst, std::fabs(grid_overlap(table, table, action) - chi));
      }
    }
  }
  return {"wavefunction_symmetry_action", worst, 1e-8, worst <= 1e-8,
          "1D-irrep basis functions pick up their class character under every element"};
}

CheckResult check_fermionic_nodes() {
  double worst = 0;
  for (const char* name : {"A2", "B1"}) {
    for (const RelState& state : sector_basis(sector_by_name(name), 12))
      for (int i = 1; i <= 6; ++i)
        for (double rho : {0.3, 1.0, 2.7, 5.5}) {
          const wavefield::RelPoint p{rho, (2 * i - 1) * M_PI / 6.0, false};
          worst = std::max(worst, std::fabs(wavefield::psi_rel(state, p)));
        }
  }
  return {"fermionic_nodal_lines", worst, 1e-12, worst <= 1e-12,
          "A2/B1 wavefunctions vanish on all six coincidence rays"};
}

}  // namespace

CheckResult angular_check(const std::function<double(Tag, int, Tag, int)>& closed_form,
                          int mu_max) {
  double worst = 0;
  const auto tags = [](int mu) {
    return mu == 0 ? std::vector<Tag>{Tag::Zero} : std::vector<Tag>{Tag::Plus, Tag::Minus};
  };
  for (int mu_p = 0; mu_p <= mu_max; ++mu_p)
    for (int mu = 0; mu <= mu_max; ++mu)
      for (Tag tp : tags(mu_p))
        for (Tag t : tags(mu))
          worst =
              std::max(worst, std::fabs(angular_A(tp, mu_p, t, mu) - closed_form(tp, mu_p, t, mu)));
  return {"angular_vs_closed_form", worst, 1e-12, worst <= 1e-12,
          "direct six-ray sums against the tabulated family values, mu <= " +
              std::to_string(mu_max)};
}

std::vector<CheckResult> run_all(bool quick) {
  std::vector<CheckResult> results;
  results.push_back(check_dimension_reference());
  results.push_back(check_sector_sizes());
  results.push_back(check_group_closure());
  results.push_back(check_character_orthogonality());
  results.push_back(check_jacobi());
  results.push_back(check_sector_partition(quick));
  results.push_back(check_classification_period());
  results.push_back(angular_check(
      [](Tag tp, int mp, Tag t, int m) { return oracle::angular_closed_form(tp, mp, t, m); },
      quick ? 24 : 48));
  results.push_back(check_angular_complex_identity());
  results.push_back(check_fermionic_nullity(quick));
  results.push_back(check_radial_examples());
  results.push_back(check_radial_symmetry(quick));
  results.push_back(check_radial_positivity());
  results.push_back(radial_quadrature_check(quick ? 8 : 20, 1e-9, "radial_vs_quadrature_20"));
  if (!quick)
    results.push_back(radial_quadrature_check(40, 1e-7, "radial_vs_quadrature_40"));
  results.push_back(check_slope_closed_form());
  results.push_back(check_slope_finite_difference(quick));
  results.push_back(check_c0_exactness(quick));
  results.push_back(check_sector_union(quick));
  results.push_back(check_e_block_degeneracy(quick));
  results.push_back(check_e_even_multiplicity());
  results.push_back(check_coupling_monotonicity(quick));
  results.push_back(check_variational_convergence(quick));
  if (!quick) {
    results.push_back(check_tonks_limit());
    results.push_back(check_trimer_channel());
    results.push_back(check_avoided_crossings(false));
    results.push_back(check_wavefield_symmetry());
  }
  results.push_back(check_wavefield_orthonormality(quick));
  results.push_back(check_fermionic_nodes());
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

void write_report_json(std::ostream& os, const std::vector<CheckResult>& results, bool quick) {
  nlohmann::json report;
  report["quick"] = quick;
  report["all_passed"] = all_passed(results);
  report["library_version"] = library_version_string();
  auto& checks = report["checks"] = nlohmann::json::array();
  for (const CheckResult& r : results)
    checks.push_back({{"name", r.name},
                      {"deviation", r.deviation},
                      {"tolerance", r.tolerance},
                      {"pass", r.pass},
                      {"detail", r.detail}});
  os << report.dump(2) << '\n';
}

}  // namespace hextrap::verify
