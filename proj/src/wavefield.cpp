#include "hextrap/wavefield.hpp"

#include <cassert>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "hextrap/specfun.hpp"

namespace hextrap::wavefield {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Composite Simpson on uniformly spaced samples (3/8 rule on the tail when
// the interval count is odd).
double integrate_uniform(const std::vector<double>& f, double h) {
  const int n = static_cast<int>(f.size());
  if (n < 2) return 0.0;
  if (n == 2) return 0.5 * h * (f[0] + f[1]);
  if (n == 3) return h / 3.0 * (f[0] + 4.0 * f[1] + f[2]);

  double total = 0.0;
  int last = n - 1;  // index closing the plain-Simpson range
  if ((n - 1) % 2 != 0) {
    last = n - 4;
    total += 3.0 * h / 8.0 * (f[n - 4] + 3.0 * f[n - 3] + 3.0 * f[n - 2] + f[n - 1]);
  }
  double odd = 0.0, even = 0.0;
  for (int i = 1; i < last; i += 2) odd += f[i];
  for (int i = 2; i < last; i += 2) even += f[i];
  total += h / 3.0 * (f[0] + 4.0 * odd + 2.0 * even + f[last]);
  return total;
}

double radial_part(const RelState& s, double rho) {
  // sqrt(nu!/(pi (nu+mu)!)), doubled under the square root for mu > 0
  const double log_norm =
      0.5 * ((s.mu > 0 ? std::log(2.0) : 0.0) + specfun::log_factorial(s.nu) -
             specfun::log_factorial(s.nu + s.mu) - std::log(M_PI));
  return std::exp(log_norm) * std::pow(rho, s.mu) * specfun::laguerre(s.nu, s.mu, rho * rho) *
         std::exp(-0.5 * rho * rho);
}

}  // namespace

double psi_rel(const RelState& state, const RelPoint& p) {
  assert(p.rho >= 0.0);
  const double radial = radial_part(state, p.rho);
  switch (state.tag) {
    case Tag::Zero: return radial;
    case Tag::Plus: return radial * std::cos(state.mu * p.phi);
    case Tag::Minus: return radial * std::sin(state.mu * p.phi);
  }
  return 0.0;
}

double psi_cm(int eta, double z) {
  assert(eta >= 0);
  const double log_norm = -0.25 * std::log(M_PI) -
                          0.5 * (eta * std::log(2.0) + specfun::log_factorial(eta));
  return std::exp(log_norm) * specfun::hermite(eta, z) * std::exp(-0.5 * z * z);
}

Eigen::Vector3d particle_to_jacobi(const Eigen::Vector3d& q) { return jacobi_matrix() * q; }

RelPoint jacobi_to_polar(double x, double y) {
  RelPoint p;
  p.rho = std::hypot(x, y);
  if (p.rho == 0.0) {
    p.degenerate = true;  // hyperangle undefined at the triple coincidence
    return p;
  }
  p.phi = std::atan2(y, x);
  if (p.phi < 0) p.phi += kTwoPi;
  return p;
}

double DensityField::rho(int i) const { return grid.rho_max * i / (grid.n_rho - 1); }
double DensityField::phi(int j) const { return kTwoPi * j / grid.n_phi; }

DensityField eigen_density(const HamiltonianBlock& block, const Eigen::VectorXd& coefficients,
                           const GridSpec& grid, bool rho_weighted) {
  if (coefficients.size() != block.dim())
    throw std::invalid_argument("eigen_density: coefficient count does not match block dimension");
  if (grid.n_rho < 4 || grid.n_phi < 4 || grid.rho_max <= 0)
    throw std::invalid_argument("eigen_density: invalid grid spec");

  const Eigen::VectorXd v = coefficients.normalized();
  const int n_states = block.dim();

  DensityField field;
  field.grid = grid;
  field.rho_weighted = rho_weighted;
  field.values.assign(static_cast<std::size_t>(grid.n_rho) * grid.n_phi, 0.0);

  // separable evaluation: radial factors per (state, rho), angular per (state, phi)
  Eigen::MatrixXd radial(n_states, grid.n_rho);
  Eigen::MatrixXd angular(n_states, grid.n_phi);
  for (int s = 0; s < n_states; ++s) {
    const RelState& st = block.basis[s];
    for (int i = 0; i < grid.n_rho; ++i) radial(s, i) = radial_part(st, field.rho(i));
    for (int j = 0; j < grid.n_phi; ++j) {
      const double arg = st.mu * field.phi(j);
      angular(s, j) = st.tag == Tag::Minus ? std::sin(arg)
                      : st.tag == Tag::Plus ? std::cos(arg)
                                            : 1.0;
    }
  }

  std::vector<double> ring_integral(grid.n_rho, 0.0);
  const double dphi = kTwoPi / grid.n_phi;
  for (int i = 0; i < grid.n_rho; ++i) {
    double ring = 0.0;
    for (int j = 0; j < grid.n_phi; ++j) {
      double psi = 0.0;
      for (int s = 0; s < n_states; ++s) psi += v[s] * radial(s, i) * angular(s, j);
      const double density = psi * psi;
      ring += density;
      field.values[static_cast<std::size_t>(i) * grid.n_phi + j] =
          rho_weighted ? density * field.rho(i) : density;
    }
    // periodic trapezoid in phi, weighted by the radial measure
    ring_integral[i] = ring * dphi * field.rho(i);
  }
  const double h = grid.rho_max / (grid.n_rho - 1);
  field.norm_residual = std::fabs(integrate_uniform(ring_integral, h) - 1.0);
  return field;
}

void write_density_csv(std::ostream& os, const DensityField& field, const std::string& sector,
                       double coupling, int level) {
  char buf[48];
  os << "# sector=" << sector << " c=" << coupling << " level=" << level << '\n';
  os << "# n_rho=" << field.grid.n_rho << " n_phi=" << field.grid.n_phi
     << " rho_max=" << field.grid.rho_max << '\n';
  os << "# rho_weighted=" << (field.rho_weighted ? 1 : 0)
     << " norm_residual=" << field.norm_residual << '\n';
  os << "rho,phi,density\n";
  for (int i = 0; i < field.grid.n_rho; ++i)
    for (int j = 0; j < field.grid.n_phi; ++j) {
      std::snprintf(buf, sizeof buf, "%.9g,%.9g,%.12g", field.rho(i), field.phi(j),
                    field.at(i, j));
      os << buf << '\n';
    }
}

}  // namespace hextrap::wavefield
