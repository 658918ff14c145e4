#include "hextrap/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include <Eigen/Dense>

#include "hextrap/specfun.hpp"
#include "hextrap/solver.hpp"

namespace hextrap::oracle {

namespace {

// Generalized Gauss-Laguerre rule for weight t^alpha e^{-t} via the
// Golub-Welsch eigendecomposition of the Jacobi matrix.  weight_sq holds the
// squared first eigenvector components; the full weights are
// Gamma(alpha+1) * weight_sq, folded into the caller's normalization.
struct QuadRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weight_sq;
};

const QuadRule& quad_rule(int two_alpha, int count) {
  static std::map<std::pair<int, int>, QuadRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find({two_alpha, count});
  if (it != cache.end()) return it->second;

  const double alpha = two_alpha / 2.0;
  Eigen::VectorXd diag(count), sub(count - 1);
  for (int k = 0; k < count; ++k) diag[k] = 2.0 * k + alpha + 1.0;
  for (int k = 1; k < count; ++k) sub[k - 1] = std::sqrt(k * (k + alpha));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub);
  if (es.info() != Eigen::Success) throw std::runtime_error("quadrature rule failed");

  QuadRule rule;
  rule.nodes = es.eigenvalues();
  rule.weight_sq = es.eigenvectors().row(0).transpose().array().square();
  return cache.emplace(std::pair{two_alpha, count}, std::move(rule)).first->second;
}

}  // namespace

double radial_quadrature(int nu_p, int mu_p, int nu, int mu) {
  assert(nu_p >= 0 && mu_p >= 0 && nu >= 0 && mu >= 0);
  const int two_alpha = mu + mu_p - 1;
  const int count = 2 * (nu + nu_p) + mu + mu_p + 16;
  const QuadRule& rule = quad_rule(two_alpha, count);

  double integral = 0.0;
  for (int i = 0; i < rule.nodes.size(); ++i)
    integral += rule.weight_sq[i] * specfun::laguerre(nu, mu, rule.nodes[i]) *
                specfun::laguerre(nu_p, mu_p, rule.nodes[i]);

  // Gamma(alpha+1) times the Eq.-normalization sqrt(nu! nu'!/((nu+mu)!(nu'+mu')!))/(2 pi)
  const double log_scale = specfun::log_gamma_half(two_alpha + 2).log_magnitude +
                           0.5 * (specfun::log_factorial(nu) + specfun::log_factorial(nu_p) -
                                  specfun::log_factorial(nu + mu) -
                                  specfun::log_factorial(nu_p + mu_p));
  return std::exp(log_scale) * integral / (2.0 * M_PI);
}

std::complex<double> angular_sum_complex(int delta_mu) {
  std::complex<double> sum = 0.0;
  for (int i = 1; i <= 6; ++i) {
    const double angle = delta_mu * (2 * i - 1) * M_PI / 6.0;
    sum += std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return sum;
}

double angular_closed_form(Tag tag_p, int mu_p, Tag tag, int mu) {
  assert(mu >= 0 && mu_p >= 0);
  const bool cos_p = tag_p != Tag::Minus;
  const bool cos_k = tag != Tag::Minus;
  if (cos_p != cos_k) return 0.0;

  // The table's entries are 6(-1)^{j+k} or 3(-1)^{j+k} where j, k index the
  // family parameterization of mu: 6j, 6j+3, 6j+-1 or 6j+3+-2 (E1), and
  // 6j+-2 or 6j+3+-1 (E2).
  const int r = mu % 6, r_p = mu_p % 6;
  const auto sign = [](int j, int k) { return (j + k) % 2 == 0 ? 1.0 : -1.0; };

  if (cos_k) {
    // cos-cos families: A1 (mu = 6j), B1 (6j+3, zero), E1+ (6j+-1), E2+ (6j+-2)
    if (r == 0 && r_p == 0) return 6.0 * sign(mu / 6, mu_p / 6);
    if (r == 3 && r_p == 3) return 0.0;
    if ((r == 1 || r == 5) && (r_p == 1 || r_p == 5)) {
      const int j = r == 1 ? (mu - 1) / 6 : (mu + 1) / 6;
      const int j_p = r_p == 1 ? (mu_p - 1) / 6 : (mu_p + 1) / 6;
      return 3.0 * sign(j, j_p);
    }
    if ((r == 2 || r == 4) && (r_p == 2 || r_p == 4)) {
      const int j = r == 2 ? (mu - 2) / 6 : (mu + 2) / 6;
      const int j_p = r_p == 2 ? (mu_p - 2) / 6 : (mu_p + 2) / 6;
      return 3.0 * sign(j, j_p);
    }
    return 0.0;
  }
  // sin-sin families: A2 (6j, zero), B2 (6j+3), E1- (6j+3+-2), E2- (6j+3+-1)
  if (r == 0 && r_p == 0) return 0.0;
  if (r == 3 && r_p == 3) return 6.0 * sign((mu - 3) / 6, (mu_p - 3) / 6);
  if ((r == 1 || r == 5) && (r_p == 1 || r_p == 5)) {
    const int j = r == 5 ? (mu - 5) / 6 : (mu - 1) / 6;
    const int j_p = r_p == 5 ? (mu_p - 5) / 6 : (mu_p - 1) / 6;
    return 3.0 * sign(j, j_p);
  }
  if ((r == 2 || r == 4) && (r_p == 2 || r_p == 4)) {
    const int j = r == 2 ? (mu - 2) / 6 : (mu - 4) / 6;
    const int j_p = r_p == 2 ? (mu_p - 2) / 6 : (mu_p - 4) / 6;
    return 3.0 * sign(j, j_p);
  }
  return 0.0;
}

std::vector<double> full_relative_spectrum(int n_tilde, double c) {
  if (n_tilde < 0) throw std::invalid_argument("full_relative_spectrum: negative truncation");
  if (n_tilde > kFullSpectrumCap)
    throw std::invalid_argument("full_relative_spectrum: truncation above oracle cap");

  std::vector<ComplexRelState> states;
  for (int m = -n_tilde; m <= n_tilde; ++m)
    for (int nu = 0; 2 * nu + std::abs(m) <= n_tilde; ++nu) states.push_back({nu, m});

  const int dim = static_cast<int>(states.size());
  Eigen::MatrixXd h(dim, dim);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const int delta = states[i].m - states[j].m;
      double v = 0.0;
      if (delta % 6 == 0) {
        const std::complex<double> s = angular_sum_complex(delta);
        v = c * inv_sqrt2 *
            specfun::radial_R(states[j].nu, std::abs(states[j].m), states[i].nu,
                              std::abs(states[i].m)) *
            s.real();
      }
      h(i, j) = v;
      if (i == j) h(i, j) += states[i].h0_energy();
    }
  h = (h + h.transpose().eval()) / 2.0;  // scrub residual round-off asymmetry

  const EigenSolution sol = eigensolve_symmetric(h);
  return {sol.eigenvalues.data(), sol.eigenvalues.data() + dim};
}

double perturbative_slope_A1() {
  // three pair terms, each |psi_HO,0(0)|^2 / sqrt(2) = 1/sqrt(2 pi)
  const double ho_ground_density_at_contact = 1.0 / std::sqrt(M_PI);
  return 3.0 * ho_ground_density_at_contact / std::sqrt(2.0);
}

std::vector<double> tonks_reference(const Sector& sector, int k_levels) {
  if (k_levels < 1) throw std::invalid_argument("tonks_reference: k_levels must be >= 1");
  int k_start;
  if (sector.name() == "A1")
    k_start = 1;  // wedge harmonics symmetric about the wedge bisector
  else if (sector.name() == "B2")
    k_start = 2;  // antisymmetric about the bisector
  else
    throw std::invalid_argument("tonks_reference: only A1 and B2 have a bosonic unitary limit");

  // wedge levels 2 nu + 3k + 1 with k = k_start, k_start+2, ...
  std::vector<double> levels;
  for (int bound = 3 * k_start + 1; static_cast<int>(levels.size()) < k_levels; bound += 2) {
    levels.clear();
    for (int k = k_start; 3 * k + 1 <= bound; k += 2)
      for (int nu = 0; 2 * nu + 3 * k + 1 <= bound; ++nu)
        levels.push_back(2.0 * nu + 3.0 * k + 1.0);
  }
  std::sort(levels.begin(), levels.end());
  levels.resize(k_levels);
  return levels;
}

}  // namespace hextrap::oracle
