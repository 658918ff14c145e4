#include "hextrap/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace hextrap {

namespace {

double parse_double(const std::string& text) {
  std::size_t consumed = 0;
  double value = 0;
  try {
    value = std::stod(text, &consumed);
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid number in coupling spec: '" + text + "'");
  }
  if (consumed != text.size() || !std::isfinite(value))
    throw std::invalid_argument("invalid number in coupling spec: '" + text + "'");
  return value;
}

std::string iso8601_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string fmt_sig(double x, int digits) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

}  // namespace

CouplingGrid CouplingGrid::single(double c) {
  if (!std::isfinite(c)) throw std::invalid_argument("coupling must be finite");
  return CouplingGrid{{c}};
}

CouplingGrid CouplingGrid::parse(const std::string& spec) {
  const auto first = spec.find(':');
  if (first == std::string::npos) return single(parse_double(spec));
  const auto second = spec.find(':', first + 1);
  if (second == std::string::npos)
    throw std::invalid_argument("coupling spec must be a value or start:stop:step");
  const double start = parse_double(spec.substr(0, first));
  const double stop = parse_double(spec.substr(first + 1, second - first - 1));
  const double step = parse_double(spec.substr(second + 1));
  if (step <= 0) throw std::invalid_argument("coupling step must be positive");
  if (stop < start) throw std::invalid_argument("coupling stop must be >= start");
  CouplingGrid grid;
  const int count = static_cast<int>(std::floor((stop - start) / step + 0.5)) + 1;
  grid.values.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double c = start + i * step;
    if (c > stop + 0.5 * step) break;
    grid.values.push_back(c);
  }
  return grid;
}

EigenSolution eigensolve_symmetric(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("eigensolve: matrix must be square");
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  const double residual = (a - a.transpose()).cwiseAbs().maxCoeff();
  if (residual > kSymmetryTolerance * scale)
    throw std::invalid_argument("eigensolve: symmetry residual above tolerance");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigensolve: iteration failed");
  return EigenSolution{es.eigenvalues(), es.eigenvectors()};
}

Eigen::VectorXd block_spectrum(const HamiltonianBlock& block, double c) {
  Eigen::MatrixXd h = c * block.w;
  h.diagonal() += block.h0_diag;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigensolve: iteration failed");
  return es.eigenvalues();
}

Eigen::VectorXd spectrum(const Sector& sector, int n_tilde, double c) {
  return block_spectrum(build_block(sector, n_tilde), c);
}

int thread_count() {
  if (const char* env = std::getenv("HEXTRAP_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string library_version_string() {
  std::ostringstream os;
  os << "hextrap 0.1.0 (Eigen " << EIGEN_WORLD_VERSION << '.' << EIGEN_MAJOR_VERSION << '.'
     << EIGEN_MINOR_VERSION << ')';
  return os.str();
}

SpectrumTable sweep(const Sector& sector, int n_tilde, const CouplingGrid& grid) {
  if (grid.values.empty()) throw std::invalid_argument("sweep: empty coupling grid");
  if (std::adjacent_find(grid.values.begin(), grid.values.end(),
                         [](double a, double b) { return a >= b; }) != grid.values.end())
    throw std::invalid_argument("sweep: coupling grid must be strictly increasing");

  const HamiltonianBlock block = build_block(sector, n_tilde);
  const int points = static_cast<int>(grid.values.size());

  SpectrumTable table;
  table.sector = sector.name();
  table.n_tilde = n_tilde;
  table.couplings = grid.values;
  table.energies.resize(points, block.dim());
  table.radial_certified = block.radial_certified;
  table.solver_tolerance = kEigenResidualTolerance;
  table.library_version = library_version_string();
  table.timestamp = iso8601_now();

  const int workers = std::min(thread_count(), points);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::atomic<int> next{0};
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < points; i = next.fetch_add(1))
        table.energies.row(i) = block_spectrum(block, table.couplings[i]).transpose();
    });
  for (auto& th : pool) th.join();
  return table;
}

void write_spectrum_csv(std::ostream& os, const SpectrumTable& table,
                        const std::vector<double>* tonks_reference) {
  os << "sector,n_tilde,c,level,rel_energy,total_energy_eta0\n";
  for (std::size_t i = 0; i < table.couplings.size(); ++i)
    for (int level = 0; level < table.energies.cols(); ++level) {
      const double e = table.energies(static_cast<Eigen::Index>(i), level);
      os << table.sector << ',' << table.n_tilde << ',' << fmt_sig(table.couplings[i], 12) << ','
         << level << ',' << fmt_sig(e, 12) << ',' << fmt_sig(total_energy(e, 0), 12) << '\n';
    }
  if (tonks_reference != nullptr)
    for (std::size_t level = 0; level < tonks_reference->size(); ++level) {
      const double e = (*tonks_reference)[level];
      os << table.sector << ":tonks," << table.n_tilde << ",," << level << ','
         << fmt_sig(e, 12) << ',' << fmt_sig(total_energy(e, 0), 12) << '\n';
    }
}

void write_spectrum_metadata_json(std::ostream& os, const SpectrumTable& table) {
  nlohmann::json meta;
  meta["sector"] = table.sector;
  meta["n_tilde"] = table.n_tilde;
  meta["grid_points"] = table.couplings.size();
  meta["levels"] = table.energies.cols();
  meta["energy_unit"] = "hbar*omega";
  meta["coupling"] = "c = g/(hbar*omega*sigma)";
  meta["solver_tolerance"] = table.solver_tolerance;
  meta["radial_certified"] = table.radial_certified;
  meta["library_version"] = table.library_version;
  meta["timestamp"] = table.timestamp;
  os << meta.dump(2) << '\n';
}

std::vector<ConvergenceRow> convergence_study(const Sector& sector, double c,
                                              const std::vector<int>& n_tilde_list,
                                              int k_levels) {
  if (n_tilde_list.empty()) throw std::invalid_argument("convergence_study: empty list");
  if (!std::is_sorted(n_tilde_list.begin(), n_tilde_list.end()))
    throw std::invalid_argument("convergence_study: truncations must be ascending");
  if (k_levels < 1) throw std::invalid_argument("convergence_study: k_levels must be >= 1");
  const int min_dim =
      static_cast<int>(sector_basis(sector, n_tilde_list.front()).size());
  if (k_levels > min_dim)
    throw std::invalid_argument("convergence_study: k_levels exceeds smallest block dimension");

  std::vector<ConvergenceRow> rows;
  rows.reserve(n_tilde_list.size());
  for (int n_tilde : n_tilde_list) {
    const Eigen::VectorXd ev = spectrum(sector, n_tilde, c);
    ConvergenceRow row;
    row.n_tilde = n_tilde;
    row.energies.assign(ev.data(), ev.data() + k_levels);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace hextrap
