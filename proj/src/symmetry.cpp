#include "hextrap/symmetry.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hextrap {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kPiThird = 1.0471975511965977461542144610932;

std::array<bool, 5> content_set(std::initializer_list<Content> items) {
  std::array<bool, 5> set{};
  for (Content c : items) set[static_cast<int>(c)] = true;
  return set;
}

Sector make_sector(C6vIrrep c6v, bool minus_block, C2vIrrep c2v, int parity,
                   std::initializer_list<Content> items) {
  return Sector{c6v, minus_block, c2v, parity, content_set(items)};
}

}  // namespace

std::string_view to_string(Tag tag) {
  switch (tag) {
    case Tag::Zero: return "0";
    case Tag::Plus: return "+";
    case Tag::Minus: return "-";
  }
  return "?";
}

std::string_view to_string(C6vIrrep irrep) {
  switch (irrep) {
    case C6vIrrep::A1: return "A1";
    case C6vIrrep::A2: return "A2";
    case C6vIrrep::B1: return "B1";
    case C6vIrrep::B2: return "B2";
    case C6vIrrep::E1: return "E1";
    case C6vIrrep::E2: return "E2";
  }
  return "?";
}

std::string_view to_string(C2vIrrep irrep) {
  switch (irrep) {
    case C2vIrrep::A1: return "A1";
    case C2vIrrep::A2: return "A2";
    case C2vIrrep::B1: return "B1";
    case C2vIrrep::B2: return "B2";
  }
  return "?";
}

std::string_view to_string(Content content) {
  switch (content) {
    case Content::BBB: return "BBB";
    case Content::FFF: return "FFF";
    case Content::BBX: return "BBX";
    case Content::FFX: return "FFX";
    case Content::XYZ: return "XYZ";
  }
  return "?";
}

std::string Sector::name() const {
  std::string n{to_string(c6v)};
  if (c6v == C6vIrrep::E1 || c6v == C6vIrrep::E2) n += minus_block ? '-' : '+';
  return n;
}

const std::array<Sector, 8>& all_sectors() {
  static const std::array<Sector, 8> sectors = {
      make_sector(C6vIrrep::A1, false, C2vIrrep::A1, +1, {Content::BBB, Content::BBX, Content::XYZ}),
      make_sector(C6vIrrep::B2, true, C2vIrrep::B2, -1, {Content::BBB, Content::BBX, Content::XYZ}),
      make_sector(C6vIrrep::B1, false, C2vIrrep::B1, -1, {Content::FFF, Content::FFX, Content::XYZ}),
      make_sector(C6vIrrep::A2, true, C2vIrrep::A2, +1, {Content::FFF, Content::FFX, Content::XYZ}),
      make_sector(C6vIrrep::E1, false, C2vIrrep::B1, -1, {Content::FFX, Content::XYZ}),
      make_sector(C6vIrrep::E1, true, C2vIrrep::B2, -1, {Content::BBX, Content::XYZ}),
      make_sector(C6vIrrep::E2, false, C2vIrrep::A1, +1, {Content::BBX, Content::XYZ}),
      make_sector(C6vIrrep::E2, true, C2vIrrep::A2, +1, {Content::FFX, Content::XYZ}),
  };
  return sectors;
}

const Sector& sector_by_name(std::string_view name) {
  for (const Sector& s : all_sectors())
    if (s.name() == name) return s;
  throw std::invalid_argument("unknown sector name: " + std::string(name));
}

Sector classify(int mu, Tag tag) {
  if (mu < 0) throw std::invalid_argument("classify: mu must be nonnegative");
  if ((mu == 0) != (tag == Tag::Zero))
    throw std::invalid_argument("classify: tag Zero is required exactly when mu = 0");
  if (mu == 0) return sector_by_name("A1");
  const bool minus = tag == Tag::Minus;
  switch (mu % 6) {
    case 0: return sector_by_name(minus ? "A2" : "A1");
    case 3: return sector_by_name(minus ? "B2" : "B1");
    case 1:
    case 5: return sector_by_name(minus ? "E1-" : "E1+");
    default: return sector_by_name(minus ? "E2-" : "E2+");  // mu % 6 in {2, 4}
  }
}

std::vector<RelState> sector_basis(const Sector& sector, int n_tilde) {
  std::vector<RelState> basis;
  for (int mu = 0; mu <= n_tilde; ++mu) {
    const Tag tag = mu == 0 ? Tag::Zero : (sector.minus_block ? Tag::Minus : Tag::Plus);
    if (mu == 0 && sector.minus_block) continue;
    if (!(classify(mu, tag) == sector)) continue;
    for (int nu = 0; 2 * nu + mu <= n_tilde; ++nu) basis.push_back({nu, mu, tag});
  }
  std::sort(basis.begin(), basis.end(), [](const RelState& a, const RelState& b) {
    return std::tuple(a.excitation(), a.mu, a.nu) < std::tuple(b.excitation(), b.mu, b.nu);
  });
  return basis;
}

std::vector<DimensionRow> dimension_table(int n_max) {
  assert(n_max >= 0);
  std::vector<DimensionRow> rows;
  rows.reserve(n_max + 1);
  for (std::int64_t n = 0; n <= n_max; ++n) {
    DimensionRow row;
    row.n = static_cast<int>(n);
    row.d_total = (n + 1) * (n + 2) * (n + 3) / 6;
    row.d_relative = (n + 1) * (n + 2) / 2;
    row.dim_a1 = static_cast<int>(sector_basis(sector_by_name("A1"), row.n).size());
    row.dim_b2 = static_cast<int>(sector_basis(sector_by_name("B2"), row.n).size());
    row.dim_b1 = static_cast<int>(sector_basis(sector_by_name("B1"), row.n).size());
    row.dim_a2 = static_cast<int>(sector_basis(sector_by_name("A2"), row.n).size());
    rows.push_back(row);
  }
  return rows;
}

double GroupElement::offset() const { return b_sixths * kPiThird; }

const std::array<GroupElement, 12>& group_elements() {
  // phi -> a phi + b with b in units of pi/3; image is the S3 permutation.
  static const std::array<GroupElement, 12> elements = {{
      {"E", "e", +1, 0, false, {1, 2, 3}},
      {"sigma_v", "s12", -1, 3, false, {2, 1, 3}},
      {"sigma_v'", "s23", -1, 1, false, {1, 3, 2}},
      {"sigma_v''", "s31", -1, 5, false, {3, 2, 1}},
      {"C3^-1", "s231", +1, 4, false, {2, 3, 1}},
      {"C3", "s312", +1, 2, false, {3, 1, 2}},
      {"C2", "p", +1, 3, true, {1, 2, 3}},
      {"sigma_d", "p.s12", -1, 0, true, {2, 1, 3}},
      {"sigma_d'", "p.s23", -1, 4, true, {1, 3, 2}},
      {"sigma_d''", "p.s31", -1, 2, true, {3, 2, 1}},
      {"C6", "p.s231", +1, 1, true, {2, 3, 1}},
      {"C6^-1", "p.s312", +1, 5, true, {3, 1, 2}},
  }};
  return elements;
}

const GroupElement& group_element(std::string_view label) {
  for (const GroupElement& g : group_elements())
    if (g.name == label || g.perm_label == label) return g;
  throw std::invalid_argument("unknown group element: " + std::string(label));
}

double group_action(const GroupElement& g, double phi) {
  double out = std::fmod(g.a * phi + g.offset(), kTwoPi);
  if (out < 0) out += kTwoPi;
  return out;
}

const GroupElement& compose(const GroupElement& g1, const GroupElement& g2) {
  // g1 after g2: phi -> a1 (a2 phi + b2) + b1.
  const int a = g1.a * g2.a;
  const int b = ((g1.a * g2.b_sixths + g1.b_sixths) % 6 + 6) % 6;
  for (const GroupElement& g : group_elements())
    if (g.a == a && g.b_sixths == b) return g;
  throw std::logic_error("group is not closed");  // unreachable
}

const Eigen::Matrix3d& jacobi_matrix() {
  static const Eigen::Matrix3d j = [] {
    Eigen::Matrix3d m;
    const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s6 = std::sqrt(6.0);
    m << 1 / s2, -1 / s2, 0,
         1 / s6, 1 / s6, -2 / s6,
         1 / s3, 1 / s3, 1 / s3;
    return m;
  }();
  return j;
}

Eigen::Matrix3d particle_matrix(const GroupElement& g) {
  Eigen::Matrix3d s = Eigen::Matrix3d::Zero();
  for (int i = 0; i < 3; ++i) s(i, g.image[i] - 1) = 1.0;
  if (g.has_parity) s = -s;
  return s;
}

Eigen::Matrix3d jacobi_conjugate(const GroupElement& g) {
  const Eigen::Matrix3d& j = jacobi_matrix();
  return j * particle_matrix(g) * j.transpose();
}

Eigen::Matrix3d expected_jacobi_form(const GroupElement& g) {
  const double c = std::cos(g.offset()), s = std::sin(g.offset());
  Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
  m(0, 0) = c;
  m(0, 1) = s;
  m(1, 0) = -g.a * s;
  m(1, 1) = g.a * c;
  m(2, 2) = g.has_parity ? -1.0 : 1.0;
  return m;
}

namespace {

constexpr std::array<std::string_view, 6> kC6vIrreps = {"A1", "A2", "B1", "B2", "E1", "E2"};
constexpr std::array<std::string_view, 6> kC6vClasses = {"E", "C2", "C3", "C6", "sigma_v", "sigma_d"};
constexpr int kC6vTable[6][6] = {
    {1, 1, 1, 1, 1, 1},
    {1, 1, 1, 1, -1, -1},
    {1, -1, 1, -1, -1, 1},
    {1, -1, 1, -1, 1, -1},
    {2, -2, -1, 1, 0, 0},
    {2, 2, -1, -1, 0, 0},
};

constexpr std::array<std::string_view, 4> kC2vIrreps = {"A1", "A2", "B1", "B2"};
constexpr std::array<std::string_view, 4> kC2vClasses = {"E", "C2", "sigma_v", "sigma_d"};
// B2 row corrected to (1,-1,1,-1); the printed source table violates row
// orthogonality and the explicit sin(mu phi) transformation behavior.
constexpr int kC2vTable[4][4] = {
    {1, 1, 1, 1},
    {1, 1, -1, -1},
    {1, -1, -1, 1},
    {1, -1, 1, -1},
};

template <std::size_t N>
int index_of(const std::array<std::string_view, N>& labels, std::string_view label,
             const char* what) {
  for (std::size_t i = 0; i < N; ++i)
    if (labels[i] == label) return static_cast<int>(i);
  throw std::invalid_argument(std::string("unknown ") + what + ": " + std::string(label));
}

}  // namespace

int character(std::string_view irrep, std::string_view cls, Group group) {
  if (group == Group::C6v)
    return kC6vTable[index_of(kC6vIrreps, irrep, "C6v irrep")]
                    [index_of(kC6vClasses, cls, "C6v class")];
  return kC2vTable[index_of(kC2vIrreps, irrep, "C2v irrep")]
                  [index_of(kC2vClasses, cls, "C2v class")];
}

}  // namespace hextrap
