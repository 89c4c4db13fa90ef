#include "majorana/starsolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace majorana {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Rescales log-magnitude terms so the largest is 1 and fills in the
// degree bookkeeping.
StarPolynomial finish(const std::vector<double>& log_mag, const std::vector<cplx>& phase,
                      int nominal_degree, const SolverConfig& cfg) {
  const double top = *std::max_element(log_mag.begin(), log_mag.end());
  if (top == kNegInf) throw DomainError("star polynomial is identically zero");
  StarPolynomial poly;
  poly.nominal_degree = nominal_degree;
  poly.coeffs.assign(log_mag.size(), cplx{0.0, 0.0});
  for (std::size_t n = 0; n < log_mag.size(); ++n) {
    if (log_mag[n] == kNegInf) continue;
    poly.coeffs[n] = std::exp(log_mag[n] - top) * phase[n];
  }
  int eff = nominal_degree;
  while (eff > 0 && !(std::abs(poly.coeffs[eff]) > cfg.lead_tol)) --eff;
  for (int n = eff + 1; n <= nominal_degree; ++n) poly.coeffs[n] = cplx{0.0, 0.0};
  poly.effective_degree = eff;
  poly.infinite_root_count = nominal_degree - eff;
  return poly;
}

double wrap_phase(double phi) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double p = std::fmod(phi, two_pi);
  if (p < 0.0) p += two_pi;
  if (p >= two_pi) p = 0.0;
  return p;
}

struct UnitVector {
  double x, y, z;
};

UnitVector on_sphere(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

double distance(const UnitVector& a, const UnitVector& b) {
  return std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y) + (a.z - b.z) * (a.z - b.z));
}

}  // namespace

int StarSet::finite_count() const {
  int total = 0;
  for (const auto& s : stars) total += s.multiplicity;
  return total;
}

std::vector<Star> StarSet::expanded() const {
  std::vector<Star> out;
  for (const auto& s : stars) {
    for (int m = 0; m < s.multiplicity; ++m) {
      Star one = s;
      one.multiplicity = 1;
      out.push_back(one);
    }
  }
  const Star south{std::numbers::pi, 0.0, 1, cplx{std::numeric_limits<double>::infinity(), 0.0}};
  out.insert(out.end(), south_pole_count, south);
  return out;
}

StarPolynomial build_star_polynomial(const PureState& state, const SolverConfig& cfg) {
  const Symmetry& sym = state.symmetry();
  std::vector<double> log_mag(state.size(), kNegInf);
  std::vector<cplx> phase(state.size(), cplx{1.0, 0.0});
  for (int n = 0; n < state.size(); ++n) {
    const double mag = std::abs(state[n]);
    if (mag == 0.0) continue;
    const LogWeight w = star_weight(sym, n);
    log_mag[n] = w.log_magnitude + std::log(mag);
    phase[n] = static_cast<double>(w.sign) * state[n] / mag;
  }
  return finish(log_mag, phase, sym.nominal_degree(), cfg);
}

StarPolynomial classic_majorana_polynomial(const PureState& state, const SolverConfig& cfg) {
  const Symmetry& sym = state.symmetry();
  if (sym.kind() != SymmetryKind::SU2) {
    throw DomainError("the classic Majorana polynomial is defined for SU(2) states only");
  }
  const int two_j = sym.two_j();
  std::vector<double> log_mag(state.size(), kNegInf);
  std::vector<cplx> phase(state.size(), cplx{1.0, 0.0});
  for (int n = 0; n < state.size(); ++n) {
    const double mag = std::abs(state[n]);
    if (mag == 0.0) continue;
    // k = 2j - n multiplies C_{j-k} = C_{n-j}, i.e. amplitude n.
    const int k = two_j - n;
    log_mag[n] = std::log(mag) - 0.5 * (log_factorial(n) + log_factorial(k));
    phase[n] = (k % 2 == 0 ? 1.0 : -1.0) * state[n] / mag;
  }
  return finish(log_mag, phase, two_j, cfg);
}

RootResult find_roots(const StarPolynomial& poly, const SolverConfig& cfg) {
  if (poly.effective_degree == 0) {
    cfg.validate();
    return {};
  }
  return solve_polynomial(poly.effective(), cfg);
}

Star star_from_root(cplx z) {
  Star s;
  s.z = z;
  if (z == cplx{0.0, 0.0}) return s;
  s.theta = 2.0 * std::atan(std::abs(z));
  s.phi = wrap_phase(std::arg(z));
  return s;
}

double chordal_distance(const Star& a, const Star& b) {
  return distance(on_sphere(a.theta, a.phi), on_sphere(b.theta, b.phi));
}

double chordal_distance(cplx z, cplx w) {
  return chordal_distance(star_from_root(z), star_from_root(w));
}

StarSet roots_to_bloch(std::span<const cplx> roots, int infinite_root_count,
                       const SolverConfig& cfg) {
  StarSet out;
  out.south_pole_count = infinite_root_count;
  out.nominal_degree = static_cast<int>(roots.size()) + infinite_root_count;

  const int n = static_cast<int>(roots.size());
  std::vector<UnitVector> v(n);
  for (int i = 0; i < n; ++i) {
    const Star s = star_from_root(roots[i]);
    v[i] = on_sphere(s.theta, s.phi);
  }
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (distance(v[i], v[j]) <= cfg.cluster_radius) parent[find(i)] = find(j);
    }
  }
  std::vector<std::vector<int>> groups(n);
  for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
  for (const auto& g : groups) {
    if (g.empty()) continue;
    cplx mean{0.0, 0.0};
    for (int i : g) mean += roots[i];
    mean /= static_cast<double>(g.size());
    Star s = star_from_root(mean);
    s.multiplicity = static_cast<int>(g.size());
    out.stars.push_back(s);
  }
  std::sort(out.stars.begin(), out.stars.end(), [](const Star& a, const Star& b) {
    return a.theta != b.theta ? a.theta < b.theta : a.phi < b.phi;
  });
  return out;
}

StarSet stars(const PureState& state, const SolverConfig& cfg) {
  const StarPolynomial poly = build_star_polynomial(state, cfg);
  const RootResult roots = find_roots(poly, cfg);
  StarSet out = roots_to_bloch(roots.roots, poly.infinite_root_count, cfg);
  out.residual_max = roots.max_residual();
  return out;
}

}  // namespace majorana
