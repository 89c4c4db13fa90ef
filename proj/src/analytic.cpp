#include "majorana/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace majorana::analytic {

namespace {

double wrap(double phi) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double p = std::fmod(phi, two_pi);
  if (p < 0.0) p += two_pi;
  return p >= two_pi ? 0.0 : p;
}

double log_binomial(int n, int k) {
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

}  // namespace

CoherentRoot coherent_root(const Symmetry& sym, cplx alpha) {
  CoherentRoot out;
  out.multiplicity = sym.nominal_degree();
  if (alpha != cplx{0.0, 0.0}) out.z = 1.0 / alpha;
  return out;
}

std::vector<CatStarPrediction> cat_two_roots(cplx alpha, int cutoff) {
  if (alpha == cplx{0.0, 0.0}) throw DomainError("cat_two_roots requires alpha != 0");
  if (cutoff < 1) throw DomainError("cat_two_roots requires N_c >= 1");
  const double mag = std::abs(alpha);
  const double arg = std::arg(alpha);
  const int last_upper = (cutoff - 1) / 2;
  std::vector<CatStarPrediction> out;
  out.reserve(cutoff);
  for (int n = 0; n < cutoff; ++n) {
    const double t = std::tan((4.0 * n + 1.0) * std::numbers::pi / (4.0 * cutoff));
    CatStarPrediction p;
    p.n = n;
    p.z = cplx{0.0, 1.0} / alpha * t;
    p.theta = 2.0 * std::atan(std::abs(t) / mag);
    p.phi = wrap((n <= last_upper ? 0.5 : 1.5) * std::numbers::pi - arg);
    out.push_back(p);
  }
  return out;
}

std::vector<cplx> superposition_polynomial(std::span<const cplx> weights,
                                           std::span<const cplx> betas, int cutoff) {
  if (weights.size() != betas.size() || weights.empty()) {
    throw DomainError("superposition needs one weight per coherent component");
  }
  if (cutoff < 1) throw DomainError("cutoff must be >= 1");
  double scale = 0.0;
  for (const cplx& b : betas) scale = std::max(scale, std::abs(b));
  const double log_scale = scale > 0.0 ? std::log(scale) : 0.0;
  if (scale == 0.0) scale = 1.0;

  std::vector<cplx> coeffs(cutoff + 1);
  std::vector<double> log_mag(cutoff + 1);
  double top = -std::numeric_limits<double>::infinity();
  for (int n = 0; n <= cutoff; ++n) {
    log_mag[n] = log_binomial(cutoff, n) + n * log_scale;
    top = std::max(top, log_mag[n]);
  }
  for (int n = 0; n <= cutoff; ++n) {
    cplx sum{0.0, 0.0};
    for (std::size_t j = 0; j < betas.size(); ++j) {
      const cplx u = -betas[j] / scale;
      sum += weights[j] * std::pow(std::abs(u), n) * std::polar(1.0, n * std::arg(u));
    }
    coeffs[n] = std::exp(log_mag[n] - top) * sum;
  }
  return coeffs;
}

std::vector<double> reduced_equation(int cutoff) {
  if (cutoff < 1) throw DomainError("cutoff must be >= 1");
  const int half = cutoff / 2;
  std::vector<double> log_mag(half + 1);
  for (int n = 0; n <= half; ++n) log_mag[n] = -log_factorial(cutoff - 2 * n) - log_factorial(n);
  const double top = *std::max_element(log_mag.begin(), log_mag.end());
  std::vector<double> out(half + 1);
  for (int n = 0; n <= half; ++n) out[n] = (n % 2 == 0 ? 1.0 : -1.0) * std::exp(log_mag[n] - top);
  return out;
}

SmsvRoots smsv_reduced_roots(cplx xi, int cutoff, const SolverConfig& cfg) {
  if (cutoff < 1) throw DomainError("cutoff must be >= 1");
  SmsvRoots out;
  if (xi == cplx{0.0, 0.0}) {
    out.degenerate = true;
    out.infinite_root_count = cutoff;
    return out;
  }
  out.infinite_root_count = cutoff % 2;
  const auto b = reduced_equation(cutoff);
  if (b.size() < 2) return out;
  const std::vector<cplx> coeffs(b.begin(), b.end());
  const RootResult r = solve_polynomial(coeffs, cfg);
  for (const cplx& zt : r.roots) {
    out.max_reduced_imag = std::max(out.max_reduced_imag, std::abs(zt.imag()));
    out.reduced.push_back(zt.real());
  }
  std::sort(out.reduced.begin(), out.reduced.end());
  for (double zt : out.reduced) {
    const cplx s = std::sqrt(2.0 * zt / xi);
    out.stars.push_back(cplx{0.0, 1.0} * s);
    out.stars.push_back(cplx{0.0, -1.0} * s);
  }
  return out;
}

cplx squeezed_equivalence_map(const Symmetry& sym, cplx xi) {
  switch (sym.kind()) {
    case SymmetryKind::HeisenbergWeyl:
    case SymmetryKind::SU11:
      return -xi / 2.0;
    case SymmetryKind::SU2:
      return -xi / (2.0 * sym.two_j());
  }
  return {};
}

}  // namespace majorana::analytic
