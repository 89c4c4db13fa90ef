#include "majorana/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "majorana/algebra.hpp"

namespace majorana {

namespace {

using lcplx = std::complex<long double>;

constexpr double kEps = std::numeric_limits<double>::epsilon();

// p(z) and p'(z) evaluated in a scaled form: for |z| > 1 the reversed
// polynomial is used at w = 1/z, so every intermediate stays bounded by
// sum |a_n|. `log_scale` is the log of the factor dropped by the scaling
// (d log|z| when reversed, zero otherwise).
template <typename T>
struct ScaledEval {
  std::complex<T> value;      // p(z) / |z|^d when reversed
  std::complex<T> newton;     // p(z) / p'(z)
  T bound;                    // sum |a_n| |z|^n, same scaling as value
  T log_scale;
};

template <typename T>
ScaledEval<T> evaluate(std::span<const cplx> a, std::complex<T> z) {
  using C = std::complex<T>;
  const int d = static_cast<int>(a.size()) - 1;
  const T mag = std::abs(z);
  ScaledEval<T> out{};
  if (mag <= T(1)) {
    C p = C(a[d]);
    C dp = C(0);
    T s = std::abs(C(a[d]));
    for (int n = d - 1; n >= 0; --n) {
      dp = dp * z + p;
      p = p * z + C(a[n]);
      s = s * mag + std::abs(C(a[n]));
    }
    out.value = p;
    out.newton = p / dp;
    out.bound = s;
    out.log_scale = T(0);
  } else {
    const C w = T(1) / z;
    const T wmag = T(1) / mag;
    C r = C(a[0]);
    C dr = C(0);
    T s = std::abs(C(a[0]));
    for (int n = 1; n <= d; ++n) {
      dr = dr * w + r;
      r = r * w + C(a[n]);
      s = s * wmag + std::abs(C(a[n]));
    }
    // p(z) = z^d r(w),  p'(z) = z^{d-1} (d r - w r').
    out.value = r;
    out.newton = z * r / (T(d) * r - w * dr);
    out.bound = s;
    out.log_scale = T(d) * std::log(mag);
  }
  return out;
}

template <typename T>
T residual_of(const ScaledEval<T>& e) {
  if (e.bound == T(0)) return T(0);
  return std::abs(e.value) / e.bound;
}

// Upper convex hull of (n, log|a_n|) gives one circle per hull edge; the
// number of starting points on each circle is the edge width.
std::vector<cplx> initial_guesses(std::span<const cplx> a) {
  const int d = static_cast<int>(a.size()) - 1;
  std::vector<int> idx;
  std::vector<double> lg;
  for (int n = 0; n <= d; ++n) {
    if (a[n] == cplx{0.0, 0.0}) continue;
    const double y = std::log(std::abs(a[n]));
    while (idx.size() >= 2) {
      const int i0 = idx[idx.size() - 2];
      const int i1 = idx.back();
      const double y0 = lg[lg.size() - 2];
      const double y1 = lg.back();
      // Drop i1 if it lies on or below the segment i0 -> n.
      if ((y1 - y0) * (n - i0) <= (y - y0) * (i1 - i0)) {
        idx.pop_back();
        lg.pop_back();
      } else {
        break;
      }
    }
    idx.push_back(n);
    lg.push_back(y);
  }

  constexpr double kOffset = 0.7;
  std::vector<cplx> z;
  z.reserve(d);
  for (std::size_t e = 1; e < idx.size(); ++e) {
    const int width = idx[e] - idx[e - 1];
    const double log_r = std::clamp((lg[e - 1] - lg[e]) / width, -690.0, 690.0);
    const double r = std::exp(log_r);
    for (int k = 0; k < width; ++k) {
      const double angle = 2.0 * std::numbers::pi * k / width +
                           2.0 * std::numbers::pi * idx[e - 1] / d + kOffset;
      z.push_back(std::polar(r, angle));
    }
  }
  return z;
}

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(int i, int j) { parent[find(i)] = find(j); }
};

// log of the inclusion radius d |p(z_i)| / |a_d prod_{j != i} (z_i - z_j)|,
// with |p| inflated to the Horner rounding bound.
double log_inclusion_radius(std::span<const cplx> a, std::span<const cplx> z, int i) {
  const int d = static_cast<int>(a.size()) - 1;
  const auto e = evaluate<long double>(a, lcplx(z[i]));
  const long double floor_val = 4.0L * d * kEps * e.bound;
  const long double pval = std::max<long double>(std::abs(e.value), floor_val);
  if (pval == 0.0L) return -std::numeric_limits<double>::infinity();
  double log_r = std::log(static_cast<double>(d)) + static_cast<double>(std::log(pval) + e.log_scale) -
                 std::log(std::abs(a[d]));
  for (int j = 0; j < d; ++j) {
    if (j == i) continue;
    const double gap = std::abs(z[i] - z[j]);
    if (gap == 0.0) return std::numeric_limits<double>::infinity();
    log_r -= std::log(gap);
  }
  return log_r;
}

// Taylor coefficients b_0..b_k of p(c + h) = sum b_i h^i, together with the
// matching componentwise bounds sum_n |a_n| binom(n, i) |c|^{n-i}.
void taylor_shift(std::span<const lcplx> a, lcplx c, int k, std::vector<lcplx>& b,
                  std::vector<long double>& bound) {
  const int d = static_cast<int>(a.size()) - 1;
  std::vector<lcplx> work(a.begin(), a.end());
  std::vector<long double> absw(a.size());
  for (int n = 0; n <= d; ++n) absw[n] = std::abs(a[n]);
  const long double cm = std::abs(c);
  b.assign(k + 1, lcplx(0));
  bound.assign(k + 1, 0.0L);
  for (int i = 0; i <= k && i <= d; ++i) {
    // Synthetic division of work[i..d] by (z - c); the remainder is b_i.
    for (int n = d - 1; n >= i; --n) {
      work[n] += work[n + 1] * c;
      absw[n] += absw[n + 1] * cm;
    }
    b[i] = work[i];
    bound[i] = absw[i];
  }
}

// Attempts to certify that the roots indexed by `members` approximate one
// root of multiplicity k = members.size(). On success writes the refined
// root into `z` for every member.
bool certify_cluster(std::span<const cplx> a, std::vector<cplx>& z, const std::vector<int>& members,
                     const SolverConfig& cfg) {
  const int d = static_cast<int>(a.size()) - 1;
  const int k = static_cast<int>(members.size());
  lcplx centroid(0);
  for (int i : members) centroid += lcplx(z[i]);
  centroid /= static_cast<long double>(k);

  // Work on the reversed polynomial outside the unit disk; a k-fold root at
  // c is a k-fold root at 1/c there.
  const bool reversed = std::abs(centroid) > 1.0L;
  std::vector<lcplx> coeffs(d + 1);
  for (int n = 0; n <= d; ++n) coeffs[n] = lcplx(reversed ? a[d - n] : a[n]);
  lcplx c = reversed ? lcplx(1) / centroid : centroid;

  std::vector<lcplx> b;
  std::vector<long double> bound;
  // Newton on p^(k-1), whose root at c is simple: step = b_{k-1} / (k b_k).
  for (int it = 0; it < 30; ++it) {
    taylor_shift(coeffs, c, k, b, bound);
    if (b[k] == lcplx(0)) return false;
    const lcplx step = b[k - 1] / (static_cast<long double>(k) * b[k]);
    c -= step;
    if (std::abs(step) <= 4.0L * std::numeric_limits<long double>::epsilon() *
                              std::max<long double>(std::abs(c), 1e-300L)) {
      break;
    }
  }
  taylor_shift(coeffs, c, k, b, bound);
  for (int i = 0; i < k; ++i) {
    if (std::abs(b[i]) > cfg.multiplicity_tol * bound[i]) return false;
  }
  if (reversed && c == lcplx(0)) return false;
  const lcplx root = reversed ? lcplx(1) / c : c;
  for (int i : members) z[i] = cplx(static_cast<double>(root.real()), static_cast<double>(root.imag()));
  return true;
}

// A few Newton steps in extended precision; keeps the step only if it lowers
// the residual.
cplx polish(std::span<const cplx> a, cplx z0) {
  lcplx z(z0);
  auto e = evaluate<long double>(a, z);
  long double res = residual_of(e);
  for (int it = 0; it < 4 && res > 0.0L; ++it) {
    if (!std::isfinite(std::abs(e.newton))) break;
    const lcplx trial = z - e.newton;
    const auto et = evaluate<long double>(a, trial);
    const long double rt = residual_of(et);
    if (!(rt < res)) break;
    z = trial;
    e = et;
    res = rt;
  }
  return cplx(static_cast<double>(z.real()), static_cast<double>(z.imag()));
}

void symmetric_function_checks(std::span<const cplx> a, RootResult& out, std::size_t first) {
  const int d = static_cast<int>(a.size()) - 1;
  if (d < 1) return;
  lcplx sum(0);
  long double abs_sum = 0.0L;
  long double log_mod = 0.0L;
  long double phase = 0.0L;
  for (std::size_t i = first; i < out.roots.size(); ++i) {
    const lcplx r(out.roots[i]);
    sum += r;
    abs_sum += std::abs(r);
    log_mod += std::log(std::abs(r));
    phase += std::arg(r);
  }
  const lcplx expected_sum = -lcplx(a[d - 1]) / lcplx(a[d]);
  const long double scale = std::max(abs_sum, std::abs(expected_sum));
  out.root_sum_error =
      scale > 0.0L ? static_cast<double>(std::abs(sum - expected_sum) / scale) : 0.0;

  const lcplx expected_prod = ((d % 2 == 0) ? 1.0L : -1.0L) * lcplx(a[0]) / lcplx(a[d]);
  const long double dlog = log_mod - std::log(std::abs(expected_prod));
  long double dphase = std::remainder(phase - std::arg(expected_prod), 2.0L * std::numbers::pi_v<long double>);
  out.root_product_error = static_cast<double>(std::max(std::abs(dlog), std::abs(dphase)));
}

}  // namespace

void SolverConfig::validate() const {
  if (!(root_tol > 0.0) || !(residual_tol > 0.0) || max_iter <= 0 || !(cluster_radius > 0.0) ||
      !(multiplicity_tol > 0.0) || !(lead_tol >= 0.0)) {
    throw DomainError("solver tolerances and iteration cap must be positive");
  }
}

double RootResult::max_residual() const {
  double m = 0.0;
  for (double r : residuals) m = std::max(m, r);
  return m;
}

double relative_residual(std::span<const cplx> coeffs, cplx z) {
  if (coeffs.empty()) return 0.0;
  return static_cast<double>(residual_of(evaluate<long double>(coeffs, lcplx(z))));
}

std::vector<cplx> monic_from_roots(std::span<const cplx> roots) {
  std::vector<cplx> c{cplx{1.0, 0.0}};
  for (const cplx& r : roots) {
    c.insert(c.begin(), cplx{0.0, 0.0});
    for (std::size_t n = 0; n + 1 < c.size(); ++n) c[n] -= r * c[n + 1];
  }
  return c;
}

RootResult solve_polynomial(std::span<const cplx> coeffs, const SolverConfig& cfg) {
  cfg.validate();
  if (coeffs.empty()) throw DomainError("empty polynomial");
  const int full_degree = static_cast<int>(coeffs.size()) - 1;
  if (coeffs[full_degree] == cplx{0.0, 0.0}) throw DomainError("leading coefficient is zero");

  RootResult out;
  int zeros = 0;
  while (zeros < full_degree && coeffs[zeros] == cplx{0.0, 0.0}) ++zeros;
  out.roots.assign(zeros, cplx{0.0, 0.0});
  out.residuals.assign(zeros, 0.0);

  const std::span<const cplx> a = coeffs.subspan(zeros);
  const int d = static_cast<int>(a.size()) - 1;
  if (d == 0) return out;
  if (d == 1) {
    const cplx r = -a[0] / a[1];
    out.roots.push_back(r);
    out.residuals.push_back(relative_residual(a, r));
    symmetric_function_checks(a, out, zeros);
    return out;
  }

  std::vector<cplx> z = initial_guesses(a);
  std::vector<char> done(d, 0);
  const double converged_residual = 4.0 * d * kEps;
  int iter = 0;
  for (; iter < cfg.max_iter; ++iter) {
    int active = 0;
    for (int i = 0; i < d; ++i) {
      if (done[i]) continue;
      const auto e = evaluate<double>(a, z[i]);
      const double res = residual_of(e);
      if (res <= converged_residual) {
        done[i] = 1;
        continue;
      }
      ++active;
      const cplx ratio = e.newton;
      if (!std::isfinite(ratio.real()) || !std::isfinite(ratio.imag())) {
        // Stationary point of p: nudge off it.
        z[i] += std::polar(std::max(std::abs(z[i]), 1.0) * 1e-8, 0.3 + i);
        continue;
      }
      cplx repulsion{0.0, 0.0};
      for (int j = 0; j < d; ++j) {
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      }
      const cplx step = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[i] -= step;
      if (std::abs(step) <= cfg.root_tol * std::abs(z[i]) && res <= cfg.residual_tol) done[i] = 1;
    }
    if (active == 0) break;
  }
  out.iterations = iter;

  // Clusters: connected components of overlapping inclusion discs.
  std::vector<double> log_radius(d);
  for (int i = 0; i < d; ++i) log_radius[i] = log_inclusion_radius(a, z, i);
  DisjointSets sets(d);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const double reach = std::exp(std::min(log_radius[i], 700.0)) +
                           std::exp(std::min(log_radius[j], 700.0));
      if (std::abs(z[i] - z[j]) <= reach) sets.unite(i, j);
    }
  }
  std::vector<std::vector<int>> groups(d);
  for (int i = 0; i < d; ++i) groups[sets.find(i)].push_back(i);

  for (const auto& g : groups) {
    if (g.empty()) continue;
    if (g.size() == 1) {
      z[g[0]] = polish(a, z[g[0]]);
    } else if (certify_cluster(a, z, g, cfg)) {
      ++out.certified_clusters;
    }
  }

  for (int i = 0; i < d; ++i) {
    out.roots.push_back(z[i]);
    out.residuals.push_back(relative_residual(a, z[i]));
  }
  symmetric_function_checks(a, out, zeros);

  if (out.max_residual() > cfg.residual_tol) {
    throw SolverError("root finder did not reach residual " + std::to_string(cfg.residual_tol) +
                          " after " + std::to_string(iter) + " iterations (worst " +
                          std::to_string(out.max_residual()) + ")",
                      std::move(out));
  }
  return out;
}

}  // namespace majorana
