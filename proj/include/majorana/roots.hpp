#pragma once

#include <complex>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace majorana {

using cplx = std::complex<double>;

/// Tolerances for the polynomial root finder and star clustering.
struct SolverConfig {
  /// Relative step size below which an Aberth iterate counts as converged.
  double root_tol = 1e-12;
  /// Upper bound on |p(z)| / sum_n |a_n| |z|^n accepted for a returned root.
  double residual_tol = 1e-8;
  int max_iter = 500;
  /// Chordal distance under which two stars are merged into one.
  double cluster_radius = 1e-6;
  /// Relative size of p, p', ..., p^(k-1) at a cluster centroid below which
  /// the cluster is certified as one k-fold root.
  double multiplicity_tol = 1e-10;
  /// |a_n| at or below this (after scaling max|a_n| to 1) counts as zero when
  /// detecting the effective degree.
  double lead_tol = std::numeric_limits<double>::min();

  /// Throws DomainError if any field is non-positive.
  void validate() const;
};

struct RootResult {
  /// Finite roots; a certified k-fold root appears k times with equal value.
  std::vector<cplx> roots;
  /// Relative residual of each root.
  std::vector<double> residuals;
  int iterations = 0;
  /// Number of clusters replaced by a single certified multiple root.
  int certified_clusters = 0;
  /// |sum z + a_{d-1}/a_d| relative to sum |z|.
  double root_sum_error = 0.0;
  /// Discrepancy of prod z against (-1)^d a_0/a_d, in log-modulus and phase.
  double root_product_error = 0.0;

  double max_residual() const;
};

/// Thrown when the iteration budget runs out with roots that still violate
/// the residual bound. Carries the best iterate for diagnostics.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, RootResult best)
      : std::runtime_error(what), best_(std::move(best)) {}
  const RootResult& best() const { return best_; }

 private:
  RootResult best_;
};

/// All roots of sum_n coeffs[n] z^n. The top coefficient must be nonzero.
/// Exact zero low-order coefficients yield exact zero roots.
RootResult solve_polynomial(std::span<const cplx> coeffs, const SolverConfig& cfg);

/// |p(z)| / sum_n |a_n| |z|^n, evaluated without overflow for any finite z.
double relative_residual(std::span<const cplx> coeffs, cplx z);

/// Coefficients (ascending powers) of the monic polynomial prod (z - r_i).
std::vector<cplx> monic_from_roots(std::span<const cplx> roots);

}  // namespace majorana
