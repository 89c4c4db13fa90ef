#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "majorana/algebra.hpp"
#include "majorana/roots.hpp"

namespace majorana::analytic {

/// Single fully degenerate root of a coherent state. `z` is empty for the
/// vacuum (alpha = 0), whose stars all sit at infinity.
struct CoherentRoot {
  std::optional<cplx> z;
  int multiplicity = 0;
};

CoherentRoot coherent_root(const Symmetry& sym, cplx alpha);

/// Closed-form star of the two-component cat state at t = pi / (2 Omega).
struct CatStarPrediction {
  int n = 0;
  cplx z{0.0, 0.0};
  double theta = 0.0;
  double phi = 0.0;
};

/// z_n = (i / alpha) tan((4n + 1) pi / (4 N_c)), n = 0 .. N_c - 1, with the
/// spherical coordinates from the closed-form branch rule:
///   theta_n = 2 atan(|tan((4n+1) pi / (4 N_c))| / |alpha|),
///   phi_n = pi/2 - arg(alpha)  for n <= floor((N_c - 1)/2), else 3 pi/2 - arg(alpha).
std::vector<CatStarPrediction> cat_two_roots(cplx alpha, int cutoff);

/// Star polynomial (ascending powers of z) of sum_j c_j |beta_j> in HW with
/// cutoff N_c, expanded directly as sum_j c_j (1 - beta_j z)^{N_c} with the
/// binomial theorem. Independent of the weight tables and of the state
/// constructors.
std::vector<cplx> superposition_polynomial(std::span<const cplx> weights,
                                           std::span<const cplx> betas, int cutoff);

/// sum_n (-1)^n zt^n / ((N_c - 2n)! n!), n = 0 .. floor(N_c/2), scaled so the
/// largest magnitude is 1. Signs strictly alternate.
std::vector<double> reduced_equation(int cutoff);

struct SmsvRoots {
  /// Real parts of the floor(N_c/2) reduced roots, ascending.
  std::vector<double> reduced;
  /// Largest |Im| among the reduced roots before they were made real.
  double max_reduced_imag = 0.0;
  /// Two star roots +- i sqrt(2 zt / xi) per reduced root.
  std::vector<cplx> stars;
  /// 1 for odd N_c, else 0; N_c when degenerate.
  int infinite_root_count = 0;
  /// xi == 0: every star sits at the south pole and no reduced equation exists.
  bool degenerate = false;
};

/// Squeezed-vacuum stars through the half-degree reduced equation
/// zt = -z^2 xi / 2, solved by the generic root finder in zt.
SmsvRoots smsv_reduced_roots(cplx xi, int cutoff, const SolverConfig& cfg = {});

/// Scale s with zt = s z^2 mapping each symmetry's squeezed-vacuum star
/// equation onto the common reduced equation:
///   HW: -xi/2,  SU(2): -xi/(4j),  SU(1,1): -xi/2.
cplx squeezed_equivalence_map(const Symmetry& sym, cplx xi);

}  // namespace majorana::analytic
