#pragma once

#include <complex>
#include <span>
#include <vector>

#include "majorana/roots.hpp"
#include "majorana/states.hpp"

namespace majorana {

/// Coefficients a_n (of z^n) of a state's star equation, scaled so that
/// max |a_n| = 1. Leading coefficients that vanish lower the effective degree;
/// each missing degree is a root at infinity.
struct StarPolynomial {
  std::vector<cplx> coeffs;
  int nominal_degree = 0;
  int effective_degree = 0;
  int infinite_root_count = 0;

  /// coeffs[0 .. effective_degree]
  std::span<const cplx> effective() const {
    return std::span<const cplx>(coeffs).first(effective_degree + 1);
  }
};

/// One point on the Bloch sphere, z = tan(theta/2) e^{i phi}.
struct Star {
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;    // [0, 2 pi); 0 at the poles
  int multiplicity = 1;
  cplx z{0.0, 0.0};
};

/// Finite stars sorted by (theta, phi), plus the count of stars sitting at
/// the south pole (roots at infinity).
struct StarSet {
  std::vector<Star> stars;
  int south_pole_count = 0;
  int nominal_degree = 0;
  double residual_max = 0.0;

  /// Sum of multiplicities of the finite stars.
  int finite_count() const;
  /// Every star with multiplicity expanded, south-pole stars (theta = pi)
  /// appended last.
  std::vector<Star> expanded() const;
};

/// a_n = w_n C_n for the state's symmetry, computed in the log domain.
StarPolynomial build_star_polynomial(const PureState& state, const SolverConfig& cfg = {});

/// Majorana's original spin polynomial
///   sum_k (-1)^k C_{j-k} / sqrt((2j-k)! k!) z^{2j-k},
/// indexed so that amplitude n (state |j, -j+n>) multiplies z^n. Its roots
/// coincide with the SU(2) star polynomial's. Throws DomainError for non-SU(2)
/// states.
StarPolynomial classic_majorana_polynomial(const PureState& state, const SolverConfig& cfg = {});

/// Finite roots of the polynomial's effective part.
RootResult find_roots(const StarPolynomial& poly, const SolverConfig& cfg = {});

/// Stereographic map to the sphere with clustering on the chordal metric.
StarSet roots_to_bloch(std::span<const cplx> roots, int infinite_root_count,
                       const SolverConfig& cfg = {});

/// build_star_polynomial -> find_roots -> roots_to_bloch.
StarSet stars(const PureState& state, const SolverConfig& cfg = {});

/// (theta, phi) of a finite z, with phi = 0 at z = 0.
Star star_from_root(cplx z);

/// Chordal distance between the sphere points of z and w:
/// 2 |z - w| / sqrt((1 + |z|^2)(1 + |w|^2)). Handles large |z| without overflow.
double chordal_distance(cplx z, cplx w);

/// Chordal distance between two sphere points given in (theta, phi).
double chordal_distance(const Star& a, const Star& b);

}  // namespace majorana
