#pragma once

#include <complex>
#include <span>
#include <vector>

#include "majorana/algebra.hpp"

namespace majorana {

using cplx = std::complex<double>;

/// Normalized pure state over the number basis |0>, ..., |dimension-1> of a
/// symmetry. For SU(2), index n labels |j, -j + n>.
///
/// Amplitudes are always normalized and carry a fixed global phase: the first
/// nonzero amplitude is real and positive.
class PureState {
 public:
  /// Normalizes `amplitudes`; throws DomainError on length mismatch, a zero
  /// vector, or non-finite entries.
  PureState(Symmetry sym, std::vector<cplx> amplitudes);

  const Symmetry& symmetry() const { return sym_; }
  std::span<const cplx> amplitudes() const { return amplitudes_; }
  int size() const { return static_cast<int>(amplitudes_.size()); }
  const cplx& operator[](int n) const { return amplitudes_[n]; }

 private:
  Symmetry sym_;
  std::vector<cplx> amplitudes_;
};

/// Normalized copy of user-supplied amplitudes.
PureState from_amplitudes(const Symmetry& sym, std::vector<cplx> raw);

/// State with C_n ~ g_F(n) x_n / sqrt(n!) for a symmetry-independent sequence
/// x_n. With x_n = alpha^n this is the coherent state; with
/// x_n = alpha^n e^{-i Omega n^2 t} it is the Kerr-evolved coherent state.
/// Feeding the same x to SU(2){j} and HW{N_c = 2j} gives identical stars.
PureState from_reduced_amplitudes(const Symmetry& sym, std::span<const cplx> reduced);

/// Coherent state |alpha> (eta for SU(2), beta for SU(1,1)), truncated at the
/// top index and renormalized. SU(1,1) requires |alpha| < 1.
PureState coherent(const Symmetry& sym, cplx alpha);

/// Squeezed vacuum. Only even amplitudes are populated; odd ones are exactly
/// zero. HW requires |xi| < 1. SU(1,1) accepts |xi| >= 1 because truncation
/// keeps the vector finite; see `squeezing_outside_unit_disk`.
PureState squeezed_vacuum(const Symmetry& sym, cplx xi);

/// True when an SU(1,1) squeezing parameter is only representable because of
/// the cutoff (|xi| >= 1).
bool squeezing_outside_unit_disk(const Symmetry& sym, cplx xi);

/// (e^{-i pi/4} |alpha> + e^{i pi/4} |-alpha>) / sqrt(2), renormalized after
/// truncation.
PureState cat_two(const Symmetry& sym, cplx alpha);

/// (e^{-i pi/4} |alpha> + |i alpha> - e^{-i pi/4} |-alpha> + |-i alpha>) / 2,
/// renormalized after truncation.
PureState cat_four(const Symmetry& sym, cplx alpha);

/// Vacuum |0>.
PureState vacuum(const Symmetry& sym);

/// |<a|b>|, both states on the same symmetry.
double overlap_magnitude(const PureState& a, const PureState& b);

}  // namespace majorana
