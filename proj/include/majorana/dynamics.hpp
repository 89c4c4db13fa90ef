#pragma once

#include <vector>

#include "majorana/starsolver.hpp"
#include "majorana/states.hpp"

namespace majorana {

/// H = omega N + Omega N^2, diagonal in the number basis.
struct EvolutionSpec {
  double omega_nl = 1.0;   // Omega > 0
  double omega_lin = 0.0;  // omega >= 0; zero is the interaction picture
  std::vector<double> times;

  /// Throws DomainError unless Omega > 0, omega >= 0 and times strictly increase.
  void validate() const;
};

/// C_n(t) = C_n(0) exp(-i (Omega n^2 + omega n) t), evaluated directly from
/// t = 0 with the phase reduced modulo 2 pi, then re-phased so the first
/// nonzero amplitude is real positive.
PureState kerr_evolve(const PureState& state, const EvolutionSpec& spec, double t);

struct TrajectoryPoint {
  double t = 0.0;
  StarSet stars;
};

/// stars(kerr_evolve(state, t)) for every t in spec.times. Time points are
/// solved in parallel and assembled in input order. Solver failures are
/// rethrown as SolverError naming the offending t.
std::vector<TrajectoryPoint> trajectory(const PureState& state, const EvolutionSpec& spec,
                                        const SolverConfig& cfg = {});

/// 0, pi/(4 Omega), pi/(2 Omega), pi/Omega, 2 pi/Omega.
std::vector<double> special_times(double omega_nl);

}  // namespace majorana
