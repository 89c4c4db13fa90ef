#include "majorana/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "majorana/batch.hpp"

namespace majorana {

void EvolutionSpec::validate() const {
  if (!(omega_nl > 0.0) || !std::isfinite(omega_nl)) {
    throw DomainError("nonlinear strength Omega must be > 0");
  }
  if (!(omega_lin >= 0.0) || !std::isfinite(omega_lin)) {
    throw DomainError("linear splitting omega must be >= 0");
  }
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!std::isfinite(times[i])) throw DomainError("non-finite time point");
    if (i > 0 && !(times[i] > times[i - 1])) throw DomainError("times must be strictly increasing");
  }
}

PureState kerr_evolve(const PureState& state, const EvolutionSpec& spec, double t) {
  if (!std::isfinite(t)) throw DomainError("non-finite time point");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  // e^{-i n^2 x} and e^{-i n y} are 2 pi periodic in x and y for integer n,
  // so reduce the angles before multiplying by n.
  const double nl = std::fmod(spec.omega_nl * t, two_pi);
  const double lin = std::fmod(spec.omega_lin * t, two_pi);
  std::vector<cplx> amps(state.amplitudes().begin(), state.amplitudes().end());
  for (int n = 0; n < state.size(); ++n) {
    if (amps[n] == cplx{0.0, 0.0}) continue;
    const double nn = static_cast<double>(n) * n;
    const double angle = std::fmod(nn * nl, two_pi) + std::fmod(n * lin, two_pi);
    amps[n] *= std::polar(1.0, -angle);
  }
  return PureState(state.symmetry(), std::move(amps));
}

std::vector<TrajectoryPoint> trajectory(const PureState& state, const EvolutionSpec& spec,
                                        const SolverConfig& cfg) {
  spec.validate();
  std::vector<PureState> evolved;
  evolved.reserve(spec.times.size());
  for (double t : spec.times) evolved.push_back(kerr_evolve(state, spec, t));

  std::vector<StarSet> sets;
  try {
    sets = stars_batch(evolved, cfg);
  } catch (const BatchError& e) {
    throw SolverError("at t = " + std::to_string(spec.times[e.index()]) + ": " + e.what(), e.best());
  }

  std::vector<TrajectoryPoint> out;
  out.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) out.push_back({spec.times[i], std::move(sets[i])});
  return out;
}

std::vector<double> special_times(double omega_nl) {
  if (!(omega_nl > 0.0)) throw DomainError("nonlinear strength Omega must be > 0");
  const double pi = std::numbers::pi;
  return {0.0, pi / (4.0 * omega_nl), pi / (2.0 * omega_nl), pi / omega_nl, 2.0 * pi / omega_nl};
}

}  // namespace majorana
