#include "majorana/states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace majorana {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Amplitude held as log|c| and unit phase so that alpha^n / sqrt(n!) style
// products never overflow before the global rescale.
struct LogAmplitude {
  double log_magnitude = kNegInf;
  cplx phase{1.0, 0.0};
};

PureState assemble(const Symmetry& sym, const std::vector<LogAmplitude>& terms) {
  double top = kNegInf;
  for (const auto& t : terms) top = std::max(top, t.log_magnitude);
  if (top == kNegInf) throw DomainError("state has no nonzero amplitude");
  std::vector<cplx> amps(terms.size(), cplx{0.0, 0.0});
  for (std::size_t n = 0; n < terms.size(); ++n) {
    if (terms[n].log_magnitude == kNegInf) continue;
    amps[n] = std::exp(terms[n].log_magnitude - top) * terms[n].phase;
  }
  return PureState(sym, std::move(amps));
}

cplx unit_power(double angle, int n) { return std::polar(1.0, angle * n); }

// log(|alpha|^n), with 0^0 = 1.
double log_power(double magnitude, int n) {
  if (n == 0) return 0.0;
  if (magnitude == 0.0) return kNegInf;
  return n * std::log(magnitude);
}

void require_su11_disk(const Symmetry& sym, cplx alpha) {
  if (sym.kind() == SymmetryKind::SU11 && !(std::abs(alpha) < 1.0)) {
    throw DomainError("coherent parameter outside unit disk");
  }
}

std::vector<LogAmplitude> coherent_terms(const Symmetry& sym, cplx alpha) {
  require_su11_disk(sym, alpha);
  const double mag = std::abs(alpha);
  const double arg = std::arg(alpha);
  std::vector<LogAmplitude> terms(sym.dimension());
  for (int n = 0; n < sym.dimension(); ++n) {
    terms[n].log_magnitude = ladder_prefactor(sym, n).log_magnitude + log_power(mag, n) -
                             0.5 * log_factorial(n);
    terms[n].phase = unit_power(arg, n);
  }
  return terms;
}

}  // namespace

PureState::PureState(Symmetry sym, std::vector<cplx> amplitudes)
    : sym_(sym), amplitudes_(std::move(amplitudes)) {
  if (static_cast<int>(amplitudes_.size()) != sym_.dimension()) {
    throw DomainError("amplitude count " + std::to_string(amplitudes_.size()) +
                      " does not match dimension " + std::to_string(sym_.dimension()));
  }
  double scale = 0.0;
  for (const auto& c : amplitudes_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw DomainError("non-finite amplitude");
    }
    scale = std::max(scale, std::abs(c));
  }
  if (scale == 0.0) throw DomainError("zero state vector");

  const auto first = std::find_if(amplitudes_.begin(), amplitudes_.end(),
                                  [](const cplx& c) { return c != cplx{0.0, 0.0}; });
  const cplx unphase = std::conj(*first) / std::abs(*first);

  double norm2 = 0.0;
  for (auto& c : amplitudes_) {
    c /= scale;
    norm2 += std::norm(c);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& c : amplitudes_) {
    if (c == cplx{0.0, 0.0}) continue;
    c *= unphase * inv;
  }
  *first = cplx{std::abs(*first), 0.0};
}

PureState from_amplitudes(const Symmetry& sym, std::vector<cplx> raw) {
  return PureState(sym, std::move(raw));
}

PureState from_reduced_amplitudes(const Symmetry& sym, std::span<const cplx> reduced) {
  if (static_cast<int>(reduced.size()) != sym.dimension()) {
    throw DomainError("reduced amplitude count does not match dimension");
  }
  std::vector<LogAmplitude> terms(reduced.size());
  for (int n = 0; n < sym.dimension(); ++n) {
    const double mag = std::abs(reduced[n]);
    if (mag == 0.0) continue;
    terms[n].log_magnitude =
        ladder_prefactor(sym, n).log_magnitude + std::log(mag) - 0.5 * log_factorial(n);
    terms[n].phase = reduced[n] / mag;
  }
  return assemble(sym, terms);
}

PureState coherent(const Symmetry& sym, cplx alpha) {
  return assemble(sym, coherent_terms(sym, alpha));
}

PureState vacuum(const Symmetry& sym) {
  std::vector<cplx> amps(sym.dimension(), cplx{0.0, 0.0});
  amps[0] = 1.0;
  return PureState(sym, std::move(amps));
}

bool squeezing_outside_unit_disk(const Symmetry& sym, cplx xi) {
  return sym.kind() == SymmetryKind::SU11 && !(std::abs(xi) < 1.0);
}

PureState squeezed_vacuum(const Symmetry& sym, cplx xi) {
  if (sym.kind() == SymmetryKind::HeisenbergWeyl && !(std::abs(xi) < 1.0)) {
    throw DomainError("HW squeezing parameter must satisfy |xi| < 1");
  }
  if (xi == cplx{0.0, 0.0}) return vacuum(sym);

  const double log_xi = std::log(std::abs(xi));
  const double arg = std::arg(xi);
  const int top = sym.top_index();
  std::vector<LogAmplitude> terms(sym.dimension());
  for (int n = 0; 2 * n <= top; ++n) {
    double log_mag = 0.0;
    switch (sym.kind()) {
      case SymmetryKind::HeisenbergWeyl:
        // xi^n sqrt((2n)!) / (2^n n!)
        log_mag = n * (log_xi - std::numbers::ln2) + 0.5 * log_factorial(2 * n) -
                  log_factorial(n);
        break;
      case SymmetryKind::SU2: {
        // (xi/4j)^n sqrt((2n)! (2j)!) / (n! sqrt((2j-2n)!))
        const double four_j = 2.0 * top;
        log_mag = n * (log_xi - std::log(four_j)) +
                  0.5 * (log_factorial(2 * n) + log_factorial(top)) - log_factorial(n) -
                  0.5 * log_factorial(top - 2 * n);
        break;
      }
      case SymmetryKind::SU11: {
        // (xi/2)^n sqrt((2n)! Gamma(2k+2n)) / (n! sqrt(Gamma(2k)))
        const double two_k = 2.0 * sym.bargmann();
        log_mag = n * (log_xi - std::numbers::ln2) +
                  0.5 * (log_factorial(2 * n) + log_gamma(two_k + 2 * n)) - log_factorial(n) -
                  0.5 * log_gamma(two_k);
        break;
      }
    }
    terms[2 * n].log_magnitude = log_mag;
    terms[2 * n].phase = unit_power(arg, n);
  }
  return assemble(sym, terms);
}

PureState cat_two(const Symmetry& sym, cplx alpha) {
  // |alpha> and |-alpha> share magnitudes; the n-th amplitude of the sum is
  // that magnitude times e^{i n arg(alpha)} (e^{-i pi/4} + e^{i pi/4} (-1)^n).
  auto terms = coherent_terms(sym, alpha);
  const cplx even{std::numbers::sqrt2, 0.0};  // e^{-i pi/4} + e^{i pi/4}
  const cplx odd{0.0, -std::numbers::sqrt2};  // e^{-i pi/4} - e^{i pi/4}
  for (int n = 0; n < sym.dimension(); ++n) terms[n].phase *= (n % 2 == 0) ? even : odd;
  return assemble(sym, terms);
}

PureState cat_four(const Symmetry& sym, cplx alpha) {
  // Collecting e^{-i pi/4}(1 - (-1)^n) + i^n + (-i)^n by n mod 4 gives
  // 2, 2 e^{-i pi/4}, -2, 2 e^{-i pi/4}; the common factor 2 drops out.
  auto terms = coherent_terms(sym, alpha);
  const cplx rot = std::polar(1.0, -std::numbers::pi / 4.0);
  for (int n = 0; n < sym.dimension(); ++n) {
    switch (n % 4) {
      case 0: break;
      case 2: terms[n].phase = -terms[n].phase; break;
      default: terms[n].phase *= rot; break;
    }
  }
  return assemble(sym, terms);
}

double overlap_magnitude(const PureState& a, const PureState& b) {
  if (!(a.symmetry() == b.symmetry())) throw DomainError("overlap across symmetries");
  cplx acc{0.0, 0.0};
  for (int n = 0; n < a.size(); ++n) acc += std::conj(a[n]) * b[n];
  return std::abs(acc);
}

}  // namespace majorana
