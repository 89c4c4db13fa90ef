#include "majorana/algebra.hpp"

#include <cmath>
#include <string>

namespace majorana {

namespace {

void check_index(const Symmetry& sym, int n) {
  if (n < 0 || n >= sym.dimension()) {
    throw DomainError("basis index " + std::to_string(n) + " outside [0, " +
                      std::to_string(sym.dimension() - 1) + "]");
  }
}

int alternating_sign(int n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace

Symmetry Symmetry::heisenberg_weyl(int cutoff) {
  if (cutoff < 1) throw DomainError("HW cutoff must be >= 1");
  return Symmetry(SymmetryKind::HeisenbergWeyl, cutoff, 0.0);
}

Symmetry Symmetry::su2(double j) {
  const double twice = 2.0 * j;
  const double rounded = std::round(twice);
  if (!(j > 0.0) || std::abs(twice - rounded) > 1e-9) {
    throw DomainError("SU(2) spin must be a positive half-integer");
  }
  return su2_twice(static_cast<int>(rounded));
}

Symmetry Symmetry::su2_twice(int two_j) {
  if (two_j < 1) throw DomainError("SU(2) spin must be a positive half-integer");
  return Symmetry(SymmetryKind::SU2, two_j, 0.0);
}

Symmetry Symmetry::su11(double bargmann, int cutoff) {
  if (!(bargmann > 0.0) || !std::isfinite(bargmann)) {
    throw DomainError("SU(1,1) Bargmann index must be > 0");
  }
  if (cutoff < 1) throw DomainError("SU(1,1) cutoff must be >= 1");
  return Symmetry(SymmetryKind::SU11, cutoff, bargmann);
}

int Symmetry::two_j() const {
  if (kind_ != SymmetryKind::SU2) throw DomainError("two_j() requires SU(2)");
  return top_;
}

double Symmetry::bargmann() const {
  if (kind_ != SymmetryKind::SU11) throw DomainError("bargmann() requires SU(1,1)");
  return bargmann_;
}

std::string Symmetry::tag() const {
  switch (kind_) {
    case SymmetryKind::HeisenbergWeyl: return "hw";
    case SymmetryKind::SU2: return "su2";
    case SymmetryKind::SU11: return "su11";
  }
  return "";
}

double LogWeight::value() const { return sign * std::exp(log_magnitude); }

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma requires a positive argument");
  return std::lgamma(x);
}

double log_factorial(int n) {
  if (n < 0) throw DomainError("log_factorial of a negative integer");
  // lgamma(1) and lgamma(2) are exact zeros in glibc, but keep the small
  // cases exact regardless of the libm in use.
  if (n < 2) return 0.0;
  return std::lgamma(static_cast<double>(n) + 1.0);
}

LogWeight star_weight(const Symmetry& sym, int n) {
  check_index(sym, n);
  const int top = sym.top_index();
  double log_mag = 0.0;
  switch (sym.kind()) {
    case SymmetryKind::SU2:
      log_mag = 0.5 * (log_factorial(top) - log_factorial(n) - log_factorial(top - n));
      break;
    case SymmetryKind::HeisenbergWeyl:
      log_mag = log_factorial(top) - log_factorial(top - n) - 0.5 * log_factorial(n);
      break;
    case SymmetryKind::SU11: {
      const double two_k = 2.0 * sym.bargmann();
      log_mag = log_factorial(top) - log_factorial(top - n) +
                0.5 * (log_gamma(two_k) - log_factorial(n) - log_gamma(two_k + n));
      break;
    }
  }
  return {log_mag, alternating_sign(n)};
}

LogWeight ladder_prefactor(const Symmetry& sym, int n) {
  check_index(sym, n);
  switch (sym.kind()) {
    case SymmetryKind::HeisenbergWeyl:
      return {0.0, 1};
    case SymmetryKind::SU2: {
      const int top = sym.top_index();
      return {0.5 * (log_factorial(top) - log_factorial(top - n)), 1};
    }
    case SymmetryKind::SU11: {
      const double two_k = 2.0 * sym.bargmann();
      return {0.5 * (log_gamma(two_k + n) - log_gamma(two_k)), 1};
    }
  }
  return {};
}

std::vector<LogWeight> star_weights(const Symmetry& sym) {
  std::vector<LogWeight> out;
  out.reserve(sym.dimension());
  for (int n = 0; n < sym.dimension(); ++n) out.push_back(star_weight(sym, n));
  return out;
}

}  // namespace majorana
