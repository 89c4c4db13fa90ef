#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace majorana {

/// Raised when a parameter lies outside the domain of an operation
/// (invalid symmetry labels, index out of range, unnormalizable states).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class SymmetryKind { HeisenbergWeyl, SU2, SU11 };

/// Symmetry class of a state together with the labels that fix the size of
/// its number basis.
///
/// - Heisenberg-Weyl: single boson mode truncated at `cutoff` quanta.
/// - SU(2): spin j, stored as the integer 2j so half-integers are exact.
/// - SU(1,1): Bargmann index k > 0, truncated at `cutoff`.
///
/// Instances are only created through the validating factories below.
class Symmetry {
 public:
  static Symmetry heisenberg_weyl(int cutoff);
  static Symmetry su2(double j);
  static Symmetry su2_twice(int two_j);
  static Symmetry su11(double bargmann, int cutoff);

  SymmetryKind kind() const { return kind_; }

  /// Number of basis amplitudes, i.e. highest number index + 1.
  int dimension() const { return top_ + 1; }
  /// Degree of the star polynomial before any leading coefficient vanishes.
  int nominal_degree() const { return top_; }

  /// N_c for HW and SU(1,1); 2j for SU(2).
  int top_index() const { return top_; }
  int two_j() const;
  double spin() const { return two_j() / 2.0; }
  double bargmann() const;

  /// Short lowercase tag used on the command line: "hw", "su2", "su11".
  std::string tag() const;

  bool operator==(const Symmetry&) const = default;

 private:
  Symmetry(SymmetryKind kind, int top, double bargmann)
      : kind_(kind), top_(top), bargmann_(bargmann) {}

  SymmetryKind kind_;
  int top_;
  double bargmann_;
};

inline int dimension(const Symmetry& sym) { return sym.dimension(); }

/// Real weight held as natural-log magnitude plus sign. All star-equation
/// weights are real, so a sign is enough to carry the phase.
struct LogWeight {
  double log_magnitude = 0.0;
  int sign = 1;

  double value() const;
};

/// log Gamma(x) for x > 0.
double log_gamma(double x);
/// log n!
double log_factorial(int n);

/// Weight w_n multiplying amplitude C_n in the star equation, chosen so that
/// every coherent state of `sym` maps to a single fully degenerate star.
///
///   SU(2):   (-1)^n sqrt(binom(2j, n))
///   HW:      (-1)^n N_c! / ((N_c - n)! sqrt(n!))
///   SU(1,1): (-1)^n N_c! / (N_c - n)! * sqrt(Gamma(2k) / (n! Gamma(2k + n)))
///
/// Throws DomainError when n is outside [0, dimension - 1].
LogWeight star_weight(const Symmetry& sym, int n);

/// Prefactor g_F(n) of the coherent-state expansion
/// C_n ~ g_F(n) alpha^n / sqrt(n!):
///   HW: 1,  SU(2): sqrt((2j)! / (2j - n)!),  SU(1,1): sqrt(Gamma(2k + n) / Gamma(2k)).
LogWeight ladder_prefactor(const Symmetry& sym, int n);

/// All weights w_0 .. w_{dimension-1}.
std::vector<LogWeight> star_weights(const Symmetry& sym);

}  // namespace majorana
