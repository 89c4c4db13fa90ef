#pragma once

#include <complex>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "majorana/starsolver.hpp"

namespace majorana::io {

inline constexpr std::string_view kVersion = "0.1.0";

/// Parses "RE+IMi", "RE-IMi", "RE" or "IMi" (decimal, no spaces).
/// Throws DomainError on anything else.
cplx parse_complex(std::string_view text);

/// Fixed 17-significant-digit rendering used by every output format.
std::string format_double(double x);

/// Reads a JSON array of [re, im] pairs; index in the array is n.
std::vector<cplx> read_amplitude_file(const std::filesystem::path& path);

/// Echo of everything that determined a run.
struct RunSpec {
  std::string symmetry;
  std::optional<int> cutoff;
  std::optional<double> spin;
  std::optional<double> bargmann;
  std::string state;
  std::optional<std::string> file;
  std::optional<cplx> alpha;
  std::optional<cplx> xi;
  std::optional<double> omega_nl;
  std::optional<double> omega_lin;
  SolverConfig solver;
};

struct RunRecord {
  RunSpec spec;
  StarSet stars;
  std::optional<double> t;
  /// Sweep parameter name and the value string exactly as given.
  std::optional<std::pair<std::string, std::string>> sweep;
  /// Seconds; only serialized when set, so default output stays reproducible.
  std::optional<double> wall_time;
};

/// One record as a JSON object:
/// {spec, [t], stars: [{theta, phi, multiplicity}], south_pole_count, residual_max, version}.
std::string to_json(const RunRecord& record, int indent = 0);

/// Several records as a JSON array.
std::string to_json(const std::vector<RunRecord>& records);

/// CSV rows for the records. Columns:
///   [param,value,] or [t,] then star_index,theta,phi,multiplicity,residual_max.
/// South-pole stars form one row with theta = pi, phi = 0.
std::string to_csv(const std::vector<RunRecord>& records);

}  // namespace majorana::io
