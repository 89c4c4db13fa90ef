// majorana: stars, sweeps and Kerr trajectories of pure states on the Bloch
// sphere. Output is deterministic JSON (default) or CSV.
//
//   majorana stars  --symmetry hw --cutoff 20 --state squeezed --xi 0.9
//   majorana sweep  --param xi --values 0,0.001,0.01,0.9 --cutoff 20
//   majorana evolve --cutoff 50 --state coherent --alpha 2+0i --omega-nl 1 --times 0:3.2:0.1

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "majorana/batch.hpp"
#include "majorana/dynamics.hpp"
#include "majorana/io.hpp"

namespace {

using namespace majorana;

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct Options {
  std::string symmetry = "hw";
  std::optional<int> cutoff;
  std::optional<double> spin;
  std::optional<double> bargmann;
  std::string state;
  std::string alpha;
  std::string xi;
  std::string out = "json";
  std::string output;
  bool timing = false;
  SolverConfig solver;

  // sweep
  std::string param;
  std::string values;

  // evolve
  double omega_nl = 0.0;
  double omega_lin = 0.0;
  std::string times;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--symmetry", o.symmetry, "hw | su2 | su11")
      ->check(CLI::IsMember({"hw", "su2", "su11"}));
  cmd->add_option("--cutoff", o.cutoff, "truncation N_c (hw, su11)");
  cmd->add_option("--spin", o.spin, "spin j (su2), half-integer");
  cmd->add_option("--bargmann", o.bargmann, "Bargmann index k (su11)");
  cmd->add_option("--state", o.state, "coherent | squeezed | cat2 | cat4 | file:PATH");
  cmd->add_option("--alpha", o.alpha, "coherent parameter, RE+IMi");
  cmd->add_option("--xi", o.xi, "squeezing parameter, RE+IMi");
  cmd->add_option("--out", o.out, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--output", o.output, "write to this file instead of stdout");
  cmd->add_flag("--timing", o.timing, "include wall_time (breaks byte-reproducibility)");
  cmd->add_option("--root-tol", o.solver.root_tol, "relative step tolerance");
  cmd->add_option("--residual-tol", o.solver.residual_tol, "relative residual bound per root");
  cmd->add_option("--max-iter", o.solver.max_iter, "Aberth iteration cap");
  cmd->add_option("--cluster-radius", o.solver.cluster_radius, "chordal merge radius");
  cmd->add_option("--multiplicity-tol", o.solver.multiplicity_tol,
                  "relative derivative bound for certified multiple roots");
}

Symmetry make_symmetry(const Options& o) {
  if (o.symmetry == "hw") {
    if (!o.cutoff) throw DomainError("--symmetry hw needs --cutoff");
    return Symmetry::heisenberg_weyl(*o.cutoff);
  }
  if (o.symmetry == "su2") {
    if (!o.spin) throw DomainError("--symmetry su2 needs --spin");
    return Symmetry::su2(*o.spin);
  }
  if (!o.bargmann || !o.cutoff) throw DomainError("--symmetry su11 needs --bargmann and --cutoff");
  return Symmetry::su11(*o.bargmann, *o.cutoff);
}

std::string state_kind(const Options& o) {
  if (!o.state.empty()) return o.state;
  if (!o.xi.empty()) return "squeezed";
  if (!o.alpha.empty()) return "coherent";
  throw DomainError("--state is required (or give --alpha / --xi)");
}

cplx required_complex(const std::string& text, const char* flag, const std::string& kind) {
  if (text.empty()) throw DomainError("--state " + kind + " needs " + flag);
  return io::parse_complex(text);
}

struct Prepared {
  PureState state;
  io::RunSpec spec;
};

Prepared prepare(const Options& o) {
  const Symmetry sym = make_symmetry(o);
  io::RunSpec spec;
  spec.symmetry = o.symmetry;
  if (sym.kind() != SymmetryKind::SU2) spec.cutoff = o.cutoff;
  if (sym.kind() == SymmetryKind::SU2) spec.spin = o.spin;
  if (sym.kind() == SymmetryKind::SU11) spec.bargmann = o.bargmann;
  spec.solver = o.solver;

  const std::string kind = state_kind(o);
  spec.state = kind;
  if (kind.rfind("file:", 0) == 0) {
    spec.state = "file";
    spec.file = kind.substr(5);
    return {from_amplitudes(sym, io::read_amplitude_file(*spec.file)), spec};
  }
  if (kind == "squeezed") {
    const cplx xi = required_complex(o.xi, "--xi", kind);
    spec.xi = xi;
    if (squeezing_outside_unit_disk(sym, xi)) {
      std::cerr << "warning: |xi| >= 1 is only representable because of the cutoff\n";
    }
    return {squeezed_vacuum(sym, xi), spec};
  }
  if (kind == "coherent" || kind == "cat2" || kind == "cat4") {
    const cplx alpha = required_complex(o.alpha, "--alpha", kind);
    spec.alpha = alpha;
    if (kind == "coherent") return {coherent(sym, alpha), spec};
    if (kind == "cat2") return {cat_two(sym, alpha), spec};
    return {cat_four(sym, alpha), spec};
  }
  throw DomainError("unknown --state '" + kind + "'");
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw DomainError("empty entry in list '" + text + "'");
    out.push_back(item);
  }
  if (out.empty()) throw DomainError("empty list");
  return out;
}

double parse_real(const std::string& text) {
  const cplx c = io::parse_complex(text);
  if (c.imag() != 0.0) throw DomainError("expected a real number, got '" + text + "'");
  return c.real();
}

std::vector<double> parse_times(const std::string& text) {
  if (text.empty()) throw DomainError("--times is required");
  if (text.find(':') == std::string::npos) {
    std::vector<double> out;
    for (const auto& item : split_list(text)) out.push_back(parse_real(item));
    return out;
  }
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 3) throw DomainError("--times range must be start:stop:step");
  const double start = parse_real(parts[0]);
  const double stop = parse_real(parts[1]);
  const double step = parse_real(parts[2]);
  if (!(step > 0.0) || stop < start) throw DomainError("--times range needs step > 0 and stop >= start");
  std::vector<double> out;
  for (long i = 0;; ++i) {
    const double t = start + static_cast<double>(i) * step;
    if (t > stop + 1e-9 * step) break;
    out.push_back(t);
  }
  return out;
}

void emit(const Options& o, const std::vector<io::RunRecord>& records, bool as_array) {
  std::string text;
  if (o.out == "csv") {
    text = io::to_csv(records);
  } else {
    text = as_array ? io::to_json(records) : io::to_json(records.front()) + "\n";
  }
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw DomainError("cannot write '" + o.output + "'");
  f << text;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void run_stars(const Options& o) {
  const auto start = std::chrono::steady_clock::now();
  Prepared p = prepare(o);
  io::RunRecord rec{p.spec, stars(p.state, o.solver), std::nullopt, std::nullopt, std::nullopt};
  if (o.timing) rec.wall_time = seconds_since(start);
  emit(o, {rec}, false);
}

void run_sweep(const Options& o) {
  const auto start = std::chrono::steady_clock::now();
  if (o.param != "xi" && o.param != "cutoff") throw DomainError("--param must be xi or cutoff");
  std::vector<std::string> values = split_list(o.values);
  std::vector<PureState> states;
  std::vector<io::RunSpec> specs;
  for (const auto& v : values) {
    Options one = o;
    if (o.param == "xi") {
      one.xi = v;
      if (one.state.empty()) one.state = "squeezed";
    } else {
      if (o.symmetry == "su2") throw DomainError("--param cutoff does not apply to su2");
      one.cutoff = static_cast<int>(parse_real(v));
      if (static_cast<double>(*one.cutoff) != parse_real(v)) {
        throw DomainError("cutoff values must be integers");
      }
    }
    Prepared p = prepare(one);
    states.push_back(std::move(p.state));
    specs.push_back(std::move(p.spec));
  }
  std::vector<StarSet> sets;
  try {
    sets = stars_batch(states, o.solver);
  } catch (const BatchError& e) {
    throw SolverError("at " + o.param + " = " + values[e.index()] + ": " + e.what(), e.best());
  }
  std::vector<io::RunRecord> records;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    records.push_back({specs[i], std::move(sets[i]), std::nullopt,
                       std::make_pair(o.param, values[i]), std::nullopt});
  }
  if (o.timing) {
    const double wall = seconds_since(start);
    for (auto& r : records) r.wall_time = wall;
  }
  emit(o, records, true);
}

void run_evolve(const Options& o) {
  const auto start = std::chrono::steady_clock::now();
  Prepared p = prepare(o);
  EvolutionSpec spec{o.omega_nl, o.omega_lin, parse_times(o.times)};
  p.spec.omega_nl = o.omega_nl;
  p.spec.omega_lin = o.omega_lin;
  const auto traj = trajectory(p.state, spec, o.solver);
  std::vector<io::RunRecord> records;
  for (const auto& point : traj) {
    records.push_back({p.spec, point.stars, point.t, std::nullopt, std::nullopt});
  }
  if (o.timing) {
    const double wall = seconds_since(start);
    for (auto& r : records) r.wall_time = wall;
  }
  emit(o, records, true);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Majorana stars of pure states under HW, SU(2) and SU(1,1) symmetry"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(io::kVersion));

  Options o;
  auto* stars_cmd = app.add_subcommand("stars", "compute the star set of one state");
  add_common(stars_cmd, o);

  auto* sweep_cmd = app.add_subcommand("sweep", "star sets over a list of xi or cutoff values");
  add_common(sweep_cmd, o);
  sweep_cmd->add_option("--param", o.param, "xi | cutoff")->required();
  sweep_cmd->add_option("--values", o.values, "comma-separated values")->required();

  auto* evolve_cmd = app.add_subcommand("evolve", "star trajectory under H = omega N + Omega N^2");
  add_common(evolve_cmd, o);
  evolve_cmd->add_option("--omega-nl", o.omega_nl, "nonlinear strength Omega")->required();
  evolve_cmd->add_option("--omega-lin", o.omega_lin, "linear splitting omega");
  evolve_cmd->add_option("--times", o.times, "start:stop:step or comma list")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (stars_cmd->parsed()) run_stars(o);
    if (sweep_cmd->parsed()) run_sweep(o);
    if (evolve_cmd->parsed()) run_evolve(o);
  } catch (const SolverError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    const RootResult& best = e.best();
    std::cerr << "best iterate (" << best.roots.size() << " roots, " << best.iterations
              << " iterations):\n";
    for (std::size_t i = 0; i < best.roots.size(); ++i) {
      std::cerr << "  z = " << io::format_double(best.roots[i].real()) << " "
                << io::format_double(best.roots[i].imag()) << "i  residual "
                << io::format_double(best.residuals[i]) << "\n";
    }
    return kExitNumerical;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
