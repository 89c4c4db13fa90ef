#include "majorana/io.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>

#include "json.hpp"

namespace majorana::io {

namespace {

double parse_real(std::string_view text, std::string_view whole) {
  if (text.empty()) throw DomainError("malformed complex number '" + std::string(whole) + "'");
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw DomainError("malformed complex number '" + std::string(whole) + "'");
  }
  return value;
}

std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

std::string complex_json(cplx c) {
  return "[" + format_double(c.real()) + ", " + format_double(c.imag()) + "]";
}

std::string spec_json(const RunSpec& s, const std::string& pad) {
  std::string out = "{\n";
  const std::string in = pad + "  ";
  auto field = [&](const std::string& key, const std::string& value) {
    out += in + quoted(key) + ": " + value + ",\n";
  };
  field("symmetry", quoted(s.symmetry));
  if (s.cutoff) field("cutoff", std::to_string(*s.cutoff));
  if (s.spin) field("spin", format_double(*s.spin));
  if (s.bargmann) field("bargmann", format_double(*s.bargmann));
  field("state", quoted(s.state));
  if (s.file) field("file", quoted(*s.file));
  if (s.alpha) field("alpha", complex_json(*s.alpha));
  if (s.xi) field("xi", complex_json(*s.xi));
  if (s.omega_nl) field("omega_nl", format_double(*s.omega_nl));
  if (s.omega_lin) field("omega_lin", format_double(*s.omega_lin));
  const SolverConfig& c = s.solver;
  out += in + "\"solver\": {\"root_tol\": " + format_double(c.root_tol) +
         ", \"residual_tol\": " + format_double(c.residual_tol) +
         ", \"max_iter\": " + std::to_string(c.max_iter) +
         ", \"cluster_radius\": " + format_double(c.cluster_radius) +
         ", \"multiplicity_tol\": " + format_double(c.multiplicity_tol) + "}\n";
  out += pad + "}";
  return out;
}

}  // namespace

cplx parse_complex(std::string_view text) {
  if (text.empty()) throw DomainError("empty complex number");
  if (text.back() != 'i') return {parse_real(text, text), 0.0};

  const std::string_view body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not leading and not an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, parse_real(body, text)};
  const double re = parse_real(body.substr(0, split), text);
  const double im = parse_real(body.substr(split), text);
  return {re, im};
}

std::string format_double(double x) {
  if (x == 0.0) return "0";  // also folds -0
  return fmt::format("{:.17g}", x);
}

std::vector<cplx> read_amplitude_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open amplitude file '" + path.string() + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("amplitude file '" + path.string() + "' is not valid JSON: " + e.what());
  }
  if (!doc.is_array()) throw DomainError("amplitude file must hold a JSON array of [re, im] pairs");
  if (doc.empty()) throw DomainError("amplitude file holds no amplitudes");
  std::vector<cplx> out;
  out.reserve(doc.size());
  for (const auto& pair : doc) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw DomainError("amplitude entries must be [re, im] number pairs");
    }
    out.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return out;
}

std::string to_json(const RunRecord& r, int indent) {
  const std::string pad(indent, ' ');
  const std::string in = pad + "  ";
  std::string out = pad + "{\n";
  out += in + "\"spec\": " + spec_json(r.spec, in) + ",\n";
  if (r.sweep) {
    out += in + "\"sweep\": {\"param\": " + quoted(r.sweep->first) +
           ", \"value\": " + quoted(r.sweep->second) + "},\n";
  }
  if (r.t) out += in + "\"t\": " + format_double(*r.t) + ",\n";
  out += in + "\"stars\": [";
  for (std::size_t i = 0; i < r.stars.stars.size(); ++i) {
    const Star& s = r.stars.stars[i];
    out += (i == 0 ? "\n" : ",\n") + in + "  {\"theta\": " + format_double(s.theta) +
           ", \"phi\": " + format_double(s.phi) +
           ", \"multiplicity\": " + std::to_string(s.multiplicity) + "}";
  }
  out += r.stars.stars.empty() ? "],\n" : "\n" + in + "],\n";
  out += in + "\"south_pole_count\": " + std::to_string(r.stars.south_pole_count) + ",\n";
  out += in + "\"residual_max\": " + format_double(r.stars.residual_max) + ",\n";
  if (r.wall_time) out += in + "\"wall_time\": " + format_double(*r.wall_time) + ",\n";
  out += in + "\"version\": " + quoted(std::string(kVersion)) + "\n";
  out += pad + "}";
  return out;
}

std::string to_json(const std::vector<RunRecord>& records) {
  std::string out = "[";
  for (std::size_t i = 0; i < records.size(); ++i) {
    out += (i == 0 ? "\n" : ",\n") + to_json(records[i], 2);
  }
  out += records.empty() ? "]\n" : "\n]\n";
  return out;
}

std::string to_csv(const std::vector<RunRecord>& records) {
  const bool sweep = !records.empty() && records.front().sweep.has_value();
  const bool timed = !records.empty() && records.front().t.has_value();
  std::string out;
  if (sweep) out += "param,value,";
  if (timed) out += "t,";
  out += "star_index,theta,phi,multiplicity,residual_max\n";
  for (const RunRecord& r : records) {
    std::string prefix;
    if (sweep) prefix += r.sweep->first + "," + r.sweep->second + ",";
    if (timed) prefix += format_double(*r.t) + ",";
    const std::string residual = format_double(r.stars.residual_max);
    std::size_t index = 0;
    for (const Star& s : r.stars.stars) {
      out += prefix + std::to_string(index++) + "," + format_double(s.theta) + "," +
             format_double(s.phi) + "," + std::to_string(s.multiplicity) + "," + residual + "\n";
    }
    if (r.stars.south_pole_count > 0) {
      out += prefix + std::to_string(index) + "," + format_double(std::numbers::pi) + ",0," +
             std::to_string(r.stars.south_pole_count) + "," + residual + "\n";
    }
  }
  return out;
}

}  // namespace majorana::io
