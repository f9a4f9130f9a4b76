#include "sao/exp/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "sao/common/format.hpp"

namespace sao::exp {

EnsembleSpec ExperimentConfig::ensemble() const {
  EnsembleSpec spec;
  spec.beta = beta;
  spec.boundary = boundary;
  spec.grid = build_grid(length, points);
  spec.k = k;
  spec.options.tolerance = tolerance;
  spec.options.noise = noise;
  return spec;
}

MCParams ExperimentConfig::mc() const {
  MCParams mc;
  mc.paths_per_node = paths;
  mc.nodes = nodes;
  mc.x_max = x_max;
  mc.steps_per_unit_time = steps_per_unit_time;
  mc.bin_width = delta;
  mc.boundary_eps = epsilon;
  mc.boundary_method = boundary_method;
  mc.common_random_numbers = crn;
  mc.seed = seed;
  mc.workers = workers;
  return mc;
}

ProbeOptions ExperimentConfig::probe_options() const { return ProbeOptions{exp_clip}; }

RigidityConfig ExperimentConfig::rigidity() const {
  RigidityConfig rc;
  rc.ensemble = ensemble();
  rc.window = rigidity_window;
  rc.t0 = rigidity_t0;
  rc.gamma = rigidity_gamma;
  rc.candidates = rigidity_candidates;
  rc.depth = rigidity_depth;
  rc.replicates = rigidity_replicates;
  rc.reference_samples = rigidity_reference_samples;
  rc.seed = seed;
  rc.workers = workers;
  return rc;
}

namespace {

void require(bool ok, const char* key, const char* what) {
  if (!ok) throw ConfigError(key, what);
}

void require_times(const std::vector<double>& v, const char* key) {
  require(!v.empty(), key, "must list at least one value");
  for (double a : v) require(std::isfinite(a) && a > 0.0, key, "values must be finite and > 0");
}

}  // namespace

void ExperimentConfig::validate() const {
  require(std::isfinite(beta) && beta > 0.0, "beta", "must be finite and > 0");
  require(workers >= 1, "workers", "must be >= 1");
  require(std::isfinite(length) && length > 0.0, "grid.L", "must be finite and > 0");
  require(points >= 2, "grid.n", "must be >= 2");
  require(k >= 1, "eigen.k", "must be >= 1");
  require(k <= points, "eigen.k", "must not exceed grid.n");
  require(std::isfinite(tolerance) && tolerance > 0.0, "eigen.tol", "must be finite and > 0");
  require(std::isfinite(steps_per_unit_time) && steps_per_unit_time > 0.0, "path.steps_per_unit_time",
          "must be finite and > 0");
  require(std::isfinite(delta) && delta >= 0.0, "path.delta", "must be >= 0 (0 selects the default)");
  require(std::isfinite(epsilon) && epsilon >= 0.0, "path.epsilon", "must be >= 0 (0 selects the default)");
  require(paths >= 1, "mc.paths", "must be >= 1");
  require(nodes >= 2, "mc.nodes", "must be >= 2");
  require(std::isfinite(x_max) && x_max >= 0.0, "mc.x_max", "must be >= 0 (0 selects the default)");
  require(exp_clip > 0.0, "mc.exp_clip", "must be > 0");
  require(spectral_samples >= 1, "spectral.samples", "must be >= 1");
  require_times(t, "times.t");
  require_times(u, "times.u");
  require(!x.empty(), "times.x", "must list at least one value");
  require(!y.empty(), "times.y", "must list at least one value");
  for (double a : x) require(std::isfinite(a) && a >= 0.0, "times.x", "values must be finite and >= 0");
  for (double a : y) require(std::isfinite(a) && a >= 0.0, "times.y", "values must be finite and >= 0");
  require(std::isfinite(rigidity_t0) && rigidity_t0 > 0.0, "rigidity.t0", "must be finite and > 0");
  require(rigidity_gamma > 0.0 && rigidity_gamma < 1.0, "rigidity.gamma", "must lie in (0, 1)");
  require(rigidity_candidates >= 1, "rigidity.candidates", "must be >= 1");
  require(rigidity_replicates >= 1, "rigidity.replicates", "must be >= 1");
  require(rigidity_reference_samples >= 2, "rigidity.reference_samples", "must be >= 2");
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  std::string out(s.substr(b, e - b + 1));
  if (out.size() >= 2 && out.front() == '"' && out.back() == '"') out = out.substr(1, out.size() - 2);
  return out;
}

double to_double(const std::string& key, const std::string& raw) {
  const std::string v = trim(raw);
  std::string lower = v;
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "inf" || lower == "+inf" || lower == "infinity") return INFINITY;
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || v.empty()) {
    throw ConfigError(key, "expected a number, got '" + v + "'");
  }
  return out;
}

std::uint64_t to_unsigned(const std::string& key, const std::string& raw) {
  const std::string v = trim(raw);
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || v.empty()) {
    throw ConfigError(key, "expected a non-negative integer, got '" + v + "'");
  }
  return out;
}

bool to_bool(const std::string& key, const std::string& raw) {
  std::string v = trim(raw);
  std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
  if (v == "true" || v == "yes" || v == "on" || v == "1") return true;
  if (v == "false" || v == "no" || v == "off" || v == "0") return false;
  throw ConfigError(key, "expected a boolean, got '" + v + "'");
}

std::vector<double> to_list(const std::string& key, const std::string& raw) {
  std::vector<double> out;
  std::stringstream ss(trim(raw));
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_double(key, item));
  return out;
}

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + format_double(v[i]);
  return s;
}

using Setter = std::function<void(ExperimentConfig&, const std::string& key, const std::string& value)>;

template <class T>
Setter set_size(T ExperimentConfig::*field) {
  return [field](ExperimentConfig& c, const std::string& key, const std::string& v) {
    c.*field = static_cast<T>(to_unsigned(key, v));
  };
}

Setter set_double(double ExperimentConfig::*field) {
  return [field](ExperimentConfig& c, const std::string& key, const std::string& v) { c.*field = to_double(key, v); };
}

Setter set_bool(bool ExperimentConfig::*field) {
  return [field](ExperimentConfig& c, const std::string& key, const std::string& v) { c.*field = to_bool(key, v); };
}

Setter set_list(std::vector<double> ExperimentConfig::*field) {
  return [field](ExperimentConfig& c, const std::string& key, const std::string& v) { c.*field = to_list(key, v); };
}

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"beta", set_double(&ExperimentConfig::beta)},
      {"w",
       [](ExperimentConfig& c, const std::string& key, const std::string& v) {
         try {
           c.boundary = BoundaryCondition::parse(trim(v));
         } catch (const std::exception& e) {
           throw ConfigError(key, e.what());
         }
       }},
      {"seed", set_size(&ExperimentConfig::seed)},
      {"workers",
       [](ExperimentConfig& c, const std::string& key, const std::string& v) {
         const auto n = to_unsigned(key, v);
         if (n > 4096) throw ConfigError(key, "must be <= 4096");
         c.workers = static_cast<unsigned>(n);
       }},
      {"noise", set_bool(&ExperimentConfig::noise)},
      {"grid.L", set_double(&ExperimentConfig::length)},
      {"grid.n", set_size(&ExperimentConfig::points)},
      {"eigen.k", set_size(&ExperimentConfig::k)},
      {"eigen.tol", set_double(&ExperimentConfig::tolerance)},
      {"path.steps_per_unit_time", set_double(&ExperimentConfig::steps_per_unit_time)},
      {"path.delta", set_double(&ExperimentConfig::delta)},
      {"path.epsilon", set_double(&ExperimentConfig::epsilon)},
      {"path.boundary",
       [](ExperimentConfig& c, const std::string& key, const std::string& v) {
         const std::string m = trim(v);
         if (m == "bridge") {
           c.boundary_method = BoundaryMethod::bridge_correction;
         } else if (m == "strip") {
           c.boundary_method = BoundaryMethod::occupation_strip;
         } else {
           throw ConfigError(key, "expected 'bridge' or 'strip', got '" + m + "'");
         }
       }},
      {"mc.paths", set_size(&ExperimentConfig::paths)},
      {"mc.nodes", set_size(&ExperimentConfig::nodes)},
      {"mc.x_max", set_double(&ExperimentConfig::x_max)},
      {"mc.crn", set_bool(&ExperimentConfig::crn)},
      {"mc.exp_clip", set_double(&ExperimentConfig::exp_clip)},
      {"spectral.samples", set_size(&ExperimentConfig::spectral_samples)},
      {"times.t", set_list(&ExperimentConfig::t)},
      {"times.u", set_list(&ExperimentConfig::u)},
      {"times.x", set_list(&ExperimentConfig::x)},
      {"times.y", set_list(&ExperimentConfig::y)},
      {"rigidity.t0", set_double(&ExperimentConfig::rigidity_t0)},
      {"rigidity.gamma", set_double(&ExperimentConfig::rigidity_gamma)},
      {"rigidity.candidates", set_size(&ExperimentConfig::rigidity_candidates)},
      {"rigidity.depth", set_size(&ExperimentConfig::rigidity_depth)},
      {"rigidity.replicates", set_size(&ExperimentConfig::rigidity_replicates)},
      {"rigidity.reference_samples", set_size(&ExperimentConfig::rigidity_reference_samples)},
      {"rigidity.window",
       [](ExperimentConfig& c, const std::string& key, const std::string& v) {
         try {
           c.rigidity_window = WindowSpec::parse(trim(v));
         } catch (const std::exception& e) {
           throw ConfigError(key, e.what());
         }
       }},
  };
  return table;
}

void apply(ExperimentConfig& c, const std::string& key, const std::string& value) {
  const auto it = setters().find(key);
  if (it == setters().end()) throw ConfigError(key, "unknown key");
  it->second(c, key, value);
}

}  // namespace

double default_length(const WindowSpec& window) {
  const double lo = window.lowest_finite_endpoint();
  return 10.0 + (std::isnan(lo) ? 0.0 : std::max(0.0, -2.0 * lo));
}

ExperimentConfig parse_config(std::string_view text) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  std::istringstream in{std::string(text)};
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError("document", "line " + std::to_string(e.line()) + ": " + e.message());
  }
  ExperimentConfig config;
  bool explicit_length = false;
  for (const auto& [name, node] : tree) {
    if (node.empty()) {
      apply(config, name, node.data());
      continue;
    }
    for (const auto& [key, leaf] : node) {
      apply(config, name + "." + key, leaf.data());
      explicit_length = explicit_length || (name == "grid" && key == "L");
    }
  }
  if (!explicit_length) config.length = default_length(config.rigidity_window);
  config.validate();
  return config;
}

std::string snapshot(const ExperimentConfig& c) {
  std::ostringstream o;
  const auto d = [](double v) { return format_double(v); };
  o << "beta = " << d(c.beta) << "\n";
  o << "w = " << c.boundary.to_string() << "\n";
  o << "seed = " << c.seed << "\n";
  o << "workers = " << c.workers << "\n";
  o << "noise = " << (c.noise ? "true" : "false") << "\n";
  o << "\n[grid]\nL = " << d(c.length) << "\nn = " << c.points << "\n";
  o << "\n[eigen]\nk = " << c.k << "\ntol = " << d(c.tolerance) << "\n";
  o << "\n[path]\nsteps_per_unit_time = " << d(c.steps_per_unit_time) << "\ndelta = " << d(c.delta)
    << "\nepsilon = " << d(c.epsilon) << "\nboundary = " << to_string(c.boundary_method) << "\n";
  o << "\n[mc]\npaths = " << c.paths << "\nnodes = " << c.nodes << "\nx_max = " << d(c.x_max)
    << "\ncrn = " << (c.crn ? "true" : "false") << "\nexp_clip = " << d(c.exp_clip) << "\n";
  o << "\n[spectral]\nsamples = " << c.spectral_samples << "\n";
  o << "\n[times]\nt = " << join(c.t) << "\nu = " << join(c.u) << "\nx = " << join(c.x) << "\ny = " << join(c.y)
    << "\n";
  o << "\n[rigidity]\nt0 = " << d(c.rigidity_t0) << "\ngamma = " << d(c.rigidity_gamma)
    << "\ncandidates = " << c.rigidity_candidates << "\ndepth = " << c.rigidity_depth
    << "\nreplicates = " << c.rigidity_replicates << "\nreference_samples = " << c.rigidity_reference_samples
    << "\nwindow = \"" << c.rigidity_window.to_string() << "\"\n";
  return o.str();
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config", "cannot read '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(text);
      return parse_config(record.at("config").at("snapshot").get<std::string>());
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("config", std::string("not a valid run record: ") + e.what());
    }
  }
  return parse_config(text);
}

}  // namespace sao::exp
