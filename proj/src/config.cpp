#include "qtunnel/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "qtunnel/errors.hpp"

namespace qtunnel::config {

namespace {

using LineOf = std::function<int(const std::string&)>;

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "n_qubits",         "dt",
      "n_steps",          "tau1",
      "tau1_steps",       "tau2",
      "tau2_steps",       "t_final",
      "t_final_steps",    "eps0",
      "field_sample",     "initial_state",
      "grid.dx",          "grid.x_min",
      "mass",             "potential.source",
      "potential.values", "potential.x0",
      "potential.vb",     "potential.delta",
      "kinetic.source",   "kinetic.values",
      "kinetic.ordering", "dipole.source",
      "dipole.values",    "synthesis.threshold",
      "synthesis.ordering", "output.trace",
      "output.summary",   "output.gates",
      "shots",            "seed",
  };
  return keys;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Entry {
  std::string value;
  int line;
};

class Reader {
 public:
  explicit Reader(std::map<std::string, Entry> entries) : entries_(std::move(entries)) {}

  bool has(const std::string& key) const { return entries_.count(key) != 0; }
  int line(const std::string& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? 0 : it->second.line;
  }

  const std::string& text(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) throw ConfigError("missing required key '" + key + "'");
    return it->second.value;
  }

  double real(const std::string& key) const {
    const auto& s = text(key);
    try {
      std::size_t used = 0;
      double v = std::stod(s, &used);
      if (trim(s.substr(used)).size() != 0 || !std::isfinite(v)) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw ConfigError("key '" + key + "': expected a finite number, got '" + s + "'", line(key));
    }
  }

  std::uint64_t count(const std::string& key) const {
    const auto& s = text(key);
    try {
      std::size_t used = 0;
      if (!s.empty() && s[0] == '-') throw std::invalid_argument(s);
      auto v = std::stoull(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw ConfigError("key '" + key + "': expected a non-negative integer, got '" + s + "'", line(key));
    }
  }

  std::vector<double> list(const std::string& key) const {
    std::vector<double> out;
    std::stringstream ss(text(key));
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      try {
        std::size_t used = 0;
        double v = std::stod(item, &used);
        if (used != item.size() || !std::isfinite(v)) throw std::invalid_argument(item);
        out.push_back(v);
      } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': bad list entry '" + item + "'", line(key));
      }
    }
    return out;
  }

  template <class E>
  E choice(const std::string& key, const std::map<std::string, E>& options) const {
    const auto& s = text(key);
    auto it = options.find(s);
    if (it == options.end()) {
      std::string allowed;
      for (const auto& [name, _] : options) allowed += (allowed.empty() ? "" : ", ") + name;
      throw ConfigError("key '" + key + "': '" + s + "' is not one of {" + allowed + "}", line(key));
    }
    return it->second;
  }

 private:
  std::map<std::string, Entry> entries_;
};

const std::map<std::string, model::Source> kSources = {{"analytic", model::Source::analytic},
                                                       {"explicit", model::Source::explicit_values}};
const std::map<std::string, qft::FrequencyOrdering> kOrderings = {{"natural", qft::FrequencyOrdering::natural},
                                                                  {"centered", qft::FrequencyOrdering::centered}};
const std::map<std::string, trotter::FieldSampling> kSampling = {{"midpoint", trotter::FieldSampling::midpoint},
                                                                 {"left", trotter::FieldSampling::left}};
const std::map<std::string, walsh::TermOrdering> kTermOrder = {{"sequency-gray", walsh::TermOrdering::sequency_gray},
                                                               {"natural", walsh::TermOrdering::natural}};

template <class E>
std::string name_of(E v, const std::map<std::string, E>& options) {
  for (const auto& [name, value] : options) {
    if (value == v) return name;
  }
  return "?";
}

TimeMarker marker(const Reader& r, const std::string& key) {
  const bool abs = r.has(key);
  const bool steps = r.has(key + "_steps");
  if (abs && steps) {
    throw ConfigError("give either '" + key + "' or '" + key + "_steps', not both", r.line(key + "_steps"));
  }
  if (!abs && !steps) throw ConfigError("missing required key '" + key + "' (or '" + key + "_steps')");
  return steps ? TimeMarker{r.real(key + "_steps"), true} : TimeMarker{r.real(key), false};
}

std::string marker_key(const std::string& key, const TimeMarker& m) { return m.in_steps ? key + "_steps" : key; }

void validate_impl(const ExperimentConfig& c, const LineOf& line) {
  if (c.n_qubits == 0 || c.n_qubits > 16) throw ConfigError("n_qubits must be in [1, 16]", line("n_qubits"));
  if (!(c.dt > 0.0)) throw ConfigError("dt must be positive", line("dt"));
  if (c.n_steps == 0) throw ConfigError("n_steps must be at least 1", line("n_steps"));

  const double t1 = c.tau1.resolve(c.dt);
  const double t2 = c.tau2.resolve(c.dt);
  const double tf = c.t_final.resolve(c.dt);
  const double horizon = static_cast<double>(c.n_steps) * c.dt;
  const double slack = 1e-12 * horizon;
  if (!(0.0 < t1 && t1 < t2)) {
    throw ConfigError("pulse ordering requires 0 < tau1 < tau2", line(marker_key("tau2", c.tau2)));
  }
  if (!(t2 < tf)) throw ConfigError("pulse ordering requires tau2 < t_final", line(marker_key("t_final", c.t_final)));
  if (tf > horizon + slack) {
    throw ConfigError("t_final lies beyond the last step (n_steps * dt)", line(marker_key("t_final", c.t_final)));
  }

  const std::size_t dim = std::size_t{1} << c.n_qubits;
  if (c.initial_state != "ground") {
    if (c.initial_state.size() != c.n_qubits ||
        c.initial_state.find_first_not_of("01") != std::string::npos) {
      throw ConfigError("initial_state must be 'ground' or an " + std::to_string(c.n_qubits) + "-bit label",
                        line("initial_state"));
    }
  }

  auto check_list = [&](const DiagonalSpec& d, const std::string& prefix) {
    if (d.source != model::Source::explicit_values) return;
    if (d.values.size() != dim) {
      throw ConfigError(prefix + ".values has " + std::to_string(d.values.size()) + " entries, expected " +
                            std::to_string(dim) + " for " + std::to_string(c.n_qubits) + " qubits",
                        line(prefix + ".values"));
    }
  };
  check_list(c.potential, "potential");
  check_list(c.kinetic, "kinetic");
  check_list(c.dipole, "dipole");

  const bool needs_grid = c.potential.source == model::Source::analytic ||
                          c.kinetic.source == model::Source::analytic ||
                          c.dipole.source == model::Source::analytic;
  if (needs_grid && !(c.grid_dx > 0.0)) throw ConfigError("grid.dx must be positive", line("grid.dx"));
  if (c.kinetic.source == model::Source::analytic && !(c.mass > 0.0)) {
    throw ConfigError("mass must be positive", line("mass"));
  }
  if (c.potential.source == model::Source::analytic) {
    if (!(c.potential_x0 > 0.0)) throw ConfigError("potential.x0 must be positive", line("potential.x0"));
    if (!(c.potential_vb > c.potential_delta / 2)) {
      throw ConfigError("potential needs vb > delta/2", line("potential.vb"));
    }
  }
  if (c.synthesis_threshold < 0.0) {
    throw ConfigError("synthesis.threshold must be non-negative", line("synthesis.threshold"));
  }
}

}  // namespace

model::PulseEnvelope ExperimentConfig::envelope() const {
  return {eps0, tau1.resolve(dt), tau2.resolve(dt), t_final.resolve(dt)};
}

model::GridSpec ExperimentConfig::grid() const { return {n_qubits, grid_dx, grid_x_min}; }

trotter::TrotterConfig ExperimentConfig::trotter_config() const {
  trotter::TrotterConfig t;
  t.dt = dt;
  t.n_steps = n_steps;
  t.field_sample = field_sample;
  t.synthesis.truncation_threshold = synthesis_threshold;
  t.synthesis.ordering = synthesis_ordering;
  t.shots = shots;
  t.seed = seed;
  return t;
}

trotter::ModelDiagonals ExperimentConfig::diagonals() const {
  trotter::ModelDiagonals m;
  m.n_qubits = n_qubits;
  m.kinetic_ordering = kinetic_ordering;
  m.potential = potential.source == model::Source::explicit_values
                    ? model::explicit_diagonal(model::Basis::position, potential.values)
                    : model::potential_diagonal(grid(), {potential_x0, potential_vb, potential_delta});
  m.kinetic = kinetic.source == model::Source::explicit_values
                  ? model::explicit_diagonal(model::Basis::momentum, kinetic.values)
                  : model::kinetic_diagonal(grid(), {mass}, kinetic_ordering);
  m.dipole = dipole.source == model::Source::explicit_values
                 ? model::explicit_diagonal(model::Basis::position, dipole.values)
                 : model::dipole_diagonal(grid());
  return m;
}

void validate(const ExperimentConfig& cfg) {
  validate_impl(cfg, [](const std::string&) { return 0; });
}

ExperimentConfig parse_config(std::string_view text) {
  std::map<std::string, Entry> entries;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("expected 'key = value'", line_no);
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (!known_keys().count(key)) throw ConfigError("unknown key '" + key + "'", line_no);
    if (entries.count(key)) {
      throw ConfigError("duplicate key '" + key + "' (first on line " + std::to_string(entries[key].line) + ")",
                        line_no);
    }
    entries[key] = {value, line_no};
  }

  const Reader r(std::move(entries));
  ExperimentConfig c;
  c.n_qubits = r.count("n_qubits");
  c.dt = r.real("dt");
  c.n_steps = r.count("n_steps");
  c.tau1 = marker(r, "tau1");
  c.tau2 = marker(r, "tau2");
  c.t_final = marker(r, "t_final");
  c.eps0 = r.real("eps0");
  if (r.has("field_sample")) c.field_sample = r.choice("field_sample", kSampling);
  c.initial_state = r.text("initial_state");

  if (r.has("grid.dx")) c.grid_dx = r.real("grid.dx");
  if (r.has("grid.x_min")) c.grid_x_min = r.real("grid.x_min");
  if (r.has("mass")) c.mass = r.real("mass");

  c.potential.source = r.choice("potential.source", kSources);
  if (c.potential.source == model::Source::explicit_values) {
    c.potential.values = r.list("potential.values");
  } else {
    c.potential_x0 = r.real("potential.x0");
    c.potential_vb = r.real("potential.vb");
    c.potential_delta = r.real("potential.delta");
    if (!r.has("grid.x_min")) throw ConfigError("analytic potential needs 'grid.x_min'");
  }
  c.kinetic.source = r.choice("kinetic.source", kSources);
  if (r.has("kinetic.ordering")) c.kinetic_ordering = r.choice("kinetic.ordering", kOrderings);
  if (c.kinetic.source == model::Source::explicit_values) {
    c.kinetic.values = r.list("kinetic.values");
  } else if (!r.has("mass") || !r.has("grid.dx")) {
    throw ConfigError("analytic kinetic term needs 'mass' and 'grid.dx'");
  }
  c.dipole.source = r.choice("dipole.source", kSources);
  if (c.dipole.source == model::Source::explicit_values) {
    c.dipole.values = r.list("dipole.values");
  } else if (!r.has("grid.dx") || !r.has("grid.x_min")) {
    throw ConfigError("analytic dipole needs 'grid.dx' and 'grid.x_min'");
  }

  if (r.has("synthesis.threshold")) c.synthesis_threshold = r.real("synthesis.threshold");
  if (r.has("synthesis.ordering")) c.synthesis_ordering = r.choice("synthesis.ordering", kTermOrder);
  if (r.has("output.trace")) c.trace_path = r.text("output.trace");
  if (r.has("output.summary")) c.summary_path = r.text("output.summary");
  if (r.has("output.gates")) c.gates_path = r.text("output.gates");
  if (r.has("shots")) c.shots = r.count("shots");
  if (r.has("seed")) c.seed = r.count("seed");

  validate_impl(c, [&r](const std::string& key) { return r.line(key); });
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string serialize(const ExperimentConfig& c) {
  std::string out;
  auto put = [&](const std::string& key, const std::string& value) { out += key + " = " + value + "\n"; };
  auto put_list = [&](const std::string& key, const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + num(v[i]);
    put(key, s);
  };

  put("n_qubits", std::to_string(c.n_qubits));
  put("dt", num(c.dt));
  put("n_steps", std::to_string(c.n_steps));
  put(marker_key("tau1", c.tau1), num(c.tau1.value));
  put(marker_key("tau2", c.tau2), num(c.tau2.value));
  put(marker_key("t_final", c.t_final), num(c.t_final.value));
  put("eps0", num(c.eps0));
  put("field_sample", name_of(c.field_sample, kSampling));
  put("initial_state", c.initial_state);
  put("grid.dx", num(c.grid_dx));
  put("grid.x_min", num(c.grid_x_min));
  put("mass", num(c.mass));

  put("potential.source", name_of(c.potential.source, kSources));
  if (c.potential.source == model::Source::explicit_values) {
    put_list("potential.values", c.potential.values);
  } else {
    put("potential.x0", num(c.potential_x0));
    put("potential.vb", num(c.potential_vb));
    put("potential.delta", num(c.potential_delta));
  }
  put("kinetic.source", name_of(c.kinetic.source, kSources));
  put("kinetic.ordering", name_of(c.kinetic_ordering, kOrderings));
  if (c.kinetic.source == model::Source::explicit_values) put_list("kinetic.values", c.kinetic.values);
  put("dipole.source", name_of(c.dipole.source, kSources));
  if (c.dipole.source == model::Source::explicit_values) put_list("dipole.values", c.dipole.values);

  put("synthesis.threshold", num(c.synthesis_threshold));
  put("synthesis.ordering", name_of(c.synthesis_ordering, kTermOrder));
  put("output.trace", c.trace_path);
  put("output.summary", c.summary_path);
  put("output.gates", c.gates_path);
  put("shots", std::to_string(c.shots));
  put("seed", std::to_string(c.seed));
  return out;
}

}  // namespace qtunnel::config
