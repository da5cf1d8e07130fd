#pragma once

// Experiment configuration: a flat `key = value` text file.
//
//   # comment
//   n_qubits = 3
//   dt = 62.04
//   tau1_steps = 5            # or tau1 = <absolute time>
//   potential.source = explicit
//   potential.values = 0.29378, -0.0001, ...
//
// The full key list is in README.md. Lists are comma separated; numbers are
// written back with 17 significant digits so explicit diagonals survive a
// load/serialize round trip bit for bit.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qtunnel/model.hpp"
#include "qtunnel/qft.hpp"
#include "qtunnel/trotter.hpp"
#include "qtunnel/walsh.hpp"

namespace qtunnel::config {

/// A pulse time given either in units of dt or as an absolute time.
struct TimeMarker {
  double value = 0.0;
  bool in_steps = true;

  double resolve(double dt) const { return in_steps ? value * dt : value; }
  bool operator==(const TimeMarker&) const = default;
};

struct DiagonalSpec {
  model::Source source = model::Source::analytic;
  std::vector<double> values;  ///< used when source is explicit
  bool operator==(const DiagonalSpec&) const = default;
};

struct ExperimentConfig {
  std::size_t n_qubits = 3;
  double dt = 1.0;
  std::size_t n_steps = 1;
  TimeMarker tau1, tau2, t_final;
  double eps0 = 0.0;
  trotter::FieldSampling field_sample = trotter::FieldSampling::midpoint;

  /// Binary basis label ("010") or "ground" for the field-free ground state.
  std::string initial_state = "0";

  double grid_dx = 0.0;
  double grid_x_min = 0.0;
  double mass = 0.0;

  DiagonalSpec potential;
  double potential_x0 = 0.0;
  double potential_vb = 0.0;
  double potential_delta = 0.0;

  DiagonalSpec kinetic;
  qft::FrequencyOrdering kinetic_ordering = qft::FrequencyOrdering::natural;

  DiagonalSpec dipole;

  double synthesis_threshold = 0.0;
  walsh::TermOrdering synthesis_ordering = walsh::TermOrdering::sequency_gray;

  std::string trace_path = "trace.csv";
  std::string summary_path = "summary.txt";
  std::string gates_path = "gates.txt";

  std::uint64_t shots = 0;
  std::uint64_t seed = 0;

  bool operator==(const ExperimentConfig&) const = default;

  model::PulseEnvelope envelope() const;
  model::GridSpec grid() const;
  trotter::TrotterConfig trotter_config() const;
  trotter::ModelDiagonals diagonals() const;
};

/// Parses and validates. Throws ConfigError with the offending line number
/// where one exists.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Cross-field checks (list lengths, pulse ordering, initial label, ...).
void validate(const ExperimentConfig& cfg);

/// Canonical text form; parse_config(serialize(c)) == c.
std::string serialize(const ExperimentConfig& cfg);

}  // namespace qtunnel::config
