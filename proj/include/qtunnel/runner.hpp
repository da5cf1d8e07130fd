#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "qtunnel/config.hpp"
#include "qtunnel/state_vector.hpp"
#include "qtunnel/trotter.hpp"

namespace qtunnel::runner {

/// Raised when propagation fails; the message names the step.
class RunError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FactorCounts {
  std::string name;
  GateCounts counts;
};

struct RunResult {
  trotter::PopulationTrace trace;
  std::vector<Complex> final_amplitudes;
  double product_yield = 0.0;  ///< right-well population after the last step
  std::vector<std::vector<FactorCounts>> gate_counts;  ///< [step][factor]
};

/// Pulse stage a step belongs to, judged by the time its field is sampled.
struct PulseStage {
  std::string name;          ///< "ramp-up", "plateau", "ramp-down" or "field-off"
  std::size_t first_step;
  std::size_t last_step;
  std::vector<double> fields;
};
std::vector<PulseStage> pulse_stages(const config::ExperimentConfig& cfg);

/// Initial state named by the config: a basis label, or the lowest
/// eigenvector of the field-free Hamiltonian for "ground".
StateVector initial_state(const config::ExperimentConfig& cfg);

RunResult run(const config::ExperimentConfig& cfg);

void write_summary(std::ostream& os, const RunResult& result, const config::ExperimentConfig& cfg);
void write_gate_table(std::ostream& os, const RunResult& result);

/// Writes the trace CSV, gate table and summary under `out_dir` using the
/// file names from the config. Throws std::runtime_error on I/O failure.
void emit_report(const RunResult& result, const config::ExperimentConfig& cfg, const std::filesystem::path& out_dir);

struct ConvergenceRow {
  double dt = 0.0;
  std::size_t n_steps = 0;
  double local_defect = 0.0;   ///< one step vs e^{-iH dt}
  double global_defect = 0.0;  ///< n_steps steps vs e^{-iH n_steps dt0}
};

/// Frozen-field (eps0) Trotter defects for dt0, dt0/2, ... (levels + 1
/// rows). The global defect keeps the total time fixed at n_steps * dt0 and
/// doubles the step count each level. Levels run concurrently.
std::vector<ConvergenceRow> convergence_study(const config::ExperimentConfig& cfg, double dt0, std::size_t levels);
void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows);

}  // namespace qtunnel::runner
