#pragma once

// Second-order split-operator propagation of a grid wavefunction under
// H(t) = T + V - x eps(t). One step of length dt is the circuit
//
//   V(dt/2)  E(dt/2)  QFT^-1  T(dt)  QFT  E(dt/2)  V(dt/2)
//
// (gates listed in application order), where V(dt/2) = e^{-iV dt/2},
// T(dt) = e^{-iT dt} in the momentum basis and E(dt/2) = e^{+i x eps dt/2}
// with the field frozen at the sampling time of the step. Every diagonal
// factor is compiled with the Walsh synthesizer.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qtunnel/gates.hpp"
#include "qtunnel/model.hpp"
#include "qtunnel/qft.hpp"
#include "qtunnel/state_vector.hpp"
#include "qtunnel/walsh.hpp"

namespace qtunnel::trotter {

enum class FieldSampling { midpoint, left };

struct TrotterConfig {
  double dt = 1.0;
  std::size_t n_steps = 1;
  FieldSampling field_sample = FieldSampling::midpoint;
  /// Merge the trailing V(dt/2) of one step with the leading V(dt/2) of the
  /// next. Only honoured by fused_propagation_circuit; per-step measurement
  /// in propagate() needs the unfused steps.
  bool fuse_adjacent_potential = false;
  walsh::SynthesisOptions synthesis{};
  /// 0 records exact probabilities; otherwise each row is a shot histogram.
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;

  void validate() const;
};

struct ModelDiagonals {
  std::size_t n_qubits = 3;
  model::DiagonalOperator potential;  ///< position basis
  model::DiagonalOperator kinetic;    ///< momentum basis, in kinetic_ordering
  model::DiagonalOperator dipole;     ///< position basis
  qft::FrequencyOrdering kinetic_ordering = qft::FrequencyOrdering::natural;

  /// Throws ConfigError when a diagonal is missing or has the wrong length.
  void validate() const;
};

struct Factor {
  std::string name;
  Circuit circuit;
};

struct StepCircuit {
  double field = 0.0;
  bool field_outside_pulse = false;
  std::vector<Factor> factors;  ///< application order
  Circuit circuit;              ///< concatenation of the factors
};

/// Time at which the field of the step starting at t is evaluated.
double field_time(double t, const TrotterConfig& cfg);

StepCircuit build_step(double t, const ModelDiagonals& model, const model::PulseEnvelope& env,
                       const TrotterConfig& cfg);
Circuit build_step_circuit(double t, const ModelDiagonals& model, const model::PulseEnvelope& env,
                           const TrotterConfig& cfg);

/// Whole-run circuit with adjacent half potential steps fused into one
/// V(dt) factor. Used when no intermediate measurement is wanted.
Circuit fused_propagation_circuit(const ModelDiagonals& model, const model::PulseEnvelope& env,
                                  const TrotterConfig& cfg);

struct TraceRow {
  std::size_t step = 0;  ///< 0 is the initial state
  double time = 0.0;
  double field = 0.0;    ///< field used in the step that ended here
  bool field_outside_pulse = false;
  std::vector<double> probabilities;
  double left_well = 0.0;   ///< indices [0, N/2)
  double right_well = 0.0;  ///< indices [N/2, N)
};

struct PopulationTrace {
  std::size_t n_qubits = 0;
  std::vector<TraceRow> rows;
};

struct Propagation {
  PopulationTrace trace;
  StateVector final_state;
  std::vector<StepCircuit> steps;
};

/// Applies cfg.n_steps step circuits starting at t = 0, recording a row
/// before the first step and after every step. Throws InputError if the
/// initial state is not normalized or its width disagrees with the model.
Propagation propagate(const StateVector& initial, const ModelDiagonals& model, const model::PulseEnvelope& env,
                      const TrotterConfig& cfg);

/// Max-norm distance between one split step (exact factor matrices) and
/// e^{-i H dt} with H frozen at the mid-step field t + dt/2.
double trotter_error(const ModelDiagonals& model, const model::PulseEnvelope& env, double t, double dt);

/// Max-norm distance between n split steps of size total/n and the exact
/// propagator over `total`, for a fixed field.
double global_trotter_error(const ModelDiagonals& model, double field, double total_time, std::size_t n_steps);

/// CSV with header step,time,field,p<label>...,left_well,right_well.
void write_csv(std::ostream& os, const PopulationTrace& trace);
std::string csv_header(std::size_t n_qubits);

}  // namespace qtunnel::trotter
