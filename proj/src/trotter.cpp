#include "qtunnel/trotter.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "qtunnel/errors.hpp"
#include "qtunnel/oracle.hpp"

namespace qtunnel::trotter {

namespace {

std::vector<double> scaled(const std::vector<double>& v, double s) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

Circuit synth(std::size_t n, const std::vector<double>& phases, const walsh::SynthesisOptions& opts) {
  return walsh::synthesize_diagonal(walsh::PhaseFunction(n, phases), opts);
}

TraceRow make_row(std::size_t step, double time, double field, bool outside, std::vector<double> p) {
  TraceRow row{step, time, field, outside, std::move(p), 0.0, 0.0};
  const std::size_t half = row.probabilities.size() / 2;
  for (std::size_t i = 0; i < row.probabilities.size(); ++i) {
    (i < half ? row.left_well : row.right_well) += row.probabilities[i];
  }
  return row;
}

std::vector<double> measured(const StateVector& s, const TrotterConfig& cfg, std::size_t step) {
  if (cfg.shots == 0) return probabilities(s);
  std::vector<double> freq(s.dim(), 0.0);
  for (const auto& [index, count] : sample_counts(s, cfg.shots, cfg.seed + step)) {
    freq[index] = static_cast<double>(count) / static_cast<double>(cfg.shots);
  }
  return freq;
}

}  // namespace

void TrotterConfig::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InputError("time step dt must be positive");
  if (n_steps == 0) throw InputError("n_steps must be at least 1");
}

void ModelDiagonals::validate() const {
  const std::size_t want = std::size_t{1} << n_qubits;
  auto check = [&](const model::DiagonalOperator& d, const char* name, model::Basis basis) {
    if (d.values.empty()) throw ConfigError(std::string("missing ") + name + " diagonal");
    if (d.values.size() != want) {
      throw ConfigError(std::string(name) + " diagonal has " + std::to_string(d.values.size()) +
                        " entries, expected " + std::to_string(want));
    }
    if (d.basis != basis) throw ConfigError(std::string(name) + " diagonal is in the wrong basis");
    for (double v : d.values) {
      if (!std::isfinite(v)) throw ConfigError(std::string(name) + " diagonal has a non-finite entry");
    }
  };
  check(potential, "potential", model::Basis::position);
  check(kinetic, "kinetic", model::Basis::momentum);
  check(dipole, "dipole", model::Basis::position);
}

double field_time(double t, const TrotterConfig& cfg) {
  return cfg.field_sample == FieldSampling::midpoint ? t + cfg.dt / 2 : t;
}

StepCircuit build_step(double t, const ModelDiagonals& m, const model::PulseEnvelope& env, const TrotterConfig& cfg) {
  m.validate();
  cfg.validate();
  const std::size_t n = m.n_qubits;
  const auto sample = model::field_sample(field_time(t, cfg), env);

  const Circuit v_half = synth(n, scaled(m.potential.values, -cfg.dt / 2), cfg.synthesis);
  const Circuit e_half = synth(n, scaled(m.dipole.values, sample.value * cfg.dt / 2), cfg.synthesis);
  const Circuit kinetic = synth(n, scaled(m.kinetic.values, -cfg.dt), cfg.synthesis);
  const Circuit to_momentum = qft::qft_circuit(n, {qft::Direction::inverse, true, m.kinetic_ordering});
  const Circuit to_position = qft::qft_circuit(n, {qft::Direction::forward, true, m.kinetic_ordering});

  StepCircuit step{sample.value, sample.outside_pulse, {}, Circuit(n)};
  step.factors = {{"V(dt/2)", v_half}, {"E(dt/2)", e_half}, {"QFT^-1", to_momentum}, {"T(dt)", kinetic},
                  {"QFT", to_position}, {"E(dt/2)", e_half}, {"V(dt/2)", v_half}};
  for (const auto& f : step.factors) step.circuit.append(f.circuit);
  return step;
}

Circuit build_step_circuit(double t, const ModelDiagonals& m, const model::PulseEnvelope& env,
                           const TrotterConfig& cfg) {
  return build_step(t, m, env, cfg).circuit;
}

Circuit fused_propagation_circuit(const ModelDiagonals& m, const model::PulseEnvelope& env, const TrotterConfig& cfg) {
  m.validate();
  cfg.validate();
  const std::size_t n = m.n_qubits;
  if (!cfg.fuse_adjacent_potential) {
    Circuit c(n);
    for (std::size_t k = 0; k < cfg.n_steps; ++k) {
      c.append(build_step_circuit(static_cast<double>(k) * cfg.dt, m, env, cfg));
    }
    return c;
  }
  const Circuit v_half = synth(n, scaled(m.potential.values, -cfg.dt / 2), cfg.synthesis);
  const Circuit v_full = synth(n, scaled(m.potential.values, -cfg.dt), cfg.synthesis);
  const Circuit kinetic = synth(n, scaled(m.kinetic.values, -cfg.dt), cfg.synthesis);
  const Circuit to_momentum = qft::qft_circuit(n, {qft::Direction::inverse, true, m.kinetic_ordering});
  const Circuit to_position = qft::qft_circuit(n, {qft::Direction::forward, true, m.kinetic_ordering});

  Circuit c(n);
  c.append(v_half);
  for (std::size_t k = 0; k < cfg.n_steps; ++k) {
    const double eps = model::field_at(field_time(static_cast<double>(k) * cfg.dt, cfg), env);
    const Circuit e_half = synth(n, scaled(m.dipole.values, eps * cfg.dt / 2), cfg.synthesis);
    c.append(e_half).append(to_momentum).append(kinetic).append(to_position).append(e_half);
    c.append(k + 1 < cfg.n_steps ? v_full : v_half);
  }
  return c;
}

Propagation propagate(const StateVector& initial, const ModelDiagonals& m, const model::PulseEnvelope& env,
                      const TrotterConfig& cfg) {
  m.validate();
  cfg.validate();
  if (initial.n_qubits() != m.n_qubits) {
    throw InputError("initial state has " + std::to_string(initial.n_qubits()) + " qubits, model has " +
                     std::to_string(m.n_qubits));
  }
  if (std::abs(initial.norm() - 1.0) > kNormTolerance) throw InputError("initial state is not normalized");

  Propagation out{{m.n_qubits, {}}, initial, {}};
  out.trace.rows.reserve(cfg.n_steps + 1);
  out.steps.reserve(cfg.n_steps);
  out.trace.rows.push_back(make_row(0, 0.0, 0.0, false, measured(initial, cfg, 0)));

  for (std::size_t k = 0; k < cfg.n_steps; ++k) {
    try {
      const double t = static_cast<double>(k) * cfg.dt;
      StepCircuit step = build_step(t, m, env, cfg);
      out.final_state.apply(step.circuit);
      out.trace.rows.push_back(make_row(k + 1, t + cfg.dt, step.field, step.field_outside_pulse,
                                        measured(out.final_state, cfg, k + 1)));
      out.steps.push_back(std::move(step));
    } catch (const std::exception& e) {
      throw std::runtime_error("step " + std::to_string(k) + ": " + e.what());
    }
  }
  return out;
}

double trotter_error(const ModelDiagonals& m, const model::PulseEnvelope& env, double t, double dt) {
  m.validate();
  if (dt < 0.0 || !std::isfinite(dt)) throw InputError("dt must be non-negative");
  if (dt == 0.0) return 0.0;
  const double field = model::field_at(t + dt / 2, env);
  const auto h = oracle::hamiltonian(m.potential, m.kinetic, m.dipole, field, m.kinetic_ordering);
  const auto split = oracle::split_step_operator(m.potential, m.kinetic, m.dipole, field, dt, m.kinetic_ordering);
  return oracle::max_abs(split - oracle::exact_propagator(h, dt));
}

double global_trotter_error(const ModelDiagonals& m, double field, double total_time, std::size_t n_steps) {
  m.validate();
  if (n_steps == 0) throw InputError("n_steps must be at least 1");
  const double dt = total_time / static_cast<double>(n_steps);
  const auto h = oracle::hamiltonian(m.potential, m.kinetic, m.dipole, field, m.kinetic_ordering);
  const auto step = oracle::split_step_operator(m.potential, m.kinetic, m.dipole, field, dt, m.kinetic_ordering);
  oracle::DenseOperator product = oracle::DenseOperator::Identity(step.rows(), step.cols());
  for (std::size_t k = 0; k < n_steps; ++k) product = step * product;
  return oracle::max_abs(product - oracle::exact_propagator(h, total_time));
}

std::string csv_header(std::size_t n_qubits) {
  std::string h = "step,time,field";
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << n_qubits); ++i) h += ",p" + basis_label(i, n_qubits);
  h += ",left_well,right_well";
  return h;
}

void write_csv(std::ostream& os, const PopulationTrace& trace) {
  os << csv_header(trace.n_qubits) << '\n';
  char buf[40];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    os << ',' << buf;
  };
  for (const auto& row : trace.rows) {
    os << row.step;
    num(row.time);
    num(row.field);
    for (double p : row.probabilities) num(p);
    num(row.left_well);
    num(row.right_well);
    os << '\n';
  }
}

}  // namespace qtunnel::trotter
