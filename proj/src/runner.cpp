#include "qtunnel/runner.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "qtunnel/errors.hpp"
#include "qtunnel/oracle.hpp"

namespace qtunnel::runner {

namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

void open_or_throw(std::ofstream& f, const std::filesystem::path& p) {
  f.open(p, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot write '" + p.string() + "'");
}

}  // namespace

std::vector<PulseStage> pulse_stages(const config::ExperimentConfig& cfg) {
  const auto env = cfg.envelope();
  const auto tc = cfg.trotter_config();
  std::vector<PulseStage> stages;
  for (std::size_t k = 0; k < cfg.n_steps; ++k) {
    const double ts = trotter::field_time(static_cast<double>(k) * cfg.dt, tc);
    const auto sample = model::field_sample(ts, env);
    std::string name = sample.outside_pulse ? "field-off"
                       : ts <= env.tau1    ? "ramp-up"
                       : ts < env.tau2     ? "plateau"
                                           : "ramp-down";
    if (stages.empty() || stages.back().name != name) stages.push_back({name, k, k, {}});
    stages.back().last_step = k;
    stages.back().fields.push_back(sample.value);
  }
  return stages;
}

StateVector initial_state(const config::ExperimentConfig& cfg) {
  if (cfg.initial_state == "ground") {
    const auto m = cfg.diagonals();
    return oracle::ground_state(oracle::hamiltonian(m.potential, m.kinetic, m.dipole, 0.0, m.kinetic_ordering)).state;
  }
  return StateVector::basis(cfg.n_qubits, std::stoull(cfg.initial_state, nullptr, 2));
}

RunResult run(const config::ExperimentConfig& cfg) {
  config::validate(cfg);
  const auto diagonals = cfg.diagonals();
  trotter::Propagation prop = [&] {
    try {
      return trotter::propagate(initial_state(cfg), diagonals, cfg.envelope(), cfg.trotter_config());
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      throw RunError(std::string("propagation failed at ") + e.what());
    }
  }();

  RunResult r;
  r.final_amplitudes.assign(prop.final_state.amplitudes().begin(), prop.final_state.amplitudes().end());
  r.product_yield = prop.trace.rows.back().right_well;
  for (const auto& step : prop.steps) {
    std::vector<FactorCounts> row;
    for (const auto& f : step.factors) row.push_back({f.name, f.circuit.counts()});
    r.gate_counts.push_back(std::move(row));
  }
  r.trace = std::move(prop.trace);
  return r;
}

void write_summary(std::ostream& os, const RunResult& r, const config::ExperimentConfig& cfg) {
  const auto& first = r.trace.rows.front();
  const auto& last = r.trace.rows.back();
  os << "qubits: " << cfg.n_qubits << "\n";
  os << "steps: " << cfg.n_steps << "  dt: " << fmt("%.10g", cfg.dt) << "\n";
  os << "initial state: " << cfg.initial_state << "\n\n";
  os << "basis  initial            final\n";
  for (std::size_t i = 0; i < first.probabilities.size(); ++i) {
    os << basis_label(i, cfg.n_qubits) << "    " << fmt("%.12f", first.probabilities[i]) << "     "
       << fmt("%.12f", last.probabilities[i]) << "\n";
  }
  os << "\nleft well:  " << fmt("%.12f", first.left_well) << " -> " << fmt("%.12f", last.left_well) << "\n";
  os << "right well: " << fmt("%.12f", first.right_well) << " -> " << fmt("%.12f", last.right_well) << "\n";
  os << "product yield: " << fmt("%.6f", r.product_yield) << "\n\n";

  os << "pulse stages (eps0 = " << fmt("%.6g", cfg.eps0) << "):\n";
  for (const auto& s : pulse_stages(cfg)) {
    os << "  " << s.name << ": steps " << s.first_step << "-" << s.last_step << ", field/eps0 =";
    for (double f : s.fields) os << " " << (cfg.eps0 != 0.0 ? fmt("%.3f", f / cfg.eps0) : fmt("%.3g", f));
    os << "\n";
  }
  bool flagged = false;
  for (const auto& row : r.trace.rows) flagged = flagged || row.field_outside_pulse;
  if (flagged) os << "warning: some steps sampled the field outside [0, t_final]; field set to 0 there\n";
}

void write_gate_table(std::ostream& os, const RunResult& r) {
  os << "step,factor,rz,cnot,h,cphase,swap,phase,global_phase,total\n";
  for (std::size_t k = 0; k < r.gate_counts.size(); ++k) {
    GateCounts step_total;
    for (const auto& f : r.gate_counts[k]) {
      const auto& c = f.counts;
      os << k << ',' << f.name << ',' << c.rz << ',' << c.cnot << ',' << c.hadamard << ',' << c.cphase << ','
         << c.swap << ',' << c.phase << ',' << c.global_phase << ',' << c.total() << '\n';
      step_total += c;
    }
    const auto& c = step_total;
    os << k << ",step," << c.rz << ',' << c.cnot << ',' << c.hadamard << ',' << c.cphase << ',' << c.swap << ','
       << c.phase << ',' << c.global_phase << ',' << c.total() << '\n';
  }
}

void emit_report(const RunResult& r, const config::ExperimentConfig& cfg, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw std::runtime_error("cannot create '" + out_dir.string() + "': " + ec.message());

  std::ofstream trace, gates, summary;
  open_or_throw(trace, out_dir / cfg.trace_path);
  trotter::write_csv(trace, r.trace);
  open_or_throw(gates, out_dir / cfg.gates_path);
  write_gate_table(gates, r);
  open_or_throw(summary, out_dir / cfg.summary_path);
  write_summary(summary, r, cfg);
  if (!trace || !gates || !summary) throw std::runtime_error("write failed under '" + out_dir.string() + "'");
}

std::vector<ConvergenceRow> convergence_study(const config::ExperimentConfig& cfg, double dt0, std::size_t levels) {
  if (!(dt0 > 0.0)) throw InputError("convergence study needs dt0 > 0");
  const auto m = cfg.diagonals();
  const double total = static_cast<double>(cfg.n_steps) * dt0;
  std::vector<ConvergenceRow> rows(levels + 1);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t level = 0; level <= static_cast<std::int64_t>(levels); ++level) {
    const std::size_t steps = cfg.n_steps << level;
    const double dt = total / static_cast<double>(steps);
    auto& row = rows[static_cast<std::size_t>(level)];
    row.dt = dt;
    row.n_steps = steps;
    row.local_defect = trotter::global_trotter_error(m, cfg.eps0, dt, 1);
    row.global_defect = trotter::global_trotter_error(m, cfg.eps0, total, steps);
  }
  return rows;
}

void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows) {
  os << "dt,n_steps,local_defect,local_ratio,global_defect,global_ratio\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    os << fmt("%.17g", r.dt) << ',' << r.n_steps << ',' << fmt("%.17g", r.local_defect) << ','
       << (i ? fmt("%.6f", rows[i - 1].local_defect / r.local_defect) : std::string()) << ','
       << fmt("%.17g", r.global_defect) << ','
       << (i ? fmt("%.6f", rows[i - 1].global_defect / r.global_defect) : std::string()) << '\n';
  }
}

}  // namespace qtunnel::runner
