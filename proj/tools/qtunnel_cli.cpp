// qtunnel: run, validate and inspect laser-driven double-well propagation
// experiments.
//
//   qtunnel run <config> [--out DIR]
//   qtunnel validate <config>
//   qtunnel export-circuit <config> --step K [--out FILE]
//   qtunnel convergence <config> --dt-sweep [--dt0 DT] [--levels L] [--out FILE]
//
// Exit codes: 0 ok, 1 usage, 2 configuration error, 3 runtime failure,
// 4 I/O failure.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "qtunnel/config.hpp"
#include "qtunnel/errors.hpp"
#include "qtunnel/runner.hpp"
#include "qtunnel/trotter.hpp"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kConfig = 2, kRuntime = 3, kIo = 4 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_to(const std::string& path, const std::string& contents) {
  if (path.empty() || path == "-") {
    std::cout << contents;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot write '" + path + "'");
  f << contents;
  if (!f) throw IoError("write failed for '" + path + "'");
}

int cmd_run(const std::string& config_path, const std::string& out_dir) {
  const auto cfg = qtunnel::config::load_config(config_path);
  const auto result = qtunnel::runner::run(cfg);
  try {
    qtunnel::runner::emit_report(result, cfg, out_dir);
  } catch (const std::runtime_error& e) {
    throw IoError(e.what());
  }
  std::printf("product yield %.6f after %zu steps; wrote %s/{%s,%s,%s}\n", result.product_yield, cfg.n_steps,
              out_dir.c_str(), cfg.trace_path.c_str(), cfg.gates_path.c_str(), cfg.summary_path.c_str());
  return kOk;
}

int cmd_validate(const std::string& config_path) {
  const auto cfg = qtunnel::config::load_config(config_path);
  const auto m = cfg.diagonals();
  m.validate();
  std::printf("ok: %zu qubits, %zu steps, dt %.10g, tau1 %.10g, tau2 %.10g, t_final %.10g\n", cfg.n_qubits,
              cfg.n_steps, cfg.dt, cfg.envelope().tau1, cfg.envelope().tau2, cfg.envelope().t_f);
  return kOk;
}

int cmd_export(const std::string& config_path, std::size_t step, const std::string& out) {
  const auto cfg = qtunnel::config::load_config(config_path);
  if (step >= cfg.n_steps) {
    throw qtunnel::InputError("--step " + std::to_string(step) + " out of range (n_steps = " +
                              std::to_string(cfg.n_steps) + ")");
  }
  const auto circuit = qtunnel::trotter::build_step_circuit(static_cast<double>(step) * cfg.dt, cfg.diagonals(),
                                                            cfg.envelope(), cfg.trotter_config());
  write_to(out, qtunnel::to_text(circuit));
  return kOk;
}

int cmd_convergence(const std::string& config_path, std::optional<double> dt0, std::size_t levels,
                    const std::string& out) {
  const auto cfg = qtunnel::config::load_config(config_path);
  const auto rows = qtunnel::runner::convergence_study(cfg, dt0.value_or(cfg.dt), levels);
  std::ostringstream os;
  qtunnel::runner::write_convergence_csv(os, rows);
  write_to(out, os.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Split-operator circuit simulation of laser-driven double-well tunneling"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  std::string out;
  std::size_t step = 0;
  std::optional<double> dt0;
  std::size_t levels = 6;
  bool dt_sweep = false;

  auto* run = app.add_subcommand("run", "Propagate and write trace, gate table and summary");
  run->add_option("config", config_path, "Experiment configuration")->required();
  run->add_option("--out", out_dir, "Output directory")->capture_default_str();

  auto* validate = app.add_subcommand("validate", "Check a configuration without running it");
  validate->add_option("config", config_path, "Experiment configuration")->required();

  auto* exp = app.add_subcommand("export-circuit", "Write one step's circuit as a gate list");
  exp->add_option("config", config_path, "Experiment configuration")->required();
  exp->add_option("--step", step, "Zero-based step index")->required();
  exp->add_option("--out", out, "Output file (stdout when omitted)");

  auto* conv = app.add_subcommand("convergence", "Frozen-field Trotter defect versus dt");
  conv->add_option("config", config_path, "Experiment configuration")->required();
  conv->add_flag("--dt-sweep", dt_sweep, "Halve dt repeatedly starting from --dt0")->required();
  conv->add_option("--dt0", dt0, "Largest step size (defaults to the config's dt)");
  conv->add_option("--levels", levels, "Number of halvings")->default_val(6);
  conv->add_option("--out", out, "Output CSV (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*run) return cmd_run(config_path, out_dir);
    if (*validate) return cmd_validate(config_path);
    if (*exp) return cmd_export(config_path, step, out);
    if (*conv) return cmd_convergence(config_path, dt0, levels, out);
  } catch (const qtunnel::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfig;
  } catch (const qtunnel::InputError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfig;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "runtime error: " << e.what() << "\n";
    return kRuntime;
  }
  return kUsage;
}
