// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// hard criterion fails. The paper-yield band is soft: its line can read
// "FAIL (soft)" without failing the run.
//
//   acceptance [paper_scenario.cfg]

#include <bit>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "qtunnel/config.hpp"
#include "qtunnel/oracle.hpp"
#include "qtunnel/qft.hpp"
#include "qtunnel/runner.hpp"
#include "qtunnel/trotter.hpp"
#include "qtunnel/walsh.hpp"

using namespace qtunnel;
using oracle::DenseOperator;

namespace {

int hard_failures = 0;

void report(const char* id, const char* title, bool ok, const std::string& detail, bool soft = false) {
  const char* verdict = ok ? "PASS" : soft ? "FAIL (soft)" : "FAIL";
  std::printf("%-11s %-4s %s: %s\n", verdict, id, title, detail.c_str());
  if (!ok && !soft) ++hard_failures;
}

std::string fmt(const char* spec, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, spec, a, b, c, d);
  return buf;
}

std::vector<double> random_phases(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-M_PI, M_PI);
  std::vector<double> f(std::size_t{1} << n);
  for (auto& v : f) v = u(rng);
  return f;
}

void criterion_1() {
  std::mt19937_64 rng(1001);
  double diag = 0.0, off = 0.0;
  int cases = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int k = 0; k < 40; ++k, ++cases) {
      const auto f = random_phases(n, rng);
      const auto m = oracle::circuit_matrix(walsh::synthesize_diagonal(walsh::PhaseFunction(n, f)));
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
          if (i == j) {
            diag = std::max(diag, std::abs(m(i, i) - std::polar(1.0, f[static_cast<std::size_t>(i)])));
          } else {
            off = std::max(off, std::abs(m(i, j)));
          }
        }
      }
    }
  }
  report("C1", "Walsh synthesis exactness", cases == 200 && diag < 1e-10 && off < 1e-12,
         std::to_string(cases) + fmt(" phase functions on n=1..5, max diagonal error %.2e (tol 1e-10), max off-diagonal %.2e (tol 1e-12)", diag, off));
}

void criterion_2() {
  const std::vector<double> f = {-9.113, 0.003, -0.057, -0.168, -0.169, -0.063, -0.006, -9.475};
  const std::vector<double> table = {-19.041, 0.377, -18.127, 0.363, -18.796, 0.349, -18.362, 0.357};
  const auto a = walsh::walsh_transform(walsh::PhaseFunction(3, f)).coefficients;
  double worst = 0.0;
  for (std::uint64_t s = 0; s < 8; ++s) worst = std::max(worst, std::abs(a[walsh::gray_code(s)] - table[s] / 8));
  report("C2", "Supplement coefficient reconciliation", worst < 0.01,
         fmt("a_0 = %.4f with 1/N vs printed %.3f (= 8 a_0); max |a_i - printed/8| over sequency order %.2e (tol 0.01)",
             a[0], table[0], worst));
}

void criterion_3() {
  std::mt19937_64 rng(1003);
  std::vector<std::vector<double>> series = {{-9.113, 0.003, -0.057, -0.168, -0.169, -0.063, -0.006, -9.475}};
  for (int k = 0; k < 100; ++k) series.push_back(random_phases(3, rng));
  bool ok = true;
  GateCounts gray{}, naive{};
  for (const auto& f : series) {
    const walsh::PhaseFunction pf(3, f);
    for (double v : walsh::walsh_transform(pf).coefficients) ok = ok && v != 0.0;
    gray = walsh::synthesize_diagonal(pf).counts();
    naive = walsh::synthesize_diagonal(pf, {0.0, walsh::TermOrdering::sequency_gray, false}).counts();
    ok = ok && gray.rz == 7 && gray.cnot == 6 && gray.global_phase == 1 && gray.total() == 14 && naive.cnot > gray.cnot;
  }
  // Enumerate the Gray walk directly: a chain onto the top qubit of each
  // mask, with CNOTs kept only where the parity set on that wire changes.
  std::size_t walk_cnots = 0;
  {
    const auto order = walsh::gray_order({1, 2, 3, 4, 5, 6, 7});
    std::uint64_t wire_mask = 0;
    std::size_t wire = 3;
    for (auto i : order) {
      const std::size_t top = std::bit_width(i) - 1;
      const std::uint64_t want = i & ~(std::uint64_t{1} << top);
      if (wire != top) {
        walk_cnots += static_cast<std::size_t>(std::popcount(wire_mask));
        wire_mask = 0;
        wire = top;
      }
      walk_cnots += static_cast<std::size_t>(std::popcount(wire_mask ^ want));
      wire_mask = want;
    }
    walk_cnots += static_cast<std::size_t>(std::popcount(wire_mask));
  }
  ok = ok && walk_cnots == 6;
  report("C3", "Gate counts for full n=3 series", ok,
         std::to_string(series.size()) + " full series: " + std::to_string(gray.rz) + " Rz + " +
             std::to_string(gray.cnot) + " CNOT + " + std::to_string(gray.global_phase) +
             " global phase (enumerated walk: " + std::to_string(walk_cnots) + " CNOT); per-term chains use " +
             std::to_string(naive.cnot) + " CNOT");
}

void criterion_4() {
  double dft_err = 0.0, id_err = 0.0;
  for (std::size_t n = 1; n <= 5; ++n) {
    const std::size_t N = std::size_t{1} << n;
    DenseOperator want(N, N);
    for (std::size_t k = 0; k < N; ++k) {
      for (std::size_t j = 0; j < N; ++j) {
        want(k, j) = std::polar(1.0 / std::sqrt(double(N)), 2 * M_PI * double(j * k % N) / double(N));
      }
    }
    const auto fwd = oracle::circuit_matrix(qft::qft_circuit(n));
    const auto inv = oracle::circuit_matrix(
        qft::qft_circuit(n, {qft::Direction::inverse, true, qft::FrequencyOrdering::natural}));
    dft_err = std::max(dft_err, oracle::max_abs(fwd - want));
    id_err = std::max(id_err, oracle::max_abs(inv * fwd - DenseOperator::Identity(N, N)));
  }
  report("C4", "QFT correctness", dft_err < 1e-12 && id_err < 1e-12,
         fmt("n=1..5: max |QFT - DFT| %.2e, max |QFT^-1 QFT - I| %.2e (tol 1e-12)", dft_err, id_err));
}

void criterion_5(const trotter::ModelDiagonals& m, double eps0) {
  // Frozen field: a plateau covering every sampled time.
  const model::PulseEnvelope frozen{eps0, 1e-9, 1e6, 2e6};
  const std::vector<double> dts = {4.0, 2.0, 1.0};
  std::vector<double> local, global;
  for (double dt : dts) {
    local.push_back(trotter::trotter_error(m, frozen, 0.0, dt));
    global.push_back(trotter::global_trotter_error(m, eps0, 20 * dts.front(), static_cast<std::size_t>(20 * dts.front() / dt)));
  }
  bool ok = true;
  std::string detail = "dt 4 -> 2 -> 1, local ratios";
  for (std::size_t i = 1; i < dts.size(); ++i) {
    const double r = local[i - 1] / local[i];
    ok = ok && r >= 6.0 && r <= 10.0;
    detail += fmt(" %.3f", r);
  }
  detail += " (want [6, 10]); global ratios over 80 time units";
  for (std::size_t i = 1; i < dts.size(); ++i) {
    const double r = global[i - 1] / global[i];
    ok = ok && r >= 3.2 && r <= 4.8;
    detail += fmt(" %.3f", r);
  }
  detail += " (want [3.2, 4.8])";
  report("C5", "Trotter order", ok, detail);
}

void criterion_6(const config::ExperimentConfig& cfg) {
  const auto m = cfg.diagonals();
  const auto env = cfg.envelope();
  const auto prop = trotter::propagate(runner::initial_state(cfg), m, env, cfg.trotter_config());
  // Re-run the engine step by step so every intermediate state is compared.
  StateVector engine = runner::initial_state(cfg);
  Eigen::VectorXcd exact = oracle::to_vector(engine);
  double worst = 0.0, drift = 0.0;
  for (std::size_t k = 0; k < cfg.n_steps; ++k) {
    const double t = double(k) * cfg.dt;
    engine.apply(prop.steps[k].circuit);
    const double eps = model::field_at(trotter::field_time(t, cfg.trotter_config()), env);
    exact = oracle::split_step_operator(m.potential, m.kinetic, m.dipole, eps, cfg.dt, m.kinetic_ordering) * exact;
    for (Eigen::Index i = 0; i < exact.size(); ++i) {
      worst = std::max(worst, std::abs(engine[static_cast<std::size_t>(i)] - exact(i)));
    }
    drift = std::max(drift, std::abs(engine.norm() - 1.0));
  }
  drift = std::max(drift, std::abs(prop.final_state.norm() - 1.0));
  report("C6", "Circuit/oracle agreement", worst < 1e-9 && drift < 1e-9,
         fmt("%.0f paper steps, max |engine - exact-factor product| %.2e (tol 1e-9), norm drift %.2e (tol 1e-9)",
             double(cfg.n_steps), worst, drift));
}

void criterion_7(const config::ExperimentConfig& cfg) {
  const auto r = runner::run(cfg);
  const auto& rows = r.trace.rows;
  const double yield = r.product_yield;
  report("C7a", "Paper yield band", std::abs(yield - 0.78) <= 0.10,
         fmt("final right-well population %.4f (want 0.78 +- 0.10)", yield), true);

  // Least-squares slope of the left-well population over the trace.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = double(rows.size());
  for (const auto& row : rows) {
    const double x = double(row.step), y = row.left_well;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double first = rows.front().left_well, last = rows.back().left_well;
  report("C7b", "Reactant depletion trend", slope < 0.0 && last < first,
         fmt("left well %.4f -> %.4f, least-squares slope %.4f per step (want < 0)", first, last, slope));

  const auto& mid = rows.at(10).probabilities;
  const double barrier = mid[0b011] + mid[0b100];
  report("C7c", "Barrier kets near step 10", barrier > 0.10,
         fmt("P(011) + P(100) after 10 steps = %.4f (want > 0.10)", barrier));

  // Product-side barrier ket |100> peaks while the field is flat.
  std::size_t first_plateau = 0, last_plateau = 0;
  for (const auto& s : runner::pulse_stages(cfg)) {
    if (s.name == "plateau") {
      first_plateau = s.first_step;
      last_plateau = s.last_step;
    }
  }
  std::size_t peak_row = 0;
  double peak = -1.0;
  for (std::size_t k = 1; k + 1 < rows.size(); ++k) {
    const double p = rows[k].probabilities[0b100];
    const bool local_max = p > rows[k - 1].probabilities[0b100] && p > rows[k + 1].probabilities[0b100];
    const std::size_t step = k - 1;  // row k is the state after step k-1
    if (local_max && step >= first_plateau && step <= last_plateau && p > peak) {
      peak = p;
      peak_row = k;
    }
  }
  report("C7d", "Tunneling signature", peak > 0.10,
         peak > 0 ? fmt("P(100) local maximum %.4f after %.0f steps (step index %.0f), plateau is step indices %.0f", peak,
                        double(peak_row), double(peak_row - 1), double(first_plateau)) +
                        fmt("-%.0f", double(last_plateau))
                  : std::string("no local maximum of P(100) inside the plateau"));
}

void criterion_8(const config::ExperimentConfig& paper) {
  // Stationarity is a property of the exact propagator; the step must be
  // small enough for the split-step error to sit below the tolerance.
  auto drift_at = [&](double dt) {
    auto cfg = paper;
    cfg.eps0 = 0.0;
    cfg.initial_state = "ground";
    cfg.dt = dt;
    const auto r = runner::run(cfg);
    double d = 0.0;
    for (const auto& row : r.trace.rows) {
      for (std::size_t i = 0; i < row.probabilities.size(); ++i) {
        d = std::max(d, std::abs(row.probabilities[i] - r.trace.rows.front().probabilities[i]));
      }
    }
    return d;
  };
  const double small = drift_at(1.0);
  const double large = drift_at(paper.dt);
  report("C8", "Stationary-state control", small < 1e-4,
         fmt("ground state, eps0 = 0, 20 steps of dt = 1: max probability drift %.2e (tol 1e-4); at dt = %.2f the split-step error gives %.3f",
             small, paper.dt, large));
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void criterion_9(const config::ExperimentConfig& cfg) {
  const auto base = std::filesystem::temp_directory_path() / ("qtunnel_acceptance_" + std::to_string(::getpid()));
  std::filesystem::remove_all(base);
  runner::emit_report(runner::run(cfg), cfg, base / "a");
  runner::emit_report(runner::run(cfg), cfg, base / "b");
  bool identical = true;
  for (const auto& f : {cfg.trace_path, cfg.gates_path, cfg.summary_path}) {
    identical = identical && slurp(base / "a" / f) == slurp(base / "b" / f);
  }
  std::istringstream trace(slurp(base / "a" / cfg.trace_path));
  std::string header, line;
  std::getline(trace, header);
  std::size_t rows = 0;
  bool widths = true;
  while (std::getline(trace, line)) {
    ++rows;
    widths = widths && std::count(line.begin(), line.end(), ',') == 12;
  }
  std::filesystem::remove_all(base);
  const bool header_ok = header == "step,time,field,p000,p001,p010,p011,p100,p101,p110,p111,left_well,right_well";
  report("C9", "Determinism and format", identical && header_ok && rows == cfg.n_steps + 1 && widths,
         std::string(identical ? "repeated runs byte-identical" : "repeated runs DIFFER") + "; header " +
             (header_ok ? "matches" : "MISMATCH") + "; " + std::to_string(rows) + " data rows (want " +
             std::to_string(cfg.n_steps + 1) + ")");
}

}  // namespace

int main(int argc, char** argv) {
  const std::string path = argc > 1 ? argv[1] : std::string(QTUNNEL_SOURCE_DIR) + "/configs/paper_scenario.cfg";
  try {
    const auto cfg = config::load_config(path);
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5(cfg.diagonals(), cfg.eps0);
    criterion_6(cfg);
    criterion_7(cfg);
    criterion_8(cfg);
    criterion_9(cfg);
  } catch (const std::exception& e) {
    std::printf("FAIL        acceptance aborted: %s\n", e.what());
    return 2;
  }
  std::printf("%s: %d hard failure(s)\n", hard_failures ? "FAILED" : "OK", hard_failures);
  return hard_failures ? 1 : 0;
}
