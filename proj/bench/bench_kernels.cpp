// Serial reference kernels versus the OpenMP kernels, per gate kind and for
// a whole QFT, on registers above and below the parallel threshold.
//
//   bench_kernels --benchmark_filter=Hadamard

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qtunnel/kernels.hpp"
#include "qtunnel/qft.hpp"

using namespace qtunnel;

namespace {

std::vector<Complex> random_register(std::size_t n) {
  std::mt19937_64 rng(n);
  std::normal_distribution<double> g;
  std::vector<Complex> a(std::size_t{1} << n);
  double norm = 0.0;
  for (auto& z : a) {
    z = {g(rng), g(rng)};
    norm += std::norm(z);
  }
  for (auto& z : a) z /= std::sqrt(norm);
  return a;
}

void run_gate(benchmark::State& state, kernels::Backend backend, GateOp gate) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto amps = random_register(n);
  // Keep qubit indices inside the register.
  std::visit([&](auto& g) {
    using G = std::decay_t<decltype(g)>;
    if constexpr (requires { g.q; }) g.q = n / 2;
    if constexpr (std::is_same_v<G, ControlledNot>) g = {0, n - 1};
    if constexpr (std::is_same_v<G, ControlledPhase>) g = {1, n - 2, g.phi};
  }, gate);
  for (auto _ : state) {
    kernels::apply(amps, n, gate, backend);
    benchmark::DoNotOptimize(amps.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(amps.size()));
}

void run_qft(benchmark::State& state, kernels::Backend backend) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto amps = random_register(n);
  const auto c = qft::qft_circuit(n);
  for (auto _ : state) {
    for (const auto& g : c.gates()) kernels::apply(amps, n, g, backend);
    benchmark::DoNotOptimize(amps.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(amps.size() * c.size()));
}

void serial_gate(benchmark::State& s, GateOp g) { run_gate(s, kernels::Backend::serial, g); }
void omp_gate(benchmark::State& s, GateOp g) { run_gate(s, kernels::Backend::omp, g); }
void serial_qft(benchmark::State& s) { run_qft(s, kernels::Backend::serial); }
void omp_qft(benchmark::State& s) { run_qft(s, kernels::Backend::omp); }

}  // namespace

BENCHMARK_CAPTURE(serial_gate, Hadamard, GateOp{Hadamard{0}})->Arg(12)->Arg(16)->Arg(20)->Arg(22);
BENCHMARK_CAPTURE(omp_gate, Hadamard, GateOp{Hadamard{0}})->Arg(12)->Arg(16)->Arg(20)->Arg(22);
BENCHMARK_CAPTURE(serial_gate, RotationZ, GateOp{RotationZ{0, 0.3}})->Arg(16)->Arg(20)->Arg(22);
BENCHMARK_CAPTURE(omp_gate, RotationZ, GateOp{RotationZ{0, 0.3}})->Arg(16)->Arg(20)->Arg(22);
BENCHMARK_CAPTURE(serial_gate, ControlledNot, GateOp{ControlledNot{0, 1}})->Arg(16)->Arg(20)->Arg(22);
BENCHMARK_CAPTURE(omp_gate, ControlledNot, GateOp{ControlledNot{0, 1}})->Arg(16)->Arg(20)->Arg(22);
BENCHMARK_CAPTURE(serial_gate, ControlledPhase, GateOp{ControlledPhase{0, 1, 0.7}})->Arg(16)->Arg(20)->Arg(22);
BENCHMARK_CAPTURE(omp_gate, ControlledPhase, GateOp{ControlledPhase{0, 1, 0.7}})->Arg(16)->Arg(20)->Arg(22);
BENCHMARK(serial_qft)->Arg(16)->Arg(20);
BENCHMARK(omp_qft)->Arg(16)->Arg(20);

BENCHMARK_MAIN();
