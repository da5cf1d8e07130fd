#include "qtunnel/state_vector.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "qtunnel/errors.hpp"

namespace qtunnel {

namespace {

constexpr std::size_t kMaxQubits = 30;

std::size_t checked_dim(std::size_t n_qubits) {
  if (n_qubits == 0 || n_qubits > kMaxQubits) {
    throw InputError("register size must be in [1, " + std::to_string(kMaxQubits) + "], got " +
                     std::to_string(n_qubits));
  }
  return std::size_t{1} << n_qubits;
}

}  // namespace

StateVector::StateVector(std::size_t n_qubits, std::vector<Complex> amps)
    : n_qubits_(n_qubits), amps_(std::move(amps)) {
  const std::size_t dim = checked_dim(n_qubits);
  if (amps_.size() != dim) {
    throw InputError("state on " + std::to_string(n_qubits) + " qubits needs " + std::to_string(dim) +
                     " amplitudes, got " + std::to_string(amps_.size()));
  }
  for (const auto& a : amps_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) throw InputError("non-finite amplitude");
  }
  const double nrm = norm();
  if (std::abs(nrm - 1.0) > kNormTolerance) {
    throw InputError("state is not normalized (norm " + std::to_string(nrm) + ")");
  }
}

StateVector StateVector::basis(std::size_t n_qubits, std::uint64_t index) {
  const std::size_t dim = checked_dim(n_qubits);
  if (index >= dim) {
    throw InputError("basis index " + std::to_string(index) + " out of range for " + std::to_string(n_qubits) +
                     " qubits");
  }
  std::vector<Complex> amps(dim);
  amps[index] = 1.0;
  return StateVector(n_qubits, std::move(amps));
}

StateVector StateVector::normalized(std::size_t n_qubits, std::vector<Complex> amps) {
  const double nrm = std::sqrt(kernels::serial::norm_squared(amps));
  if (!(nrm > 0.0) || !std::isfinite(nrm)) throw InputError("cannot normalize a zero or non-finite vector");
  for (auto& a : amps) a /= nrm;
  return StateVector(n_qubits, std::move(amps));
}

double StateVector::norm() const { return std::sqrt(kernels::omp::norm_squared(amps_)); }

void StateVector::apply(const GateOp& g, kernels::Backend backend) {
  check_gate(g, n_qubits_);
  kernels::apply(amps_, n_qubits_, g, backend);
}

void StateVector::apply(const Circuit& c, kernels::Backend backend) {
  if (c.n_qubits() != n_qubits_) {
    throw InputError("circuit acts on " + std::to_string(c.n_qubits()) + " qubits but state has " +
                     std::to_string(n_qubits_));
  }
  // Circuit::add already validated every gate against this width.
  for (const auto& g : c.gates()) kernels::apply(amps_, n_qubits_, g, backend);
}

StateVector new_basis_state(std::size_t n_qubits, std::uint64_t index) {
  return StateVector::basis(n_qubits, index);
}

StateVector apply_gate(StateVector state, const GateOp& g) {
  state.apply(g);
  return state;
}

StateVector apply_circuit(StateVector state, const Circuit& c) {
  state.apply(c);
  return state;
}

std::vector<double> probabilities(const StateVector& state) {
  std::vector<double> p(state.dim());
  std::transform(state.amplitudes().begin(), state.amplitudes().end(), p.begin(),
                 [](const Complex& a) { return std::norm(a); });
  return p;
}

std::map<std::uint64_t, std::uint64_t> sample_counts(const StateVector& state, std::uint64_t shots,
                                                     std::uint64_t seed) {
  if (shots == 0) throw InputError("shots must be at least 1");
  const auto p = probabilities(state);
  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::uint64_t> dist(p.begin(), p.end());
  std::map<std::uint64_t, std::uint64_t> counts;
  for (std::uint64_t s = 0; s < shots; ++s) ++counts[dist(rng)];
  return counts;
}

std::string basis_label(std::uint64_t index, std::size_t n_qubits) {
  std::string s(n_qubits, '0');
  for (std::size_t q = 0; q < n_qubits; ++q) {
    if ((index >> (n_qubits - 1 - q)) & 1U) s[q] = '1';
  }
  return s;
}

}  // namespace qtunnel
