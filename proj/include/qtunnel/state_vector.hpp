#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "qtunnel/gates.hpp"
#include "qtunnel/kernels.hpp"

namespace qtunnel {

/// Normalization tolerance enforced on construction and after gates.
inline constexpr double kNormTolerance = 1e-10;

/// 2^n complex amplitudes; index l holds the amplitude of basis ket |l>,
/// qubit 0 being the most significant bit of l.
class StateVector {
 public:
  /// Throws InputError unless amps has 2^n_qubits entries with unit norm.
  StateVector(std::size_t n_qubits, std::vector<Complex> amps);

  /// |index>. Throws InputError if index >= 2^n_qubits.
  static StateVector basis(std::size_t n_qubits, std::uint64_t index);

  /// Rescales amps to unit norm before constructing (rejects the zero vector).
  static StateVector normalized(std::size_t n_qubits, std::vector<Complex> amps);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<const Complex> amplitudes() const { return amps_; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }

  double norm() const;

  /// In-place gate application. Validates the gate first.
  void apply(const GateOp& g, kernels::Backend backend = kernels::Backend::omp);
  void apply(const Circuit& c, kernels::Backend backend = kernels::Backend::omp);

 private:
  std::size_t n_qubits_;
  std::vector<Complex> amps_;
};

StateVector new_basis_state(std::size_t n_qubits, std::uint64_t index);
StateVector apply_gate(StateVector state, const GateOp& g);
/// Throws InputError when the circuit and state disagree on qubit count.
StateVector apply_circuit(StateVector state, const Circuit& c);

/// p_l = |amplitude(l)|^2
std::vector<double> probabilities(const StateVector& state);

/// Multinomial draw of `shots` measurements in the computational basis.
/// Deterministic for a fixed seed. Throws InputError when shots == 0.
std::map<std::uint64_t, std::uint64_t> sample_counts(const StateVector& state, std::uint64_t shots,
                                                     std::uint64_t seed);

/// Basis label of index l on n qubits, qubit 0 first ("010" for l=2, n=3).
std::string basis_label(std::uint64_t index, std::size_t n_qubits);

}  // namespace qtunnel
