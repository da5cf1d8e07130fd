#pragma once

// In-place amplitude kernels. Two implementations of every gate live here:
//
//   serial::  straightforward block/offset loops, kept as the reference the
//             parallel kernels are tested against;
//   omp::     flat index loops over amplitude pairs (or quads) that OpenMP
//             splits across threads once the register is large enough.
//
// Both take the register width so they can map a qubit to its bit position
// (qubit 0 is the most significant bit).

#include <array>
#include <complex>
#include <cstddef>
#include <span>

#include "qtunnel/gates.hpp"

namespace qtunnel::kernels {

using Mat2 = std::array<Complex, 4>;  // row-major 2x2

/// Below this many amplitudes the omp:: kernels run on the calling thread.
inline constexpr std::size_t kParallelMinDim = std::size_t{1} << 14;

enum class Backend { serial, omp };

namespace serial {
void apply_1q(std::span<Complex> amps, std::size_t n_qubits, Qubit q, const Mat2& m);
void apply_diag_1q(std::span<Complex> amps, std::size_t n_qubits, Qubit q, Complex d0, Complex d1);
void apply_cnot(std::span<Complex> amps, std::size_t n_qubits, Qubit control, Qubit target);
void apply_cphase(std::span<Complex> amps, std::size_t n_qubits, Qubit a, Qubit b, Complex phase);
void apply_swap(std::span<Complex> amps, std::size_t n_qubits, Qubit a, Qubit b);
void scale(std::span<Complex> amps, Complex factor);
double norm_squared(std::span<const Complex> amps);
}  // namespace serial

namespace omp {
void apply_1q(std::span<Complex> amps, std::size_t n_qubits, Qubit q, const Mat2& m);
void apply_diag_1q(std::span<Complex> amps, std::size_t n_qubits, Qubit q, Complex d0, Complex d1);
void apply_cnot(std::span<Complex> amps, std::size_t n_qubits, Qubit control, Qubit target);
void apply_cphase(std::span<Complex> amps, std::size_t n_qubits, Qubit a, Qubit b, Complex phase);
void apply_swap(std::span<Complex> amps, std::size_t n_qubits, Qubit a, Qubit b);
void scale(std::span<Complex> amps, Complex factor);
double norm_squared(std::span<const Complex> amps);
}  // namespace omp

/// Applies one gate with the chosen backend. The gate must already be valid
/// for the register; no bounds checking is done here.
void apply(std::span<Complex> amps, std::size_t n_qubits, const GateOp& g, Backend backend = Backend::omp);

}  // namespace qtunnel::kernels
