#pragma once

// Dense-matrix ground truth. Nothing here shares code with the amplitude
// kernels: gate matrices are built from their textbook 2x2/4x4 blocks and
// embedded by explicit tensor-index bookkeeping.

#include <Eigen/Dense>
#include <cstddef>

#include "qtunnel/gates.hpp"
#include "qtunnel/model.hpp"
#include "qtunnel/qft.hpp"
#include "qtunnel/state_vector.hpp"

namespace qtunnel::oracle {

using DenseOperator = Eigen::MatrixXcd;

/// Largest register circuit_matrix accepts.
inline constexpr std::size_t kMaxOracleQubits = 10;

DenseOperator gate_matrix(const GateOp& g, std::size_t n_qubits);
/// Ordered product of gate matrices (first gate rightmost).
/// Throws InputError for more than kMaxOracleQubits qubits.
DenseOperator circuit_matrix(const Circuit& c);

/// diag(e^{i * scale * values[l]})
DenseOperator exp_diagonal(const model::DiagonalOperator& d, double scale);

/// Unitary DFT, F[k][j] = e^{2 pi i j k / N} / sqrt(N), with the centered
/// ordering folding in the (-1)^j frequency shift.
DenseOperator dft_matrix(std::size_t n_qubits, qft::FrequencyOrdering ordering);

bool is_hermitian(const DenseOperator& h, double tol = 1e-10);
bool is_unitary(const DenseOperator& u, double tol = 1e-10);
/// Largest entry magnitude.
double max_abs(const DenseOperator& a);

/// e^{-i H dt} by eigendecomposition. Throws InputError for non-Hermitian H.
DenseOperator exact_propagator(const DenseOperator& h, double dt);

struct Eigensystem {
  Eigen::VectorXd values;    ///< ascending
  DenseOperator vectors;     ///< columns
};
Eigensystem eigensystem(const DenseOperator& h);

struct GroundState {
  StateVector state;
  double energy;
};
/// Lowest eigenpair, phase fixed so the largest-magnitude component is real
/// and positive. Throws InputError for non-Hermitian input.
GroundState ground_state(const DenseOperator& h);

/// Position-space H = diag(V) + F diag(T) F^dagger - field * diag(x).
DenseOperator hamiltonian(const model::DiagonalOperator& potential, const model::DiagonalOperator& kinetic,
                          const model::DiagonalOperator& dipole, double field, qft::FrequencyOrdering ordering);

/// The symmetric split step built from exact factor matrices:
///   e^{-iV dt/2} e^{+i x eps dt/2} F e^{-iT dt} F^dagger e^{+i x eps dt/2} e^{-iV dt/2}
DenseOperator split_step_operator(const model::DiagonalOperator& potential, const model::DiagonalOperator& kinetic,
                                  const model::DiagonalOperator& dipole, double field, double dt,
                                  qft::FrequencyOrdering ordering);

Eigen::VectorXcd to_vector(const StateVector& s);

}  // namespace qtunnel::oracle
