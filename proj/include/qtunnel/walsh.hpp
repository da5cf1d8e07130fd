#pragma once

// Ancilla-free synthesis of diagonal unitaries e^{i f} from Walsh series.
//
// A sampled phase function f_j on N = 2^n grid points is expanded as
//   f_j = sum_i a_i w_ij,   a_i = (1/N) sum_j f_j w_ij,
// where w_ij = +-1 are Walsh functions in Paley (natural binary) order. The
// Walsh operator for index i is a tensor product of Z on the qubits selected
// by the bit-reversed binary string of i, i.e. bit k of i puts Z on qubit k.
// Each term e^{i a_i w_i} becomes a CNOT parity chain onto one qubit, an
// Rz(-2 a_i) and the matching uncompute; ordering the terms in sequency
// (Gray code) order lets neighbouring chains share CNOTs.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qtunnel/gates.hpp"

namespace qtunnel::walsh {

/// Phase samples f_j (radians), one per grid point.
class PhaseFunction {
 public:
  /// Throws InputError on a length other than 2^n or non-finite samples.
  PhaseFunction(std::size_t n_qubits, std::vector<double> samples);

  std::size_t n_qubits() const { return n_qubits_; }
  const std::vector<double>& samples() const { return samples_; }

 private:
  std::size_t n_qubits_;
  std::vector<double> samples_;
};

/// Walsh-Fourier coefficients a_i, indexed by Paley index.
struct WalshSpectrum {
  std::size_t n_qubits = 0;
  std::vector<double> coefficients;

  /// f_j = sum_i a_i w_ij
  std::vector<double> expand() const;
};

enum class TermOrdering { sequency_gray, natural };

struct SynthesisOptions {
  /// Terms with |a_i| below this are dropped. 0 keeps the series exact.
  double truncation_threshold = 0.0;
  TermOrdering ordering = TermOrdering::sequency_gray;
  /// When false, every term gets its own compute/uncompute CNOT chain.
  bool cancel_cnots = true;
};

/// w_ij in {+1, -1}. Throws InputError for indices >= 2^n.
int walsh_value(std::uint64_t i, std::uint64_t j, std::size_t n_qubits);

/// a_i = (1/N) sum_j f_j w_ij, computed with a fast Walsh-Hadamard butterfly.
WalshSpectrum walsh_transform(const PhaseFunction& f);

/// Qubits carrying Z in the Walsh operator of Paley index i (ascending).
std::vector<Qubit> walsh_operator_mask(std::uint64_t i, std::size_t n_qubits);

/// Binary-reflected Gray code value of k (sequency rank -> Paley index).
constexpr std::uint64_t gray_code(std::uint64_t k) { return k ^ (k >> 1); }
/// Inverse of gray_code (Paley index -> sequency rank).
std::uint64_t inverse_gray_code(std::uint64_t g);

/// Orders Paley indices so neighbours differ in as few bits as possible.
/// The full set [1, 2^n) comes back in sequency order, where neighbours
/// always differ in exactly one bit; other sets are chained greedily by
/// nearest Hamming distance starting from the lowest-sequency index.
std::vector<std::uint64_t> gray_order(std::vector<std::uint64_t> indices);

/// Circuit whose matrix is diag(e^{i f_j}); a_0 becomes a GlobalPhase gate.
Circuit synthesize_diagonal(const PhaseFunction& f, const SynthesisOptions& opts = {});

/// Same as synthesize_diagonal but starting from a precomputed spectrum.
Circuit synthesize_from_spectrum(const WalshSpectrum& spectrum, const SynthesisOptions& opts = {});

}  // namespace qtunnel::walsh
