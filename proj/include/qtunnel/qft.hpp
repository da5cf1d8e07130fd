#pragma once

#include <cstddef>
#include <vector>

#include "qtunnel/gates.hpp"

namespace qtunnel::qft {

enum class Direction { forward, inverse };

/// Where momentum index l sits on the grid.
///   natural:  k_l = l for l <= N/2, l - N otherwise (FFT order; p = 0 at l = 0)
///   centered: k_l = l - N/2 (ascending momenta, p = 0 at the midpoint)
enum class FrequencyOrdering { natural, centered };

struct QftConvention {
  Direction direction = Direction::forward;
  bool include_final_swaps = true;
  FrequencyOrdering ordering = FrequencyOrdering::natural;
};

/// Forward, natural, with swaps: the unitary DFT
///   |j> -> N^{-1/2} sum_k e^{+2 pi i j k / N} |k>.
/// Centered ordering additionally multiplies |j> by (-1)^j before the
/// transform, which shifts every output frequency by N/2. Without the
/// final swaps the output register is bit-reversed. The inverse direction
/// is the exact adjoint of the matching forward circuit.
/// Throws InputError when n_qubits == 0.
Circuit qft_circuit(std::size_t n_qubits, const QftConvention& conv = {});

/// p_l = 2 pi k_l / (N dx) with k_l arranged per `ordering`.
/// Throws InputError unless dx > 0.
std::vector<double> momentum_grid(std::size_t n_qubits, double dx, FrequencyOrdering ordering);

}  // namespace qtunnel::qft
