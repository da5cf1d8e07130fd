#include "qtunnel/qft.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>

#include "qtunnel/errors.hpp"

namespace qtunnel::qft {

Circuit qft_circuit(std::size_t n_qubits, const QftConvention& conv) {
  if (n_qubits == 0) throw InputError("QFT needs at least one qubit");
  Circuit c(n_qubits);
  if (conv.ordering == FrequencyOrdering::centered) c.add(Phase{n_qubits - 1, std::numbers::pi});
  for (Qubit q = 0; q < n_qubits; ++q) {
    c.add(Hadamard{q});
    for (Qubit r = q + 1; r < n_qubits; ++r) {
      c.add(ControlledPhase{r, q, 2.0 * std::numbers::pi / static_cast<double>(std::size_t{1} << (r - q + 1))});
    }
  }
  if (conv.include_final_swaps) {
    for (Qubit q = 0; q < n_qubits / 2; ++q) c.add(Swap{q, n_qubits - 1 - q});
  }
  return conv.direction == Direction::forward ? c : c.inverse();
}

std::vector<double> momentum_grid(std::size_t n_qubits, double dx, FrequencyOrdering ordering) {
  if (!(dx > 0.0) || !std::isfinite(dx)) throw InputError("grid spacing must be positive");
  if (n_qubits == 0) throw InputError("momentum grid needs at least one qubit");
  const auto dim = static_cast<std::int64_t>(std::size_t{1} << n_qubits);
  const double unit = 2.0 * std::numbers::pi / (static_cast<double>(dim) * dx);
  std::vector<double> p(static_cast<std::size_t>(dim));
  for (std::int64_t l = 0; l < dim; ++l) {
    std::int64_t k = 0;
    if (ordering == FrequencyOrdering::natural) {
      k = l <= dim / 2 ? l : l - dim;
    } else {
      k = l - dim / 2;
    }
    p[static_cast<std::size_t>(l)] = unit * static_cast<double>(k);
  }
  return p;
}

}  // namespace qtunnel::qft
