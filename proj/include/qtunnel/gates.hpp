#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qtunnel {

using Complex = std::complex<double>;
using Qubit = std::size_t;

// Qubit 0 is the most significant bit of a basis index: on three qubits the
// ket |010> is amplitude index 2.

struct Hadamard { Qubit q; };
struct PauliX { Qubit q; };
/// e^{-i Z theta / 2}
struct RotationZ { Qubit q; double theta; };
/// diag(1, e^{i phi})
struct Phase { Qubit q; double phi; };
struct ControlledNot { Qubit control; Qubit target; };
/// Multiplies |11> on (a, b) by e^{i phi}; symmetric in a and b.
struct ControlledPhase { Qubit a; Qubit b; double phi; };
struct Swap { Qubit a; Qubit b; };
/// Multiplies every amplitude by e^{i phi}.
struct GlobalPhase { double phi; };

using GateOp = std::variant<Hadamard, PauliX, RotationZ, Phase, ControlledNot,
                            ControlledPhase, Swap, GlobalPhase>;

/// Short mnemonic used by the text format (H, X, RZ, P, CX, CP, SWAP, GPHASE).
std::string_view gate_name(const GateOp& g);

/// The gate that undoes `g`.
GateOp inverse(const GateOp& g);

/// Per-kind gate tally.
struct GateCounts {
  std::size_t hadamard = 0;
  std::size_t pauli_x = 0;
  std::size_t rz = 0;
  std::size_t phase = 0;
  std::size_t cnot = 0;
  std::size_t cphase = 0;
  std::size_t swap = 0;
  std::size_t global_phase = 0;

  std::size_t total() const {
    return hadamard + pauli_x + rz + phase + cnot + cphase + swap + global_phase;
  }
  GateCounts& operator+=(const GateCounts& o);
  bool operator==(const GateCounts&) const = default;
};

class Circuit {
 public:
  explicit Circuit(std::size_t n_qubits);

  std::size_t n_qubits() const { return n_qubits_; }
  const std::vector<GateOp>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  /// Throws InputError if an index is out of range or a two-qubit gate
  /// repeats a qubit.
  Circuit& add(const GateOp& g);
  Circuit& append(const Circuit& other);

  /// Reversed gate list with every gate inverted.
  Circuit inverse() const;
  GateCounts counts() const;

 private:
  std::size_t n_qubits_;
  std::vector<GateOp> gates_;
};

/// Validates `g` against an n-qubit register.
void check_gate(const GateOp& g, std::size_t n_qubits);

// Plain-text gate list: a "# qubits: n" header comment followed by one gate
// per line, `NAME q[,q2][,angle]`, angles in radians with 12 decimals.
std::string to_text(const Circuit& c);
std::string to_text(const GateOp& g);

/// Parses the text format. Blank lines and '#' comments are ignored; when the
/// "# qubits: n" header is absent the register size is the largest index + 1.
Circuit circuit_from_text(std::string_view text);

}  // namespace qtunnel
