#include "qtunnel/gates.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>
#include <string>

#include "qtunnel/errors.hpp"

namespace qtunnel {

namespace {

template <class... Ts>
struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string angle_text(double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", a);
  return buf;
}

void require_qubit(Qubit q, std::size_t n) {
  if (q >= n) {
    throw InputError("qubit index " + std::to_string(q) + " out of range for " +
                     std::to_string(n) + "-qubit register");
  }
}

void require_pair(Qubit a, Qubit b, std::size_t n) {
  require_qubit(a, n);
  require_qubit(b, n);
  if (a == b) throw InputError("two-qubit gate needs distinct qubits, got " + std::to_string(a) + " twice");
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

Qubit parse_qubit(const std::string& s, int line) {
  Qubit q = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), q);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw InputError("line " + std::to_string(line) + ": bad qubit index '" + s + "'");
  }
  return q;
}

double parse_angle(const std::string& s, int line) {
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InputError("line " + std::to_string(line) + ": bad angle '" + s + "'");
  }
}

}  // namespace

std::string_view gate_name(const GateOp& g) {
  return std::visit(overloaded{
                        [](const Hadamard&) { return std::string_view("H"); },
                        [](const PauliX&) { return std::string_view("X"); },
                        [](const RotationZ&) { return std::string_view("RZ"); },
                        [](const Phase&) { return std::string_view("P"); },
                        [](const ControlledNot&) { return std::string_view("CX"); },
                        [](const ControlledPhase&) { return std::string_view("CP"); },
                        [](const Swap&) { return std::string_view("SWAP"); },
                        [](const GlobalPhase&) { return std::string_view("GPHASE"); },
                    },
                    g);
}

GateOp inverse(const GateOp& g) {
  return std::visit(overloaded{
                        [](const RotationZ& r) -> GateOp { return RotationZ{r.q, -r.theta}; },
                        [](const Phase& p) -> GateOp { return Phase{p.q, -p.phi}; },
                        [](const ControlledPhase& c) -> GateOp { return ControlledPhase{c.a, c.b, -c.phi}; },
                        [](const GlobalPhase& p) -> GateOp { return GlobalPhase{-p.phi}; },
                        [](const auto& self_inverse) -> GateOp { return self_inverse; },
                    },
                    g);
}

GateCounts& GateCounts::operator+=(const GateCounts& o) {
  hadamard += o.hadamard;
  pauli_x += o.pauli_x;
  rz += o.rz;
  phase += o.phase;
  cnot += o.cnot;
  cphase += o.cphase;
  swap += o.swap;
  global_phase += o.global_phase;
  return *this;
}

void check_gate(const GateOp& g, std::size_t n) {
  std::visit(overloaded{
                 [n](const Hadamard& x) { require_qubit(x.q, n); },
                 [n](const PauliX& x) { require_qubit(x.q, n); },
                 [n](const RotationZ& x) { require_qubit(x.q, n); },
                 [n](const Phase& x) { require_qubit(x.q, n); },
                 [n](const ControlledNot& x) { require_pair(x.control, x.target, n); },
                 [n](const ControlledPhase& x) { require_pair(x.a, x.b, n); },
                 [n](const Swap& x) { require_pair(x.a, x.b, n); },
                 [](const GlobalPhase&) {},
             },
             g);
}

Circuit::Circuit(std::size_t n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits == 0) throw InputError("circuit needs at least one qubit");
}

Circuit& Circuit::add(const GateOp& g) {
  check_gate(g, n_qubits_);
  gates_.push_back(g);
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.n_qubits_ != n_qubits_) {
    throw InputError("cannot append a " + std::to_string(other.n_qubits_) + "-qubit circuit to a " +
                     std::to_string(n_qubits_) + "-qubit circuit");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  return *this;
}

Circuit Circuit::inverse() const {
  Circuit out(n_qubits_);
  out.gates_.reserve(gates_.size());
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) out.gates_.push_back(qtunnel::inverse(*it));
  return out;
}

GateCounts Circuit::counts() const {
  GateCounts c;
  for (const auto& g : gates_) {
    std::visit(overloaded{
                   [&](const Hadamard&) { ++c.hadamard; },
                   [&](const PauliX&) { ++c.pauli_x; },
                   [&](const RotationZ&) { ++c.rz; },
                   [&](const Phase&) { ++c.phase; },
                   [&](const ControlledNot&) { ++c.cnot; },
                   [&](const ControlledPhase&) { ++c.cphase; },
                   [&](const Swap&) { ++c.swap; },
                   [&](const GlobalPhase&) { ++c.global_phase; },
               },
               g);
  }
  return c;
}

std::string to_text(const GateOp& g) {
  std::string args = std::visit(
      overloaded{
          [](const Hadamard& x) { return std::to_string(x.q); },
          [](const PauliX& x) { return std::to_string(x.q); },
          [](const RotationZ& x) { return std::to_string(x.q) + "," + angle_text(x.theta); },
          [](const Phase& x) { return std::to_string(x.q) + "," + angle_text(x.phi); },
          [](const ControlledNot& x) { return std::to_string(x.control) + "," + std::to_string(x.target); },
          [](const ControlledPhase& x) {
            return std::to_string(x.a) + "," + std::to_string(x.b) + "," + angle_text(x.phi);
          },
          [](const Swap& x) { return std::to_string(x.a) + "," + std::to_string(x.b); },
          [](const GlobalPhase& x) { return angle_text(x.phi); },
      },
      g);
  return std::string(gate_name(g)) + " " + args;
}

std::string to_text(const Circuit& c) {
  std::string out = "# qubits: " + std::to_string(c.n_qubits()) + "\n";
  for (const auto& g : c.gates()) {
    out += to_text(g);
    out += '\n';
  }
  return out;
}

Circuit circuit_from_text(std::string_view text) {
  std::vector<GateOp> gates;
  std::size_t declared = 0;
  std::size_t max_index = 0;
  bool any_index = false;
  auto note = [&](Qubit q) {
    max_index = std::max(max_index, q);
    any_index = true;
    return q;
  };

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty()) continue;
    if (line[0] == '#') {
      constexpr std::string_view tag = "# qubits:";
      if (line.rfind(tag, 0) == 0) declared = parse_qubit(trim(line.substr(tag.size())), line_no);
      continue;
    }
    auto space = line.find(' ');
    std::string name = line.substr(0, space);
    auto args = split_args(space == std::string::npos ? std::string() : trim(line.substr(space + 1)));
    auto want = [&](std::size_t k) {
      if (args.size() != k) {
        throw InputError("line " + std::to_string(line_no) + ": " + name + " expects " + std::to_string(k) +
                         " argument(s), got " + std::to_string(args.size()));
      }
    };
    if (name == "H") {
      want(1);
      gates.push_back(Hadamard{note(parse_qubit(args[0], line_no))});
    } else if (name == "X") {
      want(1);
      gates.push_back(PauliX{note(parse_qubit(args[0], line_no))});
    } else if (name == "RZ") {
      want(2);
      gates.push_back(RotationZ{note(parse_qubit(args[0], line_no)), parse_angle(args[1], line_no)});
    } else if (name == "P") {
      want(2);
      gates.push_back(Phase{note(parse_qubit(args[0], line_no)), parse_angle(args[1], line_no)});
    } else if (name == "CX") {
      want(2);
      gates.push_back(ControlledNot{note(parse_qubit(args[0], line_no)), note(parse_qubit(args[1], line_no))});
    } else if (name == "CP") {
      want(3);
      gates.push_back(ControlledPhase{note(parse_qubit(args[0], line_no)), note(parse_qubit(args[1], line_no)),
                                      parse_angle(args[2], line_no)});
    } else if (name == "SWAP") {
      want(2);
      gates.push_back(Swap{note(parse_qubit(args[0], line_no)), note(parse_qubit(args[1], line_no))});
    } else if (name == "GPHASE") {
      want(1);
      gates.push_back(GlobalPhase{parse_angle(args[0], line_no)});
    } else {
      throw InputError("line " + std::to_string(line_no) + ": unknown gate '" + name + "'");
    }
  }

  std::size_t n = declared != 0 ? declared : (any_index ? max_index + 1 : 1);
  Circuit c(n);
  for (const auto& g : gates) c.add(g);
  return c;
}

}  // namespace qtunnel
