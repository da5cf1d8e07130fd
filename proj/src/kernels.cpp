#include "qtunnel/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>
#include <variant>

namespace qtunnel::kernels {

namespace {

constexpr std::size_t bit_of(std::size_t n_qubits, Qubit q) { return n_qubits - 1 - q; }

// Spreads k so that a zero appears at bit position `b`.
constexpr std::size_t insert_zero(std::size_t k, std::size_t b) {
  const std::size_t low = k & ((std::size_t{1} << b) - 1);
  return ((k >> b) << (b + 1)) | low;
}

const Mat2 kHadamard{std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2,
                     -std::numbers::sqrt2 / 2};
const Mat2 kPauliX{0.0, 1.0, 1.0, 0.0};

template <class... Ts>
struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

// ---------------------------------------------------------------- serial --

namespace serial {

void apply_1q(std::span<Complex> amps, std::size_t n_qubits, Qubit q, const Mat2& m) {
  const std::size_t step = std::size_t{1} << bit_of(n_qubits, q);
  const std::size_t block = step << 1;
  for (std::size_t base = 0; base < amps.size(); base += block) {
    for (std::size_t off = 0; off < step; ++off) {
      const std::size_t i0 = base + off;
      const std::size_t i1 = i0 + step;
      const Complex a = amps[i0];
      const Complex b = amps[i1];
      amps[i0] = m[0] * a + m[1] * b;
      amps[i1] = m[2] * a + m[3] * b;
    }
  }
}

void apply_diag_1q(std::span<Complex> amps, std::size_t n_qubits, Qubit q, Complex d0, Complex d1) {
  const std::size_t step = std::size_t{1} << bit_of(n_qubits, q);
  const std::size_t block = step << 1;
  for (std::size_t base = 0; base < amps.size(); base += block) {
    for (std::size_t off = 0; off < step; ++off) {
      amps[base + off] *= d0;
      amps[base + off + step] *= d1;
    }
  }
}

void apply_cnot(std::span<Complex> amps, std::size_t n_qubits, Qubit control, Qubit target) {
  const std::size_t cmask = std::size_t{1} << bit_of(n_qubits, control);
  const std::size_t tmask = std::size_t{1} << bit_of(n_qubits, target);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & cmask) && !(i & tmask)) std::swap(amps[i], amps[i | tmask]);
  }
}

void apply_cphase(std::span<Complex> amps, std::size_t n_qubits, Qubit a, Qubit b, Complex phase) {
  const std::size_t both = (std::size_t{1} << bit_of(n_qubits, a)) | (std::size_t{1} << bit_of(n_qubits, b));
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & both) == both) amps[i] *= phase;
  }
}

void apply_swap(std::span<Complex> amps, std::size_t n_qubits, Qubit a, Qubit b) {
  const std::size_t amask = std::size_t{1} << bit_of(n_qubits, a);
  const std::size_t bmask = std::size_t{1} << bit_of(n_qubits, b);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & amask) && !(i & bmask)) std::swap(amps[i], amps[(i & ~amask) | bmask]);
  }
}

void scale(std::span<Complex> amps, Complex factor) {
  for (auto& a : amps) a *= factor;
}

double norm_squared(std::span<const Complex> amps) {
  double s = 0.0;
  for (const auto& a : amps) s += std::norm(a);
  return s;
}

}  // namespace serial

// ------------------------------------------------------------------- omp --

namespace omp {

void apply_1q(std::span<Complex> amps, std::size_t n_qubits, Qubit q, const Mat2& m) {
  const std::size_t b = bit_of(n_qubits, q);
  const std::size_t step = std::size_t{1} << b;
  const auto pairs = static_cast<std::int64_t>(amps.size() / 2);
  Complex* data = amps.data();
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelMinDim)
  for (std::int64_t k = 0; k < pairs; ++k) {
    const std::size_t i0 = insert_zero(static_cast<std::size_t>(k), b);
    const std::size_t i1 = i0 | step;
    const Complex x = data[i0];
    const Complex y = data[i1];
    data[i0] = m[0] * x + m[1] * y;
    data[i1] = m[2] * x + m[3] * y;
  }
}

void apply_diag_1q(std::span<Complex> amps, std::size_t n_qubits, Qubit q, Complex d0, Complex d1) {
  const std::size_t b = bit_of(n_qubits, q);
  const std::size_t step = std::size_t{1} << b;
  const auto pairs = static_cast<std::int64_t>(amps.size() / 2);
  Complex* data = amps.data();
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelMinDim)
  for (std::int64_t k = 0; k < pairs; ++k) {
    const std::size_t i0 = insert_zero(static_cast<std::size_t>(k), b);
    data[i0] *= d0;
    data[i0 | step] *= d1;
  }
}

void apply_cnot(std::span<Complex> amps, std::size_t n_qubits, Qubit control, Qubit target) {
  const std::size_t cb = bit_of(n_qubits, control);
  const std::size_t tb = bit_of(n_qubits, target);
  const std::size_t lo = std::min(cb, tb);
  const std::size_t hi = std::max(cb, tb);
  const std::size_t cmask = std::size_t{1} << cb;
  const std::size_t tmask = std::size_t{1} << tb;
  const auto quads = static_cast<std::int64_t>(amps.size() / 4);
  Complex* data = amps.data();
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelMinDim)
  for (std::int64_t k = 0; k < quads; ++k) {
    const std::size_t base = insert_zero(insert_zero(static_cast<std::size_t>(k), lo), hi);
    std::swap(data[base | cmask], data[base | cmask | tmask]);
  }
}

void apply_cphase(std::span<Complex> amps, std::size_t n_qubits, Qubit a, Qubit b, Complex phase) {
  const std::size_t ab = bit_of(n_qubits, a);
  const std::size_t bb = bit_of(n_qubits, b);
  const std::size_t lo = std::min(ab, bb);
  const std::size_t hi = std::max(ab, bb);
  const std::size_t both = (std::size_t{1} << ab) | (std::size_t{1} << bb);
  const auto quads = static_cast<std::int64_t>(amps.size() / 4);
  Complex* data = amps.data();
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelMinDim)
  for (std::int64_t k = 0; k < quads; ++k) {
    data[insert_zero(insert_zero(static_cast<std::size_t>(k), lo), hi) | both] *= phase;
  }
}

void apply_swap(std::span<Complex> amps, std::size_t n_qubits, Qubit a, Qubit b) {
  const std::size_t ab = bit_of(n_qubits, a);
  const std::size_t bb = bit_of(n_qubits, b);
  const std::size_t lo = std::min(ab, bb);
  const std::size_t hi = std::max(ab, bb);
  const std::size_t amask = std::size_t{1} << ab;
  const std::size_t bmask = std::size_t{1} << bb;
  const auto quads = static_cast<std::int64_t>(amps.size() / 4);
  Complex* data = amps.data();
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelMinDim)
  for (std::int64_t k = 0; k < quads; ++k) {
    const std::size_t base = insert_zero(insert_zero(static_cast<std::size_t>(k), lo), hi);
    std::swap(data[base | amask], data[base | bmask]);
  }
}

void scale(std::span<Complex> amps, Complex factor) {
  const auto n = static_cast<std::int64_t>(amps.size());
  Complex* data = amps.data();
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelMinDim)
  for (std::int64_t i = 0; i < n; ++i) data[i] *= factor;
}

double norm_squared(std::span<const Complex> amps) {
  const auto n = static_cast<std::int64_t>(amps.size());
  const Complex* data = amps.data();
  double s = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : s) if (amps.size() >= kParallelMinDim)
  for (std::int64_t i = 0; i < n; ++i) s += std::norm(data[i]);
  return s;
}

}  // namespace omp

// -------------------------------------------------------------- dispatch --

namespace {

template <class K>
void dispatch(std::span<Complex> amps, std::size_t n, const GateOp& g) {
  std::visit(overloaded{
                 [&](const Hadamard& x) { K::apply_1q(amps, n, x.q, kHadamard); },
                 [&](const PauliX& x) { K::apply_1q(amps, n, x.q, kPauliX); },
                 [&](const RotationZ& x) {
                   K::apply_diag_1q(amps, n, x.q, std::polar(1.0, -x.theta / 2), std::polar(1.0, x.theta / 2));
                 },
                 [&](const Phase& x) { K::apply_diag_1q(amps, n, x.q, 1.0, std::polar(1.0, x.phi)); },
                 [&](const ControlledNot& x) { K::apply_cnot(amps, n, x.control, x.target); },
                 [&](const ControlledPhase& x) { K::apply_cphase(amps, n, x.a, x.b, std::polar(1.0, x.phi)); },
                 [&](const Swap& x) { K::apply_swap(amps, n, x.a, x.b); },
                 [&](const GlobalPhase& x) { K::scale(amps, std::polar(1.0, x.phi)); },
             },
             g);
}

struct SerialKernels {
  static void apply_1q(std::span<Complex> a, std::size_t n, Qubit q, const Mat2& m) { serial::apply_1q(a, n, q, m); }
  static void apply_diag_1q(std::span<Complex> a, std::size_t n, Qubit q, Complex d0, Complex d1) {
    serial::apply_diag_1q(a, n, q, d0, d1);
  }
  static void apply_cnot(std::span<Complex> a, std::size_t n, Qubit c, Qubit t) { serial::apply_cnot(a, n, c, t); }
  static void apply_cphase(std::span<Complex> a, std::size_t n, Qubit x, Qubit y, Complex p) {
    serial::apply_cphase(a, n, x, y, p);
  }
  static void apply_swap(std::span<Complex> a, std::size_t n, Qubit x, Qubit y) { serial::apply_swap(a, n, x, y); }
  static void scale(std::span<Complex> a, Complex f) { serial::scale(a, f); }
};

struct OmpKernels {
  static void apply_1q(std::span<Complex> a, std::size_t n, Qubit q, const Mat2& m) { omp::apply_1q(a, n, q, m); }
  static void apply_diag_1q(std::span<Complex> a, std::size_t n, Qubit q, Complex d0, Complex d1) {
    omp::apply_diag_1q(a, n, q, d0, d1);
  }
  static void apply_cnot(std::span<Complex> a, std::size_t n, Qubit c, Qubit t) { omp::apply_cnot(a, n, c, t); }
  static void apply_cphase(std::span<Complex> a, std::size_t n, Qubit x, Qubit y, Complex p) {
    omp::apply_cphase(a, n, x, y, p);
  }
  static void apply_swap(std::span<Complex> a, std::size_t n, Qubit x, Qubit y) { omp::apply_swap(a, n, x, y); }
  static void scale(std::span<Complex> a, Complex f) { omp::scale(a, f); }
};

}  // namespace

void apply(std::span<Complex> amps, std::size_t n_qubits, const GateOp& g, Backend backend) {
  if (backend == Backend::serial) {
    dispatch<SerialKernels>(amps, n_qubits, g);
  } else {
    dispatch<OmpKernels>(amps, n_qubits, g);
  }
}

}  // namespace qtunnel::kernels
