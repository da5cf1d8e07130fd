#include "qtunnel/oracle.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <variant>
#include <vector>

#include "qtunnel/errors.hpp"

namespace qtunnel::oracle {

namespace {

template <class... Ts>
struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Embeds a 2^k x 2^k block acting on `qubits` (listed most significant
// first) into the full 2^n space.
DenseOperator embed(const DenseOperator& local, const std::vector<Qubit>& qubits, std::size_t n) {
  const std::size_t dim = std::size_t{1} << n;
  std::size_t act = 0;
  for (Qubit q : qubits) act |= std::size_t{1} << (n - 1 - q);
  auto local_index = [&](std::size_t full) {
    std::size_t s = 0;
    for (Qubit q : qubits) s = (s << 1) | ((full >> (n - 1 - q)) & 1U);
    return s;
  };
  DenseOperator m = DenseOperator::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      if ((r & ~act) != (c & ~act)) continue;
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          local(static_cast<Eigen::Index>(local_index(r)), static_cast<Eigen::Index>(local_index(c)));
    }
  }
  return m;
}

DenseOperator block2(Complex a, Complex b, Complex c, Complex d) {
  DenseOperator m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

DenseOperator gate_matrix(const GateOp& g, std::size_t n) {
  check_gate(g, n);
  const double r = 1.0 / std::numbers::sqrt2;
  return std::visit(
      overloaded{
          [&](const Hadamard& x) { return embed(block2(r, r, r, -r), {x.q}, n); },
          [&](const PauliX& x) { return embed(block2(0, 1, 1, 0), {x.q}, n); },
          [&](const RotationZ& x) {
            return embed(block2(std::exp(Complex(0, -x.theta / 2)), 0, 0, std::exp(Complex(0, x.theta / 2))), {x.q},
                         n);
          },
          [&](const Phase& x) { return embed(block2(1, 0, 0, std::exp(Complex(0, x.phi))), {x.q}, n); },
          [&](const ControlledNot& x) {
            DenseOperator cx = DenseOperator::Zero(4, 4);
            cx(0, 0) = cx(1, 1) = cx(2, 3) = cx(3, 2) = 1.0;
            return embed(cx, {x.control, x.target}, n);
          },
          [&](const ControlledPhase& x) {
            DenseOperator cp = DenseOperator::Identity(4, 4);
            cp(3, 3) = std::exp(Complex(0, x.phi));
            return embed(cp, {x.a, x.b}, n);
          },
          [&](const Swap& x) {
            DenseOperator sw = DenseOperator::Zero(4, 4);
            sw(0, 0) = sw(1, 2) = sw(2, 1) = sw(3, 3) = 1.0;
            return embed(sw, {x.a, x.b}, n);
          },
          [&](const GlobalPhase& x) {
            const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
            DenseOperator m = DenseOperator::Identity(dim, dim) * std::exp(Complex(0, x.phi));
            return m;
          },
      },
      g);
}

DenseOperator circuit_matrix(const Circuit& c) {
  if (c.n_qubits() > kMaxOracleQubits) {
    throw InputError("oracle limited to " + std::to_string(kMaxOracleQubits) + " qubits, circuit has " +
                     std::to_string(c.n_qubits()));
  }
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << c.n_qubits());
  DenseOperator m = DenseOperator::Identity(dim, dim);
  for (const auto& g : c.gates()) m = gate_matrix(g, c.n_qubits()) * m;
  return m;
}

DenseOperator exp_diagonal(const model::DiagonalOperator& d, double scale) {
  const auto dim = static_cast<Eigen::Index>(d.values.size());
  DenseOperator m = DenseOperator::Zero(dim, dim);
  for (Eigen::Index l = 0; l < dim; ++l) {
    m(l, l) = std::exp(Complex(0, scale * d.values[static_cast<std::size_t>(l)]));
  }
  return m;
}

DenseOperator dft_matrix(std::size_t n_qubits, qft::FrequencyOrdering ordering) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n_qubits);
  const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
  DenseOperator f(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      // Reduce j*k mod N before converting to an angle to keep it exact.
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((j * k) % dim) / static_cast<double>(dim);
      Complex v = std::polar(norm, angle);
      if (ordering == qft::FrequencyOrdering::centered && (j & 1)) v = -v;
      f(k, j) = v;
    }
  }
  return f;
}

bool is_hermitian(const DenseOperator& h, double tol) {
  return h.rows() == h.cols() && max_abs(h - h.adjoint()) <= tol;
}

bool is_unitary(const DenseOperator& u, double tol) {
  if (u.rows() != u.cols()) return false;
  return max_abs(u.adjoint() * u - DenseOperator::Identity(u.rows(), u.cols())) <= tol;
}

double max_abs(const DenseOperator& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

Eigensystem eigensystem(const DenseOperator& h) {
  if (!is_hermitian(h)) throw InputError("matrix is not Hermitian");
  // Symmetrize away round-off before handing to the solver.
  const DenseOperator sym = (h + h.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<DenseOperator> solver(sym);
  if (solver.info() != Eigen::Success) throw InputError("eigendecomposition failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

DenseOperator exact_propagator(const DenseOperator& h, double dt) {
  const auto es = eigensystem(h);
  Eigen::VectorXcd phases(es.values.size());
  for (Eigen::Index i = 0; i < es.values.size(); ++i) phases(i) = std::exp(Complex(0, -es.values(i) * dt));
  return es.vectors * phases.asDiagonal() * es.vectors.adjoint();
}

GroundState ground_state(const DenseOperator& h) {
  const auto es = eigensystem(h);
  Eigen::VectorXcd v = es.vectors.col(0);
  Eigen::Index big = 0;
  v.cwiseAbs().maxCoeff(&big);
  v *= std::conj(v(big)) / std::abs(v(big));
  v /= v.norm();

  std::vector<Complex> amps(v.data(), v.data() + v.size());
  std::size_t n = 0;
  while ((std::size_t{1} << n) < amps.size()) ++n;
  return {StateVector(n, std::move(amps)), es.values(0)};
}

DenseOperator hamiltonian(const model::DiagonalOperator& potential, const model::DiagonalOperator& kinetic,
                          const model::DiagonalOperator& dipole, double field, qft::FrequencyOrdering ordering) {
  const auto dim = static_cast<Eigen::Index>(potential.values.size());
  std::size_t n = 0;
  while ((std::size_t{1} << n) < potential.values.size()) ++n;
  const DenseOperator f = dft_matrix(n, ordering);

  DenseOperator t_mom = DenseOperator::Zero(dim, dim);
  DenseOperator h = DenseOperator::Zero(dim, dim);
  for (Eigen::Index l = 0; l < dim; ++l) {
    const auto u = static_cast<std::size_t>(l);
    t_mom(l, l) = kinetic.values[u];
    h(l, l) = potential.values[u] - field * dipole.values[u];
  }
  return h + f * t_mom * f.adjoint();
}

DenseOperator split_step_operator(const model::DiagonalOperator& potential, const model::DiagonalOperator& kinetic,
                                  const model::DiagonalOperator& dipole, double field, double dt,
                                  qft::FrequencyOrdering ordering) {
  std::size_t n = 0;
  while ((std::size_t{1} << n) < potential.values.size()) ++n;
  const DenseOperator f = dft_matrix(n, ordering);
  const DenseOperator v_half = exp_diagonal(potential, -dt / 2);
  const DenseOperator e_half = exp_diagonal(dipole, field * dt / 2);
  const DenseOperator t_full = exp_diagonal(kinetic, -dt);
  return v_half * e_half * f * t_full * f.adjoint() * e_half * v_half;
}

Eigen::VectorXcd to_vector(const StateVector& s) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(s.dim()));
  for (std::size_t i = 0; i < s.dim(); ++i) v(static_cast<Eigen::Index>(i)) = s[i];
  return v;
}

}  // namespace qtunnel::oracle
