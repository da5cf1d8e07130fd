#include <gtest/gtest.h>

#include <cmath>

#include "qtunnel/errors.hpp"
#include "qtunnel/model.hpp"
#include "qtunnel/oracle.hpp"
#include "qtunnel/qft.hpp"
#include "test_support.hpp"

using namespace qtunnel;
using qft::Direction;
using qft::FrequencyOrdering;

namespace {

// F[k][j] = e^{2 pi i j k / N} / sqrt(N), written out longhand.
oracle::DenseOperator textbook_dft(std::size_t n) {
  const std::size_t N = std::size_t{1} << n;
  oracle::DenseOperator f(N, N);
  for (std::size_t k = 0; k < N; ++k) {
    for (std::size_t j = 0; j < N; ++j) {
      f(k, j) = std::polar(1.0 / std::sqrt(double(N)), 2 * M_PI * double(j * k % N) / double(N));
    }
  }
  return f;
}

}  // namespace

TEST(Qft, OneQubitIsHadamard) {
  const auto c = qft::qft_circuit(1);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_TRUE(std::holds_alternative<Hadamard>(c.gates()[0]));
  EXPECT_THROW(qft::qft_circuit(0), InputError);
}

TEST(Qft, MatchesDft) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto dft = textbook_dft(n);
    const auto fwd = oracle::circuit_matrix(qft::qft_circuit(n));
    const auto inv = oracle::circuit_matrix(qft::qft_circuit(n, {Direction::inverse, true, FrequencyOrdering::natural}));
    EXPECT_LT(oracle::max_abs(fwd - dft), 1e-12) << n;
    EXPECT_LT(oracle::max_abs(inv - dft.adjoint()), 1e-12) << n;
    EXPECT_LT(oracle::max_abs(inv * fwd - oracle::DenseOperator::Identity(fwd.rows(), fwd.cols())), 1e-12);
    EXPECT_LT(oracle::max_abs(fwd.adjoint() * fwd - oracle::DenseOperator::Identity(fwd.rows(), fwd.cols())),
              1e-12);
    EXPECT_LT(oracle::max_abs(fwd - oracle::dft_matrix(n, FrequencyOrdering::natural)), 1e-12);
  }
}

TEST(Qft, CenteredOrderingShiftsByHalf) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::size_t N = std::size_t{1} << n;
    const auto c = oracle::circuit_matrix(qft::qft_circuit(n, {Direction::forward, true, FrequencyOrdering::centered}));
    const auto dft = textbook_dft(n);
    for (std::size_t k = 0; k < N; ++k) {
      for (std::size_t j = 0; j < N; ++j) {
        const double sign = (j % 2) ? -1.0 : 1.0;
        EXPECT_LT(std::abs(c(k, j) - sign * dft(k, j)), 1e-12);
      }
    }
    EXPECT_LT(oracle::max_abs(c - oracle::dft_matrix(n, FrequencyOrdering::centered)), 1e-12);
  }
}

TEST(Qft, WithoutSwapsOutputIsBitReversed) {
  const std::size_t n = 3;
  const auto c = oracle::circuit_matrix(qft::qft_circuit(n, {Direction::forward, false, FrequencyOrdering::natural}));
  const auto dft = textbook_dft(n);
  auto rev = [](std::size_t k) { return ((k & 1) << 2) | (k & 2) | ((k >> 2) & 1); };
  for (std::size_t k = 0; k < 8; ++k) {
    for (std::size_t j = 0; j < 8; ++j) EXPECT_LT(std::abs(c(rev(k), j) - dft(k, j)), 1e-12);
  }
}

TEST(Qft, DeltaGoesUniform) {
  const auto s = apply_circuit(new_basis_state(3, 0), qft::qft_circuit(3));
  for (std::size_t i = 0; i < 8; ++i) EXPECT_LT(std::abs(s[i] - 1.0 / std::sqrt(8.0)), 1e-14);
}

TEST(Qft, ForwardThenInverseOnRandomStates) {
  std::mt19937_64 rng(31);
  const auto fwd = qft::qft_circuit(3);
  const auto inv = qft::qft_circuit(3, {Direction::inverse, true, FrequencyOrdering::natural});
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = fixture::random_state(3, rng);
    const auto back = apply_circuit(apply_circuit(s, fwd), inv);
    EXPECT_LT(fixture::max_diff(back.amplitudes(), s.amplitudes()), 1e-12);
  }
}

TEST(Qft, GateCounts) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto c = qft::qft_circuit(n).counts();
    EXPECT_EQ(c.hadamard, n);
    EXPECT_EQ(c.cphase, n * (n - 1) / 2);
    EXPECT_EQ(c.swap, n / 2);
    EXPECT_EQ(c.total(), n + n * (n - 1) / 2 + n / 2);
  }
}

TEST(Qft, ShiftPhaseDuality) {
  // |j+1> transforms to the |j> spectrum times e^{2 pi i k / N}.
  const std::size_t n = 4, N = 16;
  const auto fwd = qft::qft_circuit(n);
  for (std::uint64_t j = 0; j + 1 < N; ++j) {
    const auto a = apply_circuit(new_basis_state(n, j), fwd);
    const auto b = apply_circuit(new_basis_state(n, j + 1), fwd);
    for (std::size_t k = 0; k < N; ++k) {
      EXPECT_LT(std::abs(b[k] - a[k] * std::polar(1.0, 2 * M_PI * double(k) / double(N))), 1e-12);
    }
  }
}

TEST(MomentumGrid, Orderings) {
  const auto p1 = qft::momentum_grid(1, 1.0, FrequencyOrdering::natural);
  ASSERT_EQ(p1.size(), 2u);
  EXPECT_EQ(p1[0], 0.0);
  EXPECT_NEAR(p1[1], M_PI, 1e-15);

  const auto nat = qft::momentum_grid(3, 1.0, FrequencyOrdering::natural);
  const double u = 2 * M_PI / 8;
  const std::vector<double> want = {0, u, 2 * u, 3 * u, 4 * u, -3 * u, -2 * u, -u};
  for (std::size_t l = 0; l < 8; ++l) EXPECT_NEAR(nat[l], want[l], 1e-14);

  const auto cen = qft::momentum_grid(3, 1.0, FrequencyOrdering::centered);
  for (std::size_t l = 0; l < 8; ++l) EXPECT_NEAR(cen[l], (double(l) - 4) * u, 1e-14);
  EXPECT_EQ(cen[4], 0.0);
  EXPECT_THROW(qft::momentum_grid(3, 0.0, FrequencyOrdering::natural), InputError);
}

TEST(MomentumGrid, PrintedKineticDiagonal) {
  // Printed T x 1e3, with the last entry's sign corrected.
  const std::vector<double> printed = {0, 0.91, 3.63, 8.16, 14.51, 8.16, 3.63, 0.91};
  const auto p = qft::momentum_grid(3, fixture::kPaperDx, FrequencyOrdering::natural);
  for (std::size_t l = 0; l < 8; ++l) {
    const double t = p[l] * p[l] / (2 * fixture::kProtonMass) * 1e3;
    if (l == 0) {
      EXPECT_EQ(t, 0.0);
    } else {
      EXPECT_NEAR(t, printed[l], 0.02 * printed[l]) << l;
    }
  }
}
