#include <gtest/gtest.h>

#include "qtunnel/errors.hpp"
#include "qtunnel/gates.hpp"
#include "test_support.hpp"

using namespace qtunnel;

TEST(Gates, NamesMatchTextFormat) {
  EXPECT_EQ(gate_name(Hadamard{0}), "H");
  EXPECT_EQ(gate_name(PauliX{0}), "X");
  EXPECT_EQ(gate_name(RotationZ{0, 1.0}), "RZ");
  EXPECT_EQ(gate_name(Phase{0, 1.0}), "P");
  EXPECT_EQ(gate_name(ControlledNot{0, 1}), "CX");
  EXPECT_EQ(gate_name(ControlledPhase{0, 1, 1.0}), "CP");
  EXPECT_EQ(gate_name(Swap{0, 1}), "SWAP");
  EXPECT_EQ(gate_name(GlobalPhase{1.0}), "GPHASE");
}

TEST(Gates, AddRejectsBadIndices) {
  Circuit c(3);
  EXPECT_THROW(c.add(Hadamard{3}), InputError);
  EXPECT_THROW(c.add(ControlledNot{1, 1}), InputError);
  EXPECT_THROW(c.add(Swap{0, 5}), InputError);
  EXPECT_THROW(c.add(ControlledPhase{2, 2, 0.1}), InputError);
  EXPECT_NO_THROW(c.add(GlobalPhase{0.3}));
  EXPECT_EQ(c.size(), 1u);
  EXPECT_THROW(Circuit(0), InputError);
}

TEST(Gates, AppendNeedsMatchingWidth) {
  Circuit a(2), b(3);
  EXPECT_THROW(a.append(b), InputError);
}

TEST(Gates, InverseNegatesAnglesAndReverses) {
  Circuit c(2);
  c.add(Hadamard{0}).add(RotationZ{1, 0.25}).add(ControlledPhase{0, 1, -0.5}).add(GlobalPhase{0.1});
  const Circuit inv = c.inverse();
  ASSERT_EQ(inv.size(), 4u);
  EXPECT_DOUBLE_EQ(std::get<GlobalPhase>(inv.gates()[0]).phi, -0.1);
  EXPECT_DOUBLE_EQ(std::get<ControlledPhase>(inv.gates()[1]).phi, 0.5);
  EXPECT_DOUBLE_EQ(std::get<RotationZ>(inv.gates()[2]).theta, -0.25);
  EXPECT_EQ(std::get<Hadamard>(inv.gates()[3]).q, 0u);
}

TEST(Gates, Counts) {
  Circuit c(3);
  c.add(Hadamard{0}).add(Hadamard{1}).add(ControlledNot{0, 2}).add(RotationZ{2, 1}).add(GlobalPhase{1});
  const GateCounts n = c.counts();
  EXPECT_EQ(n.hadamard, 2u);
  EXPECT_EQ(n.cnot, 1u);
  EXPECT_EQ(n.rz, 1u);
  EXPECT_EQ(n.global_phase, 1u);
  EXPECT_EQ(n.total(), 5u);
}

TEST(GateText, RotationLineFormat) {
  EXPECT_EQ(to_text(RotationZ{0, 38.083}), "RZ 0,38.083000000000");
  EXPECT_EQ(to_text(ControlledNot{1, 2}), "CX 1,2");
  EXPECT_EQ(to_text(GlobalPhase{-2.5}), "GPHASE -2.500000000000");
}

TEST(GateText, RoundTripRandomCircuits) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Circuit c = fixture::random_circuit(4, 40, rng);
    const Circuit back = circuit_from_text(to_text(c));
    ASSERT_EQ(back.n_qubits(), 4u);
    ASSERT_EQ(back.size(), c.size());
    // Angles are written to 12 decimals, so the text form is a fixed point.
    EXPECT_EQ(to_text(back), to_text(c));
  }
}

TEST(GateText, HeaderlessInfersWidth) {
  const Circuit c = circuit_from_text("H 0\n\n# comment\nCX 0,4\nRZ 2,0.5\n");
  EXPECT_EQ(c.n_qubits(), 5u);
  EXPECT_EQ(c.size(), 3u);
}

TEST(GateText, RejectsMalformedLines) {
  EXPECT_THROW(circuit_from_text("FOO 1\n"), InputError);
  EXPECT_THROW(circuit_from_text("RZ 0\n"), InputError);
  EXPECT_THROW(circuit_from_text("RZ 0,abc\n"), InputError);
  EXPECT_THROW(circuit_from_text("CX 1,1\n"), InputError);
  EXPECT_THROW(circuit_from_text("# qubits: 2\nH 2\n"), InputError);
}
