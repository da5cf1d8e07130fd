#pragma once

// One-dimensional double-well model in atomic units (hbar = e = 1).

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "qtunnel/qft.hpp"

namespace qtunnel::model {

/// x_l = x_min + l * dx for l in [0, 2^n).
struct GridSpec {
  std::size_t n_qubits = 3;
  double dx = 1.0;
  double x_min = 0.0;

  void validate() const;
  std::size_t size() const { return std::size_t{1} << n_qubits; }
  std::vector<double> points() const;
};

/// V(x) = D/(2 x0) (x - x0) + (Vb - D/2)/x0^4 (x - x0)^2 (x + x0)^2
struct PotentialParams {
  double x0 = 1.0;     ///< minima at about +-x0
  double v_b = 1.0;    ///< barrier height
  double delta = 0.0;  ///< well asymmetry: V(x0) - V(-x0)

  void validate() const;
};

/// sin^2 ramp up to tau1, flat to tau2, sin^2 ramp down to t_f.
struct PulseEnvelope {
  double eps0 = 0.0;
  double tau1 = 1.0;
  double tau2 = 2.0;
  double t_f = 3.0;

  void validate() const;
};

enum class Basis { position, momentum };
enum class Source { analytic, explicit_values };

struct DiagonalOperator {
  Basis basis = Basis::position;
  std::vector<double> values;
  Source source = Source::analytic;

  /// All values finite; length 2^n when n_qubits is given.
  void validate(std::size_t n_qubits) const;
};

struct MassParam {
  double m = 1.0;
  void validate() const;
};

double potential_value(double x, const PotentialParams& p);
/// dV/dx, used for locating the wells.
double potential_derivative(double x, const PotentialParams& p);

DiagonalOperator potential_diagonal(const GridSpec& grid, const PotentialParams& p);
/// p_l^2 / 2m on the momentum grid in the given ordering.
DiagonalOperator kinetic_diagonal(const GridSpec& grid, const MassParam& m, qft::FrequencyOrdering ordering);
/// Dipole operator mu = e x with e = 1.
DiagonalOperator dipole_diagonal(const GridSpec& grid);
/// Wraps verbatim values (source = explicit_values).
DiagonalOperator explicit_diagonal(Basis basis, std::vector<double> values);

struct FieldSample {
  double value = 0.0;
  bool outside_pulse = false;  ///< t fell outside [0, t_f]; value forced to 0
};

FieldSample field_sample(double t, const PulseEnvelope& env);
double field_at(double t, const PulseEnvelope& env);

// Plain-text exchange for diagonals: one value per line, 17 significant
// digits. Blank lines and '#' comments are skipped on read.
void write_values(std::ostream& os, const std::vector<double>& values);
std::vector<double> read_values(std::istream& is);

}  // namespace qtunnel::model
