#include "qtunnel/model.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <string>

#include "qtunnel/errors.hpp"

namespace qtunnel::model {

void GridSpec::validate() const {
  if (n_qubits == 0 || n_qubits > 20) throw InputError("grid needs 1..20 qubits");
  if (!(dx > 0.0) || !std::isfinite(dx)) throw InputError("grid spacing dx must be positive");
  if (!std::isfinite(x_min)) throw InputError("grid x_min must be finite");
}

std::vector<double> GridSpec::points() const {
  validate();
  std::vector<double> x(size());
  for (std::size_t l = 0; l < x.size(); ++l) x[l] = x_min + static_cast<double>(l) * dx;
  return x;
}

void PotentialParams::validate() const {
  if (!(x0 > 0.0) || !std::isfinite(x0)) throw InputError("potential x0 must be positive");
  if (!std::isfinite(v_b) || !std::isfinite(delta)) throw InputError("potential parameters must be finite");
  if (!(v_b > delta / 2)) throw InputError("potential needs Vb > delta/2 for two wells");
}

void PulseEnvelope::validate() const {
  if (!std::isfinite(eps0)) throw InputError("field amplitude must be finite");
  if (!(0.0 < tau1 && tau1 < tau2 && tau2 < t_f)) throw InputError("pulse needs 0 < tau1 < tau2 < t_f");
}

void DiagonalOperator::validate(std::size_t n_qubits) const {
  if (values.size() != (std::size_t{1} << n_qubits)) {
    throw InputError("diagonal has " + std::to_string(values.size()) + " entries, expected " +
                     std::to_string(std::size_t{1} << n_qubits));
  }
  for (double v : values) {
    if (!std::isfinite(v)) throw InputError("diagonal entry is not finite");
  }
}

void MassParam::validate() const {
  if (!(m > 0.0) || !std::isfinite(m)) throw InputError("mass must be positive");
}

double potential_value(double x, const PotentialParams& p) {
  const double quartic = (p.v_b - p.delta / 2) / std::pow(p.x0, 4);
  const double a = x - p.x0;
  const double b = x + p.x0;
  return p.delta / (2 * p.x0) * a + quartic * a * a * b * b;
}

double potential_derivative(double x, const PotentialParams& p) {
  // d/dx (x^2 - x0^2)^2 = 4 x (x^2 - x0^2)
  const double quartic = (p.v_b - p.delta / 2) / std::pow(p.x0, 4);
  return p.delta / (2 * p.x0) + quartic * 4 * x * (x * x - p.x0 * p.x0);
}

DiagonalOperator potential_diagonal(const GridSpec& grid, const PotentialParams& p) {
  p.validate();
  DiagonalOperator d{Basis::position, grid.points(), Source::analytic};
  for (auto& v : d.values) v = potential_value(v, p);
  return d;
}

DiagonalOperator kinetic_diagonal(const GridSpec& grid, const MassParam& m, qft::FrequencyOrdering ordering) {
  grid.validate();
  m.validate();
  DiagonalOperator d{Basis::momentum, qft::momentum_grid(grid.n_qubits, grid.dx, ordering), Source::analytic};
  for (auto& v : d.values) v = v * v / (2 * m.m);
  return d;
}

DiagonalOperator dipole_diagonal(const GridSpec& grid) {
  return DiagonalOperator{Basis::position, grid.points(), Source::analytic};
}

DiagonalOperator explicit_diagonal(Basis basis, std::vector<double> values) {
  return DiagonalOperator{basis, std::move(values), Source::explicit_values};
}

FieldSample field_sample(double t, const PulseEnvelope& env) {
  using std::numbers::pi;
  if (t < 0.0 || t > env.t_f) return {0.0, true};
  double shape = 1.0;
  if (t <= env.tau1) {
    const double s = std::sin(pi * t / (2 * env.tau1));
    shape = s * s;
  } else if (t >= env.tau2) {
    const double s = std::sin(pi * (env.t_f - t) / (2 * (env.t_f - env.tau2)));
    shape = s * s;
  }
  return {env.eps0 * shape, false};
}

double field_at(double t, const PulseEnvelope& env) { return field_sample(t, env).value; }

void write_values(std::ostream& os, const std::vector<double>& values) {
  char buf[40];
  for (double v : values) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    os << buf << '\n';
  }
}

std::vector<double> read_values(std::istream& is) {
  std::vector<double> out;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stod(line.substr(b), &used));
      if (line.find_first_not_of(" \t\r", b + used) != std::string::npos) throw std::invalid_argument(line);
    } catch (const std::exception&) {
      throw InputError("line " + std::to_string(line_no) + ": not a number: '" + line + "'");
    }
  }
  return out;
}

}  // namespace qtunnel::model
