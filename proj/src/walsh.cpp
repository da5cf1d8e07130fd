#include "qtunnel/walsh.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <optional>
#include <string>

#include "qtunnel/errors.hpp"

namespace qtunnel::walsh {

namespace {

std::uint64_t reverse_bits(std::uint64_t v, std::size_t n) {
  std::uint64_t r = 0;
  for (std::size_t k = 0; k < n; ++k) r |= ((v >> k) & 1U) << (n - 1 - k);
  return r;
}

// In-place unnormalized Walsh-Hadamard butterfly: h_m = sum_i x_i (-1)^{popcount(i & m)}.
void fwht(std::vector<double>& x) {
  for (std::size_t len = 1; len < x.size(); len <<= 1) {
    for (std::size_t i = 0; i < x.size(); i += len << 1) {
      for (std::size_t j = i; j < i + len; ++j) {
        const double u = x[j];
        const double v = x[j + len];
        x[j] = u + v;
        x[j + len] = u - v;
      }
    }
  }
}

void require_index(std::uint64_t v, std::size_t n, const char* what) {
  if (n == 0 || n >= 64 || v >= (std::uint64_t{1} << n)) {
    throw InputError(std::string(what) + " " + std::to_string(v) + " out of range for " + std::to_string(n) +
                     " qubits");
  }
}

Qubit highest_qubit(std::uint64_t mask) { return static_cast<Qubit>(std::bit_width(mask) - 1); }

}  // namespace

PhaseFunction::PhaseFunction(std::size_t n_qubits, std::vector<double> samples)
    : n_qubits_(n_qubits), samples_(std::move(samples)) {
  if (n_qubits == 0 || n_qubits > 30) throw InputError("phase function needs 1..30 qubits");
  if (samples_.size() != (std::size_t{1} << n_qubits)) {
    throw InputError("phase function on " + std::to_string(n_qubits) + " qubits needs " +
                     std::to_string(std::size_t{1} << n_qubits) + " samples, got " +
                     std::to_string(samples_.size()));
  }
  for (double s : samples_) {
    if (!std::isfinite(s)) throw InputError("phase function sample is not finite");
  }
}

std::vector<double> WalshSpectrum::expand() const {
  std::vector<double> h = coefficients;
  fwht(h);
  std::vector<double> f(h.size());
  for (std::size_t j = 0; j < f.size(); ++j) f[j] = h[reverse_bits(j, n_qubits)];
  return f;
}

int walsh_value(std::uint64_t i, std::uint64_t j, std::size_t n_qubits) {
  require_index(i, n_qubits, "Paley index");
  require_index(j, n_qubits, "grid index");
  return (std::popcount(i & reverse_bits(j, n_qubits)) & 1) ? -1 : 1;
}

WalshSpectrum walsh_transform(const PhaseFunction& f) {
  const std::size_t n = f.n_qubits();
  const std::size_t dim = f.samples().size();
  std::vector<double> g(dim);
  for (std::size_t k = 0; k < dim; ++k) g[k] = f.samples()[reverse_bits(k, n)];
  fwht(g);
  for (auto& v : g) v /= static_cast<double>(dim);
  return WalshSpectrum{n, std::move(g)};
}

std::vector<Qubit> walsh_operator_mask(std::uint64_t i, std::size_t n_qubits) {
  require_index(i, n_qubits, "Paley index");
  std::vector<Qubit> qubits;
  for (std::size_t k = 0; k < n_qubits; ++k) {
    if ((i >> k) & 1U) qubits.push_back(k);
  }
  return qubits;
}

std::uint64_t inverse_gray_code(std::uint64_t g) {
  std::uint64_t k = g;
  for (std::uint64_t shift = g >> 1; shift != 0; shift >>= 1) k ^= shift;
  return k;
}

std::vector<std::uint64_t> gray_order(std::vector<std::uint64_t> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  if (indices.empty()) return {};
  if (indices.front() == 0) throw InputError("gray_order takes Paley indices >= 1 (index 0 is the global phase)");

  auto by_sequency = [](std::uint64_t a, std::uint64_t b) { return inverse_gray_code(a) < inverse_gray_code(b); };
  const std::uint64_t m = indices.size();
  if (std::has_single_bit(m + 1) && indices.back() == m) {
    std::vector<std::uint64_t> out(m);
    for (std::uint64_t k = 1; k <= m; ++k) out[k - 1] = gray_code(k);
    return out;
  }

  std::sort(indices.begin(), indices.end(), by_sequency);
  std::vector<std::uint64_t> out;
  out.reserve(indices.size());
  std::vector<bool> used(indices.size(), false);
  std::size_t cur = 0;
  used[0] = true;
  out.push_back(indices[0]);
  for (std::size_t step = 1; step < indices.size(); ++step) {
    std::size_t best = indices.size();
    int best_dist = 65;
    for (std::size_t c = 0; c < indices.size(); ++c) {
      if (used[c]) continue;
      const int d = std::popcount(indices[c] ^ indices[cur]);
      if (d < best_dist) {  // ties keep the lower sequency rank
        best_dist = d;
        best = c;
      }
    }
    used[best] = true;
    out.push_back(indices[best]);
    cur = best;
  }
  return out;
}

Circuit synthesize_from_spectrum(const WalshSpectrum& spectrum, const SynthesisOptions& opts) {
  if (!std::isfinite(opts.truncation_threshold) || opts.truncation_threshold < 0.0) {
    throw InputError("truncation threshold must be finite and non-negative");
  }
  const std::size_t n = spectrum.n_qubits;
  const auto& a = spectrum.coefficients;
  Circuit c(n);

  if (a[0] != 0.0) c.add(GlobalPhase{a[0]});

  std::vector<std::uint64_t> kept;
  for (std::uint64_t i = 1; i < a.size(); ++i) {
    if (a[i] != 0.0 && std::abs(a[i]) >= opts.truncation_threshold) kept.push_back(i);
  }
  if (opts.ordering == TermOrdering::sequency_gray) kept = gray_order(std::move(kept));

  // At most one wire (the current chain target) holds a parity other than
  // its own bit; `content` is that parity as a qubit bitmask.
  std::optional<Qubit> dirty;
  std::uint64_t content = 0;
  auto set_wire = [&](Qubit t, std::uint64_t want) {
    const std::uint64_t own = std::uint64_t{1} << t;
    const std::uint64_t cur = (dirty && *dirty == t) ? content : own;
    const std::uint64_t delta = cur ^ want;
    for (Qubit q = 0; q < n; ++q) {
      if ((delta >> q) & 1U) c.add(ControlledNot{q, t});
    }
    if (want == own) {
      dirty.reset();
    } else {
      dirty = t;
      content = want;
    }
  };

  for (std::uint64_t i : kept) {
    const Qubit t = highest_qubit(i);
    if (dirty && *dirty != t) set_wire(*dirty, std::uint64_t{1} << *dirty);
    set_wire(t, i);
    c.add(RotationZ{t, -2.0 * a[i]});
    if (!opts.cancel_cnots) set_wire(t, std::uint64_t{1} << t);
  }
  if (dirty) set_wire(*dirty, std::uint64_t{1} << *dirty);
  return c;
}

Circuit synthesize_diagonal(const PhaseFunction& f, const SynthesisOptions& opts) {
  return synthesize_from_spectrum(walsh_transform(f), opts);
}

}  // namespace qtunnel::walsh
