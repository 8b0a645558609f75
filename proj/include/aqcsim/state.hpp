#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "aqcsim/limits.hpp"

namespace aqcsim {

/// 2^N complex amplitudes over the computational basis. Bit (i - 1) of the
/// basis index is 0 when site i is up (sigma^z = +1) and 1 when it is down.
class StateVector {
 public:
  /// Zero vector on `num_sites` spins.
  explicit StateVector(int num_sites, const ResourceLimits& limits = {});
  StateVector(int num_sites, std::vector<std::complex<double>> amplitudes);

  int num_sites() const { return num_sites_; }
  std::size_t dimension() const { return amplitudes_.size(); }

  std::span<std::complex<double>> amplitudes() { return amplitudes_; }
  std::span<const std::complex<double>> amplitudes() const { return amplitudes_; }

  std::complex<double>& operator[](std::size_t i) { return amplitudes_[i]; }
  const std::complex<double>& operator[](std::size_t i) const { return amplitudes_[i]; }

  /// Interleaved (re, im) view used by the kernels.
  double* raw() { return reinterpret_cast<double*>(amplitudes_.data()); }
  const double* raw() const { return reinterpret_cast<const double*>(amplitudes_.data()); }

  double norm_squared() const;

  StateVector& operator*=(std::complex<double> factor);

 private:
  int num_sites_;
  std::vector<std::complex<double>> amplitudes_;
};

enum class Spin { up, down };

/// prod_i |+>_i: every amplitude equals 2^(-N/2).
StateVector make_paramagnetic(int n_sites, const ResourceLimits& limits = {});

/// All spins up (index 0) or all down (index 2^N - 1).
StateVector make_ferromagnet(int n_sites, Spin direction, const ResourceLimits& limits = {});

/// (|all up> + |all down>) / sqrt(2). The 2D GHZ state of an r x c grid is
/// make_ghz(r * c) under the row-major site flattening.
StateVector make_ghz(int n_sites, const ResourceLimits& limits = {});

StateVector make_basis_state(int n_sites, std::uint64_t index, const ResourceLimits& limits = {});

/// <a|b>. Throws DimensionMismatch.
std::complex<double> inner_product(const StateVector& a, const StateVector& b);

/// |<a|b>|^2, invariant under a global phase of either argument.
double fidelity(const StateVector& a, const StateVector& b);

/// |<F_up|v>|^2 + |<F_down|v>|^2: GHZ-subspace weight that ignores the
/// relative phase between the two ferromagnetic branches.
double ferro_subspace_weight(const StateVector& v);

}  // namespace aqcsim
