#pragma once

#include <span>
#include <vector>

#include "aqcsim/hamiltonian.hpp"
#include "aqcsim/simd/kernels.hpp"
#include "aqcsim/state.hpp"

namespace aqcsim {

/// Matrix-free form of a Hamiltonian: one diagonal (all Z-only terms summed)
/// plus one gather-form flip term per off-diagonal Pauli string.
///
/// apply() writes out = D * in, then adds the flip terms one by one in term
/// order. Each output element therefore sees a fixed summation order that
/// does not depend on the kernel ISA, and the result is bitwise reproducible.
class CompiledOperator {
 public:
  CompiledOperator() = default;
  explicit CompiledOperator(const Hamiltonian& h);

  /// a * A + b * B on the same site count.
  static CompiledOperator combine(double a, const CompiledOperator& A, double b, const CompiledOperator& B);

  int num_sites() const { return num_sites_; }
  std::size_t dimension() const { return std::size_t{1} << num_sites_; }

  /// out = H * in. `width` is 1 for real and 2 for interleaved complex vectors.
  void apply(const double* in, double* out, int width, const simd::KernelTable& k) const;
  void apply(const double* in, double* out, int width) const { apply(in, out, width, simd::active_kernels()); }

  std::span<const double> diagonal() const { return diag_; }
  std::span<const simd::FlipTerm> flip_terms() const { return flips_; }

  /// Upper bound on the spectral radius: max|diag| + sum |flip coef|.
  double norm_bound() const;

 private:
  int num_sites_ = 0;
  std::vector<double> diag_;  // empty when no diagonal terms
  std::vector<simd::FlipTerm> flips_;
};

/// H * v computed term by term from the bit representation. Throws
/// DimensionMismatch.
StateVector apply(const Hamiltonian& h, const StateVector& v);

}  // namespace aqcsim
