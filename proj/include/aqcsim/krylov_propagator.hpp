#pragma once

#include <complex>
#include <vector>

#include "aqcsim/operator.hpp"
#include "aqcsim/simd/kernels.hpp"
#include "aqcsim/state.hpp"

namespace aqcsim {

/// psi <- exp(-i tau A) psi for a real symmetric A, via a Lanczos basis with
/// full reorthogonalization and an exact exponential of the projected
/// tridiagonal matrix. The subspace grows until the a-posteriori estimate
/// beta_m |[exp(-i tau T_m) e_1]_m| drops below `tolerance` (relative to
/// ||psi||); if `max_dim` is reached first, tau is halved and retried.
///
/// The result is V_m y with ||y|| = 1 and V_m orthonormal, so the norm is
/// preserved to rounding regardless of the step size.
class KrylovPropagator {
 public:
  explicit KrylovPropagator(std::size_t dimension, int max_dim = 40, double tolerance = 1e-13);

  /// Returns the largest subspace dimension used.
  int propagate(const CompiledOperator& a, double tau, StateVector& psi,
                const simd::KernelTable& k = simd::active_kernels());

 private:
  bool try_propagate(const CompiledOperator& a, double tau, StateVector& psi, const simd::KernelTable& k,
                     int& used);

  std::size_t dim_;
  int max_dim_;
  double tol_;
  std::vector<std::vector<std::complex<double>>> basis_;
  std::vector<std::complex<double>> w_;
};

}  // namespace aqcsim
