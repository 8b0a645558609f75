#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace aqcsim::detail {

/// y = A x for a real symmetric operator of dimension n.
using RealMatVec = std::function<void(const double* x, double* y)>;

struct BlockLanczosOptions {
  double residual_tolerance = 1e-10;
  int max_restarts = 400;
  int max_basis = 0;
  int block_extra = 2;
  std::uint64_t seed = 1;
};

/// k lowest eigenvalues via thick-restarted block Lanczos with full
/// reorthogonalization. Exact multiplicities up to k + block_extra are
/// resolved.
std::vector<double> block_lanczos_lowest(const RealMatVec& op, std::size_t n, int k,
                                         const BlockLanczosOptions& options);

/// Dense fallback: assembles the operator column by column.
std::vector<double> dense_lowest_from_operator(const RealMatVec& op, std::size_t n, int k);

}  // namespace aqcsim::detail
