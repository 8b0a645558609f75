#include "aqcsim/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <memory>
#include <string>

#include "aqcsim/errors.hpp"
#include "aqcsim/operator.hpp"
#include "block_lanczos.hpp"

namespace aqcsim {
namespace {

std::vector<double> lowest_of(const Eigen::MatrixXd& m, int k) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  const auto& w = es.eigenvalues();
  return {w.data(), w.data() + std::min<Eigen::Index>(k, w.size())};
}

// Sector basis |b>_{+-} = (|b> +- |~b>) / sqrt(2) for b below half the
// dimension, ~b the global spin flip of b.
Eigen::MatrixXd sector_matrix(const Eigen::MatrixXd& full, int sign) {
  const Eigen::Index dim = full.rows();
  const Eigen::Index half = dim / 2;
  Eigen::MatrixXd m(half, half);
  for (Eigen::Index c = 0; c < half; ++c) {
    const Eigen::Index cf = dim - 1 - c;
    for (Eigen::Index a = 0; a < half; ++a) {
      const Eigen::Index af = dim - 1 - a;
      m(a, c) = 0.5 * (full(a, c) + sign * full(a, cf) + sign * full(af, c) + full(af, cf));
    }
  }
  return m;
}

bool use_dense(const Hamiltonian& h, const EigenSolverOptions& o) {
  switch (o.method) {
    case EigenMethod::dense: return true;
    case EigenMethod::krylov: return false;
    case EigenMethod::automatic: return h.num_sites() <= o.dense_max_sites;
  }
  return true;
}

detail::BlockLanczosOptions krylov_options(const EigenSolverOptions& o) {
  return {o.residual_tolerance, o.max_restarts, o.max_basis, o.block_extra, o.seed};
}

// Matrix-free restriction of op to one parity sector. The sector vector x is
// embedded unnormalized as sum_b x_b (|b> + sign |~b>); H maps the sector to
// itself, so the first half of the product is the sector image.
detail::RealMatVec sector_operator(const CompiledOperator& op, int sign) {
  const std::size_t dim = op.dimension();
  const std::size_t half = dim / 2;
  auto in = std::make_shared<std::vector<double>>(dim);
  auto out = std::make_shared<std::vector<double>>(dim);
  return [&op, sign, dim, half, in, out](const double* x, double* y) {
    double* full = in->data();
    for (std::size_t b = 0; b < half; ++b) {
      full[b] = x[b];
      full[dim - 1 - b] = sign * x[b];
    }
    op.apply(full, out->data(), 1);
    std::copy_n(out->data(), half, y);
  };
}

std::vector<double> merge_lowest(std::vector<double> a, const std::vector<double>& b, int k) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.resize(std::min<std::size_t>(a.size(), static_cast<std::size_t>(k)));
  return a;
}

void check_k(const Hamiltonian& h, int k) {
  if (k < 1 || static_cast<std::uint64_t>(k) > h.dimension()) {
    throw InvalidArgument("k=" + std::to_string(k) + " outside [1, " + std::to_string(h.dimension()) + "]");
  }
}

}  // namespace

ParityResolvedSpectrum lowest_eigenvalues_by_parity(const Hamiltonian& h, int k, const EigenSolverOptions& options) {
  check_k(h, k);
  if (!h.has_parity_symmetry()) throw InvalidArgument("Hamiltonian does not commute with the global spin flip");
  const std::size_t half = h.dimension() / 2;
  const int k_sector = static_cast<int>(std::min<std::size_t>(half, static_cast<std::size_t>(k)));

  // Krylov needs headroom; fall back to dense when k is a sizeable fraction.
  const bool dense = use_dense(h, options) ||
                     (static_cast<std::size_t>(k_sector + options.block_extra) * 4 > half &&
                      h.num_sites() <= options.limits.dense_max_sites);
  if (dense) {
    const Eigen::MatrixXd full = to_dense(h, options.limits);
    return {lowest_of(sector_matrix(full, +1), k_sector), lowest_of(sector_matrix(full, -1), k_sector)};
  }
  const CompiledOperator op(h);
  const auto opts = krylov_options(options);
  return {detail::block_lanczos_lowest(sector_operator(op, +1), half, k_sector, opts),
          detail::block_lanczos_lowest(sector_operator(op, -1), half, k_sector, opts)};
}

std::vector<double> lowest_eigenvalues(const Hamiltonian& h, int k, const EigenSolverOptions& options) {
  check_k(h, k);
  if (options.use_parity && h.has_parity_symmetry()) {
    const auto sectors = lowest_eigenvalues_by_parity(h, k, options);
    return merge_lowest(sectors.even, sectors.odd, k);
  }
  const bool dense = use_dense(h, options) ||
                     (static_cast<std::uint64_t>(k + options.block_extra) * 4 > h.dimension() &&
                      h.num_sites() <= options.limits.dense_max_sites);
  if (dense) return lowest_of(to_dense(h, options.limits), k);
  const CompiledOperator op(h);
  const detail::RealMatVec matvec = [&op](const double* x, double* y) { op.apply(x, y, 1); };
  return detail::block_lanczos_lowest(matvec, h.dimension(), k, krylov_options(options));
}

Gaps gaps(std::span<const double> eigenvalues) {
  if (eigenvalues.size() < 3) {
    throw InvalidArgument("gaps need at least three eigenvalues, got " + std::to_string(eigenvalues.size()));
  }
  return {eigenvalues[1] - eigenvalues[0], eigenvalues[2] - eigenvalues[1]};
}

SpectrumSlice SpectrumSlice::make(SpectrumPoint point, std::vector<double> eigenvalues) {
  const Gaps g = gaps(eigenvalues);
  return {point, std::move(eigenvalues), g.delta01, g.delta12};
}

}  // namespace aqcsim
