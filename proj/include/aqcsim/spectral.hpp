#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "aqcsim/hamiltonian.hpp"
#include "aqcsim/limits.hpp"
#include "aqcsim/schedule.hpp"

namespace aqcsim {

enum class EigenMethod {
  automatic,  // dense up to dense_max_sites, Krylov above
  dense,
  krylov,
};

struct EigenSolverOptions {
  EigenMethod method = EigenMethod::automatic;
  int dense_max_sites = 10;
  /// Split into the two eigenspaces of prod_i X_i when the Hamiltonian
  /// commutes with it.
  bool use_parity = true;
  /// Krylov convergence: every returned Ritz pair has ||H x - theta x|| <= tol.
  double residual_tolerance = 1e-10;
  int max_restarts = 400;
  /// Krylov basis size per restart cycle; 0 picks max(8 * block, 64).
  int max_basis = 0;
  /// Extra block columns beyond k; the block size bounds the multiplicity
  /// that can be resolved within one parity sector.
  int block_extra = 2;
  std::uint64_t seed = 0x5eedf00dULL;
  ResourceLimits limits{};
};

/// The k smallest eigenvalues of h in ascending order, degenerate values
/// repeated. Throws InvalidArgument unless 1 <= k <= 2^N, ConvergenceError
/// when the Krylov solver hits its restart cap.
std::vector<double> lowest_eigenvalues(const Hamiltonian& h, int k, const EigenSolverOptions& options = {});

/// Lowest eigenvalues of each parity sector (+1 first, then -1). Requires
/// h.has_parity_symmetry().
struct ParityResolvedSpectrum {
  std::vector<double> even;
  std::vector<double> odd;
};
ParityResolvedSpectrum lowest_eigenvalues_by_parity(const Hamiltonian& h, int k,
                                                    const EigenSolverOptions& options = {});

struct Gaps {
  double delta01 = 0.0;  // E1 - E0
  double delta12 = 0.0;  // E2 - E1
};

/// Consecutive differences of the three lowest values of an ascending
/// sequence. Throws InvalidArgument for fewer than three.
Gaps gaps(std::span<const double> eigenvalues);

/// Where a spectrum was taken.
struct SpectrumPoint {
  int n_sites = 0;
  double gamma = 0.0;
  double lambda = 0.0;  // +inf where the schedule weight g(s) vanishes
  std::optional<double> s;
  std::optional<ScheduleKind> schedule;
};

struct SpectrumSlice {
  SpectrumPoint point;
  std::vector<double> eigenvalues;
  double delta01 = 0.0;
  double delta12 = 0.0;

  /// Computes the gaps; needs at least three eigenvalues.
  static SpectrumSlice make(SpectrumPoint point, std::vector<double> eigenvalues);
};

}  // namespace aqcsim
