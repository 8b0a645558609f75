#pragma once

#include <variant>

#include "aqcsim/hamiltonian.hpp"
#include "aqcsim/limits.hpp"

namespace aqcsim {

/// Periodic XY chain in a transverse field, couplings along z and y and the
/// field along x:
///   H = -sum_i [(1+gamma)/2 Z_i Z_{i+1} + (1-gamma)/2 Y_i Y_{i+1}] - lambda sum_i X_i
/// with site N+1 identified with site 1.
struct XYParams {
  int n_sites = 0;
  double gamma = 1.0;
  double lambda = 0.0;
};

/// Open-boundary square-lattice Ising model in a transverse field:
///   H = -sum_<ij> Z_i Z_j - lambda sum_i X_i
struct GridParams {
  int rows = 0;
  int cols = 0;
  double lambda = 0.0;
};

using ModelParams = std::variant<XYParams, GridParams>;

int num_sites(const ModelParams& model);

/// Throws InvalidArgument for n < 3, gamma outside [0, 1], negative or
/// non-finite lambda; CapExceeded above limits.max_sites.
Hamiltonian build_xy_chain(const XYParams& params, const ResourceLimits& limits = {});

/// Sites are flattened row-major; the result is a 1D chain with the grid's
/// nearest-neighbour bonds as long-range couplings.
Hamiltonian build_ising_grid(const GridParams& params, const ResourceLimits& limits = {});

Hamiltonian build(const ModelParams& model, const ResourceLimits& limits = {});

/// H0 = -sum_i X_i on n sites.
Hamiltonian transverse_driver(int n_sites);

struct DriverProblemSplit {
  Hamiltonian h0;  // -sum_i X_i
  Hamiltonian hp;  // model Hamiltonian without its field term
};

/// Splits H(lambda) = lambda * h0 + hp. The model's own lambda is ignored
/// beyond validation.
DriverProblemSplit split_driver_problem(const ModelParams& model, const ResourceLimits& limits = {});

}  // namespace aqcsim
