#pragma once

#include <Eigen/Core>

#include "aqcsim/hamiltonian.hpp"
#include "aqcsim/lattice.hpp"
#include "aqcsim/operator.hpp"
#include "aqcsim/state.hpp"

namespace aqcsim {

/// Re <v|H|v>. Throws Error if the imaginary part exceeds 1e-10, which can
/// only happen for a broken (non-Hermitian) operator.
double energy_expectation(const Hamiltonian& h, const StateVector& v);
double energy_expectation(const CompiledOperator& h, const StateVector& v);

/// 2x2 density matrix of one site with every other site traced out.
Eigen::Matrix2cd reduced_density_matrix(const StateVector& v, SiteIndex site);

/// Von Neumann entropy in bits of the single-site reduced state: 0 for
/// product states, 1 for the GHZ state.
double single_site_entropy(const StateVector& v, SiteIndex site);

}  // namespace aqcsim
