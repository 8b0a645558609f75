#include "aqcsim/observables.hpp"

#include <cmath>
#include <string>

#include "aqcsim/errors.hpp"

namespace aqcsim {

double energy_expectation(const CompiledOperator& h, const StateVector& v) {
  if (v.num_sites() != h.num_sites()) throw DimensionMismatch("state and operator site counts differ");
  std::vector<std::complex<double>> hv(v.dimension());
  const auto& k = simd::active_kernels();
  h.apply(v.raw(), reinterpret_cast<double*>(hv.data()), 2, k);
  const std::complex<double> e = k.cdot(v.raw(), reinterpret_cast<const double*>(hv.data()), v.dimension());
  if (std::abs(e.imag()) > 1e-10) {
    throw Error("energy expectation has imaginary part " + std::to_string(e.imag()) + "; operator is not Hermitian");
  }
  return e.real();
}

double energy_expectation(const Hamiltonian& h, const StateVector& v) {
  if (v.num_sites() != h.num_sites()) throw DimensionMismatch("state and Hamiltonian site counts differ");
  return energy_expectation(CompiledOperator(h), v);
}

Eigen::Matrix2cd reduced_density_matrix(const StateVector& v, SiteIndex site) {
  if (site.value() < 1 || site.value() > v.num_sites()) {
    throw InvalidArgument("site " + std::to_string(site.value()) + " outside [1, " + std::to_string(v.num_sites()) +
                          "]");
  }
  const std::size_t bit = std::size_t{1} << site.bit();
  double p_up = 0.0;
  double p_down = 0.0;
  std::complex<double> coherence{0.0, 0.0};
  for (std::size_t b = 0; b < v.dimension(); ++b) {
    if (b & bit) continue;
    const auto up = v[b];
    const auto down = v[b | bit];
    p_up += std::norm(up);
    p_down += std::norm(down);
    coherence += up * std::conj(down);
  }
  Eigen::Matrix2cd rho;
  rho << p_up, coherence, std::conj(coherence), p_down;
  return rho;
}

double single_site_entropy(const StateVector& v, SiteIndex site) {
  const Eigen::Matrix2cd rho = reduced_density_matrix(v, site);
  const double a = rho(0, 0).real();
  const double d = rho(1, 1).real();
  const double trace = a + d;
  const double split = std::sqrt((a - d) * (a - d) + 4.0 * std::norm(rho(0, 1)));
  double entropy = 0.0;
  for (double p : {(trace + split) / 2.0, (trace - split) / 2.0}) {
    if (p < 0.0 && p >= -1e-12) p = 0.0;
    if (p < 0.0) throw Error("reduced density matrix has a negative eigenvalue " + std::to_string(p));
    if (p > 0.0) entropy -= p * std::log2(p);
  }
  return entropy;
}

}  // namespace aqcsim
