#include "aqcsim/state.hpp"

#include <cmath>
#include <string>

#include "aqcsim/errors.hpp"
#include "aqcsim/simd/kernels.hpp"

namespace aqcsim {
namespace {

void check_sites(int n, const ResourceLimits& limits) {
  if (n < 1) throw InvalidArgument("state needs at least one site, got " + std::to_string(n));
  if (n > limits.max_sites) {
    throw CapExceeded(std::to_string(n) + " sites exceeds the configured maximum of " +
                      std::to_string(limits.max_sites));
  }
}

}  // namespace

StateVector::StateVector(int num_sites, const ResourceLimits& limits) : num_sites_(num_sites) {
  check_sites(num_sites, limits);
  amplitudes_.assign(std::size_t{1} << num_sites, {0.0, 0.0});
}

StateVector::StateVector(int num_sites, std::vector<std::complex<double>> amplitudes)
    : num_sites_(num_sites), amplitudes_(std::move(amplitudes)) {
  if (num_sites < 1 || num_sites > 62 || amplitudes_.size() != (std::size_t{1} << num_sites)) {
    throw DimensionMismatch("amplitude count " + std::to_string(amplitudes_.size()) + " is not 2^" +
                            std::to_string(num_sites));
  }
}

double StateVector::norm_squared() const {
  const auto& k = simd::active_kernels();
  return k.dot(raw(), raw(), 2 * dimension());
}

StateVector& StateVector::operator*=(std::complex<double> factor) {
  for (auto& a : amplitudes_) a *= factor;
  return *this;
}

StateVector make_paramagnetic(int n_sites, const ResourceLimits& limits) {
  StateVector v(n_sites, limits);
  const double amp = std::pow(2.0, -0.5 * n_sites);
  for (auto& a : v.amplitudes()) a = amp;
  return v;
}

StateVector make_ferromagnet(int n_sites, Spin direction, const ResourceLimits& limits) {
  StateVector v(n_sites, limits);
  v[direction == Spin::up ? 0 : v.dimension() - 1] = 1.0;
  return v;
}

StateVector make_ghz(int n_sites, const ResourceLimits& limits) {
  StateVector v(n_sites, limits);
  const double amp = 1.0 / std::sqrt(2.0);
  v[0] = amp;
  v[v.dimension() - 1] = amp;
  return v;
}

StateVector make_basis_state(int n_sites, std::uint64_t index, const ResourceLimits& limits) {
  StateVector v(n_sites, limits);
  if (index >= v.dimension()) throw InvalidArgument("basis index out of range");
  v[index] = 1.0;
  return v;
}

std::complex<double> inner_product(const StateVector& a, const StateVector& b) {
  if (a.dimension() != b.dimension()) {
    throw DimensionMismatch("inner product of states with dimensions " + std::to_string(a.dimension()) + " and " +
                            std::to_string(b.dimension()));
  }
  return simd::active_kernels().cdot(a.raw(), b.raw(), a.dimension());
}

double fidelity(const StateVector& a, const StateVector& b) { return std::norm(inner_product(a, b)); }

double ferro_subspace_weight(const StateVector& v) {
  return std::norm(v[0]) + std::norm(v[v.dimension() - 1]);
}

}  // namespace aqcsim
