#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "aqcsim/lattice.hpp"
#include "aqcsim/limits.hpp"

namespace aqcsim {

enum class PauliAxis : char { X = 'X', Y = 'Y', Z = 'Z' };

struct PauliFactor {
  SiteIndex site;
  PauliAxis axis;
  bool operator==(const PauliFactor&) const = default;
};

/// coefficient * (product of single-site Pauli matrices). One or two factors,
/// on distinct sites, with an even number of Y factors so that the matrix is
/// real.
struct PauliTerm {
  double coefficient = 0.0;
  std::vector<PauliFactor> factors;
  bool operator==(const PauliTerm&) const = default;
};

std::string to_string(const PauliTerm& term);

/// Immutable sum of Pauli terms over `num_sites` spins. Terms with a zero
/// coefficient are dropped at construction; the order of the rest is kept
/// and fixes the summation order of every matrix element.
class Hamiltonian {
 public:
  Hamiltonian(int num_sites, std::vector<PauliTerm> terms);

  int num_sites() const { return num_sites_; }
  std::uint64_t dimension() const { return std::uint64_t{1} << num_sites_; }
  std::span<const PauliTerm> terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// True when every term commutes with the global spin flip prod_i X_i,
  /// i.e. each term carries an even number of Y/Z factors.
  bool has_parity_symmetry() const;

  friend Hamiltonian operator+(const Hamiltonian& a, const Hamiltonian& b);
  friend Hamiltonian operator*(double scale, const Hamiltonian& h);

 private:
  int num_sites_;
  std::vector<PauliTerm> terms_;
};

/// Dense matrix with M(a, b) = <a|H|b>. Throws CapExceeded above
/// limits.dense_max_sites.
Eigen::MatrixXd to_dense(const Hamiltonian& h, const ResourceLimits& limits = {});

}  // namespace aqcsim
