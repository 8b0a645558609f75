#include "aqcsim/hamiltonian.hpp"

#include <bit>
#include <cmath>
#include <sstream>

#include "aqcsim/errors.hpp"
#include "pauli_masks.hpp"

namespace aqcsim {

std::string to_string(const PauliTerm& term) {
  std::ostringstream os;
  os.precision(17);
  os << term.coefficient;
  for (const auto& f : term.factors) os << ' ' << static_cast<char>(f.axis) << f.site.value();
  return os.str();
}

namespace {

void validate(int num_sites, const PauliTerm& term) {
  if (!std::isfinite(term.coefficient)) {
    throw InvalidArgument("non-finite coefficient in term " + to_string(term));
  }
  if (term.factors.empty() || term.factors.size() > 2) {
    throw InvalidArgument("terms must act on one or two sites: " + to_string(term));
  }
  int num_y = 0;
  for (std::size_t i = 0; i < term.factors.size(); ++i) {
    const auto& f = term.factors[i];
    if (f.site.value() < 1 || f.site.value() > num_sites) {
      throw InvalidArgument("site out of range in term " + to_string(term));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (term.factors[j].site == f.site) {
        throw InvalidArgument("repeated site in term " + to_string(term));
      }
    }
    if (f.axis == PauliAxis::Y) ++num_y;
  }
  if (num_y % 2 != 0) {
    throw InvalidArgument("odd number of Y factors gives a non-real matrix: " + to_string(term));
  }
}

}  // namespace

Hamiltonian::Hamiltonian(int num_sites, std::vector<PauliTerm> terms) : num_sites_(num_sites) {
  if (num_sites < 1 || num_sites > 62) {
    throw InvalidArgument("num_sites must be in [1, 62], got " + std::to_string(num_sites));
  }
  terms_.reserve(terms.size());
  for (auto& t : terms) {
    validate(num_sites, t);
    if (t.coefficient != 0.0) terms_.push_back(std::move(t));
  }
}

bool Hamiltonian::has_parity_symmetry() const {
  for (const auto& t : terms_) {
    if (std::popcount(detail::masks_of(t).sign_mask) % 2 != 0) return false;
  }
  return true;
}

Hamiltonian operator+(const Hamiltonian& a, const Hamiltonian& b) {
  if (a.num_sites_ != b.num_sites_) {
    throw DimensionMismatch("cannot add Hamiltonians on " + std::to_string(a.num_sites_) + " and " +
                            std::to_string(b.num_sites_) + " sites");
  }
  std::vector<PauliTerm> terms(a.terms_);
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return Hamiltonian(a.num_sites_, std::move(terms));
}

Hamiltonian operator*(double scale, const Hamiltonian& h) {
  std::vector<PauliTerm> terms(h.terms_);
  for (auto& t : terms) t.coefficient *= scale;
  return Hamiltonian(h.num_sites_, std::move(terms));
}

Eigen::MatrixXd to_dense(const Hamiltonian& h, const ResourceLimits& limits) {
  if (h.num_sites() > limits.dense_max_sites) {
    throw CapExceeded("dense assembly of " + std::to_string(h.num_sites()) + " sites exceeds the cap of " +
                      std::to_string(limits.dense_max_sites));
  }
  const auto dim = static_cast<Eigen::Index>(h.dimension());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (const auto& term : h.terms()) {
    const auto masks = detail::masks_of(term);
    // Y|0> = i|1>, Y|1> = -i|0>: two Y factors contribute i^2 = -1.
    const double base = masks.num_y == 2 ? -term.coefficient : term.coefficient;
    for (Eigen::Index b = 0; b < dim; ++b) {
      const auto ub = static_cast<std::uint64_t>(b);
      const double v = (std::popcount(ub & masks.sign_mask) & 1) ? -base : base;
      m(static_cast<Eigen::Index>(ub ^ masks.flip_mask), b) += v;
    }
  }
  return m;
}

}  // namespace aqcsim
