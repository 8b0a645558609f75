#include "aqcsim/operator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <string>

#include "aqcsim/errors.hpp"
#include "pauli_masks.hpp"

namespace aqcsim {

CompiledOperator::CompiledOperator(const Hamiltonian& h) : num_sites_(h.num_sites()) {
  const std::size_t dim = dimension();
  for (const auto& term : h.terms()) {
    const auto m = detail::masks_of(term);
    if (m.flip_mask == 0) {
      if (diag_.empty()) diag_.assign(dim, 0.0);
      const double c = term.coefficient;
      for (std::size_t b = 0; b < dim; ++b) {
        diag_[b] += (std::popcount(b & m.sign_mask) & 1) ? -c : c;
      }
      continue;
    }
    // Scatter phase i^{ny} (-1)^{b.s} moved to gather form over b' = b ^ flip.
    double c = m.num_y == 2 ? -term.coefficient : term.coefficient;
    if (std::popcount(m.flip_mask & m.sign_mask) & 1) c = -c;
    flips_.push_back({m.flip_mask, m.sign_mask, c});
  }
}

CompiledOperator CompiledOperator::combine(double a, const CompiledOperator& A, double b,
                                           const CompiledOperator& B) {
  if (A.num_sites_ != B.num_sites_) throw DimensionMismatch("cannot combine operators on different site counts");
  CompiledOperator out;
  out.num_sites_ = A.num_sites_;
  const std::size_t dim = out.dimension();
  if (!A.diag_.empty() || !B.diag_.empty()) {
    out.diag_.assign(dim, 0.0);
    if (!A.diag_.empty()) {
      for (std::size_t i = 0; i < dim; ++i) out.diag_[i] = a * A.diag_[i];
    }
    if (!B.diag_.empty()) {
      for (std::size_t i = 0; i < dim; ++i) out.diag_[i] += b * B.diag_[i];
    }
  }
  out.flips_.reserve(A.flips_.size() + B.flips_.size());
  for (auto t : A.flips_) {
    t.coef *= a;
    if (t.coef != 0.0) out.flips_.push_back(t);
  }
  for (auto t : B.flips_) {
    t.coef *= b;
    if (t.coef != 0.0) out.flips_.push_back(t);
  }
  return out;
}

void CompiledOperator::apply(const double* in, double* out, int width, const simd::KernelTable& k) const {
  const std::size_t dim = dimension();
  if (diag_.empty()) {
    std::fill(out, out + dim * width, 0.0);
  } else {
    k.diag_mul(out, diag_.data(), in, dim, width);
  }
  for (const auto& t : flips_) k.flip_add(out, in, dim, width, t);
}

double CompiledOperator::norm_bound() const {
  double d = 0.0;
  for (double x : diag_) d = std::max(d, std::abs(x));
  for (const auto& t : flips_) d += std::abs(t.coef);
  return d;
}

StateVector apply(const Hamiltonian& h, const StateVector& v) {
  if (v.num_sites() != h.num_sites()) {
    throw DimensionMismatch("state on " + std::to_string(v.num_sites()) + " sites, Hamiltonian on " +
                            std::to_string(h.num_sites()));
  }
  const CompiledOperator op(h);
  StateVector out(v.num_sites(), std::vector<std::complex<double>>(v.dimension()));
  op.apply(v.raw(), out.raw(), 2);
  return out;
}

}  // namespace aqcsim
