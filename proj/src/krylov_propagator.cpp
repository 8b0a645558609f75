#include "aqcsim/krylov_propagator.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <string>

#include "aqcsim/errors.hpp"

namespace aqcsim {
namespace {

constexpr int kMaxHalvings = 20;

double* raw(std::vector<std::complex<double>>& v) { return reinterpret_cast<double*>(v.data()); }
const double* raw(const std::vector<std::complex<double>>& v) { return reinterpret_cast<const double*>(v.data()); }

// y = exp(-i tau T) e_1 for the m x m tridiagonal T(alpha, beta).
Eigen::VectorXcd small_exponential(const std::vector<double>& alpha, const std::vector<double>& beta, int m,
                                   double tau) {
  Eigen::VectorXd diag(m);
  Eigen::VectorXd sub(std::max(m - 1, 0));
  for (int i = 0; i < m; ++i) diag[i] = alpha[i];
  for (int i = 0; i + 1 < m; ++i) sub[i] = beta[i];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  const auto& q = es.eigenvectors();
  const auto& theta = es.eigenvalues();
  Eigen::VectorXcd y = Eigen::VectorXcd::Zero(m);
  for (int j = 0; j < m; ++j) {
    const std::complex<double> phase = std::polar(1.0, -tau * theta[j]) * q(0, j);
    for (int l = 0; l < m; ++l) y[l] += q(l, j) * phase;
  }
  return y;
}

}  // namespace

KrylovPropagator::KrylovPropagator(std::size_t dimension, int max_dim, double tolerance)
    : dim_(dimension), max_dim_(max_dim), tol_(tolerance), w_(dimension) {
  if (max_dim < 2) throw InvalidArgument("Krylov subspace needs at least two vectors");
}

int KrylovPropagator::propagate(const CompiledOperator& a, double tau, StateVector& psi,
                                const simd::KernelTable& k) {
  if (psi.dimension() != dim_ || a.dimension() != dim_) throw DimensionMismatch("propagator dimension mismatch");
  int used = 0;
  if (try_propagate(a, tau, psi, k, used)) return used;
  // Subspace budget exhausted: split the step into 2^h equal pieces.
  for (int halvings = 1; halvings <= kMaxHalvings; ++halvings) {
    const int pieces = 1 << halvings;
    StateVector trial = psi;
    bool ok = true;
    for (int p = 0; p < pieces && ok; ++p) ok = try_propagate(a, tau / pieces, trial, k, used);
    if (ok) {
      psi = std::move(trial);
      return used;
    }
  }
  throw ConvergenceError("Krylov exponential did not converge for tau=" + std::to_string(tau));
}

bool KrylovPropagator::try_propagate(const CompiledOperator& a, double tau, StateVector& psi,
                                     const simd::KernelTable& k, int& used) {
  const std::size_t n = dim_;
  const double norm = std::sqrt(k.dot(psi.raw(), psi.raw(), 2 * n));
  if (norm == 0.0 || tau == 0.0) return true;

  if (basis_.size() < static_cast<std::size_t>(max_dim_)) basis_.resize(max_dim_);
  auto& v0 = basis_[0];
  v0.assign(psi.amplitudes().begin(), psi.amplitudes().end());
  k.scale(1.0 / norm, raw(v0), 2 * n);

  std::vector<double> alpha;
  std::vector<double> beta;
  Eigen::VectorXcd y;
  int m = 0;
  bool converged = false;
  for (int j = 0; j < max_dim_; ++j) {
    a.apply(raw(basis_[j]), raw(w_), 2, k);
    alpha.push_back(k.cdot(raw(basis_[j]), raw(w_), n).real());
    // Two passes of full reorthogonalization; the recurrence coefficients are
    // taken as the Hermitian tridiagonal alpha/beta.
    for (int pass = 0; pass < 2; ++pass) {
      for (int i = 0; i <= j; ++i) {
        const std::complex<double> c = k.cdot(raw(basis_[i]), raw(w_), n);
        k.caxpy(-c, raw(basis_[i]), raw(w_), n);
      }
    }
    const double b = std::sqrt(k.dot(raw(w_), raw(w_), 2 * n));
    m = j + 1;
    y = small_exponential(alpha, beta, m, tau);
    const double estimate = b * std::abs(y[m - 1]);
    if (b <= 1e-14 * std::max(1.0, std::abs(alpha.back())) || estimate <= tol_) {
      converged = true;
      break;
    }
    if (j + 1 == max_dim_) break;
    beta.push_back(b);
    auto& next = basis_[j + 1];
    next.assign(w_.begin(), w_.end());
    k.scale(1.0 / b, raw(next), 2 * n);
  }
  if (!converged) return false;

  used = std::max(used, m);
  double* out = psi.raw();
  std::fill(out, out + 2 * n, 0.0);
  for (int l = 0; l < m; ++l) k.caxpy(norm * y[l], raw(basis_[l]), out, n);
  return true;
}

}  // namespace aqcsim
