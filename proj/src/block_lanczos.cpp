#include "block_lanczos.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <random>
#include <string>

#include "aqcsim/errors.hpp"

namespace aqcsim::detail {

std::vector<double> dense_lowest_from_operator(const RealMatVec& op, std::size_t n, int k) {
  const auto dim = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd m(dim, dim);
  Eigen::VectorXd e = Eigen::VectorXd::Zero(dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    e[j] = 1.0;
    op(e.data(), m.col(j).data());
    e[j] = 0.0;
  }
  m = (0.5 * (m + m.transpose())).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  const auto& w = es.eigenvalues();
  return {w.data(), w.data() + std::min<Eigen::Index>(k, dim)};
}

namespace {

class Basis {
 public:
  Basis(std::size_t n, int capacity, std::uint64_t seed)
      : v_(static_cast<Eigen::Index>(n), capacity), av_(static_cast<Eigen::Index>(n), capacity), rng_(seed) {}

  int size() const { return cols_; }
  int capacity() const { return static_cast<int>(v_.cols()); }
  Eigen::MatrixXd& v() { return v_; }
  Eigen::MatrixXd& av() { return av_; }

  void truncate(int cols) { cols_ = cols; }

  /// Orthonormalizes the columns of w against the basis and each other and
  /// appends them. Rank-deficient directions are replaced by random ones.
  void append(const Eigen::MatrixXd& w) {
    const int base = cols_;
    const Eigen::VectorXd start = w.colwise().norm();
    Eigen::MatrixXd x = w;
    // Block projection against the existing basis, twice.
    for (int pass = 0; pass < 2 && base > 0; ++pass) {
      const auto old = v_.leftCols(base);
      x.noalias() -= old * (old.transpose() * x);
    }
    for (Eigen::Index j = 0; j < x.cols() && cols_ < capacity(); ++j) {
      Eigen::VectorXd c = x.col(j);
      bool ok = start[j] > 0.0 && project_out(c, base, start[j]);
      for (int attempt = 0; attempt < 3 && !ok; ++attempt) {
        c = random_vector();
        const double norm = c.norm();
        ok = project_out(c, 0, norm);
      }
      if (!ok) return;  // the basis spans the whole space
      v_.col(cols_++) = c;
    }
  }

  Eigen::VectorXd random_vector() {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Eigen::VectorXd x(v_.rows());
    for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = dist(rng_);
    return x;
  }

 private:
  // Two passes of classical Gram-Schmidt against columns [from, cols_), then
  // normalization. Fails when less than 1e-10 of `reference` survives.
  bool project_out(Eigen::VectorXd& x, int from, double reference) const {
    for (int pass = 0; pass < 2; ++pass) {
      if (cols_ > from) {
        const auto basis = v_.middleCols(from, cols_ - from);
        x.noalias() -= basis * (basis.transpose() * x);
      }
    }
    const double left = x.norm();
    if (left <= 1e-10 * reference) return false;
    x /= left;
    return true;
  }

  Eigen::MatrixXd v_;
  Eigen::MatrixXd av_;
  int cols_ = 0;
  std::mt19937_64 rng_;
};

}  // namespace

std::vector<double> block_lanczos_lowest(const RealMatVec& op, std::size_t n, int k,
                                         const BlockLanczosOptions& options) {
  if (k < 1) throw InvalidArgument("need at least one eigenvalue");
  const int block = static_cast<int>(std::min<std::size_t>(n, static_cast<std::size_t>(k + options.block_extra)));
  int capacity = options.max_basis > 0 ? options.max_basis : std::max(8 * block, 64);
  capacity = std::max(capacity, 3 * block);
  if (static_cast<std::size_t>(capacity) >= n || n <= 256) return dense_lowest_from_operator(op, n, k);

  Basis basis(n, capacity, options.seed);
  auto& V = basis.v();
  auto& AV = basis.av();
  auto multiply = [&](int from, int to) {
    for (int j = from; j < to; ++j) op(V.col(j).data(), AV.col(j).data());
  };

  {
    Eigen::MatrixXd start(static_cast<Eigen::Index>(n), block);
    for (int j = 0; j < block; ++j) start.col(j) = basis.random_vector();
    basis.append(start);
    multiply(0, basis.size());
  }
  int newest = 0;  // first column of the most recent block

  double worst = 0.0;
  for (int restart = 0; restart <= options.max_restarts; ++restart) {
    while (basis.size() < capacity) {
      const int before = basis.size();
      basis.append(AV.middleCols(newest, before - newest));
      if (basis.size() == before) break;
      multiply(before, basis.size());
      newest = before;
    }

    const int cols = basis.size();
    Eigen::MatrixXd t = V.leftCols(cols).transpose() * AV.leftCols(cols);
    t = (0.5 * (t + t.transpose())).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    const Eigen::VectorXd& theta = es.eigenvalues();
    const Eigen::MatrixXd& y = es.eigenvectors();

    const int keep = std::max(block, std::min(cols - block, capacity / 2));
    Eigen::MatrixXd x = V.leftCols(cols) * y.leftCols(keep);
    Eigen::MatrixXd ax = AV.leftCols(cols) * y.leftCols(keep);
    Eigen::MatrixXd residual = ax.leftCols(block) - x.leftCols(block) * theta.head(block).asDiagonal();

    worst = 0.0;
    for (int i = 0; i < k; ++i) worst = std::max(worst, residual.col(i).norm());
    if (worst <= options.residual_tolerance) return {theta.data(), theta.data() + k};

    V.leftCols(keep) = x;
    AV.leftCols(keep) = ax;
    basis.truncate(keep);
    basis.append(residual);
    multiply(keep, basis.size());
    newest = keep;
  }
  throw ConvergenceError("block Lanczos did not converge after " + std::to_string(options.max_restarts) +
                         " restarts (worst residual " + std::to_string(worst) + ", dimension " + std::to_string(n) +
                         ")");
}

}  // namespace aqcsim::detail
