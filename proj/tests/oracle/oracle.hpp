#pragma once

// Reference implementations for the test suites. Nothing here calls into the
// library: operators are built from explicit spin arithmetic or Kronecker
// products, eigenproblems are solved by cyclic Jacobi, dynamics by RK4.

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace oracle {

using cplx = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using CSparse = Eigen::SparseMatrix<cplx, Eigen::RowMajor>;

/// 2x2 Pauli matrices in the (up, down) basis.
CMat pauli(char axis);

/// Operator acting as `op` on `site` (1-based, site 1 is the lowest index
/// bit) and identity elsewhere: I x ... x op x ... x I with site n leftmost.
CMat embed(int n_sites, int site, const CMat& op);

/// Dense periodic XY chain from Kronecker products.
CMat kron_xy_chain(int n, double gamma, double lambda);
/// Dense open rows x cols Ising grid (row-major sites) from Kronecker products.
CMat kron_ising_grid(int rows, int cols, double lambda);
/// -sum X on n sites.
CMat kron_driver(int n);

/// The same Hamiltonians assembled state by state from spin values:
/// ZZ and YY couplings from s_i s_j and the i*(+-1) action of Y.
CSparse spin_xy_chain(int n, double gamma, double lambda);
CSparse spin_ising_grid(int rows, int cols, double lambda);
CSparse spin_driver(int n);

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi sweeps, ascending.
std::vector<double> jacobi_eigenvalues(Eigen::MatrixXd a, double tol = 1e-14);
/// Eigenpairs (columns of vectors) by cyclic Jacobi, ascending.
void jacobi_eigensystem(Eigen::MatrixXd a, std::vector<double>& values, Eigen::MatrixXd& vectors,
                        double tol = 1e-14);

/// Real part of a Hermitian matrix whose entries are all real; aborts the
/// test if any imaginary part exceeds 1e-14.
Eigen::MatrixXd real_part(const CMat& m);

/// Lowest classical energy of the zero-field chain / grid by enumerating all
/// spin configurations.
double classical_ground_xy(int n, double gamma);
double classical_ground_grid(int rows, int cols);

/// Canonical states, written out amplitude by amplitude.
CVec paramagnetic(int n);
CVec ghz(int n);
CVec ferro(int n, bool up);

double overlap2(const CVec& a, const CVec& b);

/// Classical RK4 on i dpsi/dt = [f(t/T) H0 + g(t/T) HP] psi with `steps`
/// uniform steps. Not norm preserving; callers pick steps fine enough.
CVec rk4_evolve(const CSparse& h0, const CSparse& hp, const std::function<std::pair<double, double>(double)>& fg,
                double total_time, int steps, CVec psi);

/// exp(-i H t) psi for a time-independent real symmetric H via Jacobi.
CVec exact_propagate(const Eigen::MatrixXd& h, double t, const CVec& psi);

/// von Neumann entropy (bits) of site `site` from an explicit partial trace.
double entropy_bits(const CVec& psi, int n_sites, int site);

}  // namespace oracle
