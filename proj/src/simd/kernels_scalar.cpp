#include "aqcsim/simd/kernels.hpp"

#include <bit>

namespace aqcsim::simd {
namespace {

inline double signed_coef(double coef, std::uint64_t b, std::uint64_t sign_mask) {
  return (std::popcount(b & sign_mask) & 1) ? -coef : coef;
}

void diag_mul(double* out, const double* diag, const double* in, std::size_t dim, int width) {
  if (width == 1) {
    for (std::size_t b = 0; b < dim; ++b) out[b] = diag[b] * in[b];
    return;
  }
  for (std::size_t b = 0; b < dim; ++b) {
    out[2 * b] = diag[b] * in[2 * b];
    out[2 * b + 1] = diag[b] * in[2 * b + 1];
  }
}

void flip_add(double* out, const double* in, std::size_t dim, int width, FlipTerm term) {
  if (width == 1) {
    for (std::size_t b = 0; b < dim; ++b) {
      const double c = signed_coef(term.coef, b, term.sign_mask);
      out[b] = out[b] + c * in[b ^ term.flip_mask];
    }
    return;
  }
  for (std::size_t b = 0; b < dim; ++b) {
    const double c = signed_coef(term.coef, b, term.sign_mask);
    const std::size_t src = b ^ term.flip_mask;
    out[2 * b] = out[2 * b] + c * in[2 * src];
    out[2 * b + 1] = out[2 * b + 1] + c * in[2 * src + 1];
  }
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = y[i] + alpha * x[i];
}

void caxpy(std::complex<double> alpha, const double* x, double* y, std::size_t n) {
  const double ar = alpha.real();
  const double ai = alpha.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[2 * i];
    const double xi = x[2 * i + 1];
    y[2 * i] = y[2 * i] + (ar * xr - ai * xi);
    y[2 * i + 1] = y[2 * i + 1] + (ar * xi + ai * xr);
  }
}

void scale(double alpha, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] = alpha * x[i];
}

// Four interleaved partial sums, combined as (l0 + l1) + (l2 + l3), then the
// tail added in order. The AVX2 variant follows the same order.
double dot(const double* x, const double* y, std::size_t n) {
  double l0 = 0.0, l1 = 0.0, l2 = 0.0, l3 = 0.0;
  const std::size_t body = n & ~std::size_t{3};
  for (std::size_t i = 0; i < body; i += 4) {
    l0 = l0 + x[i] * y[i];
    l1 = l1 + x[i + 1] * y[i + 1];
    l2 = l2 + x[i + 2] * y[i + 2];
    l3 = l3 + x[i + 3] * y[i + 3];
  }
  double sum = (l0 + l1) + (l2 + l3);
  for (std::size_t i = body; i < n; ++i) sum = sum + x[i] * y[i];
  return sum;
}

// Two complex numbers per block. p accumulates x*y lane-wise (real part),
// q accumulates x*swap(y) (imaginary part, alternating sign).
std::complex<double> cdot(const double* x, const double* y, std::size_t n) {
  double p0 = 0.0, p1 = 0.0, p2 = 0.0, p3 = 0.0;
  double q0 = 0.0, q1 = 0.0, q2 = 0.0, q3 = 0.0;
  const std::size_t body = n & ~std::size_t{1};
  for (std::size_t i = 0; i < body; i += 2) {
    const double* a = x + 2 * i;
    const double* b = y + 2 * i;
    p0 = p0 + a[0] * b[0];
    p1 = p1 + a[1] * b[1];
    p2 = p2 + a[2] * b[2];
    p3 = p3 + a[3] * b[3];
    q0 = q0 + a[0] * b[1];
    q1 = q1 + a[1] * b[0];
    q2 = q2 + a[2] * b[3];
    q3 = q3 + a[3] * b[2];
  }
  double re = (p0 + p1) + (p2 + p3);
  double im = (q0 - q1) + (q2 - q3);
  for (std::size_t i = body; i < n; ++i) {
    re = re + (x[2 * i] * y[2 * i] + x[2 * i + 1] * y[2 * i + 1]);
    im = im + (x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i]);
  }
  return {re, im};
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{Isa::scalar, diag_mul, flip_add, axpy, caxpy, scale, dot, cdot};
  return table;
}

}  // namespace aqcsim::simd
