// AVX2 variants of the kernels in kernels_scalar.cpp. Compiled with -mavx2
// and without FMA; every lane performs the same multiply-then-add sequence
// as the scalar reference.

#include "aqcsim/simd/kernels.hpp"

#include <immintrin.h>

#include <bit>

namespace aqcsim::simd {
namespace {

inline bool odd_parity(std::uint64_t x) { return std::popcount(x) & 1; }

// Lane r of the result holds v[r ^ low] for low in [0, 4).
inline __m256d xor_permute4(__m256d v, std::uint64_t low) {
  switch (low) {
    case 1: return _mm256_permute_pd(v, 0b0101);
    case 2: return _mm256_permute4x64_pd(v, 0x4E);
    case 3: return _mm256_permute4x64_pd(v, 0x1B);
    default: return v;
  }
}

void diag_mul(double* out, const double* diag, const double* in, std::size_t dim, int width) {
  if (width == 1) {
    std::size_t b = 0;
    for (; b + 4 <= dim; b += 4) {
      const __m256d d = _mm256_loadu_pd(diag + b);
      _mm256_storeu_pd(out + b, _mm256_mul_pd(d, _mm256_loadu_pd(in + b)));
    }
    for (; b < dim; ++b) out[b] = diag[b] * in[b];
    return;
  }
  std::size_t b = 0;
  for (; b + 2 <= dim; b += 2) {
    const __m256d d = _mm256_permute4x64_pd(_mm256_castpd128_pd256(_mm_loadu_pd(diag + b)), 0x50);
    _mm256_storeu_pd(out + 2 * b, _mm256_mul_pd(d, _mm256_loadu_pd(in + 2 * b)));
  }
  for (; b < dim; ++b) {
    out[2 * b] = diag[b] * in[2 * b];
    out[2 * b + 1] = diag[b] * in[2 * b + 1];
  }
}

void flip_add(double* out, const double* in, std::size_t dim, int width, FlipTerm term) {
  const std::uint64_t m = term.flip_mask;
  const std::uint64_t sm = term.sign_mask;
  const double pos = term.coef;
  const double neg = -term.coef;

  if (width == 1) {
    if (dim < 4) {
      scalar_kernels().flip_add(out, in, dim, width, term);
      return;
    }
    double lane_pos[4];
    double lane_neg[4];
    for (std::uint64_t r = 0; r < 4; ++r) {
      const bool odd = odd_parity(r & sm);
      lane_pos[r] = odd ? neg : pos;
      lane_neg[r] = odd ? pos : neg;
    }
    const __m256d cpos = _mm256_loadu_pd(lane_pos);
    const __m256d cneg = _mm256_loadu_pd(lane_neg);
    const std::uint64_t hi = m & ~std::uint64_t{3};
    const std::uint64_t lo = m & 3;
    for (std::uint64_t q = 0; q < dim; q += 4) {
      const __m256d v = xor_permute4(_mm256_loadu_pd(in + (q ^ hi)), lo);
      const __m256d c = odd_parity(q & sm) ? cneg : cpos;
      const __m256d o = _mm256_loadu_pd(out + q);
      _mm256_storeu_pd(out + q, _mm256_add_pd(o, _mm256_mul_pd(c, v)));
    }
    return;
  }

  if (dim < 2) {
    scalar_kernels().flip_add(out, in, dim, width, term);
    return;
  }
  const bool odd1 = odd_parity(sm & 1);
  const __m256d cpos = _mm256_setr_pd(pos, pos, odd1 ? neg : pos, odd1 ? neg : pos);
  const __m256d cneg = _mm256_setr_pd(neg, neg, odd1 ? pos : neg, odd1 ? pos : neg);
  const std::uint64_t hi = m & ~std::uint64_t{1};
  const bool swap = m & 1;
  for (std::uint64_t q = 0; q < dim; q += 2) {
    __m256d v = _mm256_loadu_pd(in + 2 * (q ^ hi));
    if (swap) v = _mm256_permute4x64_pd(v, 0x4E);
    const __m256d c = odd_parity(q & sm) ? cneg : cpos;
    const __m256d o = _mm256_loadu_pd(out + 2 * q);
    _mm256_storeu_pd(out + 2 * q, _mm256_add_pd(o, _mm256_mul_pd(c, v)));
  }
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d a = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d yv = _mm256_loadu_pd(y + i);
    _mm256_storeu_pd(y + i, _mm256_add_pd(yv, _mm256_mul_pd(a, _mm256_loadu_pd(x + i))));
  }
  for (; i < n; ++i) y[i] = y[i] + alpha * x[i];
}

void caxpy(std::complex<double> alpha, const double* x, double* y, std::size_t n) {
  const double ar = alpha.real();
  const double ai = alpha.imag();
  const __m256d vr = _mm256_set1_pd(ar);
  const __m256d vi = _mm256_set1_pd(ai);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(x + 2 * i);
    const __m256d t1 = _mm256_mul_pd(vr, xv);
    const __m256d t2 = _mm256_mul_pd(vi, _mm256_permute_pd(xv, 0b0101));
    const __m256d yv = _mm256_loadu_pd(y + 2 * i);
    _mm256_storeu_pd(y + 2 * i, _mm256_add_pd(yv, _mm256_addsub_pd(t1, t2)));
  }
  for (; i < n; ++i) {
    const double xr = x[2 * i];
    const double xi = x[2 * i + 1];
    y[2 * i] = y[2 * i] + (ar * xr - ai * xi);
    y[2 * i + 1] = y[2 * i + 1] + (ar * xi + ai * xr);
  }
}

void scale(double alpha, double* x, std::size_t n) {
  const __m256d a = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(x + i, _mm256_mul_pd(a, _mm256_loadu_pd(x + i)));
  for (; i < n; ++i) x[i] = alpha * x[i];
}

double dot(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  const std::size_t body = n & ~std::size_t{3};
  for (std::size_t i = 0; i < body; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  alignas(32) double l[4];
  _mm256_store_pd(l, acc);
  double sum = (l[0] + l[1]) + (l[2] + l[3]);
  for (std::size_t i = body; i < n; ++i) sum = sum + x[i] * y[i];
  return sum;
}

std::complex<double> cdot(const double* x, const double* y, std::size_t n) {
  __m256d p = _mm256_setzero_pd();
  __m256d q = _mm256_setzero_pd();
  const std::size_t body = n & ~std::size_t{1};
  for (std::size_t i = 0; i < body; i += 2) {
    const __m256d a = _mm256_loadu_pd(x + 2 * i);
    const __m256d b = _mm256_loadu_pd(y + 2 * i);
    p = _mm256_add_pd(p, _mm256_mul_pd(a, b));
    q = _mm256_add_pd(q, _mm256_mul_pd(a, _mm256_permute_pd(b, 0b0101)));
  }
  alignas(32) double pl[4];
  alignas(32) double ql[4];
  _mm256_store_pd(pl, p);
  _mm256_store_pd(ql, q);
  double re = (pl[0] + pl[1]) + (pl[2] + pl[3]);
  double im = (ql[0] - ql[1]) + (ql[2] - ql[3]);
  for (std::size_t i = body; i < n; ++i) {
    re = re + (x[2 * i] * y[2 * i] + x[2 * i + 1] * y[2 * i + 1]);
    im = im + (x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i]);
  }
  return {re, im};
}

}  // namespace

const KernelTable* avx2_kernels() {
  static const KernelTable table{Isa::avx2, diag_mul, flip_add, axpy, caxpy, scale, dot, cdot};
  return &table;
}

}  // namespace aqcsim::simd
