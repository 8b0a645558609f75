#pragma once
// Data-parallel inner loops of the simulator.
//
// Every kernel exists as a portable scalar reference and, where the CPU
// supports it, an AVX2 variant. The AVX2 variants use no fused multiply-add
// and accumulate reductions in the same four-lane order as the scalar code,
// so both produce bitwise identical results. Kernels are selected once at
// runtime; `active_kernels()` is what the rest of the library calls.
//
// Vectors are passed as flat double arrays. A basis state occupies `width`
// consecutive doubles: 1 for real vectors, 2 for interleaved complex ones.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace aqcsim::simd {

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);
/// Parses "scalar" or "avx2"; throws InvalidArgument otherwise.
Isa parse_isa(std::string_view name);

/// One off-diagonal Pauli string in gather form:
///   out[b] += coef * (-1)^popcount(b & sign_mask) * in[b ^ flip_mask]
struct FlipTerm {
  std::uint64_t flip_mask = 0;
  std::uint64_t sign_mask = 0;
  double coef = 0.0;
};

struct KernelTable {
  Isa isa;

  /// out[b] = diag[b] * in[b] for b < dim.
  void (*diag_mul)(double* out, const double* diag, const double* in, std::size_t dim, int width);

  /// Accumulates one FlipTerm into out. `in` and `out` must not alias.
  void (*flip_add)(double* out, const double* in, std::size_t dim, int width, FlipTerm term);

  /// y[i] += alpha * x[i] for i < n doubles.
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);

  /// y += alpha * x over n interleaved complex numbers.
  void (*caxpy)(std::complex<double> alpha, const double* x, double* y, std::size_t n);

  /// x[i] *= alpha for i < n doubles.
  void (*scale)(double alpha, double* x, std::size_t n);

  /// Sum of x[i] * y[i] over n doubles.
  double (*dot)(const double* x, const double* y, std::size_t n);

  /// Sum of conj(x[i]) * y[i] over n interleaved complex numbers.
  std::complex<double> (*cdot)(const double* x, const double* y, std::size_t n);
};

const KernelTable& scalar_kernels();

/// Null when the AVX2 variants were not compiled in.
const KernelTable* avx2_kernels();

bool cpu_supports(Isa isa);

/// ISAs that are both compiled in and supported by this CPU.
std::vector<Isa> available_isas();

const KernelTable& kernels_for(Isa isa);

/// The process-wide kernel table. Defaults to the widest available ISA.
const KernelTable& active_kernels();

/// Overrides the process-wide choice. Throws InvalidArgument when the ISA is
/// unavailable. Intended to be called once at startup.
void select_kernels(Isa isa);

}  // namespace aqcsim::simd
