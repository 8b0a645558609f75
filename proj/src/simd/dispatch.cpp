#include <atomic>

#include "aqcsim/errors.hpp"
#include "aqcsim/simd/kernels.hpp"

namespace aqcsim::simd {

#ifndef AQCSIM_HAVE_AVX2
const KernelTable* avx2_kernels() { return nullptr; }
#endif

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

Isa parse_isa(std::string_view name) {
  if (name == "scalar") return Isa::scalar;
  if (name == "avx2") return Isa::avx2;
  throw InvalidArgument("unknown kernel ISA '" + std::string(name) + "' (expected scalar|avx2)");
}

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(AQCSIM_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out{Isa::scalar};
  if (avx2_kernels() != nullptr && cpu_supports(Isa::avx2)) out.push_back(Isa::avx2);
  return out;
}

const KernelTable& kernels_for(Isa isa) {
  if (isa == Isa::scalar) return scalar_kernels();
  if (avx2_kernels() == nullptr || !cpu_supports(isa)) {
    throw InvalidArgument("kernel ISA '" + std::string(to_string(isa)) + "' is not available on this build/CPU");
  }
  return *avx2_kernels();
}

namespace {

const KernelTable* widest() { return &kernels_for(available_isas().back()); }

std::atomic<const KernelTable*>& active_slot() {
  static std::atomic<const KernelTable*> slot{widest()};
  return slot;
}

}  // namespace

const KernelTable& active_kernels() { return *active_slot().load(std::memory_order_acquire); }

void select_kernels(Isa isa) { active_slot().store(&kernels_for(isa), std::memory_order_release); }

}  // namespace aqcsim::simd
