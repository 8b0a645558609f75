#pragma once
// Bit-mask view of a Pauli string under the basis convention
// (bit i-1 of the index is 0 for spin up at site i).

#include <cstdint>

#include "aqcsim/hamiltonian.hpp"

namespace aqcsim::detail {

struct PauliMasks {
  std::uint64_t flip_mask = 0;  // X and Y factors flip their bit
  std::uint64_t sign_mask = 0;  // Z and Y factors read their bit as a sign
  int num_y = 0;
};

inline PauliMasks masks_of(const PauliTerm& term) {
  PauliMasks m;
  for (const auto& f : term.factors) {
    const std::uint64_t bit = std::uint64_t{1} << f.site.bit();
    if (f.axis != PauliAxis::Z) m.flip_mask |= bit;
    if (f.axis != PauliAxis::X) m.sign_mask |= bit;
    if (f.axis == PauliAxis::Y) ++m.num_y;
  }
  return m;
}

}  // namespace aqcsim::detail
