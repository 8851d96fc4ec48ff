#pragma once

#include <cstdint>

namespace grouplab {

// Resource limits shared by every bounded computation.
struct Bounds {
  // Largest group order for which the full subgroup lattice is enumerated.
  std::uint64_t lattice_order = 2000;
  // Largest element set that may be materialized.
  std::uint64_t element_cap = 100000;
  // Largest index for a coset action.
  std::uint64_t index_cap = 100000;
};

} // namespace grouplab
