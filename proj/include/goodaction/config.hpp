#pragma once

#include <cstddef>
#include <cstdint>

namespace goodaction {

/// Desk-scale resource bounds. Exceeding one raises OrderBoundExceeded
/// (or the matching bound error) instead of running for hours.
struct Bounds {
  std::size_t subgroup_order = 600;     // all_subgroups / normal_subgroups
  std::size_t isomorphism_order = 200;  // is_isomorphic backtracking
  std::size_t induction_index = 24;     // induce_from_linear
  std::size_t module_dimension = 256;   // permutation modules in faithful_irreducible_module
  std::size_t cayley_order = 5000;      // largest Cayley table we materialize
  std::size_t tower_exhaustive_order = 200;
};


}  // namespace goodaction
