#pragma once

#include <cstdint>

namespace vlab {

/// Caps on the brute-force parts of the library. Every report echoes the
/// budget it ran under so that Unknown outcomes are attributable.
struct Budget
{
  /// Largest group whose elements may be listed one by one.
  std::uint64_t element_cap = 100000;
  /// Largest |G|*|C| for homomorphism enumeration G -> C.
  std::uint64_t hom_cap = 10000000;
  /// Largest top group accepted by regular_wreath.
  std::uint64_t wreath_top_cap = 64;
  /// Largest point count for constructed permutation groups.
  std::uint64_t degree_cap = 4096;
  /// Largest number of word-evaluation tuples for verbal subgroups.
  std::uint64_t tuple_cap = 10000000;
  /// Largest group for which all normal subgroups may be enumerated.
  std::uint64_t normal_enum_cap = 10000;
  /// Largest number of nodes visited by a backtrack search.
  std::uint64_t search_node_cap = 10000000;
};

Budget const &default_budget();

} // namespace vlab
