#pragma once

#include <string_view>

#include "vlab/perm_group.hpp"

namespace vlab {

/// Cyclic group of order n on n points.
PermutationGroup cyclic_group(std::size_t n);

PermutationGroup symmetric_group(std::size_t n);

PermutationGroup alternating_group(std::size_t n);

/// Dihedral group of order 2n, acting on n points for n >= 3.
PermutationGroup dihedral_group(std::size_t n);

/// Klein four-group on 4 points.
PermutationGroup klein_four_group();

/// Quaternion group of order 8 in its regular representation.
PermutationGroup quaternion_group();

/// Resolves "Cn", "Sn", "An", "Dn", "V4", "Q8", "1" (trivial). Returns the
/// group with its name set; throws ParseError for anything else.
PermutationGroup named_group(std::string_view name);

} // namespace vlab
