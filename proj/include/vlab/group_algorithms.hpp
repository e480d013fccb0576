#pragma once

#include <optional>
#include <span>
#include <vector>

#include "vlab/budget.hpp"
#include "vlab/perm_group.hpp"

namespace vlab {

/// Subgroup generated by the generators of both arguments.
PermutationGroup join(PermutationGroup const &a, PermutationGroup const &b);

/// Smallest subgroup of G containing S and closed under conjugation by G.
/// Throws InvalidArgument if some element of S is not in G.
PermutationGroup normal_closure(PermutationGroup const &g, std::span<Permutation const> s);

PermutationGroup derived_subgroup(PermutationGroup const &g);

/// G, G', G'', ... up to and including the first repeated term.
std::vector<PermutationGroup> derived_series(PermutationGroup const &g);

/// gamma_1, ..., gamma_{c+1}.
std::vector<PermutationGroup> lower_central_series(PermutationGroup const &g, unsigned c);

bool is_solvable(PermutationGroup const &g);

/// Number of steps for the derived series to reach 1, if it does.
std::optional<unsigned> derived_length(PermutationGroup const &g);

/// Smallest c with gamma_{c+1} = 1, if G is nilpotent.
std::optional<unsigned> nilpotency_class(PermutationGroup const &g);

bool is_normal(PermutationGroup const &g, PermutationGroup const &n);

/// A ∩ B. Filters the smaller group's elements when it has at most
/// `budget.element_cap` elements, otherwise runs a base-image backtrack.
PermutationGroup subgroup_intersection(PermutationGroup const &g,
                                       PermutationGroup const &a,
                                       PermutationGroup const &b,
                                       Budget const &budget = default_budget());

/// Whether HN = G as a set, i.e. |H||N|/|H∩N| = |G|.
bool product_covers(PermutationGroup const &g, PermutationGroup const &h,
                    PermutationGroup const &n, Budget const &budget = default_budget());

/// N_G(D), as the stabilizer of D in the conjugation action of G.
PermutationGroup normalizer(PermutationGroup const &g, PermutationGroup const &d,
                            Budget const &budget = default_budget());

/// Conjugacy classes, each sorted, listed by their smallest element.
std::vector<std::vector<Permutation>> conjugacy_classes(PermutationGroup const &g,
                                                        Budget const &budget = default_budget());

/// Largest solvable normal subgroup. An element lies in it exactly when
/// the normal closure of its class is solvable. Limited to groups of at
/// most `budget.normal_enum_cap` elements.
PermutationGroup solvable_radical(PermutationGroup const &g,
                                  Budget const &budget = default_budget());

/// Nontrivial with no proper nontrivial normal subgroup.
bool is_simple(PermutationGroup const &g, Budget const &budget = default_budget());

/// Every normal subgroup, ordered by size then discovery.
std::vector<PermutationGroup> normal_subgroups(PermutationGroup const &g,
                                               Budget const &budget = default_budget());

/// Every subgroup, ordered by size then discovery. Meant for small groups.
std::vector<PermutationGroup> all_subgroups(PermutationGroup const &g,
                                            Budget const &budget = default_budget());

/// A generating subset of G's generators with redundant ones removed.
std::vector<Permutation> reduced_generators(PermutationGroup const &g);

/// Exponent (lcm of element orders), via class representatives.
std::uint64_t exponent(PermutationGroup const &g, Budget const &budget = default_budget());

} // namespace vlab
