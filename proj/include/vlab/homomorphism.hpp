#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "vlab/budget.hpp"
#include "vlab/perm_group.hpp"

namespace vlab {

/// A homomorphism given by the images of the source's generators.
///
/// Well-definedness is checked through the graph of the map: the subgroup
/// of source x target generated by the pairs (g_i, image_i) has order |source|
/// exactly when the assignment extends to a homomorphism.
class GroupHomomorphism
{
public:
  /// Throws InvalidArgument if the assignment is not a homomorphism.
  GroupHomomorphism(PermutationGroup source, PermutationGroup target,
                    std::vector<Permutation> generator_images);

  static std::optional<GroupHomomorphism> try_make(PermutationGroup source,
                                                   PermutationGroup target,
                                                   std::vector<Permutation> generator_images);

  PermutationGroup const &source() const
  { return _source; }

  PermutationGroup const &target() const
  { return _target; }

  std::vector<Permutation> const &generator_images() const
  { return _images; }

  /// The graph subgroup on source.degree() + target.degree() points.
  PermutationGroup const &graph() const
  { return *_graph; }

  /// Image of an element of the source.
  Permutation operator()(Permutation const &g) const;

  PermutationGroup image() const;

  /// Kernel, by filtering the elements of the source.
  PermutationGroup kernel(Budget const &budget = default_budget()) const;

  bool is_injective() const;

  /// Same map on every element (compares generator images).
  bool operator==(GroupHomomorphism const &rhs) const;

private:
  struct Unchecked {};
  GroupHomomorphism(Unchecked, PermutationGroup source, PermutationGroup target,
                    std::vector<Permutation> images, std::shared_ptr<PermutationGroup> graph);

  PermutationGroup _source;
  PermutationGroup _target;
  std::vector<Permutation> _images;
  std::shared_ptr<PermutationGroup> _graph;
};

/// Pair (g, c) as one permutation on g.degree() + c.degree() points.
Permutation pair_permutation(Permutation const &g, Permutation const &c);

/// Every homomorphism G -> C, found by backtracking over generator images.
/// Candidate images must have order dividing the generator's order and are
/// tried in descending order of element order, then lexicographically.
/// Requires |G|*|C| <= budget.hom_cap.
std::vector<GroupHomomorphism> all_homomorphisms(PermutationGroup const &g,
                                                 PermutationGroup const &c,
                                                 Budget const &budget = default_budget());

struct Quotient
{
  PermutationGroup group;
  GroupHomomorphism projection;
};

/// G/N as the action of G on the right cosets of N, with the projection.
/// Throws InvalidArgument if N is not normal in G.
Quotient quotient(PermutationGroup const &g, PermutationGroup const &n,
                  Budget const &budget = default_budget());

} // namespace vlab
