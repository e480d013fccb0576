#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "vlab/budget.hpp"
#include "vlab/homomorphism.hpp"
#include "vlab/perm_group.hpp"

namespace vlab {

/// G^k as k disjoint copies of G on k * degree(G) points.
PermutationGroup direct_power(PermutationGroup const &g, unsigned k,
                              Budget const &budget = default_budget());

/// The element of G^k with `g` in component i and the identity elsewhere.
Permutation embed_component(Permutation const &g, unsigned i, unsigned k);

/// (g_0, ..., g_{k-1}) as one element of G^k.
Permutation power_tuple(std::span<Permutation const> components);

/// Component i of an element of G^k acting on k blocks of `degree` points.
Permutation project_component(Permutation const &p, unsigned i, std::size_t degree);

struct PowerSplit
{
  std::size_t block_degree;
  unsigned k;
  PermutationGroup component;
};

/// Recognizes G as G0^k laid out on k consecutive blocks (k >= 2), trying
/// block sizes in increasing order.
std::optional<PowerSplit> split_direct_power(PermutationGroup const &g);

/// H0 with H = H0^k on the given blocks, if H has that form.
std::optional<PermutationGroup> power_component(PermutationGroup const &h,
                                                std::size_t block_degree, unsigned k);

/// Regular wreath product A wr B. The top group acts on its own elements,
/// listed in ascending order; block j holds the points j*m .. j*m+m-1 where
/// m = degree(A). A base function phi acts on block j by phi(b_j), and a top
/// element c sends block j to the block of b_j * c.
class WreathContext
{
public:
  WreathContext(PermutationGroup bottom, PermutationGroup top, Budget const &budget);

  PermutationGroup const &bottom() const
  { return _bottom; }

  PermutationGroup const &top() const
  { return _top; }

  PermutationGroup const &product() const
  { return _product; }

  /// Elements of the top group in block order.
  std::vector<Permutation> const &top_elements() const
  { return _top_elements; }

  std::size_t block_size() const
  { return _bottom.degree(); }

  std::size_t block_index(Permutation const &b) const;

  /// First and one-past-last point of the block labelled b.
  std::pair<Point, Point> block_range(Permutation const &b) const;

  /// Base element from values phi[j] = phi(top_elements()[j]).
  Permutation embed_base(std::span<Permutation const> phi) const;

  /// Base element with value a at b and the identity elsewhere.
  Permutation embed_base_at(Permutation const &a, Permutation const &b) const;

  Permutation embed_top(Permutation const &c) const;

  PermutationGroup base_subgroup() const;
  PermutationGroup top_subgroup() const;

  /// Writes p = phi * c (phi applied first) and returns (phi values, c).
  std::pair<std::vector<Permutation>, Permutation> decompose(Permutation const &p) const;

private:
  PermutationGroup _bottom;
  PermutationGroup _top;
  std::vector<Permutation> _top_elements;
  PermutationGroup _product;
};

/// Throws BudgetExceeded when |B| exceeds wreath_top_cap or the degree
/// exceeds degree_cap.
WreathContext regular_wreath(PermutationGroup const &a, PermutationGroup const &b,
                             Budget const &budget = default_budget());

struct KaloujnineKrasner
{
  WreathContext wreath;  // A wr E/A
  Quotient quotient;     // E -> E/A
  std::vector<Permutation> transversal;  // t(b) for each block
  GroupHomomorphism embedding;
};

/// Embeds E in A wr (E/A) by e -> phi_e * pi(e) with
/// phi_e(b) = t(b) e t(b pi(e))^-1. The transversal picks the least element
/// of each coset.
KaloujnineKrasner kaloujnine_krasner(PermutationGroup const &e, PermutationGroup const &a,
                                     Budget const &budget = default_budget());

/// Same, with a caller-chosen transversal (one element per coset of A, in
/// any order).
KaloujnineKrasner kaloujnine_krasner(PermutationGroup const &e, PermutationGroup const &a,
                                     std::vector<Permutation> const &transversal,
                                     Budget const &budget = default_budget());

} // namespace vlab
