#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "vlab/budget.hpp"
#include "vlab/permutation.hpp"
#include "vlab/stab_chain.hpp"

namespace vlab {

/// A finite permutation group given by generators, with a lazily built
/// stabilizer chain. Values are immutable; copies share the chain cache,
/// and the cache is filled at most once even under concurrent access.
///
/// Subgroups are ordinary PermutationGroup values of the same degree.
class PermutationGroup
{
public:
  /// The trivial group of degree 0.
  PermutationGroup();

  /// An empty generator list denotes the trivial group.
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators,
                   std::string name = {});

  static PermutationGroup trivial(std::size_t degree)
  { return PermutationGroup(degree, {}); }

  std::size_t degree() const
  { return _degree; }

  std::vector<Permutation> const &generators() const
  { return _generators; }

  /// Optional label ("A5", "S4", ...) carried through reports and used for
  /// fixture lookup. Equality ignores it.
  std::string const &name() const
  { return _name; }

  PermutationGroup named(std::string name) const;

  StabChain const &chain() const;

  BigInt order() const;

  /// Order as a machine integer; throws BudgetExceeded above 2^63.
  std::uint64_t order_u64() const;

  bool contains(Permutation const &g) const;

  /// Subgroup test (same degree required).
  bool contains(PermutationGroup const &h) const;

  bool is_trivial() const;
  bool is_abelian() const;

  /// All elements in ascending (lexicographic image) order.
  std::vector<Permutation> elements(Budget const &budget = default_budget()) const;

  /// Same group on a larger point set.
  PermutationGroup extended(std::size_t degree) const;

  /// Equal as sets of permutations.
  bool operator==(PermutationGroup const &rhs) const;

private:
  struct Cache
  {
    std::once_flag once;
    std::unique_ptr<StabChain> chain;
  };

  std::size_t _degree = 0;
  std::vector<Permutation> _generators;
  std::string _name;
  std::shared_ptr<Cache> _cache;
};

std::string describe(PermutationGroup const &g);

} // namespace vlab
