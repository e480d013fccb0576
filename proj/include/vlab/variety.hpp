#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vlab/budget.hpp"
#include "vlab/perm_group.hpp"
#include "vlab/word.hpp"

namespace vlab {

enum class Tri { yes, no, unknown };

std::string to_string(Tri t);

class VarietyDescriptor;
using VarietyPtr = std::shared_ptr<VarietyDescriptor const>;

/// A variety of groups, described syntactically:
///
///   A              abelian groups
///   Nc:c           nilpotent of class <= c
///   Sl:n           solvable of derived length <= n
///   var:NAME       variety generated by a named finite group
///   laws:{w;...}   defined by an explicit law set
///   prod(N,Q)      extensions of an N-group by a Q-group
///
/// Equality is syntactic. prod with more than two arguments associates to
/// the left.
class VarietyDescriptor
{
public:
  struct Laws { std::vector<Word> laws; };
  struct Abelian {};
  struct Nilpotent { unsigned c; };
  struct Solvable { unsigned n; };
  struct OfGroup { std::string group; };
  struct Product { VarietyPtr left, right; };

  using Node = std::variant<Laws, Abelian, Nilpotent, Solvable, OfGroup, Product>;

  explicit VarietyDescriptor(Node node);

  static VarietyDescriptor laws(std::vector<Word> ws);
  static VarietyDescriptor abelian();
  static VarietyDescriptor nilpotent(unsigned c);
  static VarietyDescriptor solvable(unsigned n);
  static VarietyDescriptor of_group(std::string name);
  static VarietyDescriptor product(VarietyDescriptor left, VarietyDescriptor right);

  static VarietyDescriptor parse(std::string_view text);

  Node const &node() const
  { return _node; }

  bool is_product() const
  { return std::holds_alternative<Product>(_node); }

  /// Left and right factor; throws unless is_product().
  VarietyDescriptor const &left() const;
  VarietyDescriptor const &right() const;

  /// The defining law set for Laws, Abelian, Nilpotent and Solvable.
  std::optional<std::vector<Word>> law_set() const;

  std::string to_string() const;

  bool operator==(VarietyDescriptor const &rhs) const;

private:
  Node _node;
};

class FixtureSet;

/// Outcome of a law check; `witness` holds a violating tuple when one was
/// found.
struct LawCheck
{
  bool satisfied = true;
  std::optional<Word> violated;
  std::optional<std::vector<Permutation>> witness;
};

/// Subgroup generated by all values of all laws. Commutator, left-normed
/// commutator and iterated derived words use series computations; power
/// words use conjugacy class representatives; anything else enumerates
/// tuples with the first entry restricted to class representatives. Past
/// the budget, the normal closure N of sampled values is returned when G/N
/// is checked to satisfy the laws.
PermutationGroup verbal_subgroup(PermutationGroup const &g, std::vector<Word> const &laws,
                                 Budget const &budget = default_budget());

/// When the exact check exceeds the budget, random products of generators
/// are tried before BudgetExceeded propagates.
LawCheck satisfies_laws(PermutationGroup const &g, std::vector<Word> const &laws,
                        Budget const &budget = default_budget());

/// The verbal subgroup V(G) for a descriptor; for prod(N,Q) this is
/// N(Q(G)). For var:NAME it is the least normal subgroup with quotient in
/// the variety, found over the normal subgroup lattice when G has at most
/// normal_enum_cap elements; throws Undecidable when memberships leave it
/// open.
PermutationGroup q_verbal(PermutationGroup const &g, VarietyDescriptor const &desc,
                          FixtureSet const &fixtures, Budget const &budget = default_budget());

struct Membership
{
  Tri result = Tri::unknown;
  std::string reason;
};

Membership member_of_variety(PermutationGroup const &g, VarietyDescriptor const &desc,
                             FixtureSet const &fixtures,
                             Budget const &budget = default_budget());

/// Structural solvability: A, Nc, Sl and products of these are solvable;
/// var:NAME is decided by its generating group; raw law sets are unknown.
Tri is_solvable_variety(VarietyDescriptor const &desc);

/// Laws of the generating group used as a necessary-condition screen for
/// var:NAME membership. Each candidate is verified on the group itself.
std::vector<Word> screening_laws(PermutationGroup const &generator,
                                 Budget const &budget = default_budget());

} // namespace vlab
