#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "vlab/budget.hpp"
#include "vlab/perm_group.hpp"
#include "vlab/variety.hpp"

namespace vlab {

/// An externally sourced fact the engine consumes but never infers.
struct Fixture
{
  enum class Kind { known_epi, known_member, known_nonmember };

  Kind kind;
  std::string group;     // G, or the member/nonmember group
  std::string subgroup;  // H for known_epi, empty otherwise
  VarietyDescriptor variety;
  std::string provenance;

  std::string to_string() const;
};

/// Fixture records, one per line:
///
///   known-epi       | H -> G | <descriptor> | <provenance>
///   known-member    | G      | <descriptor> | <provenance>
///   known-nonmember | G      | <descriptor> | <provenance>
///
/// Group names are resolved with named_group(). Blank lines and lines
/// starting with '#' are ignored.
class FixtureSet
{
public:
  FixtureSet() = default;

  /// The facts shipped with the library (B.H. Neumann's A4 in A5 example).
  static FixtureSet bundled();

  /// Throws ParseError carrying the 1-based line number.
  static FixtureSet parse(std::string_view text);

  static FixtureSet load(std::filesystem::path const &path);

  void add(Fixture f);

  std::vector<Fixture> const &all() const
  { return _fixtures; }

  /// A known-epi fixture whose G equals `g` and whose H is conjugate in
  /// `g` to `h`, for exactly this descriptor.
  Fixture const *find_epi(PermutationGroup const &g, PermutationGroup const &h,
                          VarietyDescriptor const &desc,
                          Budget const &budget = default_budget()) const;

  /// A known-member or known-nonmember fixture for `g` and `desc`.
  Fixture const *find_membership(PermutationGroup const &g, VarietyDescriptor const &desc) const;

private:
  std::vector<Fixture> _fixtures;
};

/// Whether `g` is (as a set) the named group, possibly extended by fixed
/// points to g's degree.
bool matches_named(PermutationGroup const &g, std::string const &name);

/// Whether `h` is conjugate in `g` to `k` (brute force over g's elements).
bool conjugate_in(PermutationGroup const &g, PermutationGroup const &h, PermutationGroup const &k,
                  Budget const &budget = default_budget());

} // namespace vlab
