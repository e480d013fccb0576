#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "vlab/perm_group.hpp"

namespace vlab {

struct CatalogEntry
{
  std::string name;
  PermutationGroup group;
};

/// Named permutation groups, one per line:
///
///     name | degree | gen; gen; ...
///
/// A generator is cycle notation "(0 1 2)(3 4)" or an image list
/// "[1 2 0 4 3]". Blank lines and lines starting with '#' are ignored.
class Catalog
{
public:
  Catalog() = default;

  /// Throws ParseError carrying the 1-based line number.
  static Catalog parse(std::string_view text);
  static Catalog load(std::filesystem::path const &path);

  /// Every group of order at most 24, plus A5, S5 and small wreath
  /// products.
  static Catalog const &bundled();

  /// Path from $VLAB_CATALOG when set, else the bundled catalog.
  static Catalog from_environment();

  std::vector<CatalogEntry> const &entries() const
  { return _entries; }

  /// Throws InvalidArgument on a duplicate name.
  void add(std::string name, PermutationGroup group);

  /// nullptr when absent.
  PermutationGroup const *find(std::string_view name) const;

  std::string serialize() const;

private:
  std::vector<CatalogEntry> _entries;
};

/// One catalog line for the group, generators in cycle notation.
std::string catalog_record(std::string_view name, PermutationGroup const &g);

} // namespace vlab
