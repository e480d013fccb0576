#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vlab/budget.hpp"
#include "vlab/catalog.hpp"
#include "vlab/fixtures.hpp"
#include "vlab/report.hpp"
#include "vlab/wreath_z.hpp"

namespace vlab {

struct ScenarioResult
{
  std::string name;
  std::string description;
  /// Recorded outcome, compared verbatim with `observed`.
  std::string expected;
  std::string observed;
  bool passed = false;
  Json report;
};

/// neumann-a4a5, mckay-bound-demo, commofwr-fuzz, qofsimple-a5c2,
/// escape-abelian, escape-nil2, magnus-corpus, solvable-exhaustive.
std::vector<std::string> const &scenario_names();

/// Deterministic: equal arguments give byte-identical reports. Throws
/// InvalidArgument for an unknown name.
ScenarioResult run_scenario(std::string_view name, FixtureSet const &fixtures,
                            Catalog const &catalog, Budget const &budget = default_budget());

/// Twenty nontrivial reduced words of length at most 8 in at most three
/// variables.
std::vector<Word> const &magnus_corpus();

/// Random finitely supported functions Z -> G with support in a window of
/// at most six positions, from a seeded generator.
std::vector<TailConstantFn> random_supported_functions(PermutationGroup const &g,
                                                       std::size_t count, std::uint64_t seed);

} // namespace vlab
