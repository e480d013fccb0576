#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vlab/budget.hpp"
#include "vlab/constructions.hpp"
#include "vlab/fixtures.hpp"
#include "vlab/perm_group.hpp"
#include "vlab/variety.hpp"

namespace vlab {

/// Subgroups with H <= lower <= dom <= upper <= mckay <= G. For a product
/// descriptor N*Q, mckay is Q(G)H; for an indecomposable descriptor it is G.
struct DominionBounds
{
  PermutationGroup lower;
  PermutationGroup upper;
  PermutationGroup mckay;
  bool exact = false;
  std::vector<std::string> derivation;
};

/// Q(G)H for the product variety N*Q. Throws InvalidArgument when G is
/// known not to lie in N*Q.
PermutationGroup mckay_bound(PermutationGroup const &g, PermutationGroup const &h,
                             VarietyDescriptor const &n, VarietyDescriptor const &q,
                             FixtureSet const &fixtures, Budget const &budget = default_budget());

/// Throws InvalidArgument when G is known not to lie in the variety.
DominionBounds dominion_bounds(PermutationGroup const &g, PermutationGroup const &h,
                               VarietyDescriptor const &desc, FixtureSet const &fixtures,
                               Budget const &budget = default_budget());

enum class Outcome { epi, not_epi, unknown };

std::string to_string(Outcome o);

struct EpiVerdict;

/// Evidence attached to a verdict. Which fields are set depends on kind.
struct Certificate
{
  enum class Kind {
    none,
    trivial,            // Epi: H = G
    fixture,            // Epi: a known-epi fixture
    direct_power,       // either: G = G0^k, H = H0^k and the verdict for (G0, H0)
    product_reduction,  // either: HQ(G) = G and the verdict for (Q(G), H ∩ Q(G)) in N
    verbal_bound,       // NotEpi: HQ(G) != G
    neumann,            // NotEpi: solvable normal N with NH = G, H != G
    separating_pair,    // NotEpi: f, g: G -> C agree on H, differ at witness
  };

  Kind kind = Kind::none;

  std::optional<Fixture> fixture;

  // direct_power
  std::size_t block_degree = 0;
  unsigned power = 0;
  std::optional<PermutationGroup> component;
  std::optional<PermutationGroup> component_sub;

  // product_reduction and verbal_bound
  std::optional<VarietyDescriptor> inner_variety;
  std::optional<PermutationGroup> verbal;
  std::optional<PermutationGroup> intersection;

  // neumann
  std::optional<PermutationGroup> normal;

  // separating_pair: images of source_generators under f and g
  std::optional<PermutationGroup> target;
  std::vector<Permutation> source_generators;
  std::vector<Permutation> f_images;
  std::vector<Permutation> g_images;
  std::optional<Permutation> witness;

  std::shared_ptr<EpiVerdict const> inner;
};

std::string to_string(Certificate::Kind k);

struct EpiVerdict
{
  Outcome outcome = Outcome::unknown;
  Certificate certificate;
  std::vector<std::string> derivation;
  /// Caps hit or steps skipped; the reasons behind an Unknown.
  std::vector<std::string> notes;
  Budget budget;
};

/// Theorem of P.M. Neumann: if H != G and some solvable normal N has
/// NH = G, then H is not epimorphically embedded in any quotient- and
/// subgroup-closed class containing G. N is the smallest term of the
/// derived series of the solvable radical with NH = G. Returns nullopt
/// when inconclusive.
std::optional<EpiVerdict> neumann_not_epi_test(PermutationGroup const &g,
                                               PermutationGroup const &h,
                                               Budget const &budget = default_budget());

/// Looks for homomorphisms f != g from G into a catalog group agreeing on
/// H. With a descriptor, only catalog groups known to be members are used.
/// Returns nullopt when every pair was exhausted without separation; notes
/// in `log` record skipped groups.
std::optional<EpiVerdict> separating_pair_search(PermutationGroup const &g,
                                                 PermutationGroup const &h,
                                                 std::vector<PermutationGroup> const &catalog,
                                                 VarietyDescriptor const *desc,
                                                 FixtureSet const &fixtures,
                                                 Budget const &budget = default_budget(),
                                                 std::vector<std::string> *log = nullptr);

/// Small groups used as separating targets when the caller gives none.
std::vector<PermutationGroup> const &default_separating_catalog();

EpiVerdict epi_decide(PermutationGroup const &g, PermutationGroup const &h,
                      VarietyDescriptor const &desc, FixtureSet const &fixtures,
                      Budget const &budget = default_budget(),
                      std::vector<PermutationGroup> const &catalog = default_separating_catalog());

struct CertificateCheck
{
  bool ok = false;
  std::string reason;
};

/// Re-verifies a verdict's certificate from scratch. Unknown verdicts
/// verify trivially.
CertificateCheck verify_verdict(PermutationGroup const &g, PermutationGroup const &h,
                                VarietyDescriptor const &desc, EpiVerdict const &verdict,
                                FixtureSet const &fixtures,
                                Budget const &budget = default_budget());

/// Cross-check against the normal-subgroup characterization: for every
/// normal N0 with N0 in N and G/N0 in Q, HN0 = G, and the dominion of
/// H ∩ N0 in N0 is not decided as proper.
struct NormalSubgroupCrossCheck
{
  bool consistent = true;
  std::size_t normals_checked = 0;
  std::size_t normals_applicable = 0;
  std::vector<std::string> notes;
};

NormalSubgroupCrossCheck cross_check_normal_subgroups(PermutationGroup const &g,
                                                      PermutationGroup const &h,
                                                      VarietyDescriptor const &desc,
                                                      FixtureSet const &fixtures,
                                                      Budget const &budget = default_budget());

struct QofSimpleReport
{
  enum class Branch { base, trivial };
  Branch branch;
  PermutationGroup verbal;
  PermutationGroup wreath;
  std::string description;
};

/// For a nonabelian simple S, Q(S wr B) is the base S^B or trivial.
/// Throws InvalidArgument if S is not simple nonabelian and Error if the
/// computed subgroup is neither.
QofSimpleReport verify_qofsimple(PermutationGroup const &s, PermutationGroup const &b,
                                 VarietyDescriptor const &q, FixtureSet const &fixtures,
                                 Budget const &budget = default_budget());

struct EscapeCandidate
{
  std::string name;
  PermutationGroup group;
};

/// Trivial group; cyclic p-power groups for primes p dividing |A|; the
/// remaining cyclic groups up to C12; C2 wr C2, C2 wr C2 wr C2, C3 wr C3.
std::vector<EscapeCandidate> escape_ladder(PermutationGroup const &a);

struct EscapeResult
{
  bool found = false;
  std::string name;
  std::optional<PermutationGroup> group;   // G in the variety
  std::optional<PermutationGroup> witness; // A wr G, not in the variety
  std::string reason;                      // why A wr G is not a member
  std::vector<std::string> trail;
};

/// First G on the ladder with G in desc and A wr G not in desc.
EscapeResult find_wreath_escape(PermutationGroup const &a, VarietyDescriptor const &desc,
                                FixtureSet const &fixtures,
                                Budget const &budget = default_budget());

struct PipelineResult
{
  EpiVerdict verdict;
  std::optional<EscapeResult> escape;
  std::optional<PermutationGroup> wreath;      // S wr G
  std::optional<PermutationGroup> sub_wreath;  // H wr G
  std::vector<std::string> report;
};

/// For a known epi H -> S in N with S simple nonabelian, finds G in Q with
/// S wr G not in Q and decides H wr G in S wr G under N*Q.
PipelineResult simpletimes_pipeline(PermutationGroup const &s, PermutationGroup const &h,
                                     VarietyDescriptor const &n, VarietyDescriptor const &q,
                                     FixtureSet const &fixtures,
                                     Budget const &budget = default_budget());

} // namespace vlab
