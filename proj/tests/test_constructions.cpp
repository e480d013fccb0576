#include <map>
#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "vlab/constructions.hpp"
#include "vlab/errors.hpp"
#include "vlab/fixtures.hpp"
#include "vlab/group_algorithms.hpp"
#include "vlab/named_groups.hpp"

using namespace vlab;

namespace {

Permutation P(char const *s, std::size_t n)
{
  return Permutation::parse(s, n);
}

BigInt pow_big(BigInt b, std::size_t e)
{
  BigInt r = 1;
  while (e--)
    r *= b;
  return r;
}

std::map<std::uint64_t, std::size_t> order_histogram(PermutationGroup const &g)
{
  std::map<std::uint64_t, std::size_t> h;
  for (auto const &x : g.elements())
    ++h[x.order()];
  return h;
}

} // namespace

TEST_CASE("direct powers")
{
  auto a4 = alternating_group(4);
  CHECK(direct_power(a4, 2).order() == 144);
  CHECK(direct_power(a4, 1) == a4);
  auto c2 = cyclic_group(2);
  auto e8 = direct_power(c2, 3);
  CHECK(e8.order() == 8);
  for (auto const &x : e8.elements())
    CHECK(x.order() <= 2);
  CHECK(e8.is_abelian());

  std::vector<Permutation> parts{P("(0 1 2)", 4), P("(0 1)(2 3)", 4), P("(1 2 3)", 4)};
  auto t = power_tuple(parts);
  auto a4cube = direct_power(a4, 3);
  CHECK(a4cube.contains(t));
  for (unsigned i = 0; i < 3; ++i) {
    CHECK(project_component(t, i, 4) == parts[i]);
    CHECK(a4cube.contains(embed_component(parts[i], i, 3)));
  }
  CHECK(t == embed_component(parts[0], 0, 3) * embed_component(parts[1], 1, 3) *
                 embed_component(parts[2], 2, 3));
  CHECK_THROWS_AS(direct_power(a4, 0), InvalidArgument);
  Budget tight;
  tight.degree_cap = 10;
  CHECK_THROWS_AS(direct_power(a4, 3, tight), BudgetExceeded);
}

TEST_CASE("regular wreath products")
{
  auto c2 = cyclic_group(2);
  auto w = regular_wreath(c2, c2);
  CHECK(w.product().order() == 8);
  CHECK_FALSE(w.product().is_abelian());
  CHECK(oracle::closure(w.product().degree(), w.product().generators()).size() == 8);

  auto a5 = alternating_group(5);
  auto trivial = PermutationGroup::trivial(1);
  auto wa = regular_wreath(a5, trivial);
  CHECK(wa.product() == a5);

  auto w2 = regular_wreath(a5, c2);
  CHECK(w2.product().degree() == 10);
  CHECK(w2.product().order() == 7200);

  Budget tight;
  tight.wreath_top_cap = 12;
  CHECK_THROWS_AS(regular_wreath(c2, symmetric_group(4), tight), BudgetExceeded);
}

TEST_CASE("wreath structure on a corpus of pairs")
{
  std::vector<std::pair<PermutationGroup, PermutationGroup>> pairs{
      {cyclic_group(2), cyclic_group(3)}, {cyclic_group(3), cyclic_group(2)},
      {symmetric_group(3), cyclic_group(2)}, {cyclic_group(2), klein_four_group()},
      {cyclic_group(2), symmetric_group(3)}, {alternating_group(4), cyclic_group(2)}};
  std::mt19937 rng(7);
  for (auto const &[a, b] : pairs) {
    auto w = regular_wreath(a, b);
    CAPTURE(describe(a));
    CAPTURE(describe(b));
    std::size_t nb = static_cast<std::size_t>(b.order());
    CHECK(w.product().order() == pow_big(a.order(), nb) * b.order());
    auto base = w.base_subgroup();
    auto top = w.top_subgroup();
    CHECK(is_normal(w.product(), base));
    CHECK(quotient(w.product(), base).group.order() == b.order());
    CHECK(subgroup_intersection(w.product(), base, top).order() == 1);
    CHECK(join(base, top) == w.product());
    CHECK(top.order() == b.order());

    // Conjugating a base element by a top element re-indexes by right
    // translation: phi^c(b) = phi(b c^-1).
    auto elems_a = a.elements();
    std::vector<Permutation> phi;
    for (std::size_t j = 0; j < nb; ++j)
      phi.push_back(elems_a[rng() % elems_a.size()]);
    auto bs = w.top_elements();
    auto c = bs[rng() % bs.size()];
    auto conj = w.embed_base(phi) ^ w.embed_top(c);
    auto [vals, top_part] = w.decompose(conj);
    CHECK(top_part.is_identity());
    for (std::size_t j = 0; j < nb; ++j)
      CHECK(vals[j] == phi[w.block_index(bs[j] * c.inverse())]);

    // decompose inverts the normal form phi * c.
    auto g = w.embed_base(phi) * w.embed_top(c);
    auto [v2, c2] = w.decompose(g);
    CHECK(c2 == c);
    CHECK(v2 == phi);
    auto range = w.block_range(c);
    CHECK(range.second - range.first == a.degree());
  }
}

TEST_CASE("Kaloujnine-Krasner embeddings")
{
  SUBCASE("C4 over its C2")
  {
    auto c4 = cyclic_group(4);
    auto c2 = PermutationGroup(4, {P("(0 2)(1 3)", 4)});
    auto kk = kaloujnine_krasner(c4, c2);
    CHECK(kk.wreath.product().order() == 8);
    CHECK(kk.embedding.is_injective());
    auto img = kk.embedding.image();
    CHECK(img.order() == 4);
    CHECK(img.is_abelian());
    CHECK(kk.embedding(c4.generators()[0]).order() == 4);
  }
  SUBCASE("E over E")
  {
    auto s3 = symmetric_group(3);
    auto kk = kaloujnine_krasner(s3, s3);
    CHECK(kk.wreath.product() == s3);
    for (auto const &x : s3.elements())
      CHECK(kk.embedding(x) == x);
  }
  SUBCASE("S3 over A3")
  {
    auto s3 = symmetric_group(3);
    auto kk = kaloujnine_krasner(s3, alternating_group(3));
    CHECK(kk.wreath.product().order() == 18);
    CHECK(kk.embedding.image().order() == 6);
    CHECK(kk.embedding.is_injective());
  }
  SUBCASE("not normal")
  {
    CHECK_THROWS_AS(kaloujnine_krasner(symmetric_group(3), PermutationGroup(3, {P("(0 1)", 3)})),
                    InvalidArgument);
  }
}

TEST_CASE("Kaloujnine-Krasner transversal invariance")
{
  std::vector<std::pair<PermutationGroup, PermutationGroup>> cases{
      {symmetric_group(4), alternating_group(4)},
      {symmetric_group(4), klein_four_group().extended(4)},
      {dihedral_group(4), PermutationGroup(4, {P("(0 1 2 3)", 4)})},
      {quaternion_group(), derived_subgroup(quaternion_group())}};
  for (auto const &[e, a] : cases) {
    auto least = kaloujnine_krasner(e, a);
    // Greatest element of each coset instead of the least.
    std::vector<Permutation> greatest(least.transversal.size());
    auto qs = least.wreath.top_elements();
    for (auto const &x : e.elements())
      greatest[least.wreath.block_index(least.quotient.projection(x))] = x;
    auto other = kaloujnine_krasner(e, a, greatest);
    auto i1 = least.embedding.image();
    auto i2 = other.embedding.image();
    CHECK(i1.order() == e.order());
    CHECK(i2.order() == e.order());
    CHECK(derived_subgroup(i1).order() == derived_subgroup(i2).order());
    CHECK(order_histogram(i1) == order_histogram(i2));
    CHECK(least.embedding.graph().order() == e.order());
    if (least.wreath.product().order() <= 5000)
      CHECK(conjugate_in(least.wreath.product(), i1, i2));
  }
}

TEST_CASE("recognizing direct powers")
{
  auto a4 = alternating_group(4);
  auto g = direct_power(a4, 3);
  auto split = split_direct_power(g);
  REQUIRE(split.has_value());
  CHECK(split->k == 3);
  CHECK(split->block_degree == 4);
  CHECK(split->component == a4);
  auto h = direct_power(klein_four_group(), 3);
  auto h0 = power_component(h, 4, 3);
  REQUIRE(h0.has_value());
  CHECK(*h0 == klein_four_group());
  // Diagonal subgroups are not powers.
  auto diag = PermutationGroup(8, {power_tuple(std::vector<Permutation>{P("(0 1 2)", 4), P("(0 1 2)", 4)})});
  CHECK_FALSE(power_component(diag, 4, 2).has_value());
  CHECK_FALSE(split_direct_power(alternating_group(5)).has_value());
  // The base of A5 wr C2 is A5^2.
  auto base = regular_wreath(alternating_group(5), cyclic_group(2)).base_subgroup();
  REQUIRE(split_direct_power(base).has_value());
  CHECK(split_direct_power(base)->component == alternating_group(5));
}
