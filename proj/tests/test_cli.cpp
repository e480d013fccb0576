#include "doctest.h"
#include "oracles.hpp"

#include <filesystem>
#include <fstream>
#include <map>

#include "vlab/catalog.hpp"
#include "vlab/errors.hpp"
#include "vlab/group_spec.hpp"
#include "vlab/named_groups.hpp"
#include "vlab/report.hpp"
#include "vlab/scenarios.hpp"

using namespace vlab;

namespace {

// Isomorphism invariant: order, centre size, derived subgroup size and the
// multiset of (element order, centraliser order), all by brute force.
std::vector<std::size_t> invariant(PermutationGroup const &g)
{
  auto elems = g.elements();
  std::set<Permutation> all(elems.begin(), elems.end());
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> stats;
  std::size_t centre = 0;
  for (auto const &x : elems) {
    std::size_t cent = 0;
    for (auto const &y : elems)
      cent += x * y == y * x;
    centre += cent == elems.size();
    ++stats[{x.order(), cent}];
  }
  auto derived = oracle::commutator_subgroup(g.degree(), all, all);
  std::vector<std::size_t> inv{elems.size(), centre, derived.size()};
  std::set<Permutation> squares;
  for (auto const &x : elems)
    squares.insert(x * x);
  inv.push_back(oracle::generated_by(g.degree(), squares).size());
  for (auto const &[k, v] : stats) {
    inv.push_back(k.first);
    inv.push_back(k.second);
    inv.push_back(v);
  }
  return inv;
}

} // namespace

TEST_CASE("bundled catalog")
{
  auto const &c = Catalog::bundled();
  CHECK(c.entries().size() >= 50);
  std::map<std::size_t, std::set<std::vector<std::size_t>>> types;
  for (auto const &e : c.entries()) {
    auto n = e.group.order();
    if (n > 24)
      continue;
    types[static_cast<std::size_t>(n)].insert(invariant(e.group));
  }
  // Number of isomorphism types of each order up to 24.
  std::vector<std::size_t> known{1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5,
                                 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15};
  for (std::size_t n = 1; n <= 24; ++n) {
    CAPTURE(n);
    CHECK(types[n].size() == known[n - 1]);
  }
  REQUIRE(c.find("A5"));
  CHECK(c.find("A5")->order() == 60);
  CHECK(c.find("S5")->order() == 120);
  CHECK(c.find("SL(2,3)")->order() == 24);
  CHECK(c.find("wr(S3,C2)")->order() == 72);
  CHECK(c.find("nope") == nullptr);
}

TEST_CASE("catalog round trip and errors")
{
  auto const &c = Catalog::bundled();
  auto again = Catalog::parse(c.serialize());
  REQUIRE(again.entries().size() == c.entries().size());
  for (std::size_t i = 0; i < c.entries().size(); ++i) {
    auto const &a = c.entries()[i];
    auto const &b = again.entries()[i];
    CHECK(a.name == b.name);
    CHECK(a.group.degree() == b.group.degree());
    CHECK(a.group.generators() == b.group.generators());
  }

  CHECK(Catalog::parse("").entries().empty());
  CHECK(Catalog::parse("# only a comment\n\n").entries().empty());

  auto images = Catalog::parse("X | 3 | [1 2 0]; (0 1)\n");
  CHECK(images.find("X")->order() == 6);

  auto line_of = [](char const *text) -> std::size_t {
    try {
      Catalog::parse(text);
    } catch (ParseError const &e) {
      return e.position();
    }
    return 0;
  };
  CHECK(line_of("C2 | 2 | (0 1)\n# ok\nBad | 3 | [0 0 1]\n") == 3);
  CHECK(line_of("A | 2 | [1 0 2]\n") == 1);
  CHECK(line_of("A | 2 | (0 5)\n") == 1);
  CHECK(line_of("A | x | (0 1)\n") == 1);
  CHECK(line_of("A | 2\n") == 1);
  CHECK(line_of("A | 2 | (0 1)\nA | 2 | (0 1)\n") == 2);

  auto path = std::filesystem::temp_directory_path() / "vlab_catalog_test.txt";
  {
    std::ofstream out(path);
    out << "T | 4 | (0 1 2 3)\n";
  }
  CHECK(Catalog::load(path).find("T")->order() == 4);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(Catalog::load(path), InvalidArgument);
}

TEST_CASE("group specs")
{
  auto const &c = Catalog::bundled();
  CHECK(parse_group_spec("A5", c).order() == 60);
  CHECK(parse_group_spec("D4", c).order() == 8);
  CHECK(parse_group_spec("cat:SL(2,3)", c).order() == 24);
  CHECK(parse_group_spec("C4:C4", c).order() == 16);
  CHECK(parse_group_spec("(C4xC2):C2", c).order() == 16);
  CHECK(parse_group_spec("wr(C2, C2)", c).order() == 8);
  CHECK(parse_group_spec("wr(wr(C2,C2),C2)", c).order() == 128);
  CHECK(parse_group_spec("pow(S3,2)", c).order() == 36);
  CHECK(parse_group_spec("gens:(0 1 2);(0 1)", c).order() == 6);
  CHECK(parse_group_spec("gens:5:(0 1 2)", c).degree() == 5);
  CHECK(parse_group_spec("wr(gens:(0 1), C3)", c).order() == 24);

  auto position = [&](char const *text) -> std::size_t {
    try {
      parse_group_spec(text, c);
    } catch (ParseError const &e) {
      return e.position();
    }
    return 9999;
  };
  CHECK(position("wr(C2,Nope)") == 6);
  CHECK(position("pow(C2,0)") == 7);
  CHECK(position("wr(C2 C2)") != 9999);
  CHECK(position("gens:(0 1") != 9999);

  auto a5 = parse_group_spec("A5", c);
  auto a4 = parse_subgroup_spec("A4", a5, c);
  CHECK(a4.degree() == 5);
  CHECK(a4.order() == 12);
  CHECK(parse_subgroup_spec("gens:(0 1 2)", a5, c).degree() == 5);
  CHECK_THROWS_AS(parse_subgroup_spec("S4", a5, c), InvalidArgument);
}

TEST_CASE("reports")
{
  auto g = symmetric_group(3);
  auto j = to_json(g);
  CHECK(j["order"] == "6");
  CHECK(j["degree"] == 3);
  // Generators re-parse to the same group.
  std::vector<Permutation> gens;
  for (auto const &s : j["generators"])
    gens.push_back(Permutation::parse(s.get<std::string>(), 3));
  CHECK(PermutationGroup(3, gens) == g);

  auto r = make_report("x", Json{{"a", 1}});
  CHECK(r["schema"] == 1);
  CHECK(r["command"] == "x");
  CHECK(r["a"] == 1);
  auto b = to_json(default_budget());
  CHECK(b["element_cap"] == default_budget().element_cap);
}

TEST_CASE("scenarios are deterministic and match their records")
{
  auto fx = FixtureSet::bundled();
  auto const &c = Catalog::bundled();
  REQUIRE(scenario_names().size() == 8);
  for (auto const &n : scenario_names()) {
    CAPTURE(n);
    auto r1 = run_scenario(n, fx, c);
    auto r2 = run_scenario(n, fx, c);
    CHECK(r1.passed);
    CHECK(r1.observed == r1.expected);
    CHECK(r1.report.dump() == r2.report.dump());
    CHECK(r1.report["schema"] == 1);
    CHECK(r1.report.contains("budgets"));
  }
  CHECK_THROWS_AS(run_scenario("nope", fx, c), InvalidArgument);
}

TEST_CASE("scenario inputs")
{
  auto const &corpus = magnus_corpus();
  CHECK(corpus.size() == 20);
  std::set<std::string> distinct;
  for (auto const &w : corpus) {
    CHECK(w.length() >= 1);
    CHECK(w.length() <= 8);
    CHECK(w.arity() <= 3);
    distinct.insert(w.to_string());
  }
  CHECK(distinct.size() == 20);

  auto fs = random_supported_functions(alternating_group(4), 50, 7);
  CHECK(fs.size() == 50);
  for (auto const &f : fs) {
    CHECK(f.finitely_supported());
    CHECK(f.values().size() <= 6);
  }
  CHECK(random_supported_functions(alternating_group(4), 5, 7) ==
        std::vector<TailConstantFn>(fs.begin(), fs.begin() + 5));
}
