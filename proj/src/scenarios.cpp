#include "vlab/scenarios.hpp"

#include <random>

#include "vlab/errors.hpp"
#include "vlab/group_algorithms.hpp"
#include "vlab/named_groups.hpp"

namespace vlab {

namespace {

VarietyDescriptor V(char const *s)
{
  return VarietyDescriptor::parse(s);
}

PermutationGroup sub(std::size_t n, std::vector<char const *> gens)
{
  std::vector<Permutation> g;
  for (auto s : gens)
    g.push_back(Permutation::parse(s, n));
  return PermutationGroup(n, g);
}

std::string join_strings(std::vector<std::string> const &xs, char const *sep = "; ")
{
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i)
    out += (i ? sep : "") + xs[i];
  return out;
}

struct Context
{
  FixtureSet const &fixtures;
  Catalog const &catalog;
  Budget const &budget;
};

// Each scenario fills the report and returns the observed outcome.
using Runner = std::string (*)(Context const &, Json &);

std::string neumann_a4a5(Context const &c, Json &report)
{
  auto a5 = alternating_group(5);
  auto a4 = alternating_group(4).extended(5);
  std::vector<std::string> seen;
  for (char const *d : {"var:A5", "prod(var:A5,A)"}) {
    auto v = epi_decide(a5, a4, V(d), c.fixtures, c.budget);
    auto check = verify_verdict(a5, a4, V(d), v, c.fixtures, c.budget);
    report["decisions"].push_back(
        Json{{"variety", d}, {"verdict", to_json(v)}, {"verified", check.ok}});
    seen.push_back(to_string(v.outcome) + (check.ok ? "" : "(unverified)"));
  }
  auto p = simpletimes_pipeline(a5, a4, V("var:A5"), V("Nc:2"), c.fixtures, c.budget);
  report["pipeline"] = to_json(p);
  seen.push_back(to_string(p.verdict.outcome));
  return join_strings(seen);
}

std::string mckay_bound_demo(Context const &c, Json &report)
{
  struct Case
  {
    char const *label;
    PermutationGroup g, h;
    char const *desc;
  };
  std::vector<Case> cases{
      {"A4 in A5", alternating_group(5), alternating_group(4).extended(5), "prod(var:A5,A)"},
      {"S3 in S4", symmetric_group(4), sub(4, {"(0 1 2)", "(0 1)"}), "prod(Sl:2,A)"},
      {"reflection in D4", dihedral_group(4), sub(4, {"(1 3)"}), "prod(A,A)"},
  };
  std::vector<std::string> seen;
  for (auto const &k : cases) {
    auto b = dominion_bounds(k.g, k.h, V(k.desc), c.fixtures, c.budget);
    bool sandwich = b.lower.contains(k.h) && b.upper.contains(b.lower) &&
                    b.mckay.contains(b.upper) && k.g.contains(b.mckay);
    report["cases"].push_back(Json{{"case", k.label},
                                   {"variety", k.desc},
                                   {"bounds", to_json(b)},
                                   {"sandwich", sandwich}});
    seen.push_back(std::string(k.label) + " " + b.lower.order().str() + "/" +
                   b.upper.order().str() + "/" + b.mckay.order().str() +
                   (b.exact ? " exact" : "") + (sandwich ? "" : " VIOLATION"));
  }
  return join_strings(seen);
}

std::string commofwr_fuzz(Context const &, Json &report)
{
  std::vector<PermutationGroup> groups{symmetric_group(3), dihedral_group(4),
                                       alternating_group(4)};
  std::size_t runs = 0, ok = 0, constant_diff = 0;
  std::mt19937_64 rng(20240601);
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    auto const &g = groups[gi];
    std::size_t count = gi + 1 < groups.size() ? 67 : 66;
    auto elems = g.elements();
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    auto x = WreathZElement::generator(g.degree());
    for (auto const &phi : random_supported_functions(g, count, rng())) {
      TailConstantFn psi[2];
      Permutation seeds[2] = {elems[pick(rng)], elems[pick(rng)]};
      for (int s = 0; s < 2; ++s) {
        psi[s] = solve_commutator(phi, seeds[s]);
        ++runs;
        if (wz_commutator(WreathZElement::base(psi[s]), x) == WreathZElement::base(phi))
          ++ok;
      }
      auto diff = psi[0] * psi[1].inverse();
      if (diff.values().empty() && diff.left_tail() == diff.right_tail())
        ++constant_diff;
    }
  }
  report["runs"] = runs;
  report["verified"] = ok;
  report["constant_seed_differences"] = constant_diff;
  return std::to_string(ok) + "/" + std::to_string(runs) + " verified; " +
         std::to_string(constant_diff) + "/" + std::to_string(runs / 2) + " constant";
}

std::string qofsimple_a5c2(Context const &c, Json &report)
{
  auto a5 = alternating_group(5);
  std::vector<std::string> seen;
  for (char const *q : {"A", "laws:{x1^60}"}) {
    auto r = verify_qofsimple(a5, cyclic_group(2), V(q), c.fixtures, c.budget);
    report["cases"].push_back(Json{{"variety", q}, {"result", to_json(r)}});
    seen.push_back(std::string(r.branch == QofSimpleReport::Branch::base ? "base" : "trivial") +
                   ":" + r.verbal.order().str());
  }
  return join_strings(seen);
}

std::string escape_common(Context const &c, Json &report,
                          std::vector<std::pair<PermutationGroup, char const *>> const &cases)
{
  std::vector<std::string> seen;
  for (auto const &[a, d] : cases) {
    auto e = find_wreath_escape(a, V(d), c.fixtures, c.budget);
    report["cases"].push_back(Json{{"base", to_json(a)}, {"variety", d}, {"escape", to_json(e)}});
    if (!e.found) {
      seen.push_back("none");
      continue;
    }
    std::string s = e.name + ":" + e.witness->order().str();
    if (auto cls = nilpotency_class(*e.witness))
      s += " class " + std::to_string(*cls);
    seen.push_back(s);
  }
  return join_strings(seen);
}

std::string escape_abelian(Context const &c, Json &report)
{
  return escape_common(c, report, {{cyclic_group(2), "A"}, {alternating_group(5), "A"}});
}

std::string escape_nil2(Context const &c, Json &report)
{
  return escape_common(c, report, {{cyclic_group(2), "Nc:2"}});
}

std::string magnus_corpus_run(Context const &, Json &report)
{
  std::size_t ok = 0, total = 0;
  for (auto const &w : magnus_corpus()) {
    for (std::uint64_t p : {2ull, 3ull}) {
      auto r = law_failure_witness(w, p);
      ++total;
      ok += r.verified();
      auto j = to_json(r);
      j["word"] = w.to_string();
      report["witnesses"].push_back(std::move(j));
    }
  }
  return std::to_string(ok) + "/" + std::to_string(total);
}

std::string solvable_exhaustive(Context const &c, Json &report)
{
  auto sl3 = V("Sl:3");
  std::size_t groups = 0, pairs = 0, not_epi = 0, verified = 0, unknown = 0;
  for (auto const &e : c.catalog.entries()) {
    if (e.group.order() > 24)
      continue;
    ++groups;
    std::size_t local = 0;
    for (auto const &h : all_subgroups(e.group, c.budget)) {
      if (h.order() == e.group.order())
        continue;
      ++pairs;
      ++local;
      auto v = epi_decide(e.group, h, sl3, c.fixtures, c.budget);
      if (v.outcome == Outcome::not_epi) {
        ++not_epi;
        verified += verify_verdict(e.group, h, sl3, v, c.fixtures, c.budget).ok;
      } else if (v.outcome == Outcome::unknown) {
        ++unknown;
      }
    }
    report["groups"].push_back(Json{{"name", e.name}, {"proper_subgroups", local}});
  }
  report["pairs"] = pairs;
  report["not_epi"] = not_epi;
  report["verified"] = verified;
  report["unknown"] = unknown;
  return std::to_string(groups) + " groups; NotEpi " + std::to_string(not_epi) + "/" +
         std::to_string(pairs) + "; verified " + std::to_string(verified) + "; unknown " +
         std::to_string(unknown);
}

struct Entry
{
  char const *name;
  char const *description;
  char const *expected;
  Runner run;
};

std::vector<Entry> const &registry()
{
  static std::vector<Entry> const r{
      {"neumann-a4a5",
       "A4 in A5 under var(A5) by fixture, under var(A5)A by the product criterion, and the "
       "wreath pipeline for var(A5)N2",
       "Epi; Epi; Epi", neumann_a4a5},
      {"mckay-bound-demo", "lower/upper/McKay bound orders for three product-variety instances",
       "A4 in A5 60/60/60 exact; S3 in S4 6/24/24; reflection in D4 2/2/4 exact",
       mckay_bound_demo},
      {"commofwr-fuzz",
       "solve [psi, x] = phi in G wr Z for 200 random phi over S3, D4, A4 with two seeds each",
       "400/400 verified; 200/200 constant", commofwr_fuzz},
      {"qofsimple-a5c2", "Q(A5 wr C2) under A and under x^60", "base:3600; trivial:1",
       qofsimple_a5c2},
      {"escape-abelian", "least ladder G with A wr G outside A, for A = C2 and A = A5",
       "C2:8 class 2; 1:60", escape_abelian},
      {"escape-nil2", "least ladder G with C2 wr G outside N2", "C4:64 class 4", escape_nil2},
      {"magnus-corpus", "Magnus witness coefficients for 20 words at p = 2, 3", "40/40",
       magnus_corpus_run},
      {"solvable-exhaustive",
       "every proper subgroup of every catalog group of order <= 24 is NotEpi under Sl:3",
       "77 groups; NotEpi 962/962; verified 962; unknown 0", solvable_exhaustive},
  };
  return r;
}

} // namespace

std::vector<std::string> const &scenario_names()
{
  static std::vector<std::string> const names = [] {
    std::vector<std::string> n;
    for (auto const &e : registry())
      n.push_back(e.name);
    return n;
  }();
  return names;
}

ScenarioResult run_scenario(std::string_view name, FixtureSet const &fixtures,
                            Catalog const &catalog, Budget const &budget)
{
  for (auto const &e : registry()) {
    if (name != e.name)
      continue;
    ScenarioResult r;
    r.name = e.name;
    r.description = e.description;
    r.expected = e.expected;
    Json body;
    body["scenario"] = e.name;
    body["description"] = e.description;
    Context ctx{fixtures, catalog, budget};
    r.observed = e.run(ctx, body);
    r.passed = r.observed == r.expected;
    body["expected"] = r.expected;
    body["observed"] = r.observed;
    body["passed"] = r.passed;
    body["budgets"] = to_json(budget);
    r.report = make_report("scenario", std::move(body));
    return r;
  }
  throw InvalidArgument("unknown scenario '" + std::string(name) + "'");
}

std::vector<Word> const &magnus_corpus()
{
  static std::vector<Word> const corpus = [] {
    std::vector<Word> c;
    for (char const *s : {"x1", "x1^2", "x1^3", "x1^-4", "x1x2", "x1^2x2^-1", "[x1,x2]",
                          "x1x2x1^-1", "x1^3x2^3", "x2x1^-2x2", "x1^-1x2^2x1x2^-2", "x1x2x3x1^-1x2^-1",
                          "x1x2x3", "x1^2x2x3^-1", "(x1x2)^2", "x1x2^-1x3x1", "x1^4x2^-4",
                          "x3^2x1^3", "[x1,x3]x2", "x1^-1x2^-1x3^-1"}) {
      c.push_back(Word::parse(s));
    }
    return c;
  }();
  return corpus;
}

std::vector<TailConstantFn> random_supported_functions(PermutationGroup const &g,
                                                       std::size_t count, std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  auto elems = g.elements();
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  std::uniform_int_distribution<long long> lo(-5, 5);
  std::uniform_int_distribution<std::size_t> width(1, 6);
  auto id = Permutation::identity(g.degree());
  std::vector<TailConstantFn> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Permutation> values;
    for (std::size_t k = width(rng); k > 0; --k)
      values.push_back(elems[pick(rng)]);
    out.emplace_back(lo(rng), std::move(values), id, id);
  }
  return out;
}

} // namespace vlab
