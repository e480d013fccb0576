// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#include "oracles.hpp"

#include "vlab/catalog.hpp"
#include "vlab/constructions.hpp"
#include "vlab/dominion.hpp"
#include "vlab/group_algorithms.hpp"
#include "vlab/homomorphism.hpp"
#include "vlab/named_groups.hpp"
#include "vlab/power_series.hpp"
#include "vlab/scenarios.hpp"
#include "vlab/wreath_z.hpp"

using namespace vlab;

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

struct Check
{
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, std::string const &what)
  {
    if (!cond) {
      notes.push_back("failed: " + what);
      ok = false;
    }
  }

  void note(std::string s)
  {
    notes.push_back(std::move(s));
  }
};

int failures = 0;

void criterion(int id, char const *title, double limit_seconds,
               std::function<void(Check &)> const &body)
{
  Check out;
  auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (std::exception const &e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0)
    out.require(secs < limit_seconds, "runtime " + std::to_string(secs) + " s");
  std::string notes;
  for (auto const &n : out.notes)
    notes += (notes.empty() ? ": " : "; ") + n;
  std::string limit = limit_seconds > 0 ? ", limit " + std::to_string(int(limit_seconds)) + " s" : "";
  std::printf("[%s] %2d %s (%.2f s%s)%s\n", out.ok ? "PASS" : "FAIL", id, title, secs,
              limit.c_str(), notes.c_str());
  std::fflush(stdout);
  failures += !out.ok;
}

bool mentions(std::vector<std::string> const &lines, std::string const &needle)
{
  for (auto const &l : lines) {
    if (l.find(needle) != std::string::npos)
      return true;
  }
  return false;
}

bool mentions_deep(EpiVerdict const &v, std::string const &needle)
{
  if (mentions(v.derivation, needle))
    return true;
  return v.certificate.inner && mentions_deep(*v.certificate.inner, needle);
}

} // namespace

int main()
{
  auto fx = FixtureSet::bundled();
  auto const &catalog = Catalog::bundled();
  auto a5 = alternating_group(5);
  auto a4 = alternating_group(4).extended(5);

  criterion(1, "A4 in A5 is epi under var(A5)A and var(A5)N2", 30, [&](Check &o) {
    auto v = epi_decide(a5, a4, V("prod(var:A5,A)"), fx);
    o.require(v.outcome == Outcome::epi, "prod(var:A5,A) outcome " + to_string(v.outcome));
    o.require(v.certificate.kind == Certificate::Kind::product_reduction, "product reduction");
    o.require(mentions(v.derivation, "HQ(G) = G holds"), "covering condition cited");
    o.require(mentions_deep(v, "B.H. Neumann"), "Neumann fixture cited");
    o.require(verify_verdict(a5, a4, V("prod(var:A5,A)"), v, fx).ok, "certificate re-verifies");
    auto w = epi_decide(a5, a4, V("prod(var:A5,Nc:2)"), fx);
    o.require(w.outcome == Outcome::epi, "prod(var:A5,Nc:2) outcome " + to_string(w.outcome));
    o.require(verify_verdict(a5, a4, V("prod(var:A5,Nc:2)"), w, fx).ok, "N2 certificate");
    auto p = simpletimes_pipeline(a5, a4, V("var:A5"), V("Nc:2"), fx);
    o.require(p.verdict.outcome == Outcome::epi, "pipeline outcome");
  });

  criterion(2, "Q(A5 wr C2) is the base or trivial", 60, [&](Check &o) {
    auto r = verify_qofsimple(a5, cyclic_group(2), V("A"), fx);
    o.require(r.branch == QofSimpleReport::Branch::base, "A gives the base branch");
    o.require(r.verbal.order() == 3600, "|Q| = " + r.verbal.order().str());
    auto t = verify_qofsimple(a5, cyclic_group(2), V("laws:{x1^60}"), fx);
    o.require(t.branch == QofSimpleReport::Branch::trivial, "x^60 gives the trivial branch");
  });

  criterion(3, "every proper subgroup of order <= 24 catalog groups is NotEpi under Sl:3", 600,
            [&](Check &o) {
              std::size_t pairs = 0, not_epi = 0, verified = 0, unknown = 0;
              for (auto const &e : catalog.entries()) {
                if (e.group.order() > 24)
                  continue;
                for (auto const &h : all_subgroups(e.group)) {
                  if (h.order() == e.group.order())
                    continue;
                  ++pairs;
                  auto v = epi_decide(e.group, h, V("Sl:3"), fx);
                  not_epi += v.outcome == Outcome::not_epi;
                  unknown += v.outcome == Outcome::unknown;
                  verified += verify_verdict(e.group, h, V("Sl:3"), v, fx).ok &&
                              v.outcome == Outcome::not_epi;
                }
              }
              o.note(std::to_string(pairs) + " pairs");
              o.require(pairs > 0, "pairs enumerated");
              o.require(not_epi == pairs, std::to_string(not_epi) + " NotEpi");
              o.require(verified == pairs, std::to_string(verified) + " verified");
              o.require(unknown == 0, std::to_string(unknown) + " Unknown");
            });

  criterion(4, "[psi, x] = phi solved in G wr Z for 200 random phi, two seeds each", 0,
            [&](Check &o) {
              std::vector<PermutationGroup> groups{symmetric_group(3), dihedral_group(4),
                                                   alternating_group(4)};
              std::mt19937_64 rng(4);
              std::size_t runs = 0, exact = 0, constant = 0, phis = 0;
              for (std::size_t gi = 0; gi < 3; ++gi) {
                auto const &g = groups[gi];
                auto elems = g.elements();
                std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
                auto x = WreathZElement::generator(g.degree());
                for (auto const &phi : random_supported_functions(g, gi < 2 ? 67 : 66, rng())) {
                  ++phis;
                  TailConstantFn psi[2];
                  for (auto &p : psi) {
                    p = solve_commutator(phi, elems[pick(rng)]);
                    ++runs;
                    // Independent check: psi(n)^-1 psi(n-1) = phi(n) on a wide window.
                    bool pointwise = true;
                    for (long long n = phi.lo() - 10; n <= phi.hi() + 10; ++n)
                      pointwise = pointwise && p(n).inverse() * p(n - 1) == phi(n);
                    exact += pointwise &&
                             wz_commutator(WreathZElement::base(p), x) == WreathZElement::base(phi);
                  }
                  auto d = psi[0] * psi[1].inverse();
                  bool is_constant = true;
                  for (long long n = phi.lo() - 10; n <= phi.hi() + 10; ++n)
                    is_constant = is_constant && d(n) == d(0);
                  constant += is_constant;
                }
              }
              o.note(std::to_string(exact) + "/" + std::to_string(runs) + " exact, " +
                     std::to_string(constant) + "/" + std::to_string(phis) +
                     " constant differences");
              o.require(phis == 200 && runs == 400, "run count");
              o.require(exact == runs, "all commutators exact");
              o.require(constant == phis, "all seed differences constant");
            });

  criterion(5, "Magnus witness coefficients for 20 words at p = 2, 3", 0, [&](Check &o) {
    std::size_t ok = 0, total = 0;
    for (auto const &w : magnus_corpus()) {
      for (std::uint64_t p : {2ull, 3ull}) {
        ++total;
        auto r = law_failure_witness(w, p);
        // Recompute the image independently of the witness record.
        auto image = magnus_image(w, p, r.d);
        bool nontrivial = !image.is_one();
        auto c = image.coefficient(r.monomial);
        ok += nontrivial && c == r.predicted_coefficient && c != 0;
      }
    }
    o.note(std::to_string(ok) + "/" + std::to_string(total));
    o.require(total == 40 && ok == 40, "all witnesses match");
  });

  criterion(6, "wreath escapes for C2 under A, C2 under N2 and A5 under A", 60, [&](Check &o) {
    auto e1 = find_wreath_escape(cyclic_group(2), V("A"), fx);
    o.require(e1.found && e1.name == "C2", "C2/A gives C2");
    o.require(e1.found && e1.witness->order() == 8 && !e1.witness->is_abelian(),
              "order-8 nonabelian witness");
    auto e2 = find_wreath_escape(cyclic_group(2), V("Nc:2"), fx);
    o.require(e2.found && e2.name == "C4", "C2/N2 gives C4");
    if (e2.found) {
      // |C2 wr C4| = 2^4 * 4.
      o.note("C2 wr C4 has order " + e2.witness->order().str());
      o.require(e2.witness->order() == 64, "witness order");
      auto lcs = lower_central_series(*e2.witness, 3);
      o.require(lcs.back().order() != 1, "class >= 3 by lower central series");
    }
    auto e3 = find_wreath_escape(a5, V("A"), fx);
    o.require(e3.found && e3.name == "1", "A5/A gives the trivial group");
  });

  criterion(7, "Kaloujnine-Krasner embeddings of 10 extensions", 0, [&](Check &o) {
    struct Ext
    {
      char const *label;
      PermutationGroup e, a;
    };
    auto c4 = cyclic_group(4);
    auto d4 = dihedral_group(4);
    auto s4 = symmetric_group(4);
    auto q8 = quaternion_group();
    std::vector<Ext> exts{
        {"C4 over C2", c4, sub(4, {"(0 2)(1 3)"})},
        {"S3 over A3", symmetric_group(3), alternating_group(3)},
        {"D4 over C4", d4, sub(4, {"(0 1 2 3)"})},
        {"D4 over V4", d4, sub(4, {"(0 2)(1 3)", "(1 3)"})},
        {"Q8 over C4", q8, PermutationGroup(8, {q8.generators()[0]})},
        {"A4 over V4", alternating_group(4), klein_four_group()},
        {"S4 over A4", s4, alternating_group(4)},
        {"S4 over V4", s4, klein_four_group()},
        {"C6 over C3", cyclic_group(6), sub(6, {"(0 2 4)(1 3 5)"})},
        {"D5 over C5", dihedral_group(5), sub(5, {"(0 1 2 3 4)"})},
    };
    std::size_t ok = 0;
    for (auto const &x : exts) {
      auto kk = kaloujnine_krasner(x.e, x.a);
      // Oracle: the generator images extend to a homomorphism E -> A wr E/A
      // whose image has |E| elements.
      std::vector<Permutation> images;
      for (auto const &g : x.e.generators())
        images.push_back(kk.embedding(g));
      auto map = oracle::extend_hom(x.e.degree(), x.e.generators(), kk.wreath.product().degree(),
                                    images);
      std::set<Permutation> image_set;
      bool inside = true;
      if (map) {
        for (auto const &[k, v] : *map) {
          image_set.insert(v);
          inside = inside && kk.wreath.product().contains(v);
        }
      }
      bool good = map && inside && image_set.size() == map->size() &&
                  BigInt(image_set.size()) == x.e.order() && kk.embedding.is_injective() &&
                  kk.embedding.image().order() == x.e.order();
      if (!good)
        o.require(false, x.label);
      ok += good;
    }
    o.note(std::to_string(ok) + "/" + std::to_string(exts.size()));
  });

  // Random metabelian instances shared by criteria 8 and 9.
  struct Inst
  {
    PermutationGroup g, h;
    DominionBounds b;
  };
  std::vector<Inst> instances;

  criterion(8, "bounds for 100 random (G, H) under prod(A,A)", 0, [&](Check &o) {
    auto aa = V("prod(A,A)");
    std::vector<PermutationGroup> pool;
    for (auto const &e : catalog.entries()) {
      if (e.group.order() <= 200 && derived_length(e.group).value_or(99) <= 2)
        pool.push_back(e.group);
    }
    pool.push_back(regular_wreath(cyclic_group(2), cyclic_group(4)).product());
    pool.push_back(regular_wreath(cyclic_group(3), cyclic_group(3)).product());
    pool.push_back(regular_wreath(cyclic_group(5), cyclic_group(2)).product());
    pool.push_back(dihedral_group(50));
    pool.push_back(regular_wreath(cyclic_group(4), cyclic_group(2)).product());
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<std::size_t> pick_g(0, pool.size() - 1);
    std::size_t violations = 0, exact = 0;
    for (int i = 0; i < 100; ++i) {
      auto const &g = pool[pick_g(rng)];
      if (derived_length(g).value_or(99) > 2 || g.order() > 200) {
        o.require(false, "pool group outside prod(A,A)");
        continue;
      }
      auto elems = g.elements();
      std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
      std::uniform_int_distribution<int> ngens(1, 2);
      std::vector<Permutation> gens;
      for (int k = ngens(rng); k > 0; --k)
        gens.push_back(elems[pick(rng)]);
      PermutationGroup h(g.degree(), gens);
      auto b = dominion_bounds(g, h, aa, fx);
      auto agh = join(derived_subgroup(g), h);
      bool fine = b.lower.contains(h) && b.upper.contains(b.lower) && b.mckay == agh &&
                  b.mckay.contains(b.upper) && g.contains(b.mckay) &&
                  (b.exact ? b.lower == b.upper : b.upper == agh);
      violations += !fine;
      exact += b.exact;
      instances.push_back({g, h, b});
    }
    o.note(std::to_string(exact) + " exact, " + std::to_string(violations) + " violations");
    o.require(violations == 0, "sandwich");
  });

  criterion(9, "direct powers of exact instances with |G| <= 60", 0, [&](Check &o) {
    auto aa = V("prod(A,A)");
    std::size_t checked = 0, bad = 0;
    for (auto const &in : instances) {
      if (!in.b.exact || in.g.order() > 60)
        continue;
      for (unsigned k : {2u, 3u}) {
        auto bk = dominion_bounds(direct_power(in.g, k), direct_power(in.h, k), aa, fx);
        bool same = bk.lower == direct_power(in.b.lower, k) &&
                    bk.upper == direct_power(in.b.upper, k);
        bad += !same;
        ++checked;
      }
    }
    o.note(std::to_string(checked) + " power instances");
    o.require(checked > 0, "instances available");
    o.require(bad == 0, std::to_string(bad) + " mismatches");
  });

  criterion(10, "homomorphism counts and separating pairs", 0, [&](Check &o) {
    auto c4 = cyclic_group(4);
    auto s3 = symmetric_group(3);
    o.require(all_homomorphisms(c4, c4).size() == 4, "|Hom(C4,C4)| = 4");
    o.require(all_homomorphisms(a5, cyclic_group(2)).size() == 1, "|Hom(A5,C2)| = 1");
    o.require(all_homomorphisms(cyclic_group(2), s3).size() == 4, "|Hom(C2,S3)| = 4");
    // Brute-force counts agree.
    o.require(oracle::all_homs(4, c4.generators(), 4, c4.elements()).size() == 4, "oracle C4");
    o.require(oracle::all_homs(2, cyclic_group(2).generators(), 3, s3.elements()).size() == 4,
              "oracle C2 -> S3");
    auto a = V("A");
    auto c2 = sub(4, {"(0 2)(1 3)"});
    auto r = separating_pair_search(c4, c2, {c4}, &a, fx);
    o.require(r.has_value(), "C4/C2 separated");
    if (r) {
      auto const &c = r->certificate;
      auto x = c.source_generators.at(0);
      std::set<Permutation> imgs{c.f_images.at(0), c.g_images.at(0)};
      o.require(imgs == std::set<Permutation>{x, x.inverse()}, "identity and inversion");
      o.require(c.witness && *c.witness == x, "witness is the generator");
      o.require(verify_verdict(c4, c2, a, *r, fx).ok, "pair re-verifies");
    }
    std::vector<std::string> log;
    auto s = separating_pair_search(a5, a4, {symmetric_group(5)}, nullptr, fx, default_budget(),
                                    &log);
    o.require(!s, "A5/A4 in S5 inconclusive");
    o.require(mentions(log, "no separation in S5"), "full enumeration reported");
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures;
}
