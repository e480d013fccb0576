#include "vlab/dominion.hpp"

#include <map>

#include "vlab/errors.hpp"
#include "vlab/group_algorithms.hpp"
#include "vlab/homomorphism.hpp"
#include "vlab/named_groups.hpp"

namespace vlab {

std::string to_string(Outcome o)
{
  switch (o) {
  case Outcome::epi: return "Epi";
  case Outcome::not_epi: return "NotEpi";
  case Outcome::unknown: return "Unknown";
  }
  return "Unknown";
}

std::string to_string(Certificate::Kind k)
{
  switch (k) {
  case Certificate::Kind::none: return "none";
  case Certificate::Kind::trivial: return "trivial";
  case Certificate::Kind::fixture: return "fixture";
  case Certificate::Kind::direct_power: return "direct_power";
  case Certificate::Kind::product_reduction: return "product_reduction";
  case Certificate::Kind::verbal_bound: return "verbal_bound";
  case Certificate::Kind::neumann: return "neumann";
  case Certificate::Kind::separating_pair: return "separating_pair";
  }
  return "none";
}

namespace {

std::string order_of(PermutationGroup const &g)
{
  return g.order().str();
}

std::string label(PermutationGroup const &g)
{
  return (g.name().empty() ? std::string("group") : g.name()) + " of order " + order_of(g);
}

void append_indented(std::vector<std::string> &out, std::vector<std::string> const &lines)
{
  for (auto const &l : lines)
    out.push_back("  " + l);
}

PermutationGroup intersect(PermutationGroup const &g, PermutationGroup const &a,
                           PermutationGroup const &b, Budget const &budget)
{
  if (a.contains(b))
    return b;
  if (b.contains(a))
    return a;
  return subgroup_intersection(g, a, b, budget);
}

} // namespace

// ---------------------------------------------------------------------------
// Bounds

PermutationGroup mckay_bound(PermutationGroup const &g, PermutationGroup const &h,
                             VarietyDescriptor const &n, VarietyDescriptor const &q,
                             FixtureSet const &fixtures, Budget const &budget)
{
  auto prod = VarietyDescriptor::product(n, q);
  if (member_of_variety(g, prod, fixtures, budget).result == Tri::no)
    throw InvalidArgument("group is not in " + prod.to_string());
  return join(q_verbal(g, q, fixtures, budget), h);
}

DominionBounds dominion_bounds(PermutationGroup const &g, PermutationGroup const &h,
                               VarietyDescriptor const &desc, FixtureSet const &fixtures,
                               Budget const &budget)
{
  if (!g.contains(h))
    throw InvalidArgument("H is not a subgroup of G");
  auto membership = member_of_variety(g, desc, fixtures, budget);
  if (membership.result == Tri::no)
    throw InvalidArgument("group is not in " + desc.to_string() + ": " + membership.reason);

  if (h == g)
    return {g, g, g, true, {"H = G, so the dominion is G"}};

  if (desc.is_product()) {
    auto const &n = desc.left();
    auto const &q = desc.right();
    PermutationGroup qg;
    try {
      qg = q_verbal(g, q, fixtures, budget);
    } catch (Undecidable const &e) {
      return {h, g, g, false, {std::string("verbal subgroup undecided: ") + e.what()}};
    }
    DominionBounds b{h, g, join(qg, h), false, {}};
    b.derivation.push_back("Q(G) for " + q.to_string() + " has order " + order_of(qg));
    b.derivation.push_back("McKay bound: dom <= Q(G)H, of order " + order_of(b.mckay));
    auto hq = intersect(g, h, qg, budget);
    auto d = dominion_bounds(qg, hq, n, fixtures, budget);
    b.derivation.push_back("dominion of H ∩ Q(G) (order " + order_of(hq) + ") in Q(G) under " +
                           n.to_string() + ":");
    append_indented(b.derivation, d.derivation);
    b.lower = join(h, d.lower);
    b.upper = b.mckay;
    b.derivation.push_back("lower bound HD of order " + order_of(b.lower));
    if (d.exact) {
      try {
        auto nd = normalizer(g, d.lower, budget);
        if (product_covers(g, nd, qg, budget)) {
          b.exact = true;
          b.upper = b.lower;
          b.derivation.push_back("N_G(D)Q(G) = G, so the dominion is exactly HD");
        } else {
          b.derivation.push_back("N_G(D)Q(G) != G; exactness not established");
        }
      } catch (BudgetExceeded const &e) {
        b.derivation.push_back(std::string("normalizer skipped: ") + e.what());
      }
    } else {
      b.derivation.push_back("D is not exact; upper bound is the McKay bound");
    }
    return b;
  }

  if (auto const *f = fixtures.find_epi(g, h, desc, budget))
    return {g, g, g, true, {"fixture: " + f->to_string()}};

  if (auto split = split_direct_power(g)) {
    if (auto h0 = power_component(h, split->block_degree, split->k)) {
      auto inner = dominion_bounds(split->component, *h0, desc, fixtures, budget);
      DominionBounds b{direct_power(inner.lower, split->k, budget),
                       direct_power(inner.upper, split->k, budget), g, inner.exact, {}};
      b.derivation.push_back("G = G0^" + std::to_string(split->k) + " and H = H0^" +
                             std::to_string(split->k) +
                             "; dominions of finite direct powers are powers of dominions:");
      append_indented(b.derivation, inner.derivation);
      return b;
    }
  }

  if (is_normal(g, h)) {
    auto q = quotient(g, h, budget);
    if (member_of_variety(q.group, desc, fixtures, budget).result == Tri::yes) {
      return {h, h, g, true,
              {"H is normal and G/H lies in " + desc.to_string() +
               "; the projection and the trivial map separate G from H"}};
    }
  }

  DominionBounds b{h, g, g, false, {}};
  auto closure = normal_closure(g, h.generators());
  try {
    auto vg = q_verbal(g, desc, fixtures, budget);
    b.upper = join(vg, closure);
    b.derivation.push_back("G/(V(G)H^G) lies in " + desc.to_string() +
                           " and is trivial on H, so dom <= V(G)H^G of order " +
                           order_of(b.upper));
  } catch (Undecidable const &e) {
    b.derivation.push_back(std::string("V(G) undecided: ") + e.what());
  }
  b.derivation.push_back("no exactness rule applies");
  return b;
}

// ---------------------------------------------------------------------------
// Non-epi tests

std::optional<EpiVerdict> neumann_not_epi_test(PermutationGroup const &g,
                                               PermutationGroup const &h, Budget const &budget)
{
  if (h.order() == g.order())
    return std::nullopt;
  PermutationGroup rad = is_solvable(g) ? g : solvable_radical(g, budget);
  if (!product_covers(g, h, rad, budget))
    return std::nullopt;
  PermutationGroup n = rad;
  for (auto const &term : derived_series(rad)) {
    if (!product_covers(g, h, term, budget))
      break;
    n = term;
  }
  EpiVerdict v;
  v.outcome = Outcome::not_epi;
  v.budget = budget;
  v.certificate.kind = Certificate::Kind::neumann;
  v.certificate.normal = n;
  v.derivation.push_back("solvable radical has order " + order_of(rad));
  v.derivation.push_back("solvable normal N of order " + order_of(n) +
                         " with NH = G and H != G; Neumann's solvable-complement test shows "
                         "H is not epimorphically embedded");
  return v;
}

std::vector<PermutationGroup> const &default_separating_catalog()
{
  static std::vector<PermutationGroup> const catalog = [] {
    std::vector<PermutationGroup> c;
    for (char const *name : {"C2", "C3", "C4", "C5", "C6", "V4", "S3", "D4", "Q8", "A4", "D5",
                             "D6", "S4", "A5"})
      c.push_back(named_group(name));
    return c;
  }();
  return catalog;
}

std::optional<EpiVerdict> separating_pair_search(PermutationGroup const &g,
                                                 PermutationGroup const &h,
                                                 std::vector<PermutationGroup> const &catalog,
                                                 VarietyDescriptor const *desc,
                                                 FixtureSet const &fixtures, Budget const &budget,
                                                 std::vector<std::string> *log)
{
  auto note = [&](std::string s) {
    if (log)
      log->push_back(std::move(s));
  };
  if (h.order() == g.order()) {
    note("H = G: homomorphisms agreeing on H agree everywhere");
    return std::nullopt;
  }
  for (auto const &c : catalog) {
    if (desc) {
      auto m = member_of_variety(c, *desc, fixtures, budget);
      if (m.result != Tri::yes) {
        note("skipped " + label(c) + ": membership " + to_string(m.result));
        continue;
      }
    }
    std::vector<GroupHomomorphism> homs;
    try {
      homs = all_homomorphisms(g, c, budget);
    } catch (BudgetExceeded const &e) {
      note("skipped " + label(c) + ": " + e.what());
      continue;
    }
    std::map<std::vector<Permutation>, std::size_t> by_restriction;
    for (std::size_t i = 0; i < homs.size(); ++i) {
      std::vector<Permutation> key;
      for (auto const &y : h.generators())
        key.push_back(homs[i](y));
      auto [it, fresh] = by_restriction.emplace(std::move(key), i);
      if (fresh)
        continue;
      auto const &f = homs[it->second];
      auto const &gg = homs[i];
      auto const &gens = f.source().generators();
      std::size_t w = 0;
      while (w < gens.size() && f.generator_images()[w] == gg.generator_images()[w])
        ++w;
      EpiVerdict v;
      v.outcome = Outcome::not_epi;
      v.budget = budget;
      auto &cert = v.certificate;
      cert.kind = Certificate::Kind::separating_pair;
      cert.target = c;
      cert.source_generators = gens;
      cert.f_images = f.generator_images();
      cert.g_images = gg.generator_images();
      cert.witness = gens.at(w);
      v.derivation.push_back("homomorphisms f, g: G -> " + label(c) +
                             " agree on H and differ at " + gens[w].to_string());
      note("separated in " + label(c) + " after " + std::to_string(i + 1) + " of " +
           std::to_string(homs.size()) + " homomorphisms");
      return v;
    }
    note("no separation in " + label(c) + " (" + std::to_string(homs.size()) +
         " homomorphisms)");
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Decision

namespace {

EpiVerdict make_verdict(Outcome o, Budget const &budget)
{
  EpiVerdict v;
  v.outcome = o;
  v.budget = budget;
  return v;
}

EpiVerdict decide(PermutationGroup const &g, PermutationGroup const &h,
                  VarietyDescriptor const &desc, FixtureSet const &fixtures, Budget const &budget,
                  std::vector<PermutationGroup> const &catalog)
{
  if (h == g) {
    auto v = make_verdict(Outcome::epi, budget);
    v.certificate.kind = Certificate::Kind::trivial;
    v.derivation.push_back("H = G");
    return v;
  }

  auto membership = member_of_variety(g, desc, fixtures, budget);
  std::vector<std::string> preamble;
  if (membership.result == Tri::no) {
    auto v = make_verdict(Outcome::unknown, budget);
    v.notes.push_back("G is not in " + desc.to_string() + " (" + membership.reason +
                      "); the decision rules need G in the variety");
    return v;
  }
  if (membership.result == Tri::unknown)
    preamble.push_back("membership of G in " + desc.to_string() +
                       " is undecided and is assumed (" + membership.reason + ")");

  // Solvable varieties: every epimorphism is surjective.
  if (is_solvable_variety(desc) == Tri::yes) {
    if (auto n = neumann_not_epi_test(g, h, budget)) {
      n->derivation.insert(n->derivation.begin(),
                           desc.to_string() +
                               " is solvable, so every epimorphism in it is surjective");
      n->derivation.insert(n->derivation.begin(), preamble.begin(), preamble.end());
      return *n;
    }
    auto v = make_verdict(Outcome::unknown, budget);
    v.notes = preamble;
    v.notes.push_back("G is not solvable, so it is not in the solvable variety " +
                      desc.to_string());
    return v;
  }

  if (desc.is_product()) {
    auto const &n = desc.left();
    auto const &q = desc.right();
    PermutationGroup qg;
    try {
      qg = q_verbal(g, q, fixtures, budget);
    } catch (Undecidable const &e) {
      auto v = make_verdict(Outcome::unknown, budget);
      v.notes = preamble;
      v.notes.push_back(e.what());
      return v;
    }
    if (!product_covers(g, h, qg, budget)) {
      auto v = make_verdict(Outcome::not_epi, budget);
      v.certificate.kind = Certificate::Kind::verbal_bound;
      v.certificate.verbal = qg;
      v.certificate.inner_variety = q;
      v.derivation = preamble;
      v.derivation.push_back("Q(G) for " + q.to_string() + " has order " + order_of(qg));
      v.derivation.push_back("HQ(G) != G, so by the McKay bound dom <= HQ(G) is proper");
      return v;
    }
    auto hq = intersect(g, h, qg, budget);
    auto inner = decide(qg, hq, n, fixtures, budget, catalog);
    auto v = make_verdict(inner.outcome, budget);
    v.certificate.kind = Certificate::Kind::product_reduction;
    v.certificate.verbal = qg;
    v.certificate.intersection = hq;
    v.certificate.inner_variety = n;
    v.derivation = preamble;
    v.derivation.push_back("product criterion for " + desc.to_string() +
                           ": H is epi in G iff HQ(G) = G and H ∩ Q(G) is epi in Q(G) under " +
                           n.to_string());
    v.derivation.push_back("Q(G) for " + q.to_string() + " has order " + order_of(qg) +
                           "; HQ(G) = G holds");
    v.derivation.push_back("H ∩ Q(G) has order " + order_of(hq) + "; deciding it in Q(G) under " +
                           n.to_string() + ":");
    append_indented(v.derivation, inner.derivation);
    v.notes = inner.notes;
    if (inner.outcome == Outcome::epi)
      v.derivation.push_back("both conditions hold: Epi");
    else if (inner.outcome == Outcome::not_epi)
      v.derivation.push_back("H ∩ Q(G) is not epi in Q(G): NotEpi");
    v.certificate.inner = std::make_shared<EpiVerdict const>(std::move(inner));
    return v;
  }

  std::vector<std::string> notes = preamble;

  if (auto const *f = fixtures.find_epi(g, h, desc, budget)) {
    auto v = make_verdict(Outcome::epi, budget);
    v.certificate.kind = Certificate::Kind::fixture;
    v.certificate.fixture = *f;
    v.derivation = preamble;
    v.derivation.push_back("fixture: " + f->to_string());
    return v;
  }

  if (auto split = split_direct_power(g)) {
    if (auto h0 = power_component(h, split->block_degree, split->k)) {
      auto inner = decide(split->component, *h0, desc, fixtures, budget, catalog);
      if (inner.outcome != Outcome::unknown) {
        auto v = make_verdict(inner.outcome, budget);
        v.certificate.kind = Certificate::Kind::direct_power;
        v.certificate.block_degree = split->block_degree;
        v.certificate.power = split->k;
        v.certificate.component = split->component;
        v.certificate.component_sub = *h0;
        v.derivation = preamble;
        v.derivation.push_back("G = G0^" + std::to_string(split->k) + ", H = H0^" +
                               std::to_string(split->k) +
                               "; the dominion of a finite direct power is the power of the "
                               "dominion:");
        append_indented(v.derivation, inner.derivation);
        v.certificate.inner = std::make_shared<EpiVerdict const>(std::move(inner));
        return v;
      }
      notes.push_back("direct power component undecided");
    }
  }

  try {
    if (auto n = neumann_not_epi_test(g, h, budget)) {
      n->derivation.insert(n->derivation.begin(), preamble.begin(), preamble.end());
      return *n;
    }
    notes.push_back("Neumann test inconclusive: no solvable normal N with NH = G");
  } catch (BudgetExceeded const &e) {
    notes.push_back(std::string("Neumann test skipped: ") + e.what());
  }

  std::vector<std::string> log;
  if (auto s = separating_pair_search(g, h, catalog, &desc, fixtures, budget, &log)) {
    s->derivation.insert(s->derivation.begin(), preamble.begin(), preamble.end());
    s->notes = log;
    return *s;
  }
  notes.insert(notes.end(), log.begin(), log.end());
  notes.push_back("no fixture, Neumann decomposition or separating pair decides this case");
  auto v = make_verdict(Outcome::unknown, budget);
  v.notes = std::move(notes);
  return v;
}

} // namespace

EpiVerdict epi_decide(PermutationGroup const &g, PermutationGroup const &h,
                      VarietyDescriptor const &desc, FixtureSet const &fixtures,
                      Budget const &budget, std::vector<PermutationGroup> const &catalog)
{
  if (h.degree() != g.degree() || !g.contains(h))
    throw InvalidArgument("H is not a subgroup of G");
  try {
    return decide(g, h, desc, fixtures, budget, catalog);
  } catch (BudgetExceeded const &e) {
    auto v = make_verdict(Outcome::unknown, budget);
    v.notes.push_back(std::string("budget exhausted: ") + e.what());
    return v;
  } catch (Undecidable const &e) {
    auto v = make_verdict(Outcome::unknown, budget);
    v.notes.push_back(e.what());
    return v;
  }
}

// ---------------------------------------------------------------------------
// Verification

namespace {

CertificateCheck fail(std::string reason)
{
  return {false, std::move(reason)};
}

CertificateCheck verify(PermutationGroup const &g, PermutationGroup const &h,
                        VarietyDescriptor const &desc, EpiVerdict const &v,
                        FixtureSet const &fixtures, Budget const &budget)
{
  if (!g.contains(h))
    return fail("H is not a subgroup of G");
  if (v.outcome == Outcome::unknown)
    return {true, "Unknown carries no certificate"};
  auto const &c = v.certificate;
  bool epi = v.outcome == Outcome::epi;
  switch (c.kind) {
  case Certificate::Kind::none:
    return fail("decided verdict without a certificate");

  case Certificate::Kind::trivial:
    if (!epi || !(h == g))
      return fail("trivial certificate needs H = G and outcome Epi");
    return {true, "H = G"};

  case Certificate::Kind::fixture: {
    if (!epi || !c.fixture)
      return fail("fixture certificate needs outcome Epi and a fixture");
    auto const *f = fixtures.find_epi(g, h, desc, budget);
    if (!f || f->to_string() != c.fixture->to_string())
      return fail("fixture does not apply to this pair");
    return {true, "fixture applies: " + f->to_string()};
  }

  case Certificate::Kind::direct_power: {
    if (!c.component || !c.component_sub || !c.inner || c.power < 2)
      return fail("incomplete direct power certificate");
    if (g.degree() != c.block_degree * c.power)
      return fail("degree does not match the power layout");
    if (!(g == direct_power(*c.component, c.power, budget)))
      return fail("G is not the stated direct power");
    if (!(h == direct_power(*c.component_sub, c.power, budget)))
      return fail("H is not the stated direct power");
    if (c.inner->outcome != v.outcome)
      return fail("component verdict differs");
    auto r = verify(*c.component, *c.component_sub, desc, *c.inner, fixtures, budget);
    if (!r.ok)
      return fail("component: " + r.reason);
    return {true, "direct power of a verified component verdict"};
  }

  case Certificate::Kind::product_reduction: {
    if (!desc.is_product() || !c.verbal || !c.intersection || !c.inner)
      return fail("incomplete product reduction certificate");
    auto qg = q_verbal(g, desc.right(), fixtures, budget);
    if (!(qg == *c.verbal))
      return fail("recomputed Q(G) differs");
    if (!product_covers(g, h, qg, budget))
      return fail("HQ(G) != G");
    if (!(intersect(g, h, qg, budget) == *c.intersection))
      return fail("recomputed H ∩ Q(G) differs");
    if (c.inner->outcome != v.outcome)
      return fail("inner verdict differs");
    auto r = verify(qg, *c.intersection, desc.left(), *c.inner, fixtures, budget);
    if (!r.ok)
      return fail("inner: " + r.reason);
    return {true, "product criterion conditions re-checked"};
  }

  case Certificate::Kind::verbal_bound: {
    if (epi || !desc.is_product() || !c.verbal)
      return fail("verbal bound certificate needs NotEpi under a product");
    auto qg = q_verbal(g, desc.right(), fixtures, budget);
    if (!(qg == *c.verbal))
      return fail("recomputed Q(G) differs");
    if (product_covers(g, h, qg, budget))
      return fail("HQ(G) = G after all");
    return {true, "HQ(G) != G re-checked"};
  }

  case Certificate::Kind::neumann: {
    if (epi || !c.normal)
      return fail("Neumann certificate needs NotEpi and N");
    auto const &n = *c.normal;
    if (h.order() == g.order())
      return fail("H = G");
    if (n.degree() != g.degree() || !g.contains(n))
      return fail("N is not a subgroup of G");
    if (!is_normal(g, n))
      return fail("N is not normal");
    if (!is_solvable(n))
      return fail("N is not solvable");
    if (!product_covers(g, h, n, budget))
      return fail("NH != G");
    return {true, "N solvable, normal, NH = G, H proper"};
  }

  case Certificate::Kind::separating_pair: {
    if (epi || !c.target || !c.witness)
      return fail("separating pair certificate needs NotEpi, a target and a witness");
    if (!(PermutationGroup(g.degree(), c.source_generators) == g))
      return fail("source generators do not generate G");
    auto m = member_of_variety(*c.target, desc, fixtures, budget);
    if (m.result != Tri::yes)
      return fail("target is not known to lie in " + desc.to_string());
    auto src = PermutationGroup(g.degree(), c.source_generators);
    auto f = GroupHomomorphism::try_make(src, *c.target, c.f_images);
    auto k = GroupHomomorphism::try_make(src, *c.target, c.g_images);
    if (!f || !k)
      return fail("f or g is not a homomorphism");
    for (auto const &y : h.generators()) {
      if ((*f)(y) != (*k)(y))
        return fail("f and g differ on H");
    }
    if (!g.contains(*c.witness) || (*f)(*c.witness) == (*k)(*c.witness))
      return fail("f and g agree at the witness");
    return {true, "f, g agree on H and differ at the witness"};
  }
  }
  return fail("unrecognized certificate");
}

} // namespace

CertificateCheck verify_verdict(PermutationGroup const &g, PermutationGroup const &h,
                                VarietyDescriptor const &desc, EpiVerdict const &verdict,
                                FixtureSet const &fixtures, Budget const &budget)
{
  try {
    return verify(g, h, desc, verdict, fixtures, budget);
  } catch (Error const &e) {
    return fail(std::string("verification error: ") + e.what());
  }
}

NormalSubgroupCrossCheck cross_check_normal_subgroups(PermutationGroup const &g,
                                                      PermutationGroup const &h,
                                                      VarietyDescriptor const &desc,
                                                      FixtureSet const &fixtures,
                                                      Budget const &budget)
{
  if (!desc.is_product())
    throw InvalidArgument("cross-check needs a product descriptor");
  NormalSubgroupCrossCheck r;
  for (auto const &n0 : normal_subgroups(g, budget)) {
    ++r.normals_checked;
    if (member_of_variety(n0, desc.left(), fixtures, budget).result != Tri::yes)
      continue;
    auto q = quotient(g, n0, budget);
    if (member_of_variety(q.group, desc.right(), fixtures, budget).result != Tri::yes)
      continue;
    ++r.normals_applicable;
    if (!product_covers(g, h, n0, budget)) {
      r.consistent = false;
      r.notes.push_back("HN0 != G for N0 of order " + order_of(n0));
      continue;
    }
    auto inner = epi_decide(n0, intersect(g, h, n0, budget), desc.left(), fixtures, budget);
    if (inner.outcome == Outcome::not_epi) {
      r.consistent = false;
      r.notes.push_back("H ∩ N0 is not epi in N0 of order " + order_of(n0));
    } else if (inner.outcome == Outcome::unknown) {
      r.notes.push_back("H ∩ N0 undecided in N0 of order " + order_of(n0));
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Constructions

QofSimpleReport verify_qofsimple(PermutationGroup const &s, PermutationGroup const &b,
                                 VarietyDescriptor const &q, FixtureSet const &fixtures,
                                 Budget const &budget)
{
  if (s.is_abelian() || !is_simple(s, budget))
    throw InvalidArgument("S must be a nonabelian simple group");
  auto w = regular_wreath(s, b, budget);
  auto v = q_verbal(w.product(), q, fixtures, budget);
  auto base = w.base_subgroup();
  if (v == base) {
    return {QofSimpleReport::Branch::base, v, w.product(),
            "Q(S wr B) is the base S^B of order " + order_of(v)};
  }
  if (v.order() == 1) {
    return {QofSimpleReport::Branch::trivial, v, w.product(),
            "Q(S wr B) is trivial: S wr B lies in " + q.to_string()};
  }
  throw Error("Q(S wr B) of order " + order_of(v) + " is neither the base nor trivial");
}

std::vector<EscapeCandidate> escape_ladder(PermutationGroup const &a)
{
  std::vector<EscapeCandidate> ladder;
  ladder.push_back({"1", PermutationGroup::trivial(1).named("1")});
  std::vector<bool> used(13, false);
  BigInt order = a.order();
  for (std::size_t p : {2, 3, 5, 7, 11}) {
    if (order % p != 0)
      continue;
    for (std::size_t n = p; n <= 12; n *= p) {
      ladder.push_back({"C" + std::to_string(n), cyclic_group(n)});
      used[n] = true;
    }
  }
  for (std::size_t n = 2; n <= 12; ++n) {
    if (!used[n])
      ladder.push_back({"C" + std::to_string(n), cyclic_group(n)});
  }
  auto c2 = cyclic_group(2);
  auto c2c2 = regular_wreath(c2, c2).product().named("wr(C2,C2)");
  ladder.push_back({"wr(C2,C2)", c2c2});
  Budget roomy;
  roomy.wreath_top_cap = 2;
  ladder.push_back({"wr(wr(C2,C2),C2)",
                    regular_wreath(c2c2, c2, roomy).product().named("wr(wr(C2,C2),C2)")});
  auto c3 = cyclic_group(3);
  ladder.push_back({"wr(C3,C3)", regular_wreath(c3, c3).product().named("wr(C3,C3)")});
  return ladder;
}

EscapeResult find_wreath_escape(PermutationGroup const &a, VarietyDescriptor const &desc,
                                FixtureSet const &fixtures, Budget const &budget)
{
  if (a.order() == 1)
    throw InvalidArgument("escape search needs a nontrivial group");
  EscapeResult r;
  for (auto const &cand : escape_ladder(a)) {
    try {
      auto mg = member_of_variety(cand.group, desc, fixtures, budget);
      if (mg.result != Tri::yes) {
        r.trail.push_back(cand.name + ": skipped, membership " + to_string(mg.result));
        continue;
      }
      auto w = regular_wreath(a, cand.group, budget);
      auto mw = member_of_variety(w.product(), desc, fixtures, budget);
      if (mw.result == Tri::no) {
        r.found = true;
        r.name = cand.name;
        r.group = cand.group;
        r.witness = w.product();
        r.reason = mw.reason;
        r.trail.push_back(cand.name + ": A wr G of order " + order_of(w.product()) +
                          " is not in " + desc.to_string() + " (" + mw.reason + ")");
        return r;
      }
      r.trail.push_back(cand.name + ": A wr G of order " + order_of(w.product()) +
                        (mw.result == Tri::yes ? " is in " : " is undecided for ") +
                        desc.to_string());
    } catch (BudgetExceeded const &e) {
      r.trail.push_back(cand.name + ": budget exceeded (" + e.what() + ")");
    }
  }
  r.reason = "ladder exhausted within budget";
  return r;
}

PipelineResult simpletimes_pipeline(PermutationGroup const &s, PermutationGroup const &h,
                                     VarietyDescriptor const &n, VarietyDescriptor const &q,
                                     FixtureSet const &fixtures, Budget const &budget)
{
  PipelineResult r;
  r.verdict.budget = budget;
  auto desc = VarietyDescriptor::product(n, q);
  if (!s.contains(h) || h.degree() != s.degree())
    throw InvalidArgument("H is not a subgroup of S");
  auto const *f = fixtures.find_epi(s, h, n, budget);
  if (!f) {
    r.verdict.notes.push_back("no known-epi fixture for H in S under " + n.to_string());
    return r;
  }
  r.report.push_back("fixture: " + f->to_string());
  if (s.is_abelian() || !is_simple(s, budget))
    throw InvalidArgument("S must be a nonabelian simple group");

  try {
    r.escape = find_wreath_escape(s, q, fixtures, budget);
  } catch (BudgetExceeded const &e) {
    r.verdict.notes.push_back(std::string("escape search: ") + e.what());
    return r;
  }
  for (auto const &t : r.escape->trail)
    r.report.push_back("escape ladder: " + t);
  if (!r.escape->found) {
    r.verdict.notes.push_back("no G on the escape ladder within budget; " + r.escape->reason);
    return r;
  }
  auto const &g = *r.escape->group;
  r.report.push_back("G = " + r.escape->name + " lies in " + q.to_string() +
                     " and S wr G does not");
  try {
    auto w = regular_wreath(s, g, budget);
    auto hw = regular_wreath(h, g, budget);
    r.wreath = w.product();
    r.sub_wreath = hw.product();
    r.report.push_back("S wr G has order " + order_of(w.product()) + ", H wr G has order " +
                       order_of(hw.product()));
    auto qs = verify_qofsimple(s, g, q, fixtures, budget);
    r.report.push_back(qs.description);
    r.verdict = epi_decide(w.product(), hw.product(), desc, fixtures, budget);
  } catch (BudgetExceeded const &e) {
    r.verdict = EpiVerdict{};
    r.verdict.budget = budget;
    r.verdict.notes.push_back(std::string("budget exhausted: ") + e.what());
  } catch (Undecidable const &e) {
    r.verdict = EpiVerdict{};
    r.verdict.budget = budget;
    r.verdict.notes.push_back(e.what());
  }
  r.report.push_back("verdict for H wr G in S wr G under " + desc.to_string() + ": " +
                     to_string(r.verdict.outcome));
  return r;
}

} // namespace vlab
