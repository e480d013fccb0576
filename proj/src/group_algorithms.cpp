#include "vlab/group_algorithms.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "vlab/errors.hpp"

namespace vlab {

namespace {

PermutationGroup from_chain(std::size_t degree, std::vector<Permutation> gens)
{
  return PermutationGroup(degree, std::move(gens));
}

// Grow `gens` to generate the normal closure in G, using `chain` for
// membership of the subgroup built so far.
void close_under_conjugation(PermutationGroup const &g, StabChain &chain,
                             std::vector<Permutation> &gens)
{
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (auto const &x : g.generators()) {
      Permutation c = gens[k] ^ x;
      if (chain.extend(c))
        gens.push_back(std::move(c));
    }
  }
}

} // namespace

PermutationGroup join(PermutationGroup const &a, PermutationGroup const &b)
{
  if (a.degree() != b.degree())
    throw InvalidArgument("degree mismatch in join");
  StabChain chain(a.degree());
  std::vector<Permutation> gens;
  for (auto const *grp : {&a, &b}) {
    for (auto const &x : grp->generators()) {
      if (chain.extend(x))
        gens.push_back(x);
    }
  }
  return from_chain(a.degree(), std::move(gens));
}

PermutationGroup normal_closure(PermutationGroup const &g, std::span<Permutation const> s)
{
  StabChain chain(g.degree());
  std::vector<Permutation> gens;
  for (auto const &x : s) {
    if (!g.contains(x))
      throw InvalidArgument("element " + x.to_string() + " is not in the ambient group");
    if (chain.extend(x))
      gens.push_back(x);
  }
  close_under_conjugation(g, chain, gens);
  return from_chain(g.degree(), std::move(gens));
}

PermutationGroup derived_subgroup(PermutationGroup const &g)
{
  auto const &gens = g.generators();
  std::vector<Permutation> comms;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Permutation c = commutator(gens[i], gens[j]);
      if (!c.is_identity())
        comms.push_back(std::move(c));
    }
  }
  return normal_closure(g, comms);
}

std::vector<PermutationGroup> derived_series(PermutationGroup const &g)
{
  std::vector<PermutationGroup> series{g};
  while (series.back().order() != 1) {
    PermutationGroup next = derived_subgroup(series.back());
    if (next.order() == series.back().order())
      break;
    series.push_back(std::move(next));
  }
  return series;
}

namespace {

// [N, G] for N normal in G.
PermutationGroup commutator_with(PermutationGroup const &g, PermutationGroup const &n)
{
  std::vector<Permutation> comms;
  for (auto const &a : n.generators()) {
    for (auto const &x : g.generators()) {
      Permutation k = commutator(a, x);
      if (!k.is_identity())
        comms.push_back(std::move(k));
    }
  }
  return normal_closure(g, comms);
}

} // namespace

std::vector<PermutationGroup> lower_central_series(PermutationGroup const &g, unsigned c)
{
  std::vector<PermutationGroup> series{g};
  for (unsigned i = 1; i <= c; ++i)
    series.push_back(commutator_with(g, series.back()));
  return series;
}

bool is_solvable(PermutationGroup const &g)
{
  return derived_series(g).back().order() == 1;
}

std::optional<unsigned> derived_length(PermutationGroup const &g)
{
  auto s = derived_series(g);
  if (s.back().order() == 1)
    return static_cast<unsigned>(s.size() - 1);
  return std::nullopt;
}

std::optional<unsigned> nilpotency_class(PermutationGroup const &g)
{
  PermutationGroup term = g;
  for (unsigned c = 0;; ++c) {
    if (term.order() == 1)
      return c;
    PermutationGroup next = commutator_with(g, term);
    if (next.order() == term.order())
      return std::nullopt;
    term = std::move(next);
  }
}

bool is_normal(PermutationGroup const &g, PermutationGroup const &n)
{
  for (auto const &a : n.generators()) {
    for (auto const &x : g.generators()) {
      if (!n.contains(a ^ x))
        return false;
    }
  }
  return true;
}

namespace {

PermutationGroup intersection_by_filter(PermutationGroup const &small,
                                        PermutationGroup const &other,
                                        Budget const &budget)
{
  StabChain chain(small.degree());
  std::vector<Permutation> gens;
  for (auto const &x : small.elements(budget)) {
    if (other.contains(x) && chain.extend(x))
      gens.push_back(x);
  }
  return PermutationGroup(small.degree(), std::move(gens));
}

PermutationGroup intersection_by_backtrack(PermutationGroup const &a,
                                           PermutationGroup const &b,
                                           Budget const &budget)
{
  StabChain const &ca = a.chain();
  auto base = ca.base();
  StabChain cb(b.degree(), b.generators(), base);
  auto const &la = ca.levels();
  auto const &lb = cb.levels();

  StabChain found(a.degree());
  std::vector<Permutation> gens;
  std::uint64_t nodes = 0;
  std::uint64_t const node_cap = budget.search_node_cap;

  // Can some element of B agree with p on base[0..depth]?
  auto consistent = [&](Permutation p, std::size_t depth) {
    for (std::size_t j = 0; j <= depth; ++j) {
      auto pos = lb[j].position[p[lb[j].base]];
      if (pos < 0)
        return false;
      p *= lb[j].inv_reps[static_cast<std::size_t>(pos)];
    }
    return true;
  };

  std::function<void(std::size_t, Permutation const &)> search =
      [&](std::size_t depth, Permutation const &partial) {
        if (depth == la.size()) {
          if (b.contains(partial) && found.extend(partial))
            gens.push_back(partial);
          return;
        }
        for (auto const &rep : la[depth].reps) {
          if (++nodes > node_cap)
            throw BudgetExceeded("intersection backtrack exceeded " +
                                 std::to_string(node_cap) + " nodes");
          Permutation next = rep * partial;
          if (consistent(next, depth))
            search(depth + 1, next);
        }
      };
  search(0, Permutation::identity(a.degree()));
  return PermutationGroup(a.degree(), std::move(gens));
}

} // namespace

PermutationGroup subgroup_intersection(PermutationGroup const &g,
                                       PermutationGroup const &a,
                                       PermutationGroup const &b,
                                       Budget const &budget)
{
  if (a.degree() != g.degree() || b.degree() != g.degree())
    throw InvalidArgument("degree mismatch in intersection");
  if (a.contains(b))
    return b;
  if (b.contains(a))
    return a;
  bool a_small = a.order() <= b.order();
  auto const &small = a_small ? a : b;
  auto const &other = a_small ? b : a;
  if (small.order() <= budget.element_cap)
    return intersection_by_filter(small, other, budget);
  return intersection_by_backtrack(small, other, budget);
}

bool product_covers(PermutationGroup const &g, PermutationGroup const &h,
                    PermutationGroup const &n, Budget const &budget)
{
  // With N normal (or normalized by H) the set HN is the subgroup <H, N>.
  bool h_normalizes = true;
  for (auto const &x : n.generators()) {
    for (auto const &y : h.generators()) {
      if (!n.contains(x ^ y)) {
        h_normalizes = false;
        break;
      }
    }
  }
  if (h_normalizes)
    return join(h, n).order() == g.order();
  BigInt inter = subgroup_intersection(g, h, n, budget).order();
  return h.order() * n.order() == g.order() * inter;
}

PermutationGroup normalizer(PermutationGroup const &g, PermutationGroup const &d,
                            Budget const &budget)
{
  // Orbit of D under conjugation, with Schreier generators for the
  // stabilizer. Conjugates are compared by membership of generators.
  std::vector<PermutationGroup> orbit{d};
  std::vector<Permutation> reps{Permutation::identity(g.degree())};
  StabChain chain(g.degree());
  std::vector<Permutation> gens;
  BigInt d_order = d.order();
  std::uint64_t work = 0;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (auto const &s : g.generators()) {
      Permutation c = reps[i] * s;
      std::vector<Permutation> conj;
      for (auto const &y : d.generators())
        conj.push_back(y ^ c);
      std::size_t found = orbit.size();
      for (std::size_t j = 0; j < orbit.size(); ++j) {
        if (++work > budget.search_node_cap)
          throw BudgetExceeded("normalizer: orbit search exceeds the node cap");
        bool same = std::all_of(conj.begin(), conj.end(),
                                [&](Permutation const &y) { return orbit[j].contains(y); });
        if (same) {
          found = j;
          break;
        }
      }
      if (found == orbit.size()) {
        if (orbit.size() >= budget.element_cap)
          throw BudgetExceeded("normalizer: conjugacy orbit exceeds the element cap");
        orbit.emplace_back(g.degree(), std::move(conj));
        reps.push_back(c);
        continue;
      }
      Permutation x = c * reps[found].inverse();
      if (chain.extend(x))
        gens.push_back(x);
    }
  }
  return PermutationGroup(g.degree(), std::move(gens));
}

std::vector<std::vector<Permutation>> conjugacy_classes(PermutationGroup const &g,
                                                        Budget const &budget)
{
  auto elems = g.elements(budget);
  std::unordered_set<Permutation> seen;
  std::vector<std::vector<Permutation>> classes;
  for (auto const &x : elems) {
    if (seen.count(x))
      continue;
    std::vector<Permutation> cls{x};
    seen.insert(x);
    for (std::size_t k = 0; k < cls.size(); ++k) {
      for (auto const &s : g.generators()) {
        Permutation y = cls[k] ^ s;
        if (seen.insert(y).second)
          cls.push_back(std::move(y));
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

PermutationGroup solvable_radical(PermutationGroup const &g, Budget const &budget)
{
  if (g.order() > budget.normal_enum_cap)
    throw BudgetExceeded("solvable radical: group order " + g.order().str() +
                         " exceeds the normal-subgroup budget " +
                         std::to_string(budget.normal_enum_cap));
  std::vector<Permutation> reps;
  StabChain chain(g.degree());
  for (auto const &cls : conjugacy_classes(g, budget)) {
    auto const &r = cls.front();
    if (r.is_identity() || chain.contains(r))
      continue;
    Permutation one[] = {r};
    if (is_solvable(normal_closure(g, one))) {
      reps.push_back(r);
      chain.extend(r);
    }
  }
  return normal_closure(g, reps);
}

bool is_simple(PermutationGroup const &g, Budget const &budget)
{
  if (g.order() == 1)
    return false;
  for (auto const &cls : conjugacy_classes(g, budget)) {
    if (cls.front().is_identity())
      continue;
    Permutation one[] = {cls.front()};
    if (normal_closure(g, one).order() != g.order())
      return false;
  }
  return true;
}

namespace {

// Subgroups of a small group keyed by their element set.
class SubgroupIndex
{
public:
  SubgroupIndex(PermutationGroup const &g, Budget const &budget)
  : _elements(g.elements(budget))
  {
    for (std::size_t i = 0; i < _elements.size(); ++i)
      _index.emplace(_elements[i], i);
  }

  std::string key(PermutationGroup const &h) const
  {
    std::string k(_elements.size(), '0');
    h.chain().for_each_element([&](Permutation const &x) { k[_index.at(x)] = '1'; });
    return k;
  }

  std::vector<Permutation> const &elements() const
  { return _elements; }

private:
  std::vector<Permutation> _elements;
  std::unordered_map<Permutation, std::size_t> _index;
};

std::vector<PermutationGroup> close_under_joins(std::vector<PermutationGroup> generators_list,
                                                SubgroupIndex const &index,
                                                std::size_t degree,
                                                std::size_t cap)
{
  std::vector<PermutationGroup> all{PermutationGroup::trivial(degree)};
  std::unordered_set<std::string> keys{index.key(all.front())};
  for (auto &h : generators_list) {
    if (keys.insert(index.key(h)).second)
      all.push_back(h);
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (auto const &c : generators_list) {
      if (all[i].contains(c))
        continue;
      PermutationGroup j = join(all[i], c);
      if (keys.insert(index.key(j)).second) {
        all.push_back(std::move(j));
        if (all.size() > cap)
          throw BudgetExceeded("subgroup enumeration exceeded " + std::to_string(cap) +
                               " subgroups");
      }
    }
  }
  std::stable_sort(all.begin(), all.end(),
                   [](auto const &x, auto const &y) { return x.order() < y.order(); });
  return all;
}

} // namespace

std::vector<PermutationGroup> normal_subgroups(PermutationGroup const &g, Budget const &budget)
{
  if (g.order() > budget.normal_enum_cap)
    throw BudgetExceeded("normal subgroup enumeration: group order " + g.order().str() +
                         " exceeds " + std::to_string(budget.normal_enum_cap));
  SubgroupIndex index(g, budget);
  std::vector<PermutationGroup> principal;
  for (auto const &cls : conjugacy_classes(g, budget)) {
    if (cls.front().is_identity())
      continue;
    Permutation one[] = {cls.front()};
    principal.push_back(normal_closure(g, one));
  }
  return close_under_joins(std::move(principal), index, g.degree(), 100000);
}

std::vector<PermutationGroup> all_subgroups(PermutationGroup const &g, Budget const &budget)
{
  if (g.order() > budget.normal_enum_cap)
    throw BudgetExceeded("subgroup enumeration: group order " + g.order().str() +
                         " exceeds " + std::to_string(budget.normal_enum_cap));
  SubgroupIndex index(g, budget);
  std::vector<PermutationGroup> cyclic;
  std::unordered_set<std::string> keys;
  for (auto const &x : index.elements()) {
    if (x.is_identity())
      continue;
    PermutationGroup c(g.degree(), {x});
    if (keys.insert(index.key(c)).second)
      cyclic.push_back(std::move(c));
  }
  return close_under_joins(std::move(cyclic), index, g.degree(), 100000);
}

std::vector<Permutation> reduced_generators(PermutationGroup const &g)
{
  // Prefer generators of large order: they tend to generate quickly.
  auto gens = g.generators();
  std::stable_sort(gens.begin(), gens.end(),
                   [](auto const &x, auto const &y) { return x.order() > y.order(); });
  StabChain chain(g.degree());
  std::vector<Permutation> result;
  for (auto const &x : gens) {
    if (chain.extend(x))
      result.push_back(x);
  }
  return result;
}

std::uint64_t exponent(PermutationGroup const &g, Budget const &budget)
{
  std::uint64_t e = 1;
  for (auto const &cls : conjugacy_classes(g, budget))
    e = std::lcm(e, cls.front().order());
  return e;
}

} // namespace vlab
