#include "vlab/constructions.hpp"

#include <algorithm>

#include "vlab/errors.hpp"
#include "vlab/group_algorithms.hpp"

namespace vlab {

PermutationGroup direct_power(PermutationGroup const &g, unsigned k, Budget const &budget)
{
  if (k == 0)
    throw InvalidArgument("direct power exponent must be positive");
  if (static_cast<std::uint64_t>(g.degree()) * k > budget.degree_cap)
    throw BudgetExceeded("direct power degree " + std::to_string(g.degree() * k) +
                         " exceeds degree cap " + std::to_string(budget.degree_cap));
  if (k == 1)
    return g;
  std::vector<Permutation> gens;
  for (unsigned i = 0; i < k; ++i) {
    for (auto const &x : g.generators())
      gens.push_back(embed_component(x, i, k));
  }
  std::string name = g.name().empty() ? std::string() : g.name() + "^" + std::to_string(k);
  return PermutationGroup(g.degree() * k, std::move(gens), std::move(name));
}

Permutation embed_component(Permutation const &g, unsigned i, unsigned k)
{
  if (i >= k)
    throw InvalidArgument("component index out of range");
  return g.shifted(g.degree() * i, g.degree() * k);
}

Permutation power_tuple(std::span<Permutation const> components)
{
  if (components.empty())
    throw InvalidArgument("empty tuple");
  std::size_t m = components.front().degree();
  std::vector<Point> images;
  images.reserve(m * components.size());
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].degree() != m)
      throw InvalidArgument("tuple components differ in degree");
    for (Point x : components[i].images())
      images.push_back(static_cast<Point>(x + i * m));
  }
  return Permutation(std::move(images));
}

Permutation project_component(Permutation const &p, unsigned i, std::size_t degree)
{
  if (degree == 0 || p.degree() % degree != 0 || (i + 1) * degree > p.degree())
    throw InvalidArgument("bad component projection");
  std::vector<Point> images(degree);
  for (std::size_t x = 0; x < degree; ++x) {
    Point y = p[static_cast<Point>(i * degree + x)];
    if (y < i * degree || y >= (i + 1) * degree)
      throw InvalidArgument("permutation does not preserve the component blocks");
    images[x] = static_cast<Point>(y - i * degree);
  }
  return Permutation(std::move(images));
}

namespace {

bool preserves_blocks(Permutation const &g, std::size_t m)
{
  for (std::size_t x = 0; x < g.degree(); ++x) {
    if (g[static_cast<Point>(x)] / m != x / m)
      return false;
  }
  return true;
}

} // namespace

std::optional<PermutationGroup> power_component(PermutationGroup const &h,
                                                std::size_t block_degree, unsigned k)
{
  if (block_degree == 0 || k < 2 || h.degree() != block_degree * k)
    return std::nullopt;
  std::vector<Permutation> gens;
  for (auto const &g : h.generators()) {
    if (!preserves_blocks(g, block_degree))
      return std::nullopt;
    gens.push_back(project_component(g, 0, block_degree));
  }
  PermutationGroup h0(block_degree, std::move(gens));
  // Every generator's components lie in H0 and H = H0^k exactly when the
  // orders agree.
  BigInt expect = 1;
  for (unsigned i = 0; i < k; ++i)
    expect *= h0.order();
  if (h.order() != expect)
    return std::nullopt;
  for (auto const &g : h.generators()) {
    for (unsigned i = 1; i < k; ++i) {
      if (!h0.contains(project_component(g, i, block_degree)))
        return std::nullopt;
    }
  }
  return h0;
}

std::optional<PowerSplit> split_direct_power(PermutationGroup const &g)
{
  std::size_t n = g.degree();
  for (std::size_t m = 1; m < n; ++m) {
    if (n % m != 0)
      continue;
    auto k = static_cast<unsigned>(n / m);
    if (auto c = power_component(g, m, k); c && c->order() > 1)
      return PowerSplit{m, k, *c};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

WreathContext::WreathContext(PermutationGroup bottom, PermutationGroup top, Budget const &budget)
: _bottom(std::move(bottom))
, _top(std::move(top))
{
  if (_top.order() > budget.wreath_top_cap)
    throw BudgetExceeded("top group order " + _top.order().str() + " exceeds wreath top cap " +
                         std::to_string(budget.wreath_top_cap));
  _top_elements = _top.elements(budget);
  std::uint64_t degree = static_cast<std::uint64_t>(_bottom.degree()) * _top_elements.size();
  if (degree > budget.degree_cap)
    throw BudgetExceeded("wreath product degree " + std::to_string(degree) +
                         " exceeds degree cap " + std::to_string(budget.degree_cap));

  std::vector<Permutation> gens;
  for (auto const &a : _bottom.generators()) {
    for (auto const &b : _top_elements)
      gens.push_back(embed_base_at(a, b));
  }
  for (auto const &c : _top.generators())
    gens.push_back(embed_top(c));
  std::string name;
  if (!_bottom.name().empty() && !_top.name().empty())
    name = "wr(" + _bottom.name() + "," + _top.name() + ")";
  _product = PermutationGroup(static_cast<std::size_t>(degree), std::move(gens), std::move(name));
}

std::size_t WreathContext::block_index(Permutation const &b) const
{
  auto it = std::lower_bound(_top_elements.begin(), _top_elements.end(), b);
  if (it == _top_elements.end() || *it != b)
    throw InvalidArgument("element " + b.to_string() + " is not in the top group");
  return static_cast<std::size_t>(it - _top_elements.begin());
}

std::pair<Point, Point> WreathContext::block_range(Permutation const &b) const
{
  auto j = block_index(b);
  return {static_cast<Point>(j * block_size()), static_cast<Point>((j + 1) * block_size())};
}

Permutation WreathContext::embed_base(std::span<Permutation const> phi) const
{
  if (phi.size() != _top_elements.size())
    throw InvalidArgument("base function needs one value per top element");
  for (auto const &a : phi) {
    if (!_bottom.contains(a))
      throw InvalidArgument("base value " + a.to_string() + " is not in the bottom group");
  }
  return power_tuple(phi);
}

Permutation WreathContext::embed_base_at(Permutation const &a, Permutation const &b) const
{
  std::vector<Permutation> phi(_top_elements.size(), Permutation::identity(block_size()));
  phi[block_index(b)] = a;
  return power_tuple(phi);
}

Permutation WreathContext::embed_top(Permutation const &c) const
{
  std::size_t m = block_size();
  std::vector<Point> images(m * _top_elements.size());
  for (std::size_t j = 0; j < _top_elements.size(); ++j) {
    std::size_t target = block_index(_top_elements[j] * c);
    for (std::size_t i = 0; i < m; ++i)
      images[j * m + i] = static_cast<Point>(target * m + i);
  }
  return Permutation(std::move(images));
}

PermutationGroup WreathContext::base_subgroup() const
{
  std::vector<Permutation> gens;
  for (auto const &a : _bottom.generators()) {
    for (auto const &b : _top_elements)
      gens.push_back(embed_base_at(a, b));
  }
  return PermutationGroup(_product.degree(), std::move(gens));
}

PermutationGroup WreathContext::top_subgroup() const
{
  std::vector<Permutation> gens;
  for (auto const &c : _top.generators())
    gens.push_back(embed_top(c));
  return PermutationGroup(_product.degree(), std::move(gens));
}

std::pair<std::vector<Permutation>, Permutation>
WreathContext::decompose(Permutation const &p) const
{
  if (p.degree() != _product.degree())
    throw InvalidArgument("degree mismatch in wreath decomposition");
  std::size_t m = block_size();
  // Block 0 is the identity of the top group, so its image block is c.
  Permutation c = _top_elements.at(m == 0 ? 0 : p[0] / m);
  Permutation base = p * embed_top(c).inverse();
  std::vector<Permutation> phi;
  for (std::size_t j = 0; j < _top_elements.size(); ++j)
    phi.push_back(project_component(base, static_cast<unsigned>(j), m));
  return {std::move(phi), std::move(c)};
}

WreathContext regular_wreath(PermutationGroup const &a, PermutationGroup const &b,
                             Budget const &budget)
{
  return WreathContext(a, b, budget);
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Permutation> least_transversal(PermutationGroup const &e, Quotient const &q,
                                           Budget const &budget)
{
  auto qs = q.group.elements(budget);
  std::vector<Permutation> reps(qs.size());
  std::vector<bool> seen(qs.size(), false);
  std::size_t found = 0;
  for (auto const &x : e.elements(budget)) {
    auto j = static_cast<std::size_t>(
        std::lower_bound(qs.begin(), qs.end(), q.projection(x)) - qs.begin());
    if (!seen[j]) {
      seen[j] = true;
      reps[j] = x;
      if (++found == qs.size())
        break;
    }
  }
  return reps;
}

} // namespace

KaloujnineKrasner kaloujnine_krasner(PermutationGroup const &e, PermutationGroup const &a,
                                     Budget const &budget)
{
  if (!is_normal(e, a))
    throw InvalidArgument("subgroup is not normal");
  auto q = quotient(e, a, budget);
  return kaloujnine_krasner(e, a, least_transversal(e, q, budget), budget);
}

KaloujnineKrasner kaloujnine_krasner(PermutationGroup const &e, PermutationGroup const &a,
                                     std::vector<Permutation> const &transversal,
                                     Budget const &budget)
{
  if (!e.contains(a) || !is_normal(e, a))
    throw InvalidArgument("subgroup is not normal");
  auto q = quotient(e, a, budget);
  WreathContext w(a.named(a.name()), q.group, budget);
  auto const &blocks = w.top_elements();

  // Order the supplied representatives by block.
  std::vector<Permutation> t(blocks.size());
  std::vector<bool> seen(blocks.size(), false);
  if (transversal.size() != blocks.size())
    throw InvalidArgument("transversal must have one element per coset");
  for (auto const &x : transversal) {
    if (!e.contains(x))
      throw InvalidArgument("transversal element outside the group");
    auto j = w.block_index(q.projection(x));
    if (seen[j])
      throw InvalidArgument("two transversal elements lie in one coset");
    seen[j] = true;
    t[j] = x;
  }

  std::vector<Permutation> images;
  for (auto const &g : e.generators()) {
    Permutation pg = q.projection(g);
    std::vector<Permutation> phi;
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      auto k = w.block_index(blocks[j] * pg);
      phi.push_back(t[j] * g * t[k].inverse());
    }
    images.push_back(w.embed_base(phi) * w.embed_top(pg));
  }
  GroupHomomorphism f(e, w.product(), std::move(images));
  return KaloujnineKrasner{std::move(w), std::move(q), std::move(t), std::move(f)};
}

} // namespace vlab
