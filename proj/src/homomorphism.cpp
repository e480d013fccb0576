#include "vlab/homomorphism.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "vlab/errors.hpp"
#include "vlab/group_algorithms.hpp"

namespace vlab {

Permutation pair_permutation(Permutation const &g, Permutation const &c)
{
  std::size_t n = g.degree();
  std::vector<Point> images(n + c.degree());
  for (std::size_t i = 0; i < n; ++i)
    images[i] = g[static_cast<Point>(i)];
  for (std::size_t i = 0; i < c.degree(); ++i)
    images[n + i] = static_cast<Point>(n + c[static_cast<Point>(i)]);
  return Permutation(std::move(images));
}

namespace {

std::shared_ptr<PermutationGroup> build_graph(PermutationGroup const &source,
                                              PermutationGroup const &target,
                                              std::vector<Permutation> const &images)
{
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < images.size(); ++i)
    gens.push_back(pair_permutation(source.generators()[i], images[i]));
  std::size_t n = source.degree() + target.degree();
  return std::make_shared<PermutationGroup>(n, std::move(gens));
}

void check_shapes(PermutationGroup const &source, PermutationGroup const &target,
                  std::vector<Permutation> const &images)
{
  if (images.size() != source.generators().size())
    throw InvalidArgument("homomorphism needs one image per source generator");
  for (auto const &c : images) {
    if (!target.contains(c))
      throw InvalidArgument("generator image " + c.to_string() + " is not in the target");
  }
}

} // namespace

GroupHomomorphism::GroupHomomorphism(PermutationGroup source, PermutationGroup target,
                                     std::vector<Permutation> images)
: _source(std::move(source)), _target(std::move(target)), _images(std::move(images))
{
  check_shapes(_source, _target, _images);
  _graph = build_graph(_source, _target, _images);
  if (_graph->order() != _source.order())
    throw InvalidArgument("generator images do not define a homomorphism");
}

GroupHomomorphism::GroupHomomorphism(Unchecked, PermutationGroup source, PermutationGroup target,
                                     std::vector<Permutation> images,
                                     std::shared_ptr<PermutationGroup> graph)
: _source(std::move(source)), _target(std::move(target)), _images(std::move(images)),
  _graph(std::move(graph))
{}

std::optional<GroupHomomorphism> GroupHomomorphism::try_make(PermutationGroup source,
                                                             PermutationGroup target,
                                                             std::vector<Permutation> images)
{
  check_shapes(source, target, images);
  auto graph = build_graph(source, target, images);
  if (graph->order() != source.order())
    return std::nullopt;
  return GroupHomomorphism(Unchecked{}, std::move(source), std::move(target), std::move(images),
                           std::move(graph));
}

Permutation GroupHomomorphism::operator()(Permutation const &g) const
{
  if (!_source.contains(g))
    throw InvalidArgument("element " + g.to_string() + " is not in the source group");
  std::size_t n = _source.degree();
  std::size_t m = _target.degree();
  if (_images.empty())
    return Permutation::identity(m);
  // All base points of the graph lie in the source part, so sifting (g, 1)
  // leaves (1, f(g)^-1).
  auto [residue, level] = _graph->chain().sift(pair_permutation(g, Permutation::identity(m)));
  std::vector<Point> images(m);
  for (std::size_t i = 0; i < m; ++i)
    images[i] = static_cast<Point>(residue[static_cast<Point>(n + i)] - n);
  return Permutation(std::move(images)).inverse();
}

PermutationGroup GroupHomomorphism::image() const
{
  return PermutationGroup(_target.degree(), _images);
}

PermutationGroup GroupHomomorphism::kernel(Budget const &budget) const
{
  StabChain chain(_source.degree());
  std::vector<Permutation> gens;
  for (auto const &x : _source.elements(budget)) {
    if ((*this)(x).is_identity() && chain.extend(x))
      gens.push_back(x);
  }
  return PermutationGroup(_source.degree(), std::move(gens));
}

bool GroupHomomorphism::is_injective() const
{
  return image().order() == _source.order();
}

bool GroupHomomorphism::operator==(GroupHomomorphism const &rhs) const
{
  if (!(_source == rhs._source) || _target.degree() != rhs._target.degree())
    return false;
  for (auto const &g : _source.generators()) {
    if ((*this)(g) != rhs(g))
      return false;
  }
  return true;
}

std::vector<GroupHomomorphism> all_homomorphisms(PermutationGroup const &g,
                                                 PermutationGroup const &c,
                                                 Budget const &budget)
{
  if (g.order() * c.order() > budget.hom_cap)
    throw BudgetExceeded("homomorphism search |G|*|C| = " + (g.order() * c.order()).str() +
                         " exceeds the hom cap " + std::to_string(budget.hom_cap));

  auto gens = reduced_generators(g);
  PermutationGroup source(g.degree(), gens, g.name());
  auto targets = c.elements(budget);
  std::stable_sort(targets.begin(), targets.end(),
                   [](auto const &x, auto const &y) { return x.order() > y.order(); });

  std::vector<std::vector<Permutation const *>> candidates(gens.size());
  std::vector<BigInt> prefix_order(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto o = gens[i].order();
    for (auto const &t : targets) {
      if (o % t.order() == 0)
        candidates[i].push_back(&t);
    }
    prefix_order[i] = PermutationGroup(g.degree(), {gens.begin(), gens.begin() + i + 1}).order();
  }

  std::vector<GroupHomomorphism> result;
  std::vector<Permutation> chosen;
  std::vector<Permutation> pairs;

  std::function<void(std::size_t)> search = [&](std::size_t i) {
    if (i == gens.size()) {
      result.push_back(GroupHomomorphism(source, c, chosen));
      return;
    }
    for (auto const *t : candidates[i]) {
      pairs.push_back(pair_permutation(gens[i], *t));
      PermutationGroup partial(g.degree() + c.degree(), pairs);
      if (partial.order() == prefix_order[i]) {
        chosen.push_back(*t);
        search(i + 1);
        chosen.pop_back();
      }
      pairs.pop_back();
    }
  };

  if (gens.empty()) {
    result.push_back(GroupHomomorphism(source, c, {}));
    return result;
  }
  search(0);
  return result;
}

namespace {

// The element of the coset Nx whose images of N's base points are
// lexicographically least. Elements of N are determined by base images, so
// this is a well-defined label.
Permutation coset_label(StabChain const &chain, Permutation x)
{
  for (auto const &level : chain.levels()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < level.orbit.size(); ++k) {
      if (x[level.orbit[k]] < x[level.orbit[best]])
        best = k;
    }
    if (best != 0)
      x = level.reps[best] * x;
  }
  return x;
}

} // namespace

Quotient quotient(PermutationGroup const &g, PermutationGroup const &n, Budget const &budget)
{
  if (!is_normal(g, n))
    throw InvalidArgument("quotient: subgroup is not normal");
  BigInt cosets = g.order() / n.order();
  if (cosets > budget.element_cap)
    throw BudgetExceeded("quotient: index " + cosets.str() + " exceeds the element cap " +
                         std::to_string(budget.element_cap));
  auto const &chain = n.chain();
  auto label = [&](Permutation const &x) { return coset_label(chain, x); };

  std::vector<Permutation> reps{Permutation::identity(g.degree())};
  std::unordered_map<Permutation, std::size_t> index{{label(reps.front()), 0}};
  std::vector<std::vector<Point>> action(g.generators().size());
  for (std::size_t k = 0; k < reps.size(); ++k) {
    for (std::size_t s = 0; s < g.generators().size(); ++s) {
      Permutation y = reps[k] * g.generators()[s];
      Permutation key = label(y);
      auto it = index.find(key);
      if (it == index.end()) {
        it = index.emplace(std::move(key), reps.size()).first;
        reps.push_back(std::move(y));
      }
      action[s].push_back(static_cast<Point>(it->second));
    }
  }

  std::size_t m = reps.size();
  std::vector<Permutation> images;
  for (auto &a : action)
    images.emplace_back(std::move(a));
  std::string name = g.name().empty() || n.name().empty() ? std::string{}
                                                           : g.name() + "/" + n.name();
  PermutationGroup q(m, images, name);
  GroupHomomorphism proj(g, q, images);
  return {std::move(q), std::move(proj)};
}

} // namespace vlab
