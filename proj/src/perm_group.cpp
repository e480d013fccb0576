#include "vlab/perm_group.hpp"

#include <algorithm>
#include <sstream>

#include "vlab/errors.hpp"

namespace vlab {

Budget const &default_budget()
{
  static Budget const b{};
  return b;
}

PermutationGroup::PermutationGroup()
: _cache(std::make_shared<Cache>())
{}

PermutationGroup::PermutationGroup(std::size_t degree,
                                   std::vector<Permutation> generators,
                                   std::string name)
: _degree(degree),
  _generators(std::move(generators)),
  _name(std::move(name)),
  _cache(std::make_shared<Cache>())
{
  for (auto const &g : _generators) {
    if (g.degree() != degree)
      throw InvalidArgument("generator " + g.to_string() + " has degree " +
                            std::to_string(g.degree()) + ", expected " +
                            std::to_string(degree));
  }
}

PermutationGroup PermutationGroup::named(std::string name) const
{
  PermutationGroup g = *this;
  g._name = std::move(name);
  return g;
}

StabChain const &PermutationGroup::chain() const
{
  std::call_once(_cache->once, [this] {
    _cache->chain = std::make_unique<StabChain>(_degree, _generators);
  });
  return *_cache->chain;
}

BigInt PermutationGroup::order() const
{
  return chain().order();
}

std::uint64_t PermutationGroup::order_u64() const
{
  BigInt o = order();
  if (o > BigInt(std::uint64_t{1} << 63))
    throw BudgetExceeded("group order " + o.str() + " exceeds 64-bit range");
  return static_cast<std::uint64_t>(o);
}

bool PermutationGroup::contains(Permutation const &g) const
{
  if (g.degree() != _degree)
    throw InvalidArgument("degree mismatch: element of degree " +
                          std::to_string(g.degree()) + " tested against group of degree " +
                          std::to_string(_degree));
  return chain().contains(g);
}

bool PermutationGroup::contains(PermutationGroup const &h) const
{
  if (h.degree() != _degree)
    throw InvalidArgument("degree mismatch in subgroup test");
  for (auto const &g : h.generators()) {
    if (!chain().contains(g))
      return false;
  }
  return true;
}

bool PermutationGroup::is_trivial() const
{
  return std::all_of(_generators.begin(), _generators.end(),
                     [](auto const &g) { return g.is_identity(); });
}

bool PermutationGroup::is_abelian() const
{
  for (std::size_t i = 0; i < _generators.size(); ++i) {
    for (std::size_t j = i + 1; j < _generators.size(); ++j) {
      if (_generators[i] * _generators[j] != _generators[j] * _generators[i])
        return false;
    }
  }
  return true;
}

std::vector<Permutation> PermutationGroup::elements(Budget const &budget) const
{
  if (order() > budget.element_cap)
    throw BudgetExceeded("element enumeration of a group of order " + order().str() +
                         " exceeds the element cap " + std::to_string(budget.element_cap));
  std::vector<Permutation> result;
  result.reserve(static_cast<std::size_t>(order()));
  chain().for_each_element([&](Permutation const &g) { result.push_back(g); });
  std::sort(result.begin(), result.end());
  return result;
}

PermutationGroup PermutationGroup::extended(std::size_t degree) const
{
  std::vector<Permutation> gens;
  for (auto const &g : _generators)
    gens.push_back(g.extended(degree));
  return PermutationGroup(degree, std::move(gens), _name);
}

bool PermutationGroup::operator==(PermutationGroup const &rhs) const
{
  return _degree == rhs._degree && order() == rhs.order() && rhs.contains(*this);
}

std::string describe(PermutationGroup const &g)
{
  std::ostringstream os;
  if (!g.name().empty())
    os << g.name() << ' ';
  os << "<";
  for (std::size_t i = 0; i < g.generators().size(); ++i)
    os << (i ? ", " : "") << g.generators()[i];
  os << "> degree " << g.degree() << " order " << g.order();
  return os.str();
}

} // namespace vlab
