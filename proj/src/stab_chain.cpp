#include "vlab/stab_chain.hpp"

#include <algorithm>

#include "vlab/errors.hpp"

namespace vlab {

StabChain::StabChain(std::size_t degree)
: _degree(degree)
{}

StabChain::StabChain(std::size_t degree,
                     std::span<Permutation const> generators,
                     std::span<Point const> base_prefix)
: _degree(degree)
{
  for (Point b : base_prefix) {
    if (b >= degree)
      throw InvalidArgument("base point outside the domain");
    push_level(b);
  }
  for (auto const &g : generators) {
    if (g.degree() != degree)
      throw InvalidArgument("generator degree does not match group degree");
    extend(g);
  }
}

std::vector<Point> StabChain::base() const
{
  std::vector<Point> result;
  for (auto const &l : _levels)
    result.push_back(l.base);
  return result;
}

std::vector<Permutation> StabChain::strong_generators() const
{
  // Level 0 holds every strong generator.
  if (_levels.empty())
    return {};
  return _levels.front().generators;
}

BigInt StabChain::order() const
{
  BigInt result = 1;
  for (auto const &l : _levels)
    result *= l.orbit.size();
  return result;
}

std::pair<Permutation, std::size_t> StabChain::sift(Permutation g, std::size_t from) const
{
  for (std::size_t i = from; i < _levels.size(); ++i) {
    auto const &l = _levels[i];
    Point gamma = g[l.base];
    auto pos = l.position[gamma];
    if (pos < 0)
      return {std::move(g), i};
    g *= l.inv_reps[static_cast<std::size_t>(pos)];
  }
  return {std::move(g), _levels.size()};
}

bool StabChain::contains(Permutation const &g) const
{
  if (g.degree() != _degree)
    throw InvalidArgument("degree mismatch in membership test");
  auto [h, j] = sift(g);
  return j == _levels.size() && h.is_identity();
}

bool StabChain::extend(Permutation const &g)
{
  if (g.degree() != _degree)
    throw InvalidArgument("degree mismatch in stabilizer chain");
  auto [h, j] = sift(g);
  if (h.is_identity())
    return false;
  if (j == _levels.size())
    push_level(h.first_moved_point());
  for (std::size_t l = 0; l <= j; ++l) {
    _levels[l].generators.push_back(h);
    recompute_orbit(l);
  }
  schreier_sims_from(j);
  return true;
}

void StabChain::push_level(Point base)
{
  Level l;
  l.base = base;
  l.position.assign(_degree, -1);
  l.orbit.push_back(base);
  l.position[base] = 0;
  l.reps.push_back(Permutation::identity(_degree));
  l.inv_reps.push_back(Permutation::identity(_degree));
  _levels.push_back(std::move(l));
}

void StabChain::recompute_orbit(std::size_t level)
{
  auto &l = _levels[level];
  // The orbit only grows; keep existing representatives and extend by BFS.
  for (std::size_t k = 0; k < l.orbit.size(); ++k) {
    for (auto const &s : l.generators) {
      Point gamma = s[l.orbit[k]];
      if (l.position[gamma] >= 0)
        continue;
      l.position[gamma] = static_cast<std::int32_t>(l.orbit.size());
      l.orbit.push_back(gamma);
      Permutation rep = l.reps[k] * s;
      l.inv_reps.push_back(rep.inverse());
      l.reps.push_back(std::move(rep));
    }
  }
}

void StabChain::schreier_sims_from(std::size_t start)
{
  auto i = static_cast<std::ptrdiff_t>(start);
  while (i >= 0) {
    bool restart = false;
    auto const level = static_cast<std::size_t>(i);
    for (std::size_t k = 0; k < _levels[level].orbit.size() && !restart; ++k) {
      for (std::size_t s = 0; s < _levels[level].generators.size(); ++s) {
        auto const &l = _levels[level];
        auto const &gen = l.generators[s];
        Point gamma = gen[l.orbit[k]];
        auto pos = static_cast<std::size_t>(l.position[gamma]);
        Permutation schreier = l.reps[k] * gen;
        if (schreier == l.reps[pos])
          continue;
        schreier *= l.inv_reps[pos];
        auto [h, j] = sift(std::move(schreier), level + 1);
        if (h.is_identity())
          continue;
        if (j == _levels.size())
          push_level(h.first_moved_point());
        for (std::size_t m = level + 1; m <= j; ++m) {
          _levels[m].generators.push_back(h);
          recompute_orbit(m);
        }
        i = static_cast<std::ptrdiff_t>(j);
        restart = true;
        break;
      }
    }
    if (!restart)
      --i;
  }
}

void StabChain::for_each_element(std::function<void(Permutation const &)> const &f) const
{
  if (_levels.empty()) {
    f(Permutation::identity(_degree));
    return;
  }
  // Elements are u_{k-1} ... u_1 u_0 with u_l a level-l representative.
  std::vector<std::size_t> idx(_levels.size(), 0);
  std::vector<Permutation> partial(_levels.size());
  std::size_t const top = _levels.size() - 1;

  auto rebuild_from = [&](std::size_t l) {
    for (std::size_t m = l; m <= top; ++m) {
      auto const &rep = _levels[m].reps[idx[m]];
      partial[m] = m == 0 ? rep : rep * partial[m - 1];
    }
  };

  rebuild_from(0);
  for (;;) {
    f(partial[top]);
    std::size_t m = top;
    for (;;) {
      if (++idx[m] < _levels[m].reps.size())
        break;
      idx[m] = 0;
      if (m == 0)
        return;
      --m;
    }
    // Levels below m are unchanged, m and above need rebuilding.
    rebuild_from(m);
  }
}

} // namespace vlab
