#pragma once

// Brute-force references used by the tests. Nothing here goes through a
// stabilizer chain.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "vlab/permutation.hpp"

namespace oracle {

using vlab::Permutation;

/// All elements of <gens> by closing under right multiplication.
inline std::set<Permutation> closure(std::size_t degree, std::vector<Permutation> const &gens)
{
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::vector<Permutation> queue{Permutation::identity(degree)};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (auto const &g : gens) {
      Permutation y = queue[k] * g;
      if (seen.insert(y).second)
        queue.push_back(y);
    }
  }
  return seen;
}

inline std::set<Permutation> generated_by(std::size_t degree, std::set<Permutation> const &xs)
{
  return closure(degree, std::vector<Permutation>(xs.begin(), xs.end()));
}

/// Subgroup generated by all commutators of elements of `a` with elements
/// of `b`.
inline std::set<Permutation> commutator_subgroup(std::size_t degree,
                                                 std::set<Permutation> const &a,
                                                 std::set<Permutation> const &b)
{
  std::set<Permutation> comms;
  for (auto const &x : a)
    for (auto const &y : b)
      comms.insert(x.inverse() * y.inverse() * x * y);
  return generated_by(degree, comms);
}

inline bool is_normal(std::set<Permutation> const &g, std::set<Permutation> const &n)
{
  for (auto const &x : g)
    for (auto const &m : n)
      if (!n.count(x.inverse() * m * x))
        return false;
  return true;
}

/// Extends gens -> images to a map on <gens> by breadth-first search;
/// nullopt when the assignment is not a homomorphism.
inline std::optional<std::map<Permutation, Permutation>>
extend_hom(std::size_t degree, std::vector<Permutation> const &gens, std::size_t target_degree,
           std::vector<Permutation> const &images)
{
  std::map<Permutation, Permutation> f{{Permutation::identity(degree),
                                        Permutation::identity(target_degree)}};
  std::vector<Permutation> queue{Permutation::identity(degree)};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Permutation y = queue[k] * gens[i];
      Permutation fy = f.at(queue[k]) * images[i];
      auto [it, fresh] = f.emplace(y, fy);
      if (fresh)
        queue.push_back(y);
      else if (it->second != fy)
        return std::nullopt;
    }
  }
  return f;
}

/// Every homomorphism <gens> -> C, as full maps.
inline std::vector<std::map<Permutation, Permutation>>
all_homs(std::size_t degree, std::vector<Permutation> const &gens, std::size_t target_degree,
         std::vector<Permutation> const &target)
{
  std::vector<std::map<Permutation, Permutation>> out;
  std::vector<std::size_t> idx(gens.size(), 0);
  while (true) {
    std::vector<Permutation> images;
    for (auto i : idx)
      images.push_back(target[i]);
    if (auto f = extend_hom(degree, gens, target_degree, images))
      out.push_back(std::move(*f));
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == target.size())
      idx[pos++] = 0;
    if (pos == idx.size())
      break;
  }
  return out;
}

/// Elements of G on which every pair of homomorphisms into the targets that
/// agree on H also agree. Contains every dominion in a variety holding the
/// targets.
inline std::set<Permutation>
equalizer(std::size_t degree, std::vector<Permutation> const &gens, std::set<Permutation> const &h,
          std::vector<std::pair<std::size_t, std::vector<Permutation>>> const &targets)
{
  auto g = closure(degree, gens);
  std::set<Permutation> eq = g;
  for (auto const &[tdeg, telems] : targets) {
    auto homs = all_homs(degree, gens, tdeg, telems);
    for (std::size_t a = 0; a < homs.size(); ++a) {
      for (std::size_t b = a + 1; b < homs.size(); ++b) {
        bool agree = std::all_of(h.begin(), h.end(),
                                 [&](Permutation const &x) { return homs[a].at(x) == homs[b].at(x); });
        if (!agree)
          continue;
        for (auto it = eq.begin(); it != eq.end();) {
          if (homs[a].at(*it) != homs[b].at(*it))
            it = eq.erase(it);
          else
            ++it;
        }
      }
    }
  }
  return eq;
}

} // namespace oracle
