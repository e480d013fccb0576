#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "vlab/permutation.hpp"

namespace vlab {

using BigInt = boost::multiprecision::cpp_int;

/// Base and strong generating set built by deterministic Schreier-Sims.
///
/// Base points are appended in the order they are needed; a new base point
/// is always the first point moved by the generator that forces it. Every
/// level stores explicit transversal representatives, which is fine for the
/// moderate degrees this library works with.
class StabChain
{
public:
  struct Level
  {
    Point base;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;
    std::vector<Permutation> reps;      // base^reps[k] == orbit[k]
    std::vector<Permutation> inv_reps;
    std::vector<std::int32_t> position; // point -> index into orbit, or -1
  };

  explicit StabChain(std::size_t degree);

  StabChain(std::size_t degree,
            std::span<Permutation const> generators,
            std::span<Point const> base_prefix = {});

  std::size_t degree() const
  { return _degree; }

  std::vector<Level> const &levels() const
  { return _levels; }

  std::vector<Point> base() const;

  std::vector<Permutation> strong_generators() const;

  BigInt order() const;

  /// Divide `g` by transversal elements starting at level `from`. Returns the
  /// residue and the level at which sifting stopped (levels().size() when it
  /// ran through every level).
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from = 0) const;

  bool contains(Permutation const &g) const;

  /// Add `g` to the group; returns false if it was already a member.
  bool extend(Permutation const &g);

  /// Calls `f` on every element exactly once, in a fixed order.
  void for_each_element(std::function<void(Permutation const &)> const &f) const;

  template<typename Rng>
  Permutation random_element(Rng &rng) const
  {
    Permutation g = Permutation::identity(_degree);
    for (auto it = _levels.rbegin(); it != _levels.rend(); ++it) {
      std::uniform_int_distribution<std::size_t> d(0, it->reps.size() - 1);
      g = g * it->reps[d(rng)];
    }
    return g;
  }

private:
  void push_level(Point base);
  void recompute_orbit(std::size_t level);
  void schreier_sims_from(std::size_t level);

  std::size_t _degree;
  std::vector<Level> _levels;
};

} // namespace vlab
