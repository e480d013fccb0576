#include "vlab/named_groups.hpp"

#include <charconv>
#include <numeric>
#include <string>

#include "vlab/errors.hpp"

namespace vlab {

namespace {

Permutation cycle_on(std::vector<Point> const &points, std::size_t degree)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t k = 0; k < points.size(); ++k)
    images[points[k]] = points[(k + 1) % points.size()];
  return Permutation(std::move(images));
}

std::vector<Point> range_points(std::size_t lo, std::size_t hi)
{
  std::vector<Point> r;
  for (std::size_t i = lo; i < hi; ++i)
    r.push_back(static_cast<Point>(i));
  return r;
}

} // namespace

PermutationGroup cyclic_group(std::size_t n)
{
  if (n == 0)
    throw InvalidArgument("cyclic group of order 0");
  if (n == 1)
    return PermutationGroup(1, {}, "C1");
  return PermutationGroup(n, {cycle_on(range_points(0, n), n)}, "C" + std::to_string(n));
}

PermutationGroup symmetric_group(std::size_t n)
{
  if (n == 0)
    throw InvalidArgument("symmetric group on 0 points");
  std::string name = "S" + std::to_string(n);
  if (n == 1)
    return PermutationGroup(1, {}, name);
  if (n == 2)
    return PermutationGroup(2, {cycle_on({0, 1}, 2)}, name);
  return PermutationGroup(n, {cycle_on(range_points(0, n), n), cycle_on({0, 1}, n)}, name);
}

PermutationGroup alternating_group(std::size_t n)
{
  if (n == 0)
    throw InvalidArgument("alternating group on 0 points");
  std::string name = "A" + std::to_string(n);
  if (n < 3)
    return PermutationGroup(n, {}, name);
  auto big = n % 2 == 1 ? range_points(0, n) : range_points(1, n);
  return PermutationGroup(n, {cycle_on(big, n), cycle_on({0, 1, 2}, n)}, name);
}

PermutationGroup dihedral_group(std::size_t n)
{
  std::string name = "D" + std::to_string(n);
  if (n == 1)
    return PermutationGroup(2, {cycle_on({0, 1}, 2)}, name);
  if (n == 2)
    return klein_four_group().named(name);
  if (n == 0)
    throw InvalidArgument("dihedral group D0");
  std::vector<Point> reflection(n);
  for (std::size_t i = 0; i < n; ++i)
    reflection[i] = static_cast<Point>((n - i) % n);
  return PermutationGroup(n, {cycle_on(range_points(0, n), n), Permutation(reflection)}, name);
}

PermutationGroup klein_four_group()
{
  return PermutationGroup(4, {Permutation::parse("(0 1)(2 3)", 4), Permutation::parse("(0 2)(1 3)", 4)},
                          "V4");
}

PermutationGroup quaternion_group()
{
  // Regular representation: elements (sign, unit) with units 1, i, j, k,
  // point index = 4*sign + unit.
  static int const mul[4][4][2] = {
      // {unit, sign flip} for u*v
      {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
      {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
      {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
      {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
  };
  auto right_mult = [&](int unit) {
    std::vector<Point> images(8);
    for (int s = 0; s < 2; ++s) {
      for (int u = 0; u < 4; ++u) {
        int v = mul[u][unit][0];
        int sign = s ^ mul[u][unit][1];
        images[static_cast<std::size_t>(4 * s + u)] = static_cast<Point>(4 * sign + v);
      }
    }
    return Permutation(std::move(images));
  };
  return PermutationGroup(8, {right_mult(1), right_mult(2)}, "Q8");
}

PermutationGroup named_group(std::string_view name)
{
  if (name == "1" || name == "trivial")
    return PermutationGroup(1, {}, "1");
  if (name == "V4")
    return klein_four_group();
  if (name == "Q8")
    return quaternion_group();
  if (name.size() >= 2) {
    std::size_t n = 0;
    auto digits = name.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && n > 0 && n <= 4096) {
      switch (name[0]) {
      case 'C': return cyclic_group(n);
      case 'S': return symmetric_group(n);
      case 'A': return alternating_group(n);
      case 'D': return dihedral_group(n);
      default: break;
      }
    }
  }
  throw ParseError("unknown group name '" + std::string(name) + "'", 0);
}

} // namespace vlab
