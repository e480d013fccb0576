#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vlab {

using Point = std::uint32_t;

/// A bijection on {0, ..., degree-1}, stored as its image list.
///
/// Permutations act on the right: `i^(p*q) = (i^p)^q`, so `p * q` means
/// "apply p, then q". This matches the conjugation convention
/// `g^h = h^-1 g h` used throughout the group theory code.
class Permutation
{
public:
  Permutation() = default;

  explicit Permutation(std::size_t degree);

  /// Throws InvalidArgument unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  Permutation(std::initializer_list<Point> images)
  : Permutation(std::vector<Point>(images))
  {}

  static Permutation identity(std::size_t degree)
  { return Permutation(degree); }

  /// Parses cycle notation such as "(0 1 2)(3 4)"; "()" and "e" denote the
  /// identity. Points beyond the largest mentioned one are fixed.
  static Permutation parse(std::string_view text, std::size_t degree = 0);

  std::size_t degree() const
  { return _images.size(); }

  Point operator[](Point i) const
  { return _images[i]; }

  std::span<Point const> images() const
  { return _images; }

  bool is_identity() const;

  Permutation inverse() const;

  /// Apply `*this`, then `rhs`.
  Permutation operator*(Permutation const &rhs) const;
  Permutation &operator*=(Permutation const &rhs);

  /// Conjugate `rhs^-1 * this * rhs`.
  Permutation operator^(Permutation const &rhs) const;

  Permutation pow(long long e) const;

  std::uint64_t order() const;

  /// Smallest point not fixed, or degree() for the identity.
  Point first_moved_point() const;

  /// Same action on a larger point set, extra points fixed.
  Permutation extended(std::size_t degree) const;

  /// Same action shifted onto points [offset, offset+degree()) of a
  /// permutation of the given total degree.
  Permutation shifted(std::size_t offset, std::size_t degree) const;

  std::vector<std::vector<Point>> cycles() const;

  /// Cycle notation; the identity prints as "()".
  std::string to_string() const;

  bool operator==(Permutation const &) const = default;
  std::strong_ordering operator<=>(Permutation const &rhs) const
  { return _images <=> rhs._images; }

private:
  std::vector<Point> _images;
};

/// Commutator a^-1 b^-1 a b.
Permutation commutator(Permutation const &a, Permutation const &b);

std::ostream &operator<<(std::ostream &os, Permutation const &p);

} // namespace vlab

template<>
struct std::hash<vlab::Permutation>
{
  std::size_t operator()(vlab::Permutation const &p) const noexcept;
};
