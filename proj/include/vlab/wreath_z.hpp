#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vlab/permutation.hpp"

namespace vlab {

/// A function Z -> G that takes the value left_tail() below the window,
/// right_tail() above it, and explicit values on [lo, hi].
///
/// Values are kept canonical: the window is trimmed so that its end values
/// differ from the adjacent tails. An empty window with distinct tails keeps
/// lo as the switch point (left below lo, right from lo on); an empty window
/// with equal tails is normalized to lo = 0, hi = -1.
class TailConstantFn
{
public:
  /// The identity function on G of the given degree.
  explicit TailConstantFn(std::size_t degree = 0);

  TailConstantFn(long long lo, std::vector<Permutation> values, Permutation left,
                 Permutation right);

  static TailConstantFn constant(Permutation g);
  static TailConstantFn point_mass(long long n, Permutation g);

  /// Literal `{-2:(0 1), 0:(0 1 2) | L=e, R=e}`. Positions may appear in any
  /// order; unlisted positions between listed ones are the identity. Tails
  /// default to the identity. Throws ParseError.
  static TailConstantFn parse(std::string_view text, std::size_t degree);

  std::size_t degree() const
  { return _left.degree(); }

  long long lo() const
  { return _lo; }

  long long hi() const
  { return _lo + static_cast<long long>(_values.size()) - 1; }

  std::vector<Permutation> const &values() const
  { return _values; }

  Permutation const &left_tail() const
  { return _left; }

  Permutation const &right_tail() const
  { return _right; }

  Permutation const &operator()(long long n) const;

  /// Both tails are the identity.
  bool finitely_supported() const;

  /// Pointwise product.
  TailConstantFn operator*(TailConstantFn const &rhs) const;

  /// Pointwise inverse.
  TailConstantFn inverse() const;

  /// n -> f(n - s).
  TailConstantFn shifted(long long s) const;

  std::string to_string() const;

  bool operator==(TailConstantFn const &) const = default;

private:
  void canonicalize();

  long long _lo = 0;
  std::vector<Permutation> _values;
  Permutation _left;
  Permutation _right;
};

/// x^shift * fn in G wr Z. The product is
/// (k, phi)(l, chi) = (k + l, n -> phi(n - l) chi(n)),
/// so conjugation by x re-indexes as psi^x(n) = psi(n - 1).
struct WreathZElement
{
  long long shift = 0;
  TailConstantFn fn;

  static WreathZElement identity(std::size_t degree);
  static WreathZElement base(TailConstantFn fn);
  /// The generator x of Z.
  static WreathZElement generator(std::size_t degree);

  std::string to_string() const;

  bool operator==(WreathZElement const &) const = default;
};

WreathZElement wz_multiply(WreathZElement const &a, WreathZElement const &b);
WreathZElement wz_inverse(WreathZElement const &a);
WreathZElement wz_commutator(WreathZElement const &a, WreathZElement const &b);

/// Solves [psi, x] = phi for a finitely supported phi, with psi(0) = seed,
/// using psi(n+1) = psi(n) phi(n+1)^-1 and psi(m-1) = psi(m) phi(m).
/// Throws InvalidArgument if phi has a non-identity tail.
TailConstantFn solve_commutator(TailConstantFn const &phi, Permutation const &seed);

/// Commutators of k pairs, computed per component. As elements of
/// (G wr Z)^k the result is the commutator of the two tuples.
std::vector<WreathZElement>
componentwise_commutator(std::vector<std::pair<WreathZElement, WreathZElement>> const &pairs);

struct Depth2Witness
{
  TailConstantFn psi;
  bool verified = false;
  std::string report;
};

/// Writes phi = [psi, x], exhibiting phi as a commutator value in G wr Z.
Depth2Witness depth2_witness(TailConstantFn const &phi);

} // namespace vlab
