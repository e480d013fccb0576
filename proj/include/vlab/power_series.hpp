#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vlab/word.hpp"

namespace vlab {

/// A noncommutative monomial as its letter sequence; letter i stands for
/// y_i (1-based).
using Monomial = std::vector<unsigned>;

std::string monomial_to_string(Monomial const &m);

/// Element of Z_p<y_1..y_k> modulo all monomials of degree >= d, stored
/// sparsely with coefficients in [1, p).
class TruncatedSeries
{
public:
  TruncatedSeries(std::uint64_t p, unsigned k, unsigned d);

  static TruncatedSeries constant(std::uint64_t p, unsigned k, unsigned d, std::int64_t c);
  static TruncatedSeries one(std::uint64_t p, unsigned k, unsigned d)
  { return constant(p, k, d, 1); }
  /// y_i, 1-based.
  static TruncatedSeries variable(std::uint64_t p, unsigned k, unsigned d, unsigned i);

  std::uint64_t p() const
  { return _p; }
  unsigned k() const
  { return _k; }
  unsigned d() const
  { return _d; }

  std::map<Monomial, std::uint64_t> const &terms() const
  { return _terms; }

  std::uint64_t coefficient(Monomial const &m) const;
  std::uint64_t constant_term() const
  { return coefficient({}); }

  bool is_zero() const
  { return _terms.empty(); }
  bool is_one() const;

  /// Adds c * m, dropping m if its degree is at least d.
  void add_term(Monomial const &m, std::int64_t c);

  std::string to_string() const;

  bool operator==(TruncatedSeries const &) const = default;

private:
  std::uint64_t _p;
  unsigned _k;
  unsigned _d;
  std::map<Monomial, std::uint64_t> _terms;
};

/// Throws InvalidArgument when p, k or d differ.
TruncatedSeries ts_add(TruncatedSeries const &a, TruncatedSeries const &b);
TruncatedSeries ts_scale(TruncatedSeries const &a, std::int64_t c);
TruncatedSeries ts_multiply(TruncatedSeries const &a, TruncatedSeries const &b);

/// Inverse of a series with constant term 1, as the finite geometric series
/// sum_{j<d} (1 - u)^j. Throws InvalidArgument otherwise.
TruncatedSeries ts_unit_inverse(TruncatedSeries const &u);

/// u^e for a unit u (negative e goes through the inverse).
TruncatedSeries ts_pow(TruncatedSeries const &u, long long e);

/// Image of w under x_i -> 1 + y_i, with k = arity of w.
TruncatedSeries magnus_image(Word const &w, std::uint64_t p, unsigned d);

struct LawFailureWitness
{
  std::uint64_t p = 0;
  unsigned k = 0;
  unsigned d = 0;
  Monomial monomial;
  /// Product of the b_i in a_i = b_i p^{k_i}, reduced mod p.
  std::uint64_t predicted_coefficient = 0;
  /// Coefficient of `monomial` in the Magnus image.
  std::uint64_t coefficient = 0;
  /// The image differs from 1, so x_i -> 1 + y_i violates w in the unit
  /// group of the truncated algebra.
  bool image_nontrivial = false;
  TruncatedSeries image{2, 1, 1};

  bool verified() const
  { return image_nontrivial && coefficient == predicted_coefficient && coefficient != 0; }
};

/// Finite p-group witness that the law w fails, at the least admissible
/// truncation degree. Throws InvalidArgument for the empty word or a
/// non-prime p.
LawFailureWitness law_failure_witness(Word const &w, std::uint64_t p);

/// log2 of the order of the unit group 1 + (y_1..y_k): the number of
/// monomials of degree 1..d-1, times log2 p.
double unit_group_log2_order(std::uint64_t p, unsigned k, unsigned d);

bool is_prime(std::uint64_t n);

} // namespace vlab
