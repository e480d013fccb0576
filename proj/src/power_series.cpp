#include "vlab/power_series.hpp"

#include <cmath>

#include "vlab/errors.hpp"

namespace vlab {

namespace {

// Series with more terms than this are refused rather than grown.
constexpr std::size_t term_cap = 4000000;

void check_compatible(TruncatedSeries const &a, TruncatedSeries const &b)
{
  if (a.p() != b.p() || a.k() != b.k() || a.d() != b.d())
    throw InvalidArgument("truncated series with different parameters");
}

std::uint64_t reduce(std::int64_t c, std::uint64_t p)
{
  auto sp = static_cast<std::int64_t>(p);
  auto r = c % sp;
  return static_cast<std::uint64_t>(r < 0 ? r + sp : r);
}

} // namespace

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0)
      return false;
  }
  return true;
}

std::string monomial_to_string(Monomial const &m)
{
  if (m.empty())
    return "1";
  std::string s;
  for (std::size_t i = 0; i < m.size();) {
    std::size_t j = i;
    while (j < m.size() && m[j] == m[i])
      ++j;
    s += "y" + std::to_string(m[i]);
    if (j - i > 1)
      s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

TruncatedSeries::TruncatedSeries(std::uint64_t p, unsigned k, unsigned d)
: _p(p)
, _k(k)
, _d(d)
{
  if (!is_prime(p))
    throw InvalidArgument(std::to_string(p) + " is not prime");
  if (d == 0)
    throw InvalidArgument("truncation degree must be positive");
  if (p > (1ull << 31))
    throw InvalidArgument("prime too large");
}

TruncatedSeries TruncatedSeries::constant(std::uint64_t p, unsigned k, unsigned d, std::int64_t c)
{
  TruncatedSeries s(p, k, d);
  s.add_term({}, c);
  return s;
}

TruncatedSeries TruncatedSeries::variable(std::uint64_t p, unsigned k, unsigned d, unsigned i)
{
  if (i == 0 || i > k)
    throw InvalidArgument("variable index out of range");
  TruncatedSeries s(p, k, d);
  s.add_term({i}, 1);
  return s;
}

std::uint64_t TruncatedSeries::coefficient(Monomial const &m) const
{
  auto it = _terms.find(m);
  return it == _terms.end() ? 0 : it->second;
}

bool TruncatedSeries::is_one() const
{
  return _terms.size() == 1 && coefficient({}) == 1;
}

void TruncatedSeries::add_term(Monomial const &m, std::int64_t c)
{
  if (m.size() >= _d)
    return;
  for (auto v : m) {
    if (v == 0 || v > _k)
      throw InvalidArgument("monomial uses an unknown variable");
  }
  std::uint64_t r = reduce(c, _p);
  if (r == 0)
    return;
  auto [it, inserted] = _terms.emplace(m, r);
  if (!inserted) {
    it->second = (it->second + r) % _p;
    if (it->second == 0)
      _terms.erase(it);
  }
}

std::string TruncatedSeries::to_string() const
{
  if (_terms.empty())
    return "0";
  // Degree, then lexicographic order.
  std::vector<std::pair<Monomial, std::uint64_t>> sorted(_terms.begin(), _terms.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](auto const &a, auto const &b) {
    return a.first.size() < b.first.size();
  });
  std::string s;
  for (auto const &[m, c] : sorted) {
    if (!s.empty())
      s += " + ";
    if (m.empty())
      s += std::to_string(c);
    else if (c == 1)
      s += monomial_to_string(m);
    else
      s += std::to_string(c) + "*" + monomial_to_string(m);
  }
  return s;
}

TruncatedSeries ts_add(TruncatedSeries const &a, TruncatedSeries const &b)
{
  check_compatible(a, b);
  TruncatedSeries r = a;
  for (auto const &[m, c] : b.terms())
    r.add_term(m, static_cast<std::int64_t>(c));
  return r;
}

TruncatedSeries ts_scale(TruncatedSeries const &a, std::int64_t c)
{
  TruncatedSeries r(a.p(), a.k(), a.d());
  std::uint64_t s = reduce(c, a.p());
  for (auto const &[m, v] : a.terms())
    r.add_term(m, static_cast<std::int64_t>((v * s) % a.p()));
  return r;
}

TruncatedSeries ts_multiply(TruncatedSeries const &a, TruncatedSeries const &b)
{
  check_compatible(a, b);
  TruncatedSeries r(a.p(), a.k(), a.d());
  Monomial m;
  for (auto const &[ma, ca] : a.terms()) {
    for (auto const &[mb, cb] : b.terms()) {
      if (ma.size() + mb.size() >= a.d())
        continue;
      m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      r.add_term(m, static_cast<std::int64_t>((ca * cb) % a.p()));
    }
    if (r.terms().size() > term_cap)
      throw BudgetExceeded("truncated series exceeds " + std::to_string(term_cap) + " terms");
  }
  return r;
}

TruncatedSeries ts_unit_inverse(TruncatedSeries const &u)
{
  if (u.constant_term() != 1)
    throw InvalidArgument("series is not a unit with constant term 1");
  // u = 1 - v with v in the augmentation ideal, so u^-1 = sum_{j<d} v^j.
  TruncatedSeries v = ts_add(TruncatedSeries::one(u.p(), u.k(), u.d()), ts_scale(u, -1));
  TruncatedSeries sum = TruncatedSeries::one(u.p(), u.k(), u.d());
  TruncatedSeries power = sum;
  for (unsigned j = 1; j < u.d(); ++j) {
    power = ts_multiply(power, v);
    if (power.is_zero())
      break;
    sum = ts_add(sum, power);
  }
  return sum;
}

TruncatedSeries ts_pow(TruncatedSeries const &u, long long e)
{
  if (u.constant_term() != 1)
    throw InvalidArgument("series is not a unit with constant term 1");
  TruncatedSeries base = u;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1u
                               : static_cast<unsigned long long>(e);
  TruncatedSeries result = TruncatedSeries::one(u.p(), u.k(), u.d());
  while (n) {
    if (n & 1u)
      result = ts_multiply(result, base);
    n >>= 1u;
    if (n)
      base = ts_multiply(base, base);
  }
  // Powers of p-power-like units stay sparse, so invert last.
  return e < 0 ? ts_unit_inverse(result) : result;
}

TruncatedSeries magnus_image(Word const &w, std::uint64_t p, unsigned d)
{
  unsigned k = std::max(1u, w.arity());
  TruncatedSeries r = TruncatedSeries::one(p, k, d);
  for (auto const &l : w.letters()) {
    TruncatedSeries x = ts_add(TruncatedSeries::one(p, k, d), TruncatedSeries::variable(p, k, d, l.var));
    r = ts_multiply(r, ts_pow(x, l.exp));
  }
  return r;
}

LawFailureWitness law_failure_witness(Word const &w, std::uint64_t p)
{
  if (w.empty())
    throw InvalidArgument("the empty word is not a nontrivial law");
  if (!is_prime(p))
    throw InvalidArgument(std::to_string(p) + " is not prime");
  LawFailureWitness out;
  out.p = p;
  out.k = w.arity();
  std::uint64_t degree = 0;
  std::uint64_t coeff = 1;
  for (auto const &l : w.letters()) {
    long long a = l.exp;
    std::uint64_t pk = 1;
    while (a % static_cast<long long>(p) == 0) {
      a /= static_cast<long long>(p);
      pk *= p;
    }
    degree += pk;
    if (degree > 100000)
      throw BudgetExceeded("witness degree exceeds 100000");
    out.monomial.insert(out.monomial.end(), pk, l.var);
    coeff = (coeff * reduce(a, p)) % p;
  }
  out.d = static_cast<unsigned>(degree + 1);
  out.predicted_coefficient = coeff;
  out.image = magnus_image(w, p, out.d);
  out.coefficient = out.image.coefficient(out.monomial);
  out.image_nontrivial = !out.image.is_one();
  return out;
}

double unit_group_log2_order(std::uint64_t p, unsigned k, unsigned d)
{
  // Monomials of degree 1..d-1 over k letters.
  double count = 0;
  double layer = 1;
  for (unsigned j = 1; j < d; ++j) {
    layer *= k;
    count += layer;
  }
  return count * std::log2(static_cast<double>(p));
}

} // namespace vlab
