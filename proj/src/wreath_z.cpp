#include "vlab/wreath_z.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "vlab/errors.hpp"

namespace vlab {

namespace {

template<typename F>
TailConstantFn tabulate(long long lo, long long hi, F value, Permutation left, Permutation right)
{
  std::vector<Permutation> vals;
  for (long long n = lo; n <= hi; ++n)
    vals.push_back(value(n));
  return TailConstantFn(lo, std::move(vals), std::move(left), std::move(right));
}

void check_degree(TailConstantFn const &a, TailConstantFn const &b)
{
  if (a.degree() != b.degree())
    throw InvalidArgument("tail-constant functions over different groups");
}

} // namespace

TailConstantFn::TailConstantFn(std::size_t degree)
: _left(Permutation::identity(degree))
, _right(Permutation::identity(degree))
{}

TailConstantFn::TailConstantFn(long long lo, std::vector<Permutation> values, Permutation left,
                               Permutation right)
: _lo(lo)
, _values(std::move(values))
, _left(std::move(left))
, _right(std::move(right))
{
  if (_left.degree() != _right.degree())
    throw InvalidArgument("tails differ in degree");
  for (auto const &v : _values) {
    if (v.degree() != _left.degree())
      throw InvalidArgument("function values differ in degree");
  }
  canonicalize();
}

void TailConstantFn::canonicalize()
{
  std::size_t front = 0;
  while (front < _values.size() && _values[front] == _left)
    ++front;
  _values.erase(_values.begin(), _values.begin() + static_cast<std::ptrdiff_t>(front));
  _lo += static_cast<long long>(front);
  while (!_values.empty() && _values.back() == _right)
    _values.pop_back();
  if (_values.empty() && _left == _right)
    _lo = 0;
}

TailConstantFn TailConstantFn::constant(Permutation g)
{
  return TailConstantFn(0, {}, g, g);
}

TailConstantFn TailConstantFn::point_mass(long long n, Permutation g)
{
  auto id = Permutation::identity(g.degree());
  return TailConstantFn(n, {std::move(g)}, id, id);
}

Permutation const &TailConstantFn::operator()(long long n) const
{
  if (n < _lo)
    return _left;
  if (n > hi())
    return _right;
  return _values[static_cast<std::size_t>(n - _lo)];
}

bool TailConstantFn::finitely_supported() const
{
  return _left.is_identity() && _right.is_identity();
}

TailConstantFn TailConstantFn::operator*(TailConstantFn const &rhs) const
{
  check_degree(*this, rhs);
  long long lo = std::min(_lo, rhs._lo);
  long long hi = std::max(this->hi(), rhs.hi());
  return tabulate(
      lo, hi, [&](long long n) { return (*this)(n) * rhs(n); }, _left * rhs._left,
      _right * rhs._right);
}

TailConstantFn TailConstantFn::inverse() const
{
  std::vector<Permutation> vals;
  for (auto const &v : _values)
    vals.push_back(v.inverse());
  return TailConstantFn(_lo, std::move(vals), _left.inverse(), _right.inverse());
}

TailConstantFn TailConstantFn::shifted(long long s) const
{
  TailConstantFn r = *this;
  if (!r._values.empty() || r._left != r._right)
    r._lo += s;
  return r;
}

std::string TailConstantFn::to_string() const
{
  std::string s = "{";
  if (_values.empty() && _left != _right) {
    // Keep the switch point visible.
    s += std::to_string(_lo) + ":" + _right.to_string();
  }
  for (std::size_t i = 0; i < _values.size(); ++i) {
    if (i)
      s += ", ";
    s += std::to_string(_lo + static_cast<long long>(i)) + ":" + _values[i].to_string();
  }
  s += " | L=" + _left.to_string() + ", R=" + _right.to_string() + "}";
  return s;
}

TailConstantFn TailConstantFn::parse(std::string_view text, std::size_t degree)
{
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  };
  // A permutation runs to the next top-level ',', '|' or '}'.
  auto element = [&]() {
    skip_ws();
    std::size_t start = pos;
    int depth = 0;
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '(')
        ++depth;
      else if (c == ')')
        --depth;
      else if (depth == 0 && (c == ',' || c == '|' || c == '}'))
        break;
      ++pos;
    }
    try {
      return Permutation::parse(text.substr(start, pos - start), degree);
    } catch (ParseError const &e) {
      throw ParseError(e.what(), start + e.position());
    }
  };

  expect('{');
  std::map<long long, Permutation> entries;
  skip_ws();
  while (pos < text.size() && text[pos] != '|' && text[pos] != '}') {
    std::size_t start = pos;
    if (text[pos] == '-' || text[pos] == '+')
      ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    long long n = 0;
    try {
      n = std::stoll(std::string(text.substr(start, pos - start)));
    } catch (std::exception const &) {
      throw ParseError("expected an integer position", start);
    }
    expect(':');
    if (!entries.emplace(n, element()).second)
      throw ParseError("position " + std::to_string(n) + " given twice", start);
    skip_ws();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      skip_ws();
    }
  }
  auto left = Permutation::identity(degree);
  auto right = Permutation::identity(degree);
  skip_ws();
  if (pos < text.size() && text[pos] == '|') {
    ++pos;
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] == '}')
        break;
      if (pos >= text.size() || (text[pos] != 'L' && text[pos] != 'R'))
        throw ParseError("expected 'L=' or 'R='", pos);
      char which = text[pos++];
      expect('=');
      (which == 'L' ? left : right) = element();
      skip_ws();
      if (pos < text.size() && text[pos] == ',')
        ++pos;
    }
  }
  expect('}');
  skip_ws();
  if (pos != text.size())
    throw ParseError("trailing characters after function literal", pos);

  if (entries.empty())
    return TailConstantFn(0, {}, left, right);
  long long lo = entries.begin()->first;
  long long hi = entries.rbegin()->first;
  if (hi - lo > 1000000)
    throw ParseError("function window too wide", 0);
  return tabulate(
      lo, hi,
      [&](long long n) {
        auto it = entries.find(n);
        return it == entries.end() ? Permutation::identity(degree) : it->second;
      },
      left, right);
}

// ---------------------------------------------------------------------------

WreathZElement WreathZElement::identity(std::size_t degree)
{
  return {0, TailConstantFn(degree)};
}

WreathZElement WreathZElement::base(TailConstantFn fn)
{
  return {0, std::move(fn)};
}

WreathZElement WreathZElement::generator(std::size_t degree)
{
  return {1, TailConstantFn(degree)};
}

std::string WreathZElement::to_string() const
{
  return "x^" + std::to_string(shift) + " " + fn.to_string();
}

WreathZElement wz_multiply(WreathZElement const &a, WreathZElement const &b)
{
  check_degree(a.fn, b.fn);
  return {a.shift + b.shift, a.fn.shifted(b.shift) * b.fn};
}

WreathZElement wz_inverse(WreathZElement const &a)
{
  return {-a.shift, a.fn.shifted(-a.shift).inverse()};
}

WreathZElement wz_commutator(WreathZElement const &a, WreathZElement const &b)
{
  return wz_multiply(wz_multiply(wz_inverse(a), wz_inverse(b)), wz_multiply(a, b));
}

TailConstantFn solve_commutator(TailConstantFn const &phi, Permutation const &seed)
{
  if (!phi.finitely_supported())
    throw InvalidArgument("solve_commutator needs a finitely supported function");
  if (seed.degree() != phi.degree())
    throw InvalidArgument("seed has the wrong degree");
  long long lo = std::min(phi.lo(), 0LL);
  long long hi = std::max(phi.hi(), 0LL);
  // psi on [lo - 1, hi]; index i holds psi(lo - 1 + i).
  std::vector<Permutation> psi(static_cast<std::size_t>(hi - lo + 2));
  auto at = [&](long long n) -> Permutation & { return psi[static_cast<std::size_t>(n - lo + 1)]; };
  at(0) = seed;
  for (long long n = 0; n < hi; ++n)
    at(n + 1) = at(n) * phi(n + 1).inverse();
  for (long long m = 0; m > lo - 1; --m)
    at(m - 1) = at(m) * phi(m);
  Permutation left = at(lo - 1);
  Permutation right = at(hi);
  psi.erase(psi.begin());
  return TailConstantFn(lo, std::move(psi), std::move(left), std::move(right));
}

std::vector<WreathZElement>
componentwise_commutator(std::vector<std::pair<WreathZElement, WreathZElement>> const &pairs)
{
  std::vector<WreathZElement> out;
  out.reserve(pairs.size());
  for (auto const &[a, b] : pairs)
    out.push_back(wz_commutator(a, b));
  return out;
}

Depth2Witness depth2_witness(TailConstantFn const &phi)
{
  Depth2Witness w;
  w.psi = solve_commutator(phi, Permutation::identity(phi.degree()));
  auto x = WreathZElement::generator(phi.degree());
  auto c = wz_commutator(WreathZElement::base(w.psi), x);
  w.verified = c == WreathZElement::base(phi);
  w.report = std::string("phi = [psi, x] ") + (w.verified ? "verified" : "FAILED") +
             " with psi = " + w.psi.to_string() +
             "; so phi is a commutator value in G wr Z. Deeper nilpotent claims are checked on "
             "finite wreath analogs by the dominion engine.";
  return w;
}

} // namespace vlab
