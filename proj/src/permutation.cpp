#include "vlab/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "vlab/errors.hpp"

namespace vlab {

Permutation::Permutation(std::size_t degree)
: _images(degree)
{
  std::iota(_images.begin(), _images.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images)
: _images(std::move(images))
{
  std::vector<bool> seen(_images.size(), false);
  for (Point x : _images) {
    if (x >= _images.size() || seen[x])
      throw InvalidArgument("image sequence is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::parse(std::string_view text, std::size_t degree)
{
  std::vector<std::vector<Point>> cycles;
  std::size_t max_point = 0;
  bool any_point = false;

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };

  skip_ws();
  if (i < text.size() && text[i] == 'e') {
    ++i;
    skip_ws();
    if (i != text.size())
      throw ParseError("trailing characters after identity 'e'", i);
    return Permutation(degree);
  }

  while (skip_ws(), i < text.size()) {
    if (text[i] != '(')
      throw ParseError(std::string("expected '(' but found '") + text[i] + "'", i);
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size())
        throw ParseError("unterminated cycle", i);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError(std::string("unexpected character '") + text[i] + "'", i);
      std::size_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::size_t>(text[i] - '0');
        if (v > (1u << 24))
          throw ParseError("point index too large", i);
        ++i;
      }
      if (std::find(cycle.begin(), cycle.end(), v) != cycle.end())
        throw ParseError("point repeated within a cycle", i);
      cycle.push_back(static_cast<Point>(v));
      max_point = std::max(max_point, v);
      any_point = true;
    }
    cycles.push_back(std::move(cycle));
  }

  std::size_t n = std::max(degree, any_point ? max_point + 1 : std::size_t{0});
  if (degree != 0 && n > degree)
    throw ParseError("point exceeds declared degree " + std::to_string(degree), text.size());

  // Cycles compose left to right.
  Permutation result(n);
  for (auto const &cycle : cycles) {
    Permutation c(n);
    for (std::size_t k = 0; k < cycle.size(); ++k)
      c._images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    result *= c;
  }
  return result;
}

bool Permutation::is_identity() const
{
  for (std::size_t i = 0; i < _images.size(); ++i) {
    if (_images[i] != i)
      return false;
  }
  return true;
}

Permutation Permutation::inverse() const
{
  Permutation r;
  r._images.resize(_images.size());
  for (std::size_t i = 0; i < _images.size(); ++i)
    r._images[_images[i]] = static_cast<Point>(i);
  return r;
}

Permutation Permutation::operator*(Permutation const &rhs) const
{
  if (rhs.degree() != degree())
    throw InvalidArgument("degree mismatch in permutation product");
  Permutation r;
  r._images.resize(_images.size());
  for (std::size_t i = 0; i < _images.size(); ++i)
    r._images[i] = rhs._images[_images[i]];
  return r;
}

Permutation &Permutation::operator*=(Permutation const &rhs)
{
  if (rhs.degree() != degree())
    throw InvalidArgument("degree mismatch in permutation product");
  if (&rhs == this) {
    Permutation copy = rhs;
    return *this *= copy;
  }
  for (auto &x : _images)
    x = rhs._images[x];
  return *this;
}

Permutation Permutation::operator^(Permutation const &rhs) const
{
  return rhs.inverse() * (*this) * rhs;
}

Permutation Permutation::pow(long long e) const
{
  Permutation base = e < 0 ? inverse() : *this;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1u
                               : static_cast<unsigned long long>(e);
  Permutation result(degree());
  while (n) {
    if (n & 1u)
      result *= base;
    base *= base;
    n >>= 1u;
  }
  return result;
}

std::uint64_t Permutation::order() const
{
  std::uint64_t result = 1;
  for (auto const &c : cycles())
    result = std::lcm(result, static_cast<std::uint64_t>(c.size()));
  return result;
}

Point Permutation::first_moved_point() const
{
  for (std::size_t i = 0; i < _images.size(); ++i) {
    if (_images[i] != i)
      return static_cast<Point>(i);
  }
  return static_cast<Point>(_images.size());
}

Permutation Permutation::extended(std::size_t n) const
{
  if (n < degree())
    throw InvalidArgument("cannot shrink a permutation's degree");
  Permutation r(n);
  std::copy(_images.begin(), _images.end(), r._images.begin());
  return r;
}

Permutation Permutation::shifted(std::size_t offset, std::size_t n) const
{
  if (offset + degree() > n)
    throw InvalidArgument("shifted permutation does not fit");
  Permutation r(n);
  for (std::size_t i = 0; i < degree(); ++i)
    r._images[offset + i] = static_cast<Point>(offset + _images[i]);
  return r;
}

std::vector<std::vector<Point>> Permutation::cycles() const
{
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(_images.size(), false);
  for (std::size_t i = 0; i < _images.size(); ++i) {
    if (seen[i] || _images[i] == i)
      continue;
    std::vector<Point> c;
    for (Point j = static_cast<Point>(i); !seen[j]; j = _images[j]) {
      seen[j] = true;
      c.push_back(j);
    }
    result.push_back(std::move(c));
  }
  return result;
}

std::string Permutation::to_string() const
{
  auto cs = cycles();
  if (cs.empty())
    return "()";
  std::ostringstream os;
  for (auto const &c : cs) {
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k)
      os << (k ? " " : "") << c[k];
    os << ')';
  }
  return os.str();
}

Permutation commutator(Permutation const &a, Permutation const &b)
{
  return a.inverse() * b.inverse() * a * b;
}

std::ostream &operator<<(std::ostream &os, Permutation const &p)
{
  return os << p.to_string();
}

} // namespace vlab

std::size_t std::hash<vlab::Permutation>::operator()(vlab::Permutation const &p) const noexcept
{
  std::size_t h = 1469598103934665603ull;
  for (auto x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}
