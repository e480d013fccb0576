#include "vlab/word.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "vlab/errors.hpp"

namespace vlab {

Word::Word(std::vector<Letter> letters)
{
  for (auto const &l : letters) {
    if (l.var == 0)
      throw InvalidArgument("word variables are numbered from 1");
    if (l.exp == 0)
      continue;
    if (!_letters.empty() && _letters.back().var == l.var) {
      _letters.back().exp += l.exp;
      if (_letters.back().exp == 0)
        _letters.pop_back();
    } else {
      _letters.push_back(l);
    }
  }
}

Word Word::variable(unsigned i, long long exp)
{
  return Word({Letter{i, exp}});
}

unsigned Word::arity() const
{
  unsigned a = 0;
  for (auto const &l : _letters)
    a = std::max(a, l.var);
  return a;
}

std::size_t Word::length() const
{
  std::size_t n = 0;
  for (auto const &l : _letters)
    n += static_cast<std::size_t>(l.exp < 0 ? -l.exp : l.exp);
  return n;
}

Word Word::inverse() const
{
  std::vector<Letter> r(_letters.rbegin(), _letters.rend());
  for (auto &l : r)
    l.exp = -l.exp;
  return Word(std::move(r));
}

Word Word::pow(long long e) const
{
  if (_letters.size() == 1)
    return Word({Letter{_letters[0].var, _letters[0].exp * e}});
  Word base = e < 0 ? inverse() : *this;
  Word result;
  for (long long k = 0; k < (e < 0 ? -e : e); ++k)
    result = result * base;
  return result;
}

Word Word::operator*(Word const &rhs) const
{
  std::vector<Letter> all = _letters;
  all.insert(all.end(), rhs._letters.begin(), rhs._letters.end());
  // Cancellation can cascade across the seam, so reduce with a stack.
  std::vector<Letter> stack;
  for (auto const &l : all) {
    if (!stack.empty() && stack.back().var == l.var) {
      stack.back().exp += l.exp;
      if (stack.back().exp == 0)
        stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  Word w;
  w._letters = std::move(stack);
  return w;
}

Word Word::shifted(unsigned offset) const
{
  Word w = *this;
  for (auto &l : w._letters)
    l.var += offset;
  return w;
}

Word Word::canonical() const
{
  std::map<unsigned, unsigned> rename;
  Word w = *this;
  for (auto &l : w._letters) {
    auto it = rename.find(l.var);
    if (it == rename.end())
      it = rename.emplace(l.var, static_cast<unsigned>(rename.size() + 1)).first;
    l.var = it->second;
  }
  return w;
}

std::string Word::to_string() const
{
  if (_letters.empty())
    return "e";
  std::ostringstream os;
  for (auto const &l : _letters) {
    os << 'x' << l.var;
    if (l.exp != 1)
      os << '^' << l.exp;
  }
  return os.str();
}

Word commutator(Word const &a, Word const &b)
{
  return a.inverse() * b.inverse() * a * b;
}

Word left_normed_commutator_word(unsigned weight)
{
  if (weight < 2)
    throw InvalidArgument("commutator weight must be at least 2");
  Word w = Word::variable(1);
  for (unsigned i = 2; i <= weight; ++i)
    w = commutator(w, Word::variable(i));
  return w;
}

Word derived_word(unsigned depth)
{
  if (depth == 0)
    return Word::variable(1);
  Word prev = derived_word(depth - 1);
  unsigned half = 1u << (depth - 1);
  return commutator(prev, prev.shifted(half));
}

namespace {

class WordParser
{
public:
  explicit WordParser(std::string_view text)
  : _text(text)
  {}

  Word parse()
  {
    Word w = word();
    skip_ws();
    if (_pos != _text.size())
      throw ParseError(std::string("unexpected '") + _text[_pos] + "' in word", _pos);
    return w;
  }

private:
  void skip_ws()
  {
    while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos])))
      ++_pos;
  }

  bool at(char c)
  {
    skip_ws();
    return _pos < _text.size() && _text[_pos] == c;
  }

  void expect(char c)
  {
    if (!at(c)) {
      if (_pos >= _text.size())
        throw ParseError(std::string("expected '") + c + "' but input ended", _pos);
      throw ParseError(std::string("expected '") + c + "' but found '" + _text[_pos] + "'", _pos);
    }
    ++_pos;
  }

  long long integer()
  {
    skip_ws();
    bool neg = false;
    if (_pos < _text.size() && (_text[_pos] == '-' || _text[_pos] == '+')) {
      neg = _text[_pos] == '-';
      ++_pos;
    }
    std::size_t start = _pos;
    long long v = 0;
    while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
      v = v * 10 + (_text[_pos] - '0');
      if (v > 1000000000000LL)
        throw ParseError("integer too large", _pos);
      ++_pos;
    }
    if (_pos == start)
      throw ParseError("expected an integer", _pos);
    return neg ? -v : v;
  }

  bool starts_factor()
  {
    skip_ws();
    if (_pos >= _text.size())
      return false;
    char c = _text[_pos];
    return c == 'x' || c == '(' || c == '[' || c == 'e' || c == '1';
  }

  Word word()
  {
    Word w;
    while (starts_factor())
      w = w * factor();
    return w;
  }

  Word factor()
  {
    Word a = atom();
    if (at('^')) {
      ++_pos;
      a = a.pow(integer());
    }
    return a;
  }

  Word atom()
  {
    skip_ws();
    char c = _text[_pos];
    if (c == 'e' || c == '1') {
      ++_pos;
      return Word();
    }
    if (c == 'x') {
      ++_pos;
      std::size_t start = _pos;
      long long v = 0;
      while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
        v = v * 10 + (_text[_pos] - '0');
        if (v > 1000000)
          throw ParseError("variable index too large", _pos);
        ++_pos;
      }
      if (_pos == start || v == 0)
        throw ParseError("expected a variable index >= 1 after 'x'", _pos);
      return Word::variable(static_cast<unsigned>(v));
    }
    if (c == '(') {
      ++_pos;
      Word w = word();
      expect(')');
      return w;
    }
    // '['
    ++_pos;
    Word w = word();
    std::size_t parts = 1;
    while (at(',')) {
      ++_pos;
      w = commutator(w, word());
      ++parts;
    }
    if (parts < 2)
      throw ParseError("commutator needs at least two entries", _pos);
    expect(']');
    return w;
  }

  std::string_view _text;
  std::size_t _pos = 0;
};

} // namespace

Word Word::parse(std::string_view text)
{
  return WordParser(text).parse();
}

Permutation evaluate(Word const &w, std::span<Permutation const> tuple)
{
  if (tuple.size() < w.arity())
    throw InvalidArgument("word of arity " + std::to_string(w.arity()) + " evaluated on " +
                          std::to_string(tuple.size()) + " elements");
  if (tuple.empty())
    throw InvalidArgument("cannot evaluate on an empty tuple");
  Permutation r = Permutation::identity(tuple.front().degree());
  for (auto const &l : w.letters())
    r *= tuple[l.var - 1].pow(l.exp);
  return r;
}

Permutation eval_word(Word const &w, std::span<Permutation const> tuple, PermutationGroup const &g)
{
  for (auto const &x : tuple) {
    if (!g.contains(x))
      throw InvalidArgument("tuple entry " + x.to_string() + " is not in the group");
  }
  if (tuple.empty() && w.empty())
    return Permutation::identity(g.degree());
  return evaluate(w, tuple);
}

} // namespace vlab
