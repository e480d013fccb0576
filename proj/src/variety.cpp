#include "vlab/variety.hpp"

#include <algorithm>
#include <cctype>
#include <random>

#include "vlab/constructions.hpp"
#include "vlab/errors.hpp"
#include "vlab/fixtures.hpp"
#include "vlab/group_algorithms.hpp"
#include "vlab/homomorphism.hpp"
#include "vlab/named_groups.hpp"

namespace vlab {

std::string to_string(Tri t)
{
  switch (t) {
  case Tri::yes: return "yes";
  case Tri::no: return "no";
  case Tri::unknown: return "unknown";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Descriptors

VarietyDescriptor::VarietyDescriptor(Node node)
: _node(std::move(node))
{}

VarietyDescriptor VarietyDescriptor::laws(std::vector<Word> ws)
{ return VarietyDescriptor(Laws{std::move(ws)}); }

VarietyDescriptor VarietyDescriptor::abelian()
{ return VarietyDescriptor(Abelian{}); }

VarietyDescriptor VarietyDescriptor::nilpotent(unsigned c)
{
  if (c == 0)
    throw InvalidArgument("nilpotency class must be at least 1");
  return VarietyDescriptor(Nilpotent{c});
}

VarietyDescriptor VarietyDescriptor::solvable(unsigned n)
{
  if (n == 0)
    throw InvalidArgument("derived length must be at least 1");
  return VarietyDescriptor(Solvable{n});
}

VarietyDescriptor VarietyDescriptor::of_group(std::string name)
{ return VarietyDescriptor(OfGroup{std::move(name)}); }

VarietyDescriptor VarietyDescriptor::product(VarietyDescriptor left, VarietyDescriptor right)
{
  return VarietyDescriptor(Product{std::make_shared<VarietyDescriptor const>(std::move(left)),
                                   std::make_shared<VarietyDescriptor const>(std::move(right))});
}

VarietyDescriptor const &VarietyDescriptor::left() const
{
  if (!is_product())
    throw InvalidArgument("descriptor " + to_string() + " is not a product");
  return *std::get<Product>(_node).left;
}

VarietyDescriptor const &VarietyDescriptor::right() const
{
  if (!is_product())
    throw InvalidArgument("descriptor " + to_string() + " is not a product");
  return *std::get<Product>(_node).right;
}

std::optional<std::vector<Word>> VarietyDescriptor::law_set() const
{
  struct Visitor
  {
    std::optional<std::vector<Word>> operator()(Laws const &l) const { return l.laws; }
    std::optional<std::vector<Word>> operator()(Abelian const &) const
    { return std::vector<Word>{left_normed_commutator_word(2)}; }
    std::optional<std::vector<Word>> operator()(Nilpotent const &n) const
    { return std::vector<Word>{left_normed_commutator_word(n.c + 1)}; }
    std::optional<std::vector<Word>> operator()(Solvable const &s) const
    { return std::vector<Word>{derived_word(s.n)}; }
    std::optional<std::vector<Word>> operator()(OfGroup const &) const { return std::nullopt; }
    std::optional<std::vector<Word>> operator()(Product const &) const { return std::nullopt; }
  };
  return std::visit(Visitor{}, _node);
}

std::string VarietyDescriptor::to_string() const
{
  struct Visitor
  {
    std::string operator()(Laws const &l) const
    {
      std::string s = "laws:{";
      for (std::size_t i = 0; i < l.laws.size(); ++i)
        s += (i ? ";" : "") + l.laws[i].to_string();
      return s + "}";
    }
    std::string operator()(Abelian const &) const { return "A"; }
    std::string operator()(Nilpotent const &n) const { return "Nc:" + std::to_string(n.c); }
    std::string operator()(Solvable const &s) const { return "Sl:" + std::to_string(s.n); }
    std::string operator()(OfGroup const &g) const { return "var:" + g.group; }
    std::string operator()(Product const &p) const
    { return "prod(" + p.left->to_string() + "," + p.right->to_string() + ")"; }
  };
  return std::visit(Visitor{}, _node);
}

bool VarietyDescriptor::operator==(VarietyDescriptor const &rhs) const
{
  return to_string() == rhs.to_string();
}

namespace {

class DescriptorParser
{
public:
  explicit DescriptorParser(std::string_view text)
  : _text(text)
  {}

  VarietyDescriptor parse()
  {
    auto d = descriptor();
    skip_ws();
    if (_pos != _text.size())
      throw ParseError(std::string("unexpected '") + _text[_pos] + "' after descriptor", _pos);
    return d;
  }

private:
  void skip_ws()
  {
    while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos])))
      ++_pos;
  }

  bool consume(std::string_view token)
  {
    skip_ws();
    if (_text.substr(_pos, token.size()) == token) {
      _pos += token.size();
      return true;
    }
    return false;
  }

  void expect(char c)
  {
    skip_ws();
    if (_pos >= _text.size() || _text[_pos] != c)
      throw ParseError(std::string("expected '") + c + "'", _pos);
    ++_pos;
  }

  unsigned positive()
  {
    skip_ws();
    std::size_t start = _pos;
    unsigned long v = 0;
    while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
      v = v * 10 + static_cast<unsigned long>(_text[_pos] - '0');
      if (v > 1000000)
        throw ParseError("parameter too large", _pos);
      ++_pos;
    }
    if (_pos == start || v == 0)
      throw ParseError("expected a positive integer", start);
    return static_cast<unsigned>(v);
  }

  VarietyDescriptor descriptor()
  {
    skip_ws();
    std::size_t start = _pos;
    if (consume("prod(")) {
      auto d = descriptor();
      std::size_t parts = 1;
      while (consume(",")) {
        d = VarietyDescriptor::product(std::move(d), descriptor());
        ++parts;
      }
      if (parts < 2)
        throw ParseError("prod needs at least two factors", _pos);
      expect(')');
      return d;
    }
    if (consume("laws:{")) {
      std::vector<Word> ws;
      for (;;) {
        skip_ws();
        std::size_t end = _text.find_first_of(";}", _pos);
        if (end == std::string_view::npos)
          throw ParseError("unterminated law set", _pos);
        // Commutator brackets may contain ';'-free text only, so a plain
        // split is enough.
        try {
          ws.push_back(Word::parse(_text.substr(_pos, end - _pos)));
        } catch (ParseError const &e) {
          throw ParseError(std::string("in law: ") + e.what(), _pos + e.position());
        }
        _pos = end + 1;
        if (_text[end] == '}')
          break;
      }
      return VarietyDescriptor::laws(std::move(ws));
    }
    if (consume("Nc:"))
      return VarietyDescriptor::nilpotent(positive());
    if (consume("Sl:"))
      return VarietyDescriptor::solvable(positive());
    if (consume("var:")) {
      skip_ws();
      std::size_t s = _pos;
      while (_pos < _text.size() &&
             (std::isalnum(static_cast<unsigned char>(_text[_pos])) || _text[_pos] == '_'))
        ++_pos;
      if (_pos == s)
        throw ParseError("expected a group name after 'var:'", _pos);
      return VarietyDescriptor::of_group(std::string(_text.substr(s, _pos - s)));
    }
    if (consume("A")) {
      // Reject identifiers like "Abc".
      if (_pos < _text.size() && std::isalnum(static_cast<unsigned char>(_text[_pos])))
        throw ParseError("unknown descriptor", start);
      return VarietyDescriptor::abelian();
    }
    throw ParseError("unknown descriptor", start);
  }

  std::string_view _text;
  std::size_t _pos = 0;
};

} // namespace

VarietyDescriptor VarietyDescriptor::parse(std::string_view text)
{
  return DescriptorParser(text).parse();
}

// ---------------------------------------------------------------------------
// Verbal subgroups

namespace {

enum class Shape { trivial, commutator, left_normed, derived, power, general };

struct WordShape
{
  Shape shape;
  long long param = 0;
};

WordShape classify(Word const &w)
{
  if (w.empty())
    return {Shape::trivial};
  Word c = w.canonical();
  Word ci = w.inverse().canonical();
  if (c.letters().size() == 1) {
    long long e = c.letters()[0].exp;
    return {Shape::power, e < 0 ? -e : e};
  }
  unsigned a = c.arity();
  // A left-normed commutator of weight a has 3 * 2^(a-1) - 2 letters; skip
  // building templates that cannot match.
  if (a >= 2 && a < 40 && c.length() == 3 * (std::size_t{1} << (a - 1)) - 2) {
    Word lnc = left_normed_commutator_word(a).canonical();
    if (c == lnc || ci == lnc)
      return {a == 2 ? Shape::commutator : Shape::left_normed, a};
  }
  for (unsigned n = 1; (1u << n) <= a && n < 8; ++n) {
    if ((1u << n) == a) {
      Word dw = derived_word(n).canonical();
      if (c == dw || ci == dw)
        return {Shape::derived, n};
    }
  }
  return {Shape::general};
}

std::vector<Permutation> class_representatives(PermutationGroup const &g, Budget const &budget)
{
  std::vector<Permutation> reps;
  for (auto const &cls : conjugacy_classes(g, budget))
    reps.push_back(cls.front());
  return reps;
}

// Odometer over tuples (rep, e_2, ..., e_k); stops when `visit` returns true.
template<typename Visit>
bool for_each_tuple(std::vector<Permutation> const &reps, std::vector<Permutation> const &elems,
                    unsigned arity, Budget const &budget, Visit visit)
{
  if (arity == 0)
    return false;
  BigInt count = BigInt(reps.size());
  for (unsigned i = 1; i < arity; ++i)
    count *= elems.size();
  if (count > budget.tuple_cap)
    throw BudgetExceeded("word evaluation needs " + count.str() + " tuples, above the tuple cap " +
                         std::to_string(budget.tuple_cap));
  std::vector<std::size_t> idx(arity, 0);
  std::vector<Permutation> tuple(arity);
  for (;;) {
    tuple[0] = reps[idx[0]];
    for (unsigned i = 1; i < arity; ++i)
      tuple[i] = elems[idx[i]];
    if (visit(tuple))
      return true;
    unsigned m = arity;
    for (;;) {
      if (m == 0)
        return false;
      --m;
      std::size_t limit = m == 0 ? reps.size() : elems.size();
      if (++idx[m] < limit)
        break;
      idx[m] = 0;
    }
  }
}

PermutationGroup verbal_of_word(PermutationGroup const &g, Word const &w, Budget const &budget)
{
  auto shape = classify(w);
  switch (shape.shape) {
  case Shape::trivial:
    return PermutationGroup::trivial(g.degree());
  case Shape::commutator:
    return derived_subgroup(g);
  case Shape::left_normed:
    return lower_central_series(g, static_cast<unsigned>(shape.param - 1)).back();
  case Shape::derived: {
    PermutationGroup d = g;
    for (long long i = 0; i < shape.param && d.order() != 1; ++i)
      d = derived_subgroup(d);
    return d;
  }
  case Shape::power: {
    std::vector<Permutation> values;
    for (auto const &r : class_representatives(g, budget)) {
      Permutation v = r.pow(shape.param);
      if (!v.is_identity())
        values.push_back(std::move(v));
    }
    return normal_closure(g, values);
  }
  case Shape::general:
    break;
  }
  // Values are closed under simultaneous conjugation, so the first entry
  // only needs to run over class representatives.
  auto reps = class_representatives(g, budget);
  auto elems = g.elements(budget);
  std::vector<Permutation> values;
  PermutationGroup result = PermutationGroup::trivial(g.degree());
  for_each_tuple(reps, elems, w.arity(), budget, [&](std::vector<Permutation> const &t) {
    Permutation v = evaluate(w, t);
    if (!result.contains(v)) {
      values.push_back(std::move(v));
      result = normal_closure(g, values);
    }
    return false;
  });
  return result;
}

std::optional<std::vector<Permutation>> search_witness(PermutationGroup const &g, Word const &w,
                                                       Budget const &budget)
{
  auto shape = classify(w);
  unsigned arity = w.arity();

  // Map a tuple for the canonical form of w back to w's own variables.
  auto from_canonical = [&](std::vector<Permutation> const &canon) {
    std::vector<unsigned> order;
    for (auto const &l : w.letters()) {
      if (std::find(order.begin(), order.end(), l.var) == order.end())
        order.push_back(l.var);
    }
    std::vector<Permutation> t(arity, Permutation::identity(g.degree()));
    for (std::size_t k = 0; k < order.size() && k < canon.size(); ++k)
      t[order[k] - 1] = canon[k];
    return t;
  };
  auto accept = [&](std::vector<Permutation> const &t) {
    return !evaluate(w, t).is_identity();
  };

  if (shape.shape == Shape::power) {
    for (auto const &r : class_representatives(g, budget)) {
      auto t = from_canonical({r});
      if (accept(t))
        return t;
    }
  }
  if (shape.shape == Shape::commutator || shape.shape == Shape::left_normed) {
    std::vector<Permutation> pool = g.generators();
    for (auto const &x : g.generators())
      pool.push_back(x.inverse());
    unsigned k = static_cast<unsigned>(shape.param);
    BigInt count = 1;
    for (unsigned i = 0; i < k; ++i)
      count *= pool.size();
    if (!pool.empty() && count <= budget.tuple_cap) {
      std::optional<std::vector<Permutation>> found;
      for_each_tuple(pool, pool, k, budget, [&](std::vector<Permutation> const &canon) {
        auto t = from_canonical(canon);
        if (accept(t)) {
          found = t;
          return true;
        }
        return false;
      });
      if (found)
        return found;
    }
  }
  auto reps = class_representatives(g, budget);
  auto elems = g.elements(budget);
  std::optional<std::vector<Permutation>> found;
  try {
    for_each_tuple(reps, elems, arity, budget, [&](std::vector<Permutation> const &t) {
      if (accept(t)) {
        found = t;
        return true;
      }
      return false;
    });
  } catch (BudgetExceeded const &) {
    return std::nullopt;
  }
  return found;
}

// Evaluates w on random products of generators. Used when exact methods
// exceed the budget; a hit is a genuine violation.
std::optional<std::vector<Permutation>> sample_witness(PermutationGroup const &g, Word const &w)
{
  auto const &gens = g.generators();
  if (gens.empty())
    return std::nullopt;
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> len(1, 24);
  auto random_element = [&] {
    Permutation x = Permutation::identity(g.degree());
    for (int i = len(rng); i > 0; --i)
      x *= gens[pick(rng)];
    return x;
  };
  for (int trial = 0; trial < 512; ++trial) {
    std::vector<Permutation> t;
    for (unsigned i = 0; i < w.arity(); ++i)
      t.push_back(random_element());
    if (!evaluate(w, t).is_identity())
      return t;
  }
  return std::nullopt;
}

} // namespace

namespace {

PermutationGroup exact_verbal(PermutationGroup const &g, std::vector<Word> const &laws,
                              Budget const &budget)
{
  PermutationGroup result = PermutationGroup::trivial(g.degree());
  for (auto const &w : laws) {
    auto v = verbal_of_word(g, w, budget);
    if (!result.contains(v))
      result = join(result, v);
  }
  return result;
}

// Normal closure N of sampled law values. N lies in V(G), and equals it
// once G/N is seen to satisfy the laws.
std::optional<PermutationGroup> sampled_verbal(PermutationGroup const &g,
                                               std::vector<Word> const &laws,
                                               Budget const &budget)
{
  auto const &gens = g.generators();
  if (gens.empty())
    return PermutationGroup::trivial(g.degree());
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> len(1, 24);
  std::vector<Permutation> values;
  for (auto const &w : laws) {
    for (int trial = 0; trial < 64; ++trial) {
      std::vector<Permutation> t;
      for (unsigned i = 0; i < w.arity(); ++i) {
        Permutation x = Permutation::identity(g.degree());
        for (int j = len(rng); j > 0; --j)
          x *= gens[pick(rng)];
        t.push_back(std::move(x));
      }
      Permutation v = evaluate(w, t);
      if (!v.is_identity())
        values.push_back(std::move(v));
    }
  }
  auto n = normal_closure(g, values);
  try {
    auto q = quotient(g, n, budget);
    if (exact_verbal(q.group, laws, budget).order() == 1)
      return n;
  } catch (BudgetExceeded const &) {
  }
  return std::nullopt;
}

} // namespace

PermutationGroup verbal_subgroup(PermutationGroup const &g, std::vector<Word> const &laws,
                                 Budget const &budget)
{
  try {
    return exact_verbal(g, laws, budget);
  } catch (BudgetExceeded const &) {
    if (auto n = sampled_verbal(g, laws, budget))
      return *n;
    throw;
  }
}

LawCheck satisfies_laws(PermutationGroup const &g, std::vector<Word> const &laws,
                        Budget const &budget)
{
  for (auto const &w : laws) {
    try {
      if (verbal_of_word(g, w, budget).order() == 1)
        continue;
    } catch (BudgetExceeded const &) {
      auto t = sample_witness(g, w);
      if (!t)
        throw;
      LawCheck r;
      r.satisfied = false;
      r.violated = w;
      r.witness = std::move(t);
      return r;
    }
    LawCheck r;
    r.satisfied = false;
    r.violated = w;
    r.witness = search_witness(g, w, budget);
    return r;
  }
  return {};
}

// ---------------------------------------------------------------------------
// Descriptors applied to groups

namespace {

std::optional<PermutationGroup> generating_group(std::string const &name)
{
  try {
    return named_group(name);
  } catch (ParseError const &) {
    return std::nullopt;
  }
}

} // namespace

PermutationGroup q_verbal(PermutationGroup const &g, VarietyDescriptor const &desc,
                          FixtureSet const &fixtures, Budget const &budget)
{
  if (desc.is_product()) {
    auto q = q_verbal(g, desc.right(), fixtures, budget);
    return q_verbal(q, desc.left(), fixtures, budget);
  }
  if (auto laws = desc.law_set())
    return verbal_subgroup(g, *laws, budget);

  // var:NAME. V(G) is the intersection of the normal N with G/N in V, as
  // varieties are closed under subdirect products. It is determined once
  // every undecided quotient lies above the intersection of the decided ones.
  auto m = member_of_variety(g, desc, fixtures, budget);
  if (m.result == Tri::yes)
    return PermutationGroup::trivial(g.degree());
  if (g.order() <= budget.normal_enum_cap) {
    PermutationGroup meet = g;
    std::vector<PermutationGroup> undecided;
    for (auto const &n : normal_subgroups(g, budget)) {
      if (n.order() == g.order())
        continue;
      Tri r = n.order() == 1 ? m.result
                             : member_of_variety(quotient(g, n, budget).group, desc, fixtures, budget)
                                   .result;
      if (r == Tri::yes)
        meet = subgroup_intersection(g, meet, n, budget);
      else if (r == Tri::unknown)
        undecided.push_back(n);
    }
    if (std::all_of(undecided.begin(), undecided.end(),
                    [&](PermutationGroup const &n) { return n.contains(meet); }))
      return meet;
  }
  throw Undecidable("verbal subgroup for " + desc.to_string() +
                    " is undecidable with current fixtures (" + m.reason + ")");
}

Membership member_of_variety(PermutationGroup const &g, VarietyDescriptor const &desc,
                             FixtureSet const &fixtures, Budget const &budget)
{
  if (g.order() == 1)
    return {Tri::yes, "trivial group"};

  if (desc.is_product()) {
    PermutationGroup q;
    try {
      q = q_verbal(g, desc.right(), fixtures, budget);
    } catch (Undecidable const &e) {
      return {Tri::unknown, e.what()};
    }
    auto inner = member_of_variety(q, desc.left(), fixtures, budget);
    inner.reason = "verbal subgroup for " + desc.right().to_string() + " has order " +
                   q.order().str() + "; " + inner.reason;
    return inner;
  }

  if (auto laws = desc.law_set()) {
    auto check = satisfies_laws(g, *laws, budget);
    if (check.satisfied)
      return {Tri::yes, "all laws of " + desc.to_string() + " hold"};
    return {Tri::no, "law " + check.violated->to_string() + " fails"};
  }

  auto const &name = std::get<VarietyDescriptor::OfGroup>(desc.node()).group;
  if (auto const *f = fixtures.find_membership(g, desc)) {
    return {f->kind == Fixture::Kind::known_member ? Tri::yes : Tri::no,
            "fixture: " + f->to_string()};
  }
  // Varieties are closed under finite direct products.
  if (auto split = split_direct_power(g)) {
    auto inner = member_of_variety(split->component, desc, fixtures, budget);
    if (inner.result == Tri::yes) {
      return {Tri::yes, "direct power of " + std::to_string(split->k) + " copies of a member (" +
                            inner.reason + ")"};
    }
  }
  auto gen = generating_group(name);
  if (!gen)
    return {Tri::unknown, "no generating group named " + name};
  std::size_t n = std::max(gen->degree(), g.degree());
  if (gen->extended(n).contains(g.extended(n)))
    return {Tri::yes, "subgroup of the generating group " + name};
  if (g.order() <= gen->order() && g.order() * gen->order() <= budget.hom_cap) {
    for (auto const &f : all_homomorphisms(g, *gen, budget)) {
      if (f.is_injective())
        return {Tri::yes, "embeds in the generating group " + name};
    }
  }
  for (auto const &law : screening_laws(*gen, budget)) {
    auto check = satisfies_laws(g, {law}, budget);
    if (!check.satisfied)
      return {Tri::no, "violates " + law.to_string() + ", a law of " + name};
  }
  return {Tri::unknown, "passes the screening laws of " + name + " but no fixture decides it"};
}

Tri is_solvable_variety(VarietyDescriptor const &desc)
{
  struct Visitor
  {
    Tri operator()(VarietyDescriptor::Laws const &) const { return Tri::unknown; }
    Tri operator()(VarietyDescriptor::Abelian const &) const { return Tri::yes; }
    Tri operator()(VarietyDescriptor::Nilpotent const &) const { return Tri::yes; }
    Tri operator()(VarietyDescriptor::Solvable const &) const { return Tri::yes; }
    Tri operator()(VarietyDescriptor::OfGroup const &g) const
    {
      auto gen = generating_group(g.group);
      if (!gen)
        return Tri::unknown;
      if (is_solvable(*gen))
        return Tri::yes;
      if (gen->order() > 1 && derived_subgroup(*gen).order() == gen->order())
        return Tri::no;
      return Tri::unknown;
    }
    Tri operator()(VarietyDescriptor::Product const &p) const
    {
      Tri l = is_solvable_variety(*p.left);
      Tri r = is_solvable_variety(*p.right);
      if (l == Tri::no || r == Tri::no)
        return Tri::no;
      if (l == Tri::yes && r == Tri::yes)
        return Tri::yes;
      return Tri::unknown;
    }
  };
  return std::visit(Visitor{}, desc.node());
}

std::vector<Word> screening_laws(PermutationGroup const &generator, Budget const &budget)
{
  std::vector<Word> candidates{Word::variable(1, static_cast<long long>(exponent(generator, budget)))};
  if (auto len = derived_length(generator))
    candidates.push_back(derived_word(*len));
  std::vector<Word> laws;
  for (auto &w : candidates) {
    if (satisfies_laws(generator, {w}, budget).satisfied)
      laws.push_back(std::move(w));
  }
  return laws;
}

} // namespace vlab
