#include <random>

#include "doctest.h"

#include "vlab/errors.hpp"
#include "vlab/named_groups.hpp"
#include "vlab/wreath_z.hpp"

using namespace vlab;

namespace {

Permutation P(char const *s, std::size_t n)
{
  return Permutation::parse(s, n);
}

struct Sampler
{
  std::vector<Permutation> elems;
  std::mt19937 rng;

  Sampler(PermutationGroup const &g, unsigned seed)
  : elems(g.elements())
  , rng(seed)
  {}

  Permutation element()
  { return elems[rng() % elems.size()]; }

  long long integer(long long lo, long long hi)
  { return std::uniform_int_distribution<long long>(lo, hi)(rng); }

  TailConstantFn fn(bool finite = false)
  {
    long long lo = integer(-4, 3);
    std::size_t len = static_cast<std::size_t>(integer(0, 5));
    std::vector<Permutation> vals;
    for (std::size_t i = 0; i < len; ++i)
      vals.push_back(rng() % 3 ? element() : Permutation::identity(elems[0].degree()));
    auto id = Permutation::identity(elems[0].degree());
    return TailConstantFn(lo, vals, finite ? id : element(), finite ? id : element());
  }

  WreathZElement wz()
  { return {integer(-3, 3), fn()}; }
};

// Values over a range, as an independent check of canonical storage.
bool agree(TailConstantFn const &f, TailConstantFn const &g, long long lo = -30, long long hi = 30)
{
  for (long long n = lo; n <= hi; ++n) {
    if (f(n) != g(n))
      return false;
  }
  return true;
}

bool is_canonical(TailConstantFn const &f)
{
  if (f.values().empty())
    return f.left_tail() != f.right_tail() || f.lo() == 0;
  return f.values().front() != f.left_tail() && f.values().back() != f.right_tail();
}

} // namespace

TEST_CASE("tail-constant functions")
{
  auto id = Permutation::identity(3);
  auto g = P("(0 1)", 3);
  auto f = TailConstantFn(-2, {id, g, id}, id, id);
  CHECK(f.lo() == -1);
  CHECK(f.hi() == -1);
  CHECK(f(-1) == g);
  CHECK(f(5) == id);
  CHECK(TailConstantFn(3, {g, g}, g, g) == TailConstantFn::constant(g));
  auto step = TailConstantFn(4, {}, g, id);
  CHECK(step(3) == g);
  CHECK(step(4) == id);
  CHECK(step.shifted(2)(5) == g);
  CHECK(step.shifted(2)(6) == id);
  CHECK(f.shifted(3)(2) == g);
  CHECK(TailConstantFn(0, {g, id}, g, id) == TailConstantFn(1, {}, g, id));
}

TEST_CASE("function literals")
{
  auto f = TailConstantFn::parse("{-2:(0 1), 0:(0 1 2) | L=e, R=e}", 3);
  CHECK(f(-2) == P("(0 1)", 3));
  CHECK(f(-1).is_identity());
  CHECK(f(0) == P("(0 1 2)", 3));
  CHECK(f.finitely_supported());
  CHECK(TailConstantFn::parse(f.to_string(), 3) == f);
  auto step = TailConstantFn(4, {}, P("(0 1)", 3), P("(1 2)", 3));
  CHECK(TailConstantFn::parse(step.to_string(), 3) == step);
  CHECK(TailConstantFn::parse("{}", 3) == TailConstantFn(3));
  CHECK(TailConstantFn::parse("{ | R=(0 2)}", 3) ==
        TailConstantFn(0, {}, Permutation::identity(3), P("(0 2)", 3)));
  CHECK_THROWS_AS(TailConstantFn::parse("{1:(0 1), 1:(0 2)}", 3), ParseError);
  CHECK_THROWS_AS(TailConstantFn::parse("{x:(0 1)}", 3), ParseError);
  CHECK_THROWS_AS(TailConstantFn::parse("{0:(0 5)}", 3), ParseError);
  CHECK_THROWS_AS(TailConstantFn::parse("{0:(0 1)", 3), ParseError);

  Sampler s(symmetric_group(3), 3);
  for (int i = 0; i < 200; ++i) {
    auto r = s.fn();
    CHECK(TailConstantFn::parse(r.to_string(), 3) == r);
  }
}

TEST_CASE("group axioms in G wr Z")
{
  Sampler s(alternating_group(4), 11);
  auto e = WreathZElement::identity(4);
  for (int i = 0; i < 1000; ++i) {
    auto a = s.wz(), b = s.wz(), c = s.wz();
    CHECK(wz_multiply(wz_multiply(a, b), c) == wz_multiply(a, wz_multiply(b, c)));
    CHECK(wz_multiply(a, wz_inverse(a)) == e);
    CHECK(wz_multiply(wz_inverse(a), a) == e);
    CHECK(wz_multiply(e, a) == a);
    CHECK(wz_multiply(a, e) == a);
    auto ab = wz_multiply(a, b);
    CHECK(is_canonical(ab.fn));
    CHECK(is_canonical(wz_inverse(a).fn));
    CHECK(is_canonical(wz_commutator(a, b).fn));
    // The projection to Z is a homomorphism.
    CHECK(ab.shift == a.shift + b.shift);
  }
}

TEST_CASE("multiplication rule and conjugation by x")
{
  Sampler s(symmetric_group(3), 5);
  auto x = WreathZElement::generator(3);
  for (int i = 0; i < 200; ++i) {
    auto a = s.wz(), b = s.wz();
    auto ab = wz_multiply(a, b);
    for (long long n = -10; n <= 10; ++n)
      CHECK(ab.fn(n) == a.fn(n - b.shift) * b.fn(n));
    auto psi = s.fn();
    auto conj = wz_multiply(wz_multiply(wz_inverse(x), WreathZElement::base(psi)), x);
    CHECK(conj.shift == 0);
    for (long long n = -10; n <= 10; ++n)
      CHECK(conj.fn(n) == psi(n - 1));
    // [psi, x](n) = psi(n)^-1 psi(n-1).
    auto c = wz_commutator(WreathZElement::base(psi), x);
    CHECK(c.shift == 0);
    for (long long n = -10; n <= 10; ++n)
      CHECK(c.fn(n) == psi(n).inverse() * psi(n - 1));
  }
  auto phi = s.fn();
  CHECK(wz_inverse(WreathZElement{1, phi}).shift == -1);
  // Base commutators are pointwise.
  auto f1 = s.fn(), f2 = s.fn();
  auto c = wz_commutator(WreathZElement::base(f1), WreathZElement::base(f2));
  CHECK(c.shift == 0);
  for (long long n = -10; n <= 10; ++n)
    CHECK(c.fn(n) == commutator(f1(n), f2(n)));
  CHECK_THROWS_AS(wz_multiply(WreathZElement::identity(3), WreathZElement::identity(4)),
                  InvalidArgument);
}

TEST_CASE("solving [psi, x] = phi")
{
  auto x = WreathZElement::generator(3);
  auto g = P("(0 1 2)", 3);
  auto id = Permutation::identity(3);

  auto psi = solve_commutator(TailConstantFn::point_mass(0, g), id);
  CHECK(psi == TailConstantFn(0, {}, g, id));
  CHECK(wz_commutator(WreathZElement::base(psi), x) ==
        WreathZElement::base(TailConstantFn::point_mass(0, g)));

  auto s = P("(0 1)", 3);
  CHECK(solve_commutator(TailConstantFn(3), s) == TailConstantFn::constant(s));

  Sampler a4(alternating_group(4), 17);
  auto x4 = WreathZElement::generator(4);
  for (int i = 0; i < 300; ++i) {
    auto phi = a4.fn(true);
    auto seed = a4.element();
    auto p1 = solve_commutator(phi, seed);
    CHECK(p1(0) == seed);
    CHECK(wz_commutator(WreathZElement::base(p1), x4) == WreathZElement::base(phi));
    // Two seeds differ by a constant on the left.
    auto p2 = solve_commutator(phi, Permutation::identity(4));
    auto quotient = p1 * p2.inverse();
    CHECK(quotient.values().empty());
    CHECK(quotient.left_tail() == quotient.right_tail());
    CHECK(agree(p1, TailConstantFn::constant(seed) * p2));
  }
  CHECK_THROWS_AS(solve_commutator(TailConstantFn::constant(g), id), InvalidArgument);
}

TEST_CASE("componentwise commutators")
{
  Sampler s(symmetric_group(3), 23);
  auto a = s.wz(), b = s.wz();
  auto one = componentwise_commutator({{a, b}});
  REQUIRE(one.size() == 1);
  CHECK(one[0] == wz_commutator(a, b));
  auto two = componentwise_commutator({{a, b}, {a, b}});
  CHECK(two[0] == two[1]);

  std::vector<std::pair<WreathZElement, WreathZElement>> three;
  for (int i = 0; i < 3; ++i)
    three.push_back({s.wz(), s.wz()});
  auto r = componentwise_commutator(three);
  for (int i = 0; i < 3; ++i) {
    auto [u, v] = three[static_cast<std::size_t>(i)];
    // a^-1 b^-1 a b spelled out by hand.
    auto ui = wz_inverse(u), vi = wz_inverse(v);
    CHECK(r[static_cast<std::size_t>(i)] == wz_multiply(ui, wz_multiply(vi, wz_multiply(u, v))));
  }
}

TEST_CASE("depth-2 witnesses")
{
  auto w = depth2_witness(TailConstantFn::point_mass(0, P("(0 1)", 2)));
  CHECK(w.verified);
  CHECK(w.psi == TailConstantFn(0, {}, P("(0 1)", 2), Permutation::identity(2)));
  auto w0 = depth2_witness(TailConstantFn(3));
  CHECK(w0.verified);
  CHECK(w0.psi == TailConstantFn(3));
  auto phi = TailConstantFn::parse("{-1:(0 1), 0:(0 1 2), 1:(1 2)}", 3);
  auto w3 = depth2_witness(phi);
  CHECK(w3.verified);
  CHECK(w3.report.find("verified") != std::string::npos);
}
