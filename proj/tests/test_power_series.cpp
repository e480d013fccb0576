#include <cmath>
#include <random>
#include <set>

#include "doctest.h"

#include "vlab/errors.hpp"
#include "vlab/power_series.hpp"

using namespace vlab;

namespace {

TruncatedSeries one_plus_y(std::uint64_t p, unsigned k, unsigned d, unsigned i)
{
  return ts_add(TruncatedSeries::one(p, k, d), TruncatedSeries::variable(p, k, d, i));
}

TruncatedSeries random_series(std::mt19937 &rng, std::uint64_t p, unsigned k, unsigned d,
                              bool unit)
{
  TruncatedSeries s(p, k, d);
  if (unit)
    s.add_term({}, 1);
  for (int t = 0; t < 6; ++t) {
    Monomial m(rng() % d);
    for (auto &v : m)
      v = 1 + rng() % k;
    if (unit && m.empty())
      continue;
    s.add_term(m, static_cast<std::int64_t>(rng() % p));
  }
  return s;
}

// All reduced words of length <= n over x1, x2 with exponents in [-e, e].
std::vector<Word> short_words(std::size_t n, long long e)
{
  std::vector<Word> out{Word()};
  std::vector<Word> frontier{Word()};
  for (std::size_t len = 1; len <= n; ++len) {
    std::vector<Word> next;
    for (auto const &w : frontier) {
      for (unsigned v = 1; v <= 2; ++v) {
        if (!w.empty() && w.letters().back().var == v)
          continue;
        for (long long a = -e; a <= e; ++a) {
          if (a == 0)
            continue;
          auto letters = w.letters();
          letters.push_back({v, a});
          next.push_back(Word(letters));
        }
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

} // namespace

TEST_CASE("series arithmetic")
{
  auto y = one_plus_y(2, 1, 3, 1);
  auto sq = ts_multiply(y, y);
  TruncatedSeries expect = TruncatedSeries::one(2, 1, 3);
  expect.add_term({1, 1}, 1);
  CHECK(sq == expect);
  CHECK(sq.to_string() == "1 + y1^2");

  auto a = ts_add(TruncatedSeries::one(3, 2, 4), TruncatedSeries::variable(3, 2, 4, 2));
  CHECK(ts_multiply(a, TruncatedSeries::one(3, 2, 4)) == a);

  auto y1 = TruncatedSeries::variable(5, 2, 3, 1);
  auto y2 = TruncatedSeries::variable(5, 2, 3, 2);
  CHECK_FALSE(ts_multiply(y1, y2) == ts_multiply(y2, y1));
  CHECK(ts_multiply(y1, y2).coefficient({1, 2}) == 1);
  // Truncation.
  CHECK(ts_multiply(ts_multiply(y1, y2), y1).is_zero());

  CHECK_THROWS_AS(ts_add(TruncatedSeries::one(2, 1, 3), TruncatedSeries::one(3, 1, 3)),
                  InvalidArgument);
  CHECK_THROWS_AS(TruncatedSeries(4, 1, 3), InvalidArgument);
  CHECK_THROWS_AS(TruncatedSeries::variable(2, 1, 3, 2), InvalidArgument);
}

TEST_CASE("ring axioms on random series")
{
  std::mt19937 rng(1);
  for (auto [p, k, d] : {std::tuple{2ull, 2u, 5u}, std::tuple{3ull, 2u, 4u}}) {
    for (int i = 0; i < 200; ++i) {
      auto a = random_series(rng, p, k, d, false);
      auto b = random_series(rng, p, k, d, false);
      auto c = random_series(rng, p, k, d, false);
      CHECK(ts_multiply(ts_multiply(a, b), c) == ts_multiply(a, ts_multiply(b, c)));
      CHECK(ts_multiply(a, ts_add(b, c)) == ts_add(ts_multiply(a, b), ts_multiply(a, c)));
      CHECK(ts_multiply(ts_add(a, b), c) == ts_add(ts_multiply(a, c), ts_multiply(b, c)));
      CHECK(ts_add(a, b) == ts_add(b, a));
      CHECK(ts_add(a, ts_scale(a, -1)).is_zero());
    }
  }
}

TEST_CASE("unit inverses")
{
  auto inv = ts_unit_inverse(one_plus_y(2, 1, 3, 1));
  TruncatedSeries expect = TruncatedSeries::one(2, 1, 3);
  expect.add_term({1}, 1);
  expect.add_term({1, 1}, 1);
  CHECK(inv == expect);
  CHECK(ts_unit_inverse(TruncatedSeries::one(3, 2, 4)).is_one());
  CHECK_THROWS_AS(ts_unit_inverse(TruncatedSeries::variable(2, 1, 3, 1)), InvalidArgument);
  CHECK_THROWS_AS(ts_unit_inverse(TruncatedSeries::constant(3, 1, 3, 2)), InvalidArgument);

  std::mt19937 rng(2);
  for (auto [p, k, d] : {std::tuple{2ull, 2u, 5u}, std::tuple{3ull, 2u, 4u}, std::tuple{5ull, 3u, 3u}}) {
    // Exponent of the unit group: p^ceil(log_p d).
    std::uint64_t e = 1;
    while (e < d)
      e *= p;
    for (int i = 0; i < 100; ++i) {
      auto u = random_series(rng, p, k, d, true);
      auto ui = ts_unit_inverse(u);
      CHECK(ts_multiply(u, ui).is_one());
      CHECK(ts_multiply(ui, u).is_one());
      CHECK(ts_unit_inverse(ui) == u);
      CHECK(ts_pow(u, static_cast<long long>(e)).is_one());
      CHECK(ts_pow(u, -3) == ts_unit_inverse(ts_pow(u, 3)));
    }
  }
}

TEST_CASE("Magnus images")
{
  CHECK(magnus_image(Word::parse("x1"), 7, 2) == one_plus_y(7, 1, 2, 1));
  auto sq = magnus_image(Word::parse("x1^2"), 2, 3);
  CHECK(sq.to_string() == "1 + y1^2");
  auto c = magnus_image(Word::parse("[x1,x2]"), 2, 5);
  CHECK(c.coefficient({1, 2, 1, 2}) == 1);
  CHECK(c.coefficient({1, 2}) == 1);
  // Degree-2 part of [x1,x2] is y1y2 - y2y1.
  auto c3 = magnus_image(Word::parse("[x1,x2]"), 3, 3);
  CHECK(c3.coefficient({1, 2}) == 1);
  CHECK(c3.coefficient({2, 1}) == 2);
  CHECK(magnus_image(Word(), 3, 4).is_one());
}

TEST_CASE("law failure witnesses")
{
  auto w = law_failure_witness(Word::parse("x1^2"), 2);
  CHECK(w.d == 3);
  CHECK(w.monomial == Monomial{1, 1});
  CHECK(w.coefficient == 1);
  CHECK(w.verified());

  auto c = law_failure_witness(Word::parse("[x1,x2]"), 2);
  CHECK(c.d == 5);
  CHECK(c.monomial == Monomial{1, 2, 1, 2});
  CHECK(c.coefficient == 1);
  CHECK(c.verified());

  auto x = law_failure_witness(Word::parse("x1"), 3);
  CHECK(x.d == 2);
  CHECK(x.monomial == Monomial{1});
  CHECK(x.coefficient == 1);

  // a = -4 = -1 * 2^2 at p = 2: monomial y1^4, coefficient 1.
  auto n = law_failure_witness(Word::parse("x1^-4x2^3"), 2);
  CHECK(n.d == 6);
  CHECK(n.monomial == Monomial{1, 1, 1, 1, 2});
  CHECK(n.verified());

  // The coefficient is the product of the b_i, not of the exponents:
  // x1^6 at p = 3 has b = 2, so the y1^3 coefficient is 2, while 6 = 0 mod 3.
  auto b = law_failure_witness(Word::parse("x1^6"), 3);
  CHECK(b.monomial == Monomial{1, 1, 1});
  CHECK(b.predicted_coefficient == 2);
  CHECK(b.coefficient == 2);

  CHECK_THROWS_AS(law_failure_witness(Word(), 2), InvalidArgument);
  CHECK_THROWS_AS(law_failure_witness(Word::parse("x1"), 6), InvalidArgument);
}

TEST_CASE("predicted coefficients match the Magnus image on a word corpus")
{
  std::size_t checked = 0;
  for (auto const &w : short_words(3, 3)) {
    if (w.empty())
      continue;
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
      auto r = law_failure_witness(w, p);
      CAPTURE(w.to_string());
      CAPTURE(p);
      CHECK(r.verified());
      ++checked;
    }
  }
  CHECK(checked > 1000);
  // Other monomials of the witness degree can occur: y2^2 * y2 gives y2^3
  // alongside the witness y2 y1 y2.
  auto odd = law_failure_witness(Word::parse("x2^2x1x2"), 3);
  CHECK(odd.monomial == Monomial{2, 1, 2});
  CHECK(odd.image.coefficient({2, 2, 2}) == 1);
  for (char const *s : {"[x1,x2,x3]", "[[x1,x2],[x3,x4]]", "x1^8", "(x1x2)^4", "x1^9x2^-3"}) {
    CAPTURE(s);
    CHECK(law_failure_witness(Word::parse(s), 2).verified());
    CHECK(law_failure_witness(Word::parse(s), 3).verified());
  }
}

TEST_CASE("Magnus map separates short words")
{
  // Distinct words of length <= 4 have distinct images once d exceeds the
  // largest witness degree of w1 w2^-1, which is at most 8 here.
  auto words = short_words(4, 1);
  auto longer = short_words(2, 4);
  words.insert(words.end(), longer.begin(), longer.end());
  std::set<Word, decltype([](Word const &a, Word const &b) { return a.to_string() < b.to_string(); })>
      unique(words.begin(), words.end());
  std::set<std::map<Monomial, std::uint64_t>> images;
  for (auto const &w : unique) {
    auto image = magnus_image(w, 2, 9);
    auto const &img = image.terms();
    // Embed in two variables regardless of arity.
    TruncatedSeries lifted(2, 2, 9);
    for (auto const &[m, c] : img)
      lifted.add_term(m, static_cast<std::int64_t>(c));
    images.insert(lifted.terms());
  }
  CHECK(images.size() == unique.size());

  // At d = 6 two such words already collide.
  CHECK(magnus_image(Word::parse("x1^4"), 2, 6) == magnus_image(Word::parse("x1^-4"), 2, 6));
  CHECK_FALSE(magnus_image(Word::parse("x1^4"), 2, 9) == magnus_image(Word::parse("x1^-4"), 2, 9));
}

TEST_CASE("unit group order")
{
  CHECK(unit_group_log2_order(2, 1, 5) == doctest::Approx(4));
  CHECK(unit_group_log2_order(2, 2, 3) == doctest::Approx(6));
  CHECK(unit_group_log2_order(3, 2, 3) == doctest::Approx(6 * std::log2(3.0)));
}
