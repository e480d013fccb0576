#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vlab/perm_group.hpp"

namespace vlab {

/// A syllable x_var^exp of a free-group word.
struct Letter
{
  unsigned var; // >= 1
  long long exp; // != 0

  bool operator==(Letter const &) const = default;
};

/// A freely reduced word in variables x1, x2, ... Adjacent letters always
/// have distinct variables, so the representation is unique.
class Word
{
public:
  Word() = default;

  /// Reduces the given syllables.
  explicit Word(std::vector<Letter> letters);

  static Word variable(unsigned i, long long exp = 1);

  /// Grammar: word := factor* ; factor := atom ('^' integer)? ;
  /// atom := 'x' digits | '(' word ')' | '[' word (',' word)+ ']' | 'e' | '1'.
  /// Commutator brackets are left-normed: [a,b,c] = [[a,b],c], and
  /// [a,b] = a^-1 b^-1 a b.
  static Word parse(std::string_view text);

  std::vector<Letter> const &letters() const
  { return _letters; }

  bool empty() const
  { return _letters.empty(); }

  /// Largest variable index, 0 for the empty word.
  unsigned arity() const;

  /// Number of letters counted with multiplicity (sum of |exp|).
  std::size_t length() const;

  Word inverse() const;
  Word pow(long long e) const;
  Word operator*(Word const &rhs) const;

  /// Variable i becomes variable i + offset.
  Word shifted(unsigned offset) const;

  /// Variables renumbered by order of first appearance.
  Word canonical() const;

  std::string to_string() const;

  bool operator==(Word const &) const = default;

private:
  std::vector<Letter> _letters;
};

Word commutator(Word const &a, Word const &b);

/// Left-normed commutator [x1, x2, ..., x_weight]; weight >= 2.
Word left_normed_commutator_word(unsigned weight);

/// delta_1 = [x1,x2], delta_n = [delta_{n-1}, delta_{n-1} on fresh variables].
Word derived_word(unsigned depth);

/// Substitute tuple[i-1] for x_i and multiply left to right. Throws
/// InvalidArgument if the tuple is shorter than the word's arity.
Permutation evaluate(Word const &w, std::span<Permutation const> tuple);

/// Checks tuple membership in G before evaluating.
Permutation eval_word(Word const &w, std::span<Permutation const> tuple, PermutationGroup const &g);

} // namespace vlab
