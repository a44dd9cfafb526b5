#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ppfree/alphabet.hpp"

namespace ppfree {

/// Letters fixed by an involution (idt) and letters moved to a larger
/// letter (trn), each in alphabet order. |idt| + 2*|trn| = alphabet size.
struct Classification {
  std::vector<Letter> idt;
  std::vector<Letter> trn;

  friend bool operator==(const Classification&, const Classification&) = default;
};

/// The unique set of disjoint transpositions whose composition with plain
/// reversal reproduces an antimorphic involution. Pairs are (low, high),
/// sorted by first member.
struct Decomposition {
  std::vector<std::pair<Letter, Letter>> transpositions;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Antimorphic involution: a self-inverse letter permutation applied
/// letterwise, followed by reversal. The identity permutation gives the
/// mirror image. Immutable.
class Involution {
 public:
  static Involution mirror(Alphabet alphabet);

  /// letter_map[id] is the image of letter id. Throws NotPermutationError
  /// or NotInvolutiveError when the table is not an involutive bijection.
  static Involution make(Alphabet alphabet, std::vector<Letter> letter_map);

  /// Identity except for the given transpositions, which must be disjoint.
  static Involution from_pairs(Alphabet alphabet,
                               std::span<const std::pair<Letter, Letter>> pairs);

  const Alphabet& alphabet() const { return alphabet_; }
  Letter map(Letter a) const { return table_[a]; }
  std::span<const Letter> table() const { return table_; }
  bool is_mirror() const;

  /// Antimorphic action: map every letter, then reverse.
  Word apply(const Word& w) const;

  Decomposition decompose() const;
  Classification classify() const;

  friend bool operator==(const Involution& a, const Involution& b) {
    return a.alphabet_ == b.alphabet_ && a.table_ == b.table_;
  }

 private:
  Involution(Alphabet alphabet, std::vector<Letter> table);

  Alphabet alphabet_;
  std::vector<Letter> table_;
};

/// Inverse of Involution::decompose.
Involution recompose(const Alphabet& alphabet, const Decomposition& decomposition);

/// Text format: `mir`, or transposition pairs followed by `.mir`, e.g.
/// `(0,1).mir` or `(A,T),(C,G).mir`. Keywords are case-insensitive;
/// letters are matched exactly. Throws TextParseError.
Involution parse_involution(const Alphabet& alphabet, std::string_view text);

/// Canonical form of the same format (pairs sorted, lowercase keyword).
/// parse_involution(format_involution(phi)) == phi.
std::string format_involution(const Involution& involution);

}  // namespace ppfree
