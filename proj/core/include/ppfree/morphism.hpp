#pragma once

#include <string_view>
#include <vector>

#include "ppfree/alphabet.hpp"

namespace ppfree {

/// Letter-to-word substitution over a fixed alphabet. Immutable.
class Morphism {
 public:
  /// images[id] is the image of letter id; every image must live over
  /// `alphabet` and there must be one per letter.
  Morphism(Alphabet alphabet, std::vector<Word> images);

  /// Text format: rules separated by ';', e.g. `0->0012;1->112;2->022`.
  /// Every letter needs exactly one rule. Single-character alphabets use
  /// plain strings as images. Throws TextParseError.
  static Morphism parse(const Alphabet& alphabet, std::string_view text);

  const Alphabet& alphabet() const { return alphabet_; }
  const Word& image(Letter a) const;

  /// Concatenation of the images of the letters of w.
  Word apply(const Word& w) const;

  /// Image of `seed` is nonempty and starts with `seed`, so iteration from
  /// the seed produces nested prefixes.
  bool prolongable_at(Letter seed) const;

 private:
  Alphabet alphabet_;
  std::vector<Word> images_;
};

enum class BuiltinMorphism {
  leech_l,     // ternary, square-free fixed point, 13-letter images
  dekking_d3,  // ternary, abelian-cube-free fixed point
  dekking_d4,  // binary, abelian-4th-power-free fixed point
  tm_sep_t,    // ternary: Thue-Morse word interleaved with 2s
  thue_morse,  // binary, overlap-free fixed point
};

Morphism builtin_morphism(BuiltinMorphism which);
/// Accepts the enum spellings above; throws UnknownNameError otherwise.
Morphism builtin_morphism(std::string_view name);
std::vector<std::string_view> builtin_morphism_names();

/// Shortest iterate h^m(seed) with at least min_len letters (may be longer;
/// callers truncate). Successive iterates agree on common prefixes, so the
/// result is a prefix of the fixed point h^inf(seed). min_len must be
/// positive. Throws NotProlongableError when the image of the seed does not
/// start with the seed or iteration stops growing short of min_len.
Word fixed_point_prefix(const Morphism& h, Letter seed, std::size_t min_len);

}  // namespace ppfree
