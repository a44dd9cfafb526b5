#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ppfree/errors.hpp"

namespace ppfree {

/// 0-based index of a letter within its Alphabet.
using Letter = std::uint8_t;

/// Alphabets hold at most 255 letters so a letter id always fits a byte
/// (value 255 stays free for internal sentinels).
inline constexpr std::size_t max_alphabet_size = 255;

/// Ordered set of distinct symbols. The declared order is the total order
/// used everywhere: classification, lexicographic word order, reports.
/// Immutable; copies share storage.
class Alphabet {
 public:
  /// Symbols must be nonempty, distinct, and free of whitespace and the
  /// delimiter characters "(),;" used by the text formats.
  explicit Alphabet(std::vector<std::string> symbols);

  /// Decimal symbols "0", "1", ... (count of them).
  static Alphabet digits(std::size_t count);
  /// A, C, G, T in that order.
  static Alphabet dna();

  std::size_t size() const { return data_->symbols.size(); }
  const std::string& symbol(Letter id) const;
  std::optional<Letter> find(std::string_view symbol) const;
  /// True when every symbol is a single character.
  bool single_char() const { return data_->single_char; }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.data_ == b.data_ || a.data_->symbols == b.data_->symbols;
  }

 private:
  struct Data {
    std::vector<std::string> symbols;
    bool single_char = true;
  };
  std::shared_ptr<const Data> data_;
};

/// Finite word over an Alphabet, stored as letter ids. Immutable.
/// Positions in public contracts are 1-based (w[1..N]); letters() exposes
/// the raw 0-based view.
class Word {
 public:
  Word(Alphabet alphabet, std::vector<Letter> letters);

  static Word empty(Alphabet alphabet);
  /// One letter per character; requires a single-character alphabet.
  static Word parse(const Alphabet& alphabet, std::string_view text);
  /// Whitespace-separated symbol tokens; works for any alphabet.
  static Word parse_tokens(const Alphabet& alphabet, std::string_view text);

  const Alphabet& alphabet() const { return alphabet_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// 1-based letter access; throws std::out_of_range.
  Letter at(std::size_t position) const;
  /// First `length` letters; `length` must not exceed size().
  Word prefix(std::size_t length) const;

  /// Symbols concatenated (single-character alphabet) or space-separated.
  std::string str() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.alphabet_ == b.alphabet_ && a.letters_ == b.letters_;
  }
  /// Lexicographic by alphabet order; callers compare words sharing an
  /// alphabet.
  friend bool operator<(const Word& a, const Word& b) {
    return a.letters_ < b.letters_;
  }

 private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

}  // namespace ppfree
