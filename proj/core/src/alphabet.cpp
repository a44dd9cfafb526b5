#include "ppfree/alphabet.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace ppfree {

namespace {

bool valid_symbol(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c == '(' || c == ')' || c == ',' || c == ';') return false;
    if (std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> symbols) {
  if (symbols.empty()) throw Error("alphabet needs at least one letter");
  if (symbols.size() > max_alphabet_size)
    throw Error("alphabet exceeds " + std::to_string(max_alphabet_size) + " letters");
  auto data = std::make_shared<Data>();
  for (const auto& s : symbols) {
    if (!valid_symbol(s))
      throw Error("bad letter symbol '" + s + "' (empty, whitespace, or delimiter)");
    for (const auto& seen : data->symbols)
      if (seen == s) throw Error("duplicate letter symbol '" + s + "'");
    if (s.size() != 1) data->single_char = false;
    data->symbols.push_back(s);
  }
  data_ = std::move(data);
}

Alphabet Alphabet::digits(std::size_t count) {
  std::vector<std::string> symbols;
  symbols.reserve(count);
  for (std::size_t i = 0; i < count; ++i) symbols.push_back(std::to_string(i));
  return Alphabet(std::move(symbols));
}

Alphabet Alphabet::dna() { return Alphabet({"A", "C", "G", "T"}); }

const std::string& Alphabet::symbol(Letter id) const {
  if (id >= size()) throw Error("letter id out of range");
  return data_->symbols[id];
}

std::optional<Letter> Alphabet::find(std::string_view symbol) const {
  const auto& syms = data_->symbols;
  for (std::size_t i = 0; i < syms.size(); ++i)
    if (syms[i] == symbol) return static_cast<Letter>(i);
  return std::nullopt;
}

Word::Word(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  for (Letter a : letters_)
    if (a >= alphabet_.size()) throw Error("letter id outside the alphabet");
}

Word Word::empty(Alphabet alphabet) { return Word(std::move(alphabet), {}); }

Word Word::parse(const Alphabet& alphabet, std::string_view text) {
  if (!alphabet.single_char())
    throw TextParseError(
        "alphabet has multi-character symbols; words need the token form");
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) {
    auto id = alphabet.find(std::string_view(&c, 1));
    if (!id) throw TextParseError(std::string("letter '") + c + "' not in alphabet");
    letters.push_back(*id);
  }
  return Word(alphabet, std::move(letters));
}

Word Word::parse_tokens(const Alphabet& alphabet, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Letter> letters;
  std::string token;
  while (in >> token) {
    auto id = alphabet.find(token);
    if (!id) throw TextParseError("letter '" + token + "' not in alphabet");
    letters.push_back(*id);
  }
  return Word(alphabet, std::move(letters));
}

Letter Word::at(std::size_t position) const {
  if (position < 1 || position > letters_.size())
    throw std::out_of_range("word position " + std::to_string(position) +
                            " outside 1.." + std::to_string(letters_.size()));
  return letters_[position - 1];
}

Word Word::prefix(std::size_t length) const {
  if (length > letters_.size())
    throw std::out_of_range("prefix length exceeds word length");
  return Word(alphabet_, std::vector<Letter>(letters_.begin(), letters_.begin() + length));
}

std::string Word::str() const {
  std::string out;
  if (alphabet_.single_char()) {
    out.reserve(letters_.size());
    for (Letter a : letters_) out += alphabet_.symbol(a);
  } else {
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (i) out += ' ';
      out += alphabet_.symbol(letters_[i]);
    }
  }
  return out;
}

}  // namespace ppfree
