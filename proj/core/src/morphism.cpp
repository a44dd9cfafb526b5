#include "ppfree/morphism.hpp"

#include <utility>

namespace ppfree {

Morphism::Morphism(Alphabet alphabet, std::vector<Word> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
  if (images_.size() != alphabet_.size())
    throw Error("morphism needs exactly one image per letter");
  for (const Word& im : images_)
    if (!(im.alphabet() == alphabet_))
      throw AlphabetMismatchError("morphism image over a different alphabet");
}

Morphism Morphism::parse(const Alphabet& alphabet, std::string_view text) {
  std::vector<std::optional<Word>> images(alphabet.size());
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view rule = text.substr(pos, end - pos);
    pos = end + 1;
    if (rule.empty()) {
      if (pos > text.size()) break;
      throw TextParseError("empty morphism rule");
    }
    std::size_t arrow = rule.find("->");
    if (arrow == std::string_view::npos)
      throw TextParseError("morphism rule without '->': " + std::string(rule));
    auto lhs = alphabet.find(rule.substr(0, arrow));
    if (!lhs)
      throw TextParseError("morphism rule for unknown letter: " + std::string(rule));
    if (images[*lhs])
      throw TextParseError("duplicate morphism rule for letter " +
                           alphabet.symbol(*lhs));
    std::string_view rhs = rule.substr(arrow + 2);
    images[*lhs] = alphabet.single_char() ? Word::parse(alphabet, rhs)
                                          : Word::parse_tokens(alphabet, rhs);
    if (pos > text.size()) break;
  }
  std::vector<Word> complete;
  complete.reserve(images.size());
  for (std::size_t a = 0; a < images.size(); ++a) {
    if (!images[a])
      throw TextParseError("no morphism rule for letter " +
                           alphabet.symbol(static_cast<Letter>(a)));
    complete.push_back(std::move(*images[a]));
  }
  return Morphism(alphabet, std::move(complete));
}

const Word& Morphism::image(Letter a) const {
  if (a >= images_.size()) throw Error("letter id outside the alphabet");
  return images_[a];
}

Word Morphism::apply(const Word& w) const {
  if (!(w.alphabet() == alphabet_))
    throw AlphabetMismatchError("word and morphism use different alphabets");
  std::size_t total = 0;
  for (Letter a : w.letters()) total += images_[a].size();
  std::vector<Letter> out;
  out.reserve(total);
  for (Letter a : w.letters()) {
    auto im = images_[a].letters();
    out.insert(out.end(), im.begin(), im.end());
  }
  return Word(alphabet_, std::move(out));
}

bool Morphism::prolongable_at(Letter seed) const {
  if (seed >= images_.size()) return false;
  const Word& im = images_[seed];
  return !im.empty() && im.letters()[0] == seed;
}

namespace {

Morphism make_builtin(std::size_t sigma, std::initializer_list<const char*> images) {
  Alphabet alphabet = Alphabet::digits(sigma);
  std::vector<Word> words;
  for (const char* im : images) words.push_back(Word::parse(alphabet, im));
  return Morphism(alphabet, std::move(words));
}

}  // namespace

Morphism builtin_morphism(BuiltinMorphism which) {
  switch (which) {
    case BuiltinMorphism::leech_l:
      return make_builtin(3, {"0121021201210", "1202102012021", "2010210120102"});
    case BuiltinMorphism::dekking_d3:
      return make_builtin(3, {"0012", "112", "022"});
    case BuiltinMorphism::dekking_d4:
      return make_builtin(2, {"011", "0001"});
    case BuiltinMorphism::tm_sep_t:
      return make_builtin(3, {"021", "120", "2"});
    case BuiltinMorphism::thue_morse:
      return make_builtin(2, {"01", "10"});
  }
  throw UnknownNameError("unhandled builtin morphism");
}

Morphism builtin_morphism(std::string_view name) {
  if (name == "leech_l") return builtin_morphism(BuiltinMorphism::leech_l);
  if (name == "dekking_d3") return builtin_morphism(BuiltinMorphism::dekking_d3);
  if (name == "dekking_d4") return builtin_morphism(BuiltinMorphism::dekking_d4);
  if (name == "tm_sep_t") return builtin_morphism(BuiltinMorphism::tm_sep_t);
  if (name == "thue_morse") return builtin_morphism(BuiltinMorphism::thue_morse);
  throw UnknownNameError("unknown builtin morphism '" + std::string(name) + "'");
}

std::vector<std::string_view> builtin_morphism_names() {
  return {"leech_l", "dekking_d3", "dekking_d4", "tm_sep_t", "thue_morse"};
}

Word fixed_point_prefix(const Morphism& h, Letter seed, std::size_t min_len) {
  if (min_len == 0) throw Error("prefix length must be positive");
  if (seed >= h.alphabet().size()) throw Error("seed letter outside the alphabet");
  if (!h.prolongable_at(seed))
    throw NotProlongableError("image of the seed must be nonempty and start with it");
  Word w(h.alphabet(), {seed});
  while (w.size() < min_len) {
    Word next = h.apply(w);
    if (next.size() <= w.size())
      throw NotProlongableError("morphism iteration stopped growing at length " +
                                std::to_string(w.size()));
    w = std::move(next);
  }
  return w;
}

}  // namespace ppfree
