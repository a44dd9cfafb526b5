#include "ppfree/involution.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace ppfree {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i])))
      return false;
  return true;
}

}  // namespace

Involution::Involution(Alphabet alphabet, std::vector<Letter> table)
    : alphabet_(std::move(alphabet)), table_(std::move(table)) {}

Involution Involution::mirror(Alphabet alphabet) {
  std::vector<Letter> table(alphabet.size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = static_cast<Letter>(i);
  return Involution(std::move(alphabet), std::move(table));
}

Involution Involution::make(Alphabet alphabet, std::vector<Letter> letter_map) {
  const std::size_t n = alphabet.size();
  if (letter_map.size() != n)
    throw NotPermutationError("letter map size differs from the alphabet size");
  std::vector<bool> seen(n, false);
  for (Letter image : letter_map) {
    if (image >= n) throw NotPermutationError("letter map image outside the alphabet");
    if (seen[image]) throw NotPermutationError("letter map repeats an image");
    seen[image] = true;
  }
  for (std::size_t a = 0; a < n; ++a)
    if (letter_map[letter_map[a]] != a)
      throw NotInvolutiveError("letter map composed with itself is not the identity");
  return Involution(std::move(alphabet), std::move(letter_map));
}

Involution Involution::from_pairs(Alphabet alphabet,
                                  std::span<const std::pair<Letter, Letter>> pairs) {
  std::vector<Letter> table(alphabet.size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = static_cast<Letter>(i);
  for (auto [a, b] : pairs) {
    if (a >= table.size() || b >= table.size())
      throw NotPermutationError("transposition letter outside the alphabet");
    if (a == b) throw NotPermutationError("transposition of a letter with itself");
    if (table[a] != a || table[b] != b)
      throw NotPermutationError("transpositions overlap");
    table[a] = b;
    table[b] = a;
  }
  return Involution(std::move(alphabet), std::move(table));
}

bool Involution::is_mirror() const {
  for (std::size_t a = 0; a < table_.size(); ++a)
    if (table_[a] != a) return false;
  return true;
}

Word Involution::apply(const Word& w) const {
  if (!(w.alphabet() == alphabet_))
    throw AlphabetMismatchError("word and involution use different alphabets");
  auto in = w.letters();
  std::vector<Letter> out(in.size());
  for (std::size_t t = 0; t < in.size(); ++t) out[t] = table_[in[in.size() - 1 - t]];
  return Word(alphabet_, std::move(out));
}

Decomposition Involution::decompose() const {
  Decomposition d;
  for (std::size_t a = 0; a < table_.size(); ++a)
    if (table_[a] > a)
      d.transpositions.emplace_back(static_cast<Letter>(a), table_[a]);
  return d;
}

Classification Involution::classify() const {
  Classification c;
  for (std::size_t a = 0; a < table_.size(); ++a) {
    if (table_[a] == a)
      c.idt.push_back(static_cast<Letter>(a));
    else if (table_[a] > a)
      c.trn.push_back(static_cast<Letter>(a));
  }
  return c;
}

Involution recompose(const Alphabet& alphabet, const Decomposition& decomposition) {
  return Involution::from_pairs(alphabet, decomposition.transpositions);
}

Involution parse_involution(const Alphabet& alphabet, std::string_view text) {
  std::string_view s = trim(text);
  if (iequals(s, "mir")) return Involution::mirror(alphabet);

  std::vector<std::pair<Letter, Letter>> pairs;
  std::vector<bool> used(alphabet.size(), false);
  auto fail = [&](const std::string& why) -> Involution {
    throw TextParseError("bad involution '" + std::string(text) + "': " + why);
  };

  auto take_letter = [&](std::string_view& rest, char stop) {
    std::size_t cut = rest.find(stop);
    if (cut == std::string_view::npos)
      fail(std::string("expected '") + stop + "'");
    std::string_view token = trim(rest.substr(0, cut));
    rest.remove_prefix(cut + 1);
    auto id = alphabet.find(token);
    if (!id) fail("letter '" + std::string(token) + "' not in alphabet");
    return *id;
  };

  while (true) {
    s = trim(s);
    if (s.empty() || s.front() != '(') return fail("expected '('");
    s.remove_prefix(1);
    Letter a = take_letter(s, ',');
    Letter b = take_letter(s, ')');
    if (a == b) return fail("pair maps a letter to itself");
    if (used[a] || used[b]) return fail("pairs are not disjoint");
    used[a] = used[b] = true;
    pairs.emplace_back(std::min(a, b), std::max(a, b));

    s = trim(s);
    if (!s.empty() && s.front() == ',') {
      s.remove_prefix(1);
      continue;
    }
    if (!s.empty() && s.front() == '.') {
      s.remove_prefix(1);
      if (!iequals(trim(s), "mir")) return fail("expected the mir keyword");
      break;
    }
    return fail("expected ',' or '.mir'");
  }
  return Involution::from_pairs(alphabet, pairs);
}

std::string format_involution(const Involution& involution) {
  auto d = involution.decompose();
  if (d.transpositions.empty()) return "mir";
  std::string out;
  for (std::size_t i = 0; i < d.transpositions.size(); ++i) {
    if (i) out += ',';
    out += '(';
    out += involution.alphabet().symbol(d.transpositions[i].first);
    out += ',';
    out += involution.alphabet().symbol(d.transpositions[i].second);
    out += ')';
  }
  out += ".mir";
  return out;
}

}  // namespace ppfree
