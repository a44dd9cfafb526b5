#include <doctest.h>

#include <random>
#include <stdexcept>

#include "ppfree/alphabet.hpp"
#include "ppfree/involution.hpp"

using namespace ppfree;

TEST_CASE("alphabet presets and lookup") {
  Alphabet ternary = Alphabet::digits(3);
  CHECK(ternary.size() == 3);
  CHECK(ternary.symbol(0) == "0");
  CHECK(ternary.symbol(2) == "2");
  CHECK(ternary.find("1") == Letter{1});
  CHECK(!ternary.find("3").has_value());
  CHECK(ternary.single_char());

  Alphabet dna = Alphabet::dna();
  CHECK(dna.size() == 4);
  CHECK(dna.symbol(0) == "A");
  CHECK(dna.symbol(3) == "T");
  CHECK(dna == Alphabet({"A", "C", "G", "T"}));
  CHECK(!(dna == ternary));
}

TEST_CASE("alphabet rejects bad symbol lists") {
  CHECK_THROWS_AS(Alphabet(std::vector<std::string>{}), Error);
  CHECK_THROWS_AS(Alphabet({"a", "a"}), Error);
  CHECK_THROWS_AS(Alphabet({""}), Error);
  CHECK_THROWS_AS(Alphabet({"a b"}), Error);
  CHECK_THROWS_AS(Alphabet({"a,"}), Error);
  CHECK_THROWS_AS(Alphabet({"("}), Error);
  std::vector<std::string> too_many;
  for (int i = 0; i < 256; ++i) too_many.push_back("s" + std::to_string(i));
  CHECK_THROWS_AS(Alphabet{too_many}, Error);
  CHECK_NOTHROW(Alphabet{std::vector<std::string>(too_many.begin(),
                                                  too_many.begin() + 255)});
}

TEST_CASE("word parse, access, prefix") {
  Alphabet a = Alphabet::digits(3);
  Word w = Word::parse(a, "0212021");
  CHECK(w.size() == 7);
  CHECK(w.at(1) == 0);
  CHECK(w.at(7) == 1);
  CHECK_THROWS_AS(w.at(0), std::out_of_range);
  CHECK_THROWS_AS(w.at(8), std::out_of_range);
  CHECK(w.str() == "0212021");
  CHECK(w.prefix(3).str() == "021");
  CHECK(w.prefix(0).empty());
  CHECK(Word::empty(a).size() == 0);
  CHECK_THROWS_AS(Word::parse(a, "013"), TextParseError);
}

TEST_CASE("word token parsing handles multi-character symbols") {
  Alphabet a({"aa", "bb"});
  CHECK(!a.single_char());
  Word w = Word::parse_tokens(a, " aa bb\naa ");
  CHECK(w.size() == 3);
  CHECK(w.str() == "aa bb aa");
  CHECK_THROWS_AS(Word::parse(a, "aabb"), TextParseError);
  CHECK_THROWS_AS(Word::parse_tokens(a, "aa cc"), TextParseError);
}

TEST_CASE("word ordering is lexicographic by letter id") {
  Alphabet a = Alphabet::digits(2);
  CHECK(Word::parse(a, "01") < Word::parse(a, "1"));
  CHECK(Word::parse(a, "0") < Word::parse(a, "00"));
  CHECK(!(Word::parse(a, "10") < Word::parse(a, "10")));
}

TEST_CASE("mirror involution fixes letters and reverses") {
  Alphabet a = Alphabet::digits(3);
  Involution mir = Involution::mirror(a);
  CHECK(mir.is_mirror());
  CHECK(mir.map(0) == 0);
  CHECK(mir.apply(Word::parse(a, "012")).str() == "210");
  CHECK(mir.apply(Word::empty(a)).empty());
}

TEST_CASE("watson-crick involution maps and reverses") {
  Alphabet dna = Alphabet::dna();
  Involution wc = parse_involution(dna, "(A,T),(C,G).mir");
  CHECK(!wc.is_mirror());
  CHECK(wc.apply(Word::parse(dna, "ACG")).str() == "CGT");
  CHECK(wc.apply(Word::parse(dna, "A")).str() == "T");
}

TEST_CASE("involution validation") {
  Alphabet a = Alphabet::digits(3);
  CHECK_THROWS_AS(Involution::make(a, {0, 0, 2}), NotPermutationError);
  CHECK_THROWS_AS(Involution::make(a, {1, 2, 0}), NotInvolutiveError);
  CHECK_THROWS_AS(Involution::make(a, {0, 1}), Error);
  CHECK_NOTHROW(Involution::make(a, {1, 0, 2}));
  std::vector<std::pair<Letter, Letter>> overlapping{{0, 1}, {1, 2}};
  CHECK_THROWS_AS(Involution::from_pairs(a, overlapping), Error);
}

TEST_CASE("classification splits letters into fixed and swapped") {
  Alphabet a = Alphabet::digits(3);
  Involution phi = parse_involution(a, "(0,1).mir");
  Classification c = phi.classify();
  CHECK(c.idt == std::vector<Letter>{2});
  CHECK(c.trn == std::vector<Letter>{0});
  CHECK(c.idt.size() + 2 * c.trn.size() == a.size());

  Classification mir_c = Involution::mirror(a).classify();
  CHECK(mir_c.idt == std::vector<Letter>{0, 1, 2});
  CHECK(mir_c.trn.empty());
}

TEST_CASE("decompose and recompose invert each other") {
  Alphabet dna = Alphabet::dna();
  Involution wc = parse_involution(dna, "(A,T),(C,G).mir");
  Decomposition d = wc.decompose();
  REQUIRE(d.transpositions.size() == 2);
  CHECK(d.transpositions[0] == std::pair<Letter, Letter>{0, 3});
  CHECK(d.transpositions[1] == std::pair<Letter, Letter>{1, 2});
  CHECK(recompose(dna, d) == wc);
  CHECK(recompose(dna, Decomposition{}) == Involution::mirror(dna));
}

TEST_CASE("involution text round trip") {
  Alphabet a = Alphabet::digits(4);
  for (const char* text : {"mir", "(0,1).mir", "(0,1),(2,3).mir", "(0,3).mir"}) {
    Involution phi = parse_involution(a, text);
    CHECK(format_involution(phi) == text);
    CHECK(parse_involution(a, format_involution(phi)) == phi);
  }
  CHECK(parse_involution(a, " MIR ") == Involution::mirror(a));
  CHECK(parse_involution(a, "(1,0).Mir") == parse_involution(a, "(0,1).mir"));
}

TEST_CASE("involution parse errors") {
  Alphabet a = Alphabet::digits(3);
  CHECK_THROWS_AS(parse_involution(a, ""), TextParseError);
  CHECK_THROWS_AS(parse_involution(a, "(0,1)"), TextParseError);
  CHECK_THROWS_AS(parse_involution(a, "(0,1).rev"), TextParseError);
  CHECK_THROWS_AS(parse_involution(a, "(0,0).mir"), TextParseError);
  CHECK_THROWS_AS(parse_involution(a, "(0,5).mir"), TextParseError);
  CHECK_THROWS_AS(parse_involution(a, "(0,1),(1,2).mir"), TextParseError);
  CHECK_THROWS_AS(parse_involution(a, "(0 1).mir"), TextParseError);
}

TEST_CASE("antimorphism law on random words") {
  std::mt19937 rng(20240817);
  Alphabet a = Alphabet::digits(4);
  Involution phi = parse_involution(a, "(0,2),(1,3).mir");
  std::uniform_int_distribution<int> len(0, 24);
  std::uniform_int_distribution<int> pick(0, 3);
  for (int it = 0; it < 300; ++it) {
    std::vector<Letter> u(len(rng)), v(len(rng));
    for (auto& x : u) x = static_cast<Letter>(pick(rng));
    for (auto& x : v) x = static_cast<Letter>(pick(rng));
    Word wu(a, u), wv(a, v);
    std::vector<Letter> uv(u);
    uv.insert(uv.end(), v.begin(), v.end());
    Word wuv(a, uv);

    Word lhs = phi.apply(wuv);
    Word rv = phi.apply(wv), ru = phi.apply(wu);
    std::vector<Letter> rhs(rv.letters().begin(), rv.letters().end());
    rhs.insert(rhs.end(), ru.letters().begin(), ru.letters().end());
    CHECK(lhs == Word(a, rhs));
    CHECK(phi.apply(lhs) == wuv);
  }
}
