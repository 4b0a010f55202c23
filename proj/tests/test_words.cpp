#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <random>
#include <sstream>

#include "casg/errors.hpp"
#include "casg/word.hpp"

using namespace casg;

namespace {

const GroupPresentation& F = GroupPresentation::free_rank2();
const GroupPresentation& S = GroupPresentation::genus2();

Word random_word(const GroupPresentation& G, std::mt19937& rng, int len) {
  std::uniform_int_distribution<int> gen(0, G.rank() - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<Letter> ls;
  for (int i = 0; i < len; ++i) ls.push_back({gen(rng), sign(rng) ? 1 : -1});
  return Word(G, std::move(ls));
}

Word random_reduced_word(const GroupPresentation& G, std::mt19937& rng, int len) {
  std::uniform_int_distribution<int> gen(0, G.rank() - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<Letter> ls;
  while (static_cast<int>(ls.size()) < len) {
    Letter l{gen(rng), sign(rng) ? 1 : -1};
    if (!ls.empty() && ls.back().gen == l.gen && ls.back().sign == -l.sign) continue;
    ls.push_back(l);
  }
  return Word(G, std::move(ls));
}

std::string data_file(const std::string& name) {
  return std::string(CASG_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("free reduction") {
  CHECK(F.print(F.parse("A*A^-1*B")) == "B");
  CHECK(F.print(F.parse("B*A*B^-1*A^-1")) == "B*A*B^-1*A^-1");
  CHECK(F.parse("1").empty());
  CHECK(F.parse("").empty());

  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    Word w = random_word(F, rng, 30);
    // construction reduces; reducing again changes nothing
    CHECK(Word(F, w.letters()) == w);
  }
}

TEST_CASE("group laws under concat and invert") {
  CHECK(concat(Word::gen(F, 0), Word::gen(F, 0, -1)).empty());
  CHECK(F.print(invert(F.parse("A*B"))) == "B^-1*A^-1");
  CHECK(S.print(cyclic_reduce(S.parse("A*B*A^-1"))) == "B");

  std::mt19937 rng(12);
  for (int i = 0; i < 200; ++i) {
    Word u = random_word(F, rng, 12), v = random_word(F, rng, 12),
         w = random_word(F, rng, 12);
    CHECK((u * v) * w == u * (v * w));
    CHECK((u * u.inverse()).empty());
    CHECK((u.inverse() * u).empty());
  }
}

TEST_CASE("alphabet mismatch is rejected") {
  CHECK_THROWS_AS(F.parse("A") * S.parse("C"), AlphabetError);
  CHECK_THROWS_AS(F.parse("C"), ParseError);
}

TEST_CASE("apply_letter_map is the homomorphic extension") {
  // conjugation by A on B
  std::vector<Word> conj = {F.parse("A"), F.parse("A*B*A^-1")};
  CHECK(F.print(apply_letter_map(conj, F.parse("B"))) == "A*B*A^-1");

  // a -> a, b -> b^2 applied to the kernel witness word
  const GroupPresentation& L = GroupPresentation::bs_letters();
  std::vector<Word> rho = {L.parse("a"), L.parse("b^2")};
  Word gamma = L.parse("b^-1*a*b*a^-1*b^-1*a*b*a^-1*b^-1");
  CHECK(L.print(apply_letter_map(rho, gamma)) ==
        "b^-2*a*b^2*a^-1*b^-2*a*b^2*a^-1*b^-2");

  // identity map
  std::vector<Word> id = {F.parse("A"), F.parse("B")};
  std::mt19937 rng(13);
  for (int i = 0; i < 50; ++i) {
    Word w = random_word(F, rng, 15);
    CHECK(apply_letter_map(id, w) == w);
    Word u = random_word(F, rng, 10), v = random_word(F, rng, 10);
    CHECK(apply_letter_map(conj, u * v) ==
          apply_letter_map(conj, u) * apply_letter_map(conj, v));
  }

  std::vector<Word> partial = {F.parse("A")};
  CHECK_THROWS_AS(apply_letter_map(partial, F.parse("B")), AlphabetError);
}

TEST_CASE("triviality: free case") {
  CHECK(is_trivial(F, F.parse("1")));
  CHECK(is_trivial(F, F.parse("A*B*B^-1*A^-1")));
  CHECK_FALSE(is_trivial(F, F.parse("A")));
}

TEST_CASE("triviality: Dehn's algorithm on the genus-2 relator") {
  Word rel = S.parse("A*B*A^-1*B^-1*C*D*C^-1*D^-1");
  CHECK(is_trivial(S, rel));
  CHECK_FALSE(is_trivial(S, S.parse("C")));

  // conjugates of the relator die
  std::mt19937 rng(14);
  for (int i = 0; i < 100; ++i) {
    Word w = random_word(S, rng, 4);
    CHECK(is_trivial(S, w * rel * w.inverse()));
  }
}

TEST_CASE("Dehn soundness cross-check, both directions") {
  Word rel = S.relator();
  std::mt19937 rng(15);
  std::uniform_int_distribution<int> count(1, 4), clen(0, 4), coin(0, 1);

  // products of conjugates of the relator are trivial
  for (int i = 0; i < 60; ++i) {
    Word prod = Word::identity(S);
    int k = count(rng);
    for (int j = 0; j < k; ++j) {
      Word c = random_word(S, rng, clen(rng));
      Word r = coin(rng) ? rel : rel.inverse();
      prod = prod * (c * r * c.inverse());
    }
    CHECK(is_trivial(S, prod));
  }

  // words with nonzero abelianization are nontrivial
  int tested = 0;
  while (tested < 60) {
    Word w = random_reduced_word(S, rng, 1 + (tested % 8));
    int ab[4] = {0, 0, 0, 0};
    for (const Letter& l : w.letters()) ab[l.gen] += l.sign;
    if (ab[0] == 0 && ab[1] == 0 && ab[2] == 0 && ab[3] == 0) continue;
    CHECK_FALSE(is_trivial(S, w));
    ++tested;
  }
}

TEST_CASE("Dehn replacements only ever shorten") {
  std::mt19937 rng(16);
  for (int i = 0; i < 100; ++i) {
    Word w = random_word(S, rng, 40);
    CHECK(dehn_compact(w).size() <= w.size());
    // compaction preserves the group element
    CHECK(is_trivial(S, dehn_compact(w) * w.inverse()));
  }
}

TEST_CASE("words_equal") {
  CHECK(words_equal(F, F.parse("A*B"), F.parse("A*B")));
  CHECK_FALSE(words_equal(F, F.parse("B*A*B^-1*A^-1"), F.parse("A^3*B*A*B^-1*A^2")));
  std::mt19937 rng(17);
  Word w = random_word(S, rng, 6);
  CHECK(words_equal(S, w * S.relator() * w.inverse(), Word::identity(S)));
}

TEST_CASE("printer and parser round-trip") {
  std::mt19937 rng(18);
  for (int i = 0; i < 200; ++i) {
    Word w = random_word(S, rng, 25);
    CHECK(S.parse(S.print(w)) == w);
  }
  for (int i = 0; i < 50; ++i) {
    Word w = random_word(F, rng, 25);
    CHECK(F.parse(F.print(w)) == w);
  }
}

TEST_CASE("parses the bundled genus-2 image word verbatim") {
  std::ifstream in(data_file("word10_surface.txt"));
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  Word w = S.parse(ss.str());
  CHECK(w.size() == 99);  // parenthesized powers expand, then reduce a little
  CHECK(S.parse(S.print(w)) == w);
  // its abelianization: A and B cancel, C and D cancel; still nontrivial
  CHECK_FALSE(is_trivial(S, w * S.parse("C").inverse()));
}
