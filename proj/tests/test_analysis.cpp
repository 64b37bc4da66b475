#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include <pav/analysis.hpp>
#include <pav/words.hpp>

#include "support/random_cases.hpp"

using namespace pav;

namespace {

bool contains_word(const std::vector<Word>& words, const Word& w) {
  return std::find(words.begin(), words.end(), w) != words.end();
}

}  // namespace

TEST_CASE("basic words at k=8") {
  const BlockSystem system = build_blocks(8);
  const std::vector<Word> basics = basic_words(system);

  // x2 x5 x4 is a factor of a_1 = x3 x2 x5 x4 x7 x6 x1 x8 with two evens.
  CHECK(contains_word(basics, Word::over_x({2, 5, 4}, 8)));
  // A lone even letter is not basic.
  CHECK(!contains_word(basics, Word::over_x({2}, 8)));

  SUBCASE("every basic word has length >= 3") {
    for (const Word& b : basics) CHECK(b.size() >= 3);
  }

  SUBCASE("every basic word really has two even letters and a home block") {
    for (const Word& b : basics) {
      const auto evens = std::count_if(b.letters().begin(), b.letters().end(),
                                       [](int v) { return v % 2 == 0; });
      CHECK(evens >= 2);
    }
  }
}

TEST_CASE("lemma1 checks pass for the real systems") {
  for (int k : {8, 12}) {
    const BlockSystem system = build_blocks(k);
    CHECK(check_lemma1_a(system).pass);
    CHECK(check_lemma1_b(system).pass);
    CHECK(check_lemma1_c(system).pass);
    CHECK(check_c_remark(system).pass);
  }
}

TEST_CASE("a duplicated block breaks uniqueness but not the prefix property") {
  BlockSystem forged = build_blocks(8);
  forged.blocks[1] = forged.blocks[0];

  const PropertyReport a = check_lemma1_a(forged);
  CHECK(!a.pass);
  REQUIRE(a.words.size() == 1);
  // The reported word must be a factor of both named blocks.
  const auto& shared = a.words[0].second.letters();
  for (const auto& [name, idx] : a.values) {
    const auto& block = forged.blocks[static_cast<std::size_t>(idx - 1)].letters();
    CHECK(std::search(block.begin(), block.end(), shared.begin(), shared.end()) !=
          block.end());
  }

  // Identical blocks are allowed by the prefix implication.
  CHECK(check_lemma1_b(forged).pass);
}

TEST_CASE("distinct blocks sharing a length-2 prefix fail lemma1_b") {
  BlockSystem forged = build_blocks(8);
  // Give block 2 the first two letters of block 1 but keep a different tail.
  std::vector<int> letters = forged.blocks[0].letters();
  std::swap(letters[2], letters[3]);
  forged.blocks[1] = Word::over_x(letters, 8);
  CHECK(!check_lemma1_b(forged).pass);
}

TEST_CASE("x_k never precedes another letter inside a block") {
  for (int k : {8, 12}) {
    const BlockSystem system = build_blocks(k);
    for (int next = 1; next < k; next += 2) {
      const std::vector<int> straddle{k, next};
      for (const Word& block : system.blocks) {
        const auto& letters = block.letters();
        CHECK(std::search(letters.begin(), letters.end(), straddle.begin(),
                          straddle.end()) == letters.end());
      }
    }
  }
}

TEST_CASE("square-free checker") {
  SUBCASE("abab fails with D=ab at 1") {
    const PropertyReport r = check_square_free(Word::from_ascii("abab"));
    REQUIRE(!r.pass);
    REQUIRE(r.words.size() == 1);
    CHECK(r.words[0].second == Word::from_ascii("ab"));
    REQUIRE(r.values.size() == 1);
    CHECK(r.values[0].second == 1);
  }

  SUBCASE("abcab passes") { CHECK(check_square_free(Word::from_ascii("abcab")).pass); }

  SUBCASE("J_3 at k=8 is square-free") {
    const BlockSystem system = build_blocks(8);
    CHECK(check_square_free(j_word(system, 3).word).pass);
  }

  SUBCASE("guard rejects oversized input") {
    CHECK_THROWS_AS(check_square_free(Word::from_ascii("abc"), 2), GuardError);
  }
}

TEST_CASE("square-free agrees with the matcher route on random words") {
  std::mt19937 rng(424242);
  const Pattern xx = make_pattern("xx");
  for (int i = 0; i < 400; ++i) {
    const Word w = testsupport::random_word(rng);
    CHECK(check_square_free(w).pass == avoids(w, xx));
  }
}

TEST_CASE("even surplus") {
  const BlockSystem k8 = build_blocks(8);
  CHECK(check_even_surplus(k8, 2).pass);
  CHECK(check_even_surplus(k8, 3).pass);
  CHECK(!check_even_surplus(k8, 4).pass);  // 4 even letters < 5
  CHECK(check_even_surplus(build_blocks(12), 4).pass);
}

TEST_CASE("a class-violating block fails the C remark") {
  BlockSystem forged = build_blocks(8);
  std::vector<int> letters = forged.blocks[0].letters();
  std::swap(letters[0], letters[1]);  // odd letter into an even slot
  forged.blocks[0] = Word::over_x(letters, 8);
  const PropertyReport r = check_c_remark(forged);
  CHECK(!r.pass);
  CHECK(!r.words.empty());
}

TEST_CASE("reports are reproducible") {
  const BlockSystem system = build_blocks(8);
  const PropertyReport first = check_lemma1_c(system);
  const PropertyReport second = check_lemma1_c(system);
  CHECK(first.pass == second.pass);
  CHECK(first.instances == second.instances);
  CHECK(first.detail == second.detail);
}
