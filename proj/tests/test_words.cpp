#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <pav/words.hpp>

#include "support/naive_oracle.hpp"
#include "support/random_cases.hpp"

using namespace pav;
using testsupport::naive_instance_oracle;
using testsupport::random_pattern;
using testsupport::random_word;

TEST_CASE("make_pattern numbers variables in first-appearance order") {
  const Pattern p = make_pattern("xyx");
  CHECK(p.alpha() == 2);
  CHECK(p.length() == 3);
  CHECK(p.symbols() == std::vector<int>{0, 1, 0});
  CHECK(p.variable_name(0) == 'x');
  CHECK(p.variable_name(1) == 'y');

  const Pattern q = make_pattern("xx");
  CHECK(q.alpha() == 1);
  CHECK(q.symbols() == std::vector<int>{0, 0});
}

TEST_CASE("make_pattern rejects bad text") {
  CHECK_THROWS_AS(make_pattern(""), EmptyPatternError);
  CHECK_THROWS_AS(make_pattern("x1x"), ParseError);
  CHECK_THROWS_AS(make_pattern("xYx"), ParseError);
}

TEST_CASE("substitute concatenates images in pattern order") {
  const Pattern u = make_pattern("xyx");
  const Substitution s(u, {{'x', Word::from_ascii("ab")}, {'y', Word::from_ascii("c")}});
  CHECK(substitute(s, u) == Word::from_ascii("abcab"));

  const Pattern sq = make_pattern("xx");
  const Substitution s2(sq, {{'x', Word::from_ascii("a")}});
  CHECK(substitute(s2, sq) == Word::from_ascii("aa"));

  const Substitution s3(u, {{'x', Word::over_xi({1})}, {'y', Word::over_xi({2})}});
  CHECK(substitute(s3, u) == Word::over_xi({1, 2, 1}));
}

TEST_CASE("substitution construction enforces totality and nonempty images") {
  const Pattern u = make_pattern("xyx");
  CHECK_THROWS_AS(Substitution(u, {{'x', Word::from_ascii("a")}}), DomainError);
  CHECK_THROWS_AS(
      Substitution(u, {{'x', Word::from_ascii("a")}, {'y', Word::from_ascii("")}}),
      DomainError);
  CHECK_THROWS_AS(Substitution(u, std::vector<Word>{Word::from_ascii("a")}), DomainError);
}

TEST_CASE("word constructors validate letter ranges") {
  CHECK_THROWS_AS(Word::over_x({0}, 8), DomainError);
  CHECK_THROWS_AS(Word::over_x({9}, 8), DomainError);
  CHECK_THROWS_AS(Word::over_xi({0}), DomainError);
  CHECK(Word::over_x({8}, 8).letter(0) == 8);
}

TEST_CASE("find_instance canonical cases") {
  const Pattern xx = make_pattern("xx");

  SUBCASE("smallest square") {
    const auto occ = find_instance(Word::from_ascii("aa"), xx);
    REQUIRE(occ.has_value());
    CHECK(occ->start == 1);
    CHECK(occ->span == 2);
    CHECK(occ->assignment.image(0) == Word::from_ascii("a"));
  }

  SUBCASE("square-free host") {
    CHECK(!find_instance(Word::from_ascii("abcba"), xx).has_value());
  }

  SUBCASE("xyx inside Z_3") {
    const Word z3 = Word::over_xi({1, 2, 1, 3, 1, 2, 1});
    const auto occ = find_instance(z3, make_pattern("xyx"));
    REQUIRE(occ.has_value());
    CHECK(occ->start == 1);
    CHECK(occ->span == 3);
    CHECK(occ->assignment.image(0) == Word::over_xi({1}));
    CHECK(occ->assignment.image(1) == Word::over_xi({2}));
  }
}

TEST_CASE("avoids") {
  const Pattern xx = make_pattern("xx");
  CHECK(avoids(Word::from_ascii("abcba"), xx));
  CHECK(!avoids(Word::from_ascii("abab"), xx));
  CHECK(avoids(Word::from_ascii("a"), xx));
}

TEST_CASE("host guard and empty host") {
  const Pattern xx = make_pattern("xx");
  CHECK_THROWS_AS(find_instance(Word::from_ascii(""), xx), DomainError);

  SearchLimits tight;
  tight.max_host_length = 4;
  CHECK_THROWS_AS(find_instance(Word::from_ascii("abcde"), xx, tight), GuardError);

  std::vector<int> big(4097, 1);
  CHECK_THROWS_AS(find_instance(Word::over_x(std::move(big), 2), xx), GuardError);
}

TEST_CASE("very long patterns match without exhausting the call stack") {
  const std::size_t n = 200'000;
  const Word host = Word::over_x(std::vector<int>(n, 1), 1);
  const Pattern u = make_pattern(std::string(n, 'x'));
  SearchLimits limits;
  limits.max_host_length = n;
  const auto occ = find_instance(host, u, limits);
  REQUIRE(occ.has_value());
  CHECK(occ->start == 1);
  CHECK(occ->span == static_cast<int>(n));
  CHECK(occ->assignment.image(0) == Word::over_x({1}, 1));
}

TEST_CASE("zero budget is reported as exhaustion, not absence") {
  SearchLimits limits;
  limits.budget = std::chrono::milliseconds(0);
  CHECK_THROWS_AS(find_instance(Word::from_ascii("aa"), make_pattern("xx"), limits),
                  BudgetError);
}

TEST_CASE("naive oracle frozen cases") {
  const Pattern xx = make_pattern("xx");
  const auto direct = find_instance(Word::from_ascii("aa"), xx);
  const auto via_oracle = naive_instance_oracle(Word::from_ascii("aa"), xx, 2);
  REQUIRE(via_oracle.has_value());
  CHECK(*via_oracle == *direct);

  CHECK(!naive_instance_oracle(Word::from_ascii("abcba"), xx, 2).has_value());

  const auto aba = naive_instance_oracle(Word::from_ascii("aba"), make_pattern("xyx"), 3);
  REQUIRE(aba.has_value());
  CHECK(aba->start == 1);
  CHECK(aba->assignment.image(0) == Word::from_ascii("a"));
  CHECK(aba->assignment.image(1) == Word::from_ascii("b"));
}

TEST_CASE("naive oracle rejects inputs beyond its scale") {
  const Pattern xx = make_pattern("xx");
  std::vector<int> long_host(17, 1);
  CHECK_THROWS_AS(naive_instance_oracle(Word::over_x(std::move(long_host), 2), xx, 2),
                  DomainError);
  CHECK_THROWS_AS(naive_instance_oracle(Word::from_ascii("aa"), make_pattern("wxyz"), 2),
                  DomainError);
  CHECK_THROWS_AS(naive_instance_oracle(Word::from_ascii("aa"), xx, 3), DomainError);
}

TEST_CASE("property: matcher agrees with the oracle on 1000 random cases") {
  std::mt19937 rng(20240817);
  int found = 0;
  for (int i = 0; i < 1000; ++i) {
    const Word w = random_word(rng);
    const Pattern u = random_pattern(rng);
    const auto fast = find_instance(w, u);
    const auto slow = naive_instance_oracle(w, u, static_cast<int>(w.size()));
    REQUIRE(fast.has_value() == slow.has_value());
    if (fast) {
      REQUIRE(*fast == *slow);
      ++found;
    }
  }
  // Both outcomes must actually be exercised.
  CHECK(found > 100);
  CHECK(found < 900);
}

TEST_CASE("property: occurrences round-trip and respect length bounds") {
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    const Word w = random_word(rng);
    const Pattern u = random_pattern(rng);
    const auto occ = find_instance(w, u);
    if (!occ) continue;
    CHECK(occ->start >= 1);
    CHECK(occ->span >= static_cast<int>(u.length()));
    CHECK(static_cast<std::size_t>(occ->start - 1 + occ->span) <= w.size());
    for (int v = 0; v < u.alpha(); ++v) CHECK(occ->assignment.image(v).size() >= 1);
    CHECK(substitute(occ->assignment, u) ==
          w.factor(static_cast<std::size_t>(occ->start - 1),
                   static_cast<std::size_t>(occ->span)));
  }
}

TEST_CASE("property: containment is monotone under extension") {
  std::mt19937 rng(99);
  for (int i = 0; i < 300; ++i) {
    const Word w = random_word(rng, 8, 2);
    const Pattern u = random_pattern(rng, 3, 2);
    if (avoids(w, u)) continue;
    // Embed w into a longer host; the instance must survive.
    const Word prefix = random_word(rng, 4, 2);
    const Word suffix = random_word(rng, 4, 2);
    std::vector<int> letters = prefix.letters();
    letters.insert(letters.end(), w.letters().begin(), w.letters().end());
    letters.insert(letters.end(), suffix.letters().begin(), suffix.letters().end());
    CHECK(!avoids(Word::over_x(std::move(letters), 2), u));
  }
}

TEST_CASE("property: identical inputs give identical results") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const Word w = random_word(rng);
    const Pattern u = random_pattern(rng);
    const auto first = find_instance(w, u);
    const auto second = find_instance(w, u);
    REQUIRE(first.has_value() == second.has_value());
    if (first) CHECK(*first == *second);
  }
}
