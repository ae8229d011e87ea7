#include <doctest.h>

#include <stdexcept>

#include <random>

#include "loops/conjugacy.hpp"

using namespace loops;

namespace {

Word W(const char* s) { return Word::parse(s); }

Word random_word(std::mt19937_64& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(0, 2 * rank - 1);
  std::vector<Letter> raw;
  int n = len(rng);
  for (int i = 0; i < n; ++i) {
    int g = gen(rng);
    raw.push_back(Letter{static_cast<std::uint16_t>(g / 2), g % 2 == 1});
  }
  return Word(raw);
}

}  // namespace

TEST_CASE("free_class canonical rotation") {
  CHECK(free_class(W("ba")).canonical.str() == "ab");
  CHECK(free_class(W("ba")) == free_class(W("ab")));
  FreeClass fc = free_class(W("abab"));
  CHECK(fc.canonical.str() == "abab");
  CHECK(fc.root.str() == "ab");
  CHECK(fc.exponent == 2);
  CHECK(free_class(W("aA")).is_trivial());
  CHECK(free_class(W("aA")).exponent == 0);
}

TEST_CASE("primitive_root") {
  auto rd = primitive_root(CyclicWord::from_cyclically_reduced(W("ababab")));
  CHECK(rd.root.str() == "ab");
  CHECK(rd.exponent == 3);
  rd = primitive_root(CyclicWord::from_cyclically_reduced(W("ab")));
  CHECK(rd.root.str() == "ab");
  CHECK(rd.exponent == 1);
  rd = primitive_root(CyclicWord::from_cyclically_reduced(W("aabaab")));
  CHECK(rd.root.str() == "aab");
  CHECK(rd.exponent == 2);
  // re-rooting the root yields exponent 1
  CHECK(primitive_root(rd.root).exponent == 1);
}

TEST_CASE("centralizer_generator") {
  CHECK(centralizer_generator(W("aa")).str() == "a");
  CHECK(centralizer_generator(W("baaB")).str() == "baB");
  CHECK(centralizer_generator(W("ab")).str() == "ab");
  CHECK_THROWS_WITH_AS(centralizer_generator(W("1")),
                       "trivial word has full-group centralizer",
                       std::invalid_argument);
}

TEST_CASE("centralizer law") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    Word w = random_word(rng, 2, 8);
    if (w.empty()) continue;
    Word s = centralizer_generator(w);
    for (int k = -5; k <= 5; ++k) {
      CHECK(conjugate(s.power(k), w) == w);
    }
  }
}

TEST_CASE("find_conjugator") {
  auto g = find_conjugator(W("ab"), W("ba"));
  REQUIRE(g.has_value());
  CHECK(conjugate(*g, W("ab")) == W("ba"));
  CHECK_FALSE(find_conjugator(W("a"), W("b")).has_value());
  g = find_conjugator(W("a"), W("a"));
  REQUIRE(g.has_value());
  CHECK(conjugate(*g, W("a")) == W("a"));
  // nontrivial words are never conjugate to their inverses
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    Word w = random_word(rng, 2, 8);
    if (w.empty()) continue;
    CHECK_FALSE(find_conjugator(w, w.inverse()).has_value());
  }
}

TEST_CASE("free_class conjugation invariance") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    Word w = random_word(rng, 3, 8);
    Word g = random_word(rng, 3, 6);
    CHECK(free_class(w) == free_class(conjugate(g, w)));
  }
}

TEST_CASE("simultaneous_conjugacy examples") {
  auto g = simultaneous_conjugacy(W("ab"), W("a"), W("ba"), W("baB"));
  REQUIRE(g.has_value());
  CHECK(conjugate(*g, W("ab")) == W("ba"));
  CHECK(conjugate(*g, W("a")) == W("baB"));

  // a^-1 carries ab to ba while fixing a
  g = simultaneous_conjugacy(W("ab"), W("a"), W("ba"), W("a"));
  REQUIRE(g.has_value());
  CHECK(conjugate(*g, W("ab")) == W("ba"));
  CHECK(conjugate(*g, W("a")) == W("a"));

  // Bab is conjugate to a but not over any conjugator taking ab to ba
  CHECK_FALSE(
      simultaneous_conjugacy(W("ab"), W("a"), W("ba"), W("Bab")).has_value());
  CHECK_FALSE(brute_force_simconj(W("ab"), W("a"), W("ba"), W("Bab"), 6)
                  .has_value());

  g = simultaneous_conjugacy(W("a"), W("b"), W("a"), W("b"));
  REQUIRE(g.has_value());
  CHECK(conjugate(*g, W("a")) == W("a"));
  CHECK(conjugate(*g, W("b")) == W("b"));

  CHECK_THROWS_AS(simultaneous_conjugacy(W("1"), W("a"), W("1"), W("a")),
                  std::invalid_argument);
}

TEST_CASE("brute_force_simconj examples") {
  auto g = brute_force_simconj(W("ab"), W("a"), W("ba"), W("baB"), 3);
  REQUIRE(g.has_value());
  CHECK(conjugate(*g, W("ab")) == W("ba"));
  CHECK(conjugate(*g, W("a")) == W("baB"));
  CHECK_FALSE(brute_force_simconj(W("a"), W("a"), W("a"), W("b"), 4)
                  .has_value());
}

TEST_CASE("simultaneous_conjugacy agrees with brute force") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 250; ++i) {
    Word u1 = random_word(rng, 2, 4);
    if (u1.empty()) continue;
    Word u2 = random_word(rng, 2, 4);
    Word v1 = random_word(rng, 2, 4);
    Word v2 = random_word(rng, 2, 4);
    auto fast = simultaneous_conjugacy(u1, u2, v1, v2);
    auto slow = brute_force_simconj(u1, u2, v1, v2, 6);
    CHECK(fast.has_value() == slow.has_value());
    if (fast) {
      CHECK(conjugate(*fast, u1) == v1);
      CHECK(conjugate(*fast, u2) == v2);
    }
  }
}
