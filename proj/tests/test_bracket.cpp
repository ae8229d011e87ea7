#include <doctest.h>

#include <stdexcept>

#include <cstdlib>
#include <random>

#include "loops/bracket.hpp"

using namespace loops;

namespace {

Word W(const char* s) { return Word::parse(s); }
FreeClass F(const char* s) { return free_class(Word::parse(s)); }

// The four signed one-chord terms of the bundled rank-2 example, listed in
// the order of the drawn intersection points. Terms 3 and 4 differ by a
// simultaneous conjugation and cancel.
std::vector<ChordTerm> example_terms() {
  return {ChordTerm{+1, W("BBa"), W("aB")}, ChordTerm{-1, W("aBB"), W("Ba")},
          ChordTerm{-1, W("aBB"), W("aB")}, ChordTerm{+1, W("BaB"), W("aB")}};
}

FreeClass random_class(std::mt19937_64& rng, int rank, int max_root_len,
                       int max_exp) {
  std::uniform_int_distribution<int> len(1, max_root_len);
  std::uniform_int_distribution<int> gen(0, 2 * rank - 1);
  std::uniform_int_distribution<int> exp(1, max_exp);
  for (;;) {
    std::vector<Letter> raw;
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
      int g = gen(rng);
      raw.push_back(Letter{static_cast<std::uint16_t>(g / 2), g % 2 == 1});
    }
    Word root(raw);
    if (cyclic_reduce(root).core.empty()) continue;
    FreeClass fc = free_class(root);
    if (fc.exponent != 1) continue;
    return free_class(fc.root.word().power(exp(rng)));
  }
}

}  // namespace

TEST_CASE("canonicalize_term orbit equality") {
  // (bbaB, baB) and (ab, Bab) are the images of (ba, a) under b and b^-1
  ChordTerm a{+1, W("ba"), W("a")};
  ChordTerm b{+1, W("bbaB"), W("baB")};
  ChordTerm c{+1, W("ab"), W("Bab")};
  CHECK(canonicalize_term(a).first == canonicalize_term(b).first);
  CHECK(canonicalize_term(a).second == canonicalize_term(b).second);
  CHECK(canonicalize_term(a).first == canonicalize_term(c).first);
  CHECK(canonicalize_term(a).second == canonicalize_term(c).second);
  ChordTerm canon = canonicalize_term(a);
  ChordTerm again = canonicalize_term(canon);
  CHECK(canon.first == again.first);
  CHECK(canon.second == again.second);
}

TEST_CASE("canonicalize_term respects simultaneous conjugacy") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<int> gen(0, 3);
  auto rand_word = [&](int len) {
    std::vector<Letter> raw;
    for (int i = 0; i < len; ++i) {
      int g = gen(rng);
      raw.push_back(Letter{static_cast<std::uint16_t>(g / 2), g % 2 == 1});
    }
    return Word(raw);
  };
  int checked = 0;
  while (checked < 120) {
    Word u = rand_word(5);
    Word v = rand_word(4);
    Word g = rand_word(4);
    if (u.empty() || v.empty()) continue;
    if (free_class(u) == free_class(v)) continue;
    ++checked;
    ChordTerm t{+1, u, v};
    ChordTerm tg{+1, conjugate(g, u), conjugate(g, v)};
    ChordTerm ct = canonicalize_term(t);
    ChordTerm ctg = canonicalize_term(tg);
    CHECK(ct.first == ctg.first);
    CHECK(ct.second == ctg.second);
    // the representative stays in the orbit
    auto back = simultaneous_conjugacy(u, v, ct.first, ct.second);
    REQUIRE(back.has_value());
    CHECK(conjugate(*back, u) == ct.first);
    CHECK(conjugate(*back, v) == ct.second);
  }
}

TEST_CASE("canonicalize_term minimizes over the whole orbit") {
  // brute-force the orbit: among all conjugators of length <= 6 fixing the
  // canonical first loop, the second loop must shortlex-minimize
  std::mt19937_64 rng(67);
  std::uniform_int_distribution<int> gen(0, 3);
  auto rand_word = [&](int len) {
    std::vector<Letter> raw;
    for (int i = 0; i < len; ++i) {
      int g = gen(rng);
      raw.push_back(Letter{static_cast<std::uint16_t>(g / 2), g % 2 == 1});
    }
    return Word(raw);
  };
  int checked = 0;
  while (checked < 60) {
    Word u = rand_word(3);
    Word v = rand_word(3);
    if (u.empty() || v.empty() || free_class(u) == free_class(v)) continue;
    ++checked;
    ChordTerm canon = canonicalize_term(ChordTerm{+1, u, v});
    Word best_second;
    bool found = false;
    std::vector<std::vector<Letter>> frontier{{}};
    for (int len = 0; len <= 6; ++len) {
      std::vector<std::vector<Letter>> next;
      for (const auto& stem : frontier) {
        Word g(stem);
        if (conjugate(g, u) == canon.first) {
          Word cand = conjugate(g, v);
          if (!found || cand < best_second) {
            best_second = cand;
            found = true;
          }
        }
        for (int gi = 0; gi < 4; ++gi) {
          Letter l{static_cast<std::uint16_t>(gi / 2), gi % 2 == 1};
          if (!stem.empty() && stem.back().is_inverse_of(l)) continue;
          auto ext = stem;
          ext.push_back(l);
          next.push_back(std::move(ext));
        }
      }
      frontier = std::move(next);
    }
    REQUIRE(found);
    CHECK(canon.second == best_second);
  }
}

TEST_CASE("canonicalize_term rejects equal classes") {
  CHECK_THROWS_WITH_AS(canonicalize_term(ChordTerm{+1, W("ab"), W("ba")}),
                       "ordered-pair canonicalization undefined; use "
                       "skew-symmetry",
                       std::invalid_argument);
}

TEST_CASE("the third and fourth example terms share a canonical form") {
  auto terms = example_terms();
  ChordTerm c3 = canonicalize_term(terms[2]);
  ChordTerm c4 = canonicalize_term(terms[3]);
  CHECK(c3.first == c4.first);
  CHECK(c3.second == c4.second);
  CHECK(c3.sign == -c4.sign);
}

TEST_CASE("reduce_terms on the example") {
  BracketResult res = reduce_terms(example_terms());
  REQUIRE(res.reduced.size() == 2);
  CHECK(res.terms_count() == 2);
  long sum = 0;
  for (const auto& [key, coef] : res.reduced) {
    CHECK(std::abs(coef) == 1);
    sum += coef;
  }
  CHECK(sum == 0);  // one +1 and one -1
  // the survivors are terms 1 and 2
  auto terms = example_terms();
  ChordTerm c1 = canonicalize_term(terms[0]);
  ChordTerm c2 = canonicalize_term(terms[1]);
  REQUIRE(res.reduced.count({c1.first, c1.second}) == 1);
  REQUIRE(res.reduced.count({c2.first, c2.second}) == 1);
  CHECK(res.reduced.at({c1.first, c1.second}) == +1);
  CHECK(res.reduced.at({c2.first, c2.second}) == -1);
}

TEST_CASE("reduce_terms edge cases") {
  CHECK(reduce_terms({}).terms_count() == 0);
  ChordTerm t{+1, W("ab"), W("a")};
  ChordTerm neg = t;
  neg.sign = -1;
  CHECK(reduce_terms({t, neg}).terms_count() == 0);
  CHECK_THROWS_WITH_AS(
      reduce_terms({t, ChordTerm{+1, W("b"), W("a")}}),
      "mixed class pairs", std::invalid_argument);
}

TEST_CASE("amr_bracket basics") {
  RibbonRose pants = RibbonRose::pants();
  CHECK(amr_bracket(F("a"), F("b"), pants).terms_count() == 0);
  CHECK(amr_bracket(F("a"), F("aa"), pants).terms_count() == 0);
  CHECK(amr_bracket(F("aA"), F("b"), pants).terms_count() == 0);
  CHECK(amr_bracket(F("ab"), F("ab"), pants).terms_count() == 0);
}

TEST_CASE("amr_bracket on the example pair") {
  RibbonRose pants = RibbonRose::pants();
  BracketResult res = amr_bracket(F("aBB"), F("aB"), pants);
  CHECK(res.raw.size() == 2);
  CHECK(res.terms_count() == 2);
  CHECK(min_intersection(F("aBB"), F("aB"), pants) == 2);
}

TEST_CASE("smooth") {
  auto [s1, c1] = smooth(ChordTerm{+1, W("BBa"), W("aB")});
  CHECK(s1 == +1);
  CHECK(c1.canonical.str() == "aaBBB");
  auto [s2, c2] = smooth(ChordTerm{-1, W("aBB"), W("Ba")});
  CHECK(s2 == -1);
  CHECK(c2.canonical.str() == "aaBBB");
  auto [s3, c3] = smooth(ChordTerm{+1, W("a"), W("b")});
  CHECK(c3.canonical.str() == "ab");
}

TEST_CASE("goldman_bracket") {
  RibbonRose pants = RibbonRose::pants();
  RibbonRose torus = RibbonRose::torus1();
  CHECK(goldman_bracket(F("aBB"), F("aB"), pants).empty());
  CHECK(goldman_bracket(F("a"), F("b"), pants).empty());
  auto gb = goldman_bracket(F("a"), F("b"), torus);
  REQUIRE(gb.size() == 1);
  CHECK(gb.begin()->first == F("ab").canonical);
  CHECK(std::abs(gb.begin()->second) == 1);
}

TEST_CASE("self_intersection") {
  RibbonRose pants = RibbonRose::pants();
  RibbonRose torus = RibbonRose::torus1();
  CHECK(self_intersection(F("aaa"), torus) == 2);
  CHECK(self_intersection(F("aaa"), pants) == 2);
  CHECK(self_intersection(F("ab"), torus) == 0);
  CHECK(self_intersection(F("aab"), pants) == 1);
  CHECK(self_intersection(F("aabaab"), pants) == 5);
  CHECK(self_intersection(F("aA"), pants) == 0);
}

TEST_CASE("min_intersection equal-class formula") {
  RibbonRose pants = RibbonRose::pants();
  CHECK(min_intersection(F("a"), F("a"), pants) == 0);
  CHECK(min_intersection(F("aa"), F("aa"), pants) == 0);
  CHECK(min_intersection(F("aab"), F("aab"), pants) == 2);
}

TEST_CASE("same-root bracket path") {
  RibbonRose pants = RibbonRose::pants();
  // base aab has one self-crossing; powers p=1, q=2 give 2*|1*2| terms
  BracketResult res = amr_bracket(F("aab"), F("aabaab"), pants);
  CHECK(res.raw.size() == 4);
  CHECK(res.terms_count() == 4);
  // inverse powers go through the same path
  BracketResult inv = amr_bracket(F("aab"), free_class(W("aab").power(-1)),
                                  pants);
  CHECK(inv.terms_count() == 2);
}

TEST_CASE("theorem2_selfint") {
  RibbonRose pants = RibbonRose::pants();
  RibbonRose torus = RibbonRose::torus1();
  CHECK(theorem2_selfint(F("a"), 1, 2, pants) == 0);
  CHECK(theorem2_selfint(F("aaa"), 1, 2, pants) == 2);
  CHECK(theorem2_selfint(F("aab"), 1, 2, pants) == 1);
  CHECK(theorem2_selfint(F("aab"), 1, 2, torus) == 0);
  CHECK(theorem2_selfint(F("aab"), -2, 3, pants) == 1);
  CHECK_THROWS_AS(theorem2_selfint(F("a"), 2, 2, pants),
                  std::invalid_argument);
  CHECK_THROWS_AS(theorem2_selfint(F("a"), 0, 1, pants),
                  std::invalid_argument);
}

TEST_CASE("skew symmetry of counts and reduced terms") {
  std::mt19937_64 rng(41);
  RibbonRose torus = RibbonRose::torus1();
  int checked = 0;
  while (checked < 50) {
    FreeClass a1 = random_class(rng, 2, 5, 2);
    FreeClass a2 = random_class(rng, 2, 5, 2);
    if (a1 == a2) continue;
    ++checked;
    BracketResult fwd = amr_bracket(a1, a2, torus);
    BracketResult bwd = amr_bracket(a2, a1, torus);
    CHECK(fwd.terms_count() == bwd.terms_count());
    for (const auto& [key, coef] : fwd.reduced) {
      ChordTerm sw = canonicalize_term(ChordTerm{+1, key.second, key.first});
      auto it = bwd.reduced.find({sw.first, sw.second});
      REQUIRE(it != bwd.reduced.end());
      CHECK(it->second == -coef);
    }
  }
}

TEST_CASE("equal-class formula matches the inverse-class bracket") {
  std::mt19937_64 rng(43);
  RibbonRose pants = RibbonRose::pants();
  for (int i = 0; i < 30; ++i) {
    FreeClass a = random_class(rng, 2, 5, 2);
    FreeClass ainv = free_class(a.canonical.word().inverse());
    CHECK(min_intersection(a, a, pants) ==
          min_intersection(a, ainv, pants));
  }
}
