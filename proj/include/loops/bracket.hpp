#pragma once

#include <map>
#include <utility>
#include <vector>

#include "loops/conjugacy.hpp"
#include "loops/linking.hpp"
#include "loops/surface.hpp"

namespace loops {

// A signed one-chord diagram: an ordered pair of based loops sharing the
// chord point, up to simultaneous conjugation.
struct ChordTerm {
  int sign = 0;  // +1 or -1
  Word first;
  Word second;

  bool operator==(const ChordTerm&) const = default;
};

using TermKey = std::pair<Word, Word>;

struct BracketResult {
  std::vector<ChordTerm> raw;
  std::map<TermKey, long> reduced;  // canonical pair -> signed coefficient

  long terms_count() const {
    long n = 0;
    for (const auto& [key, coef] : reduced) n += coef < 0 ? -coef : coef;
    return n;
  }
};

// Unique orbit representative under simultaneous conjugation: `first`
// becomes the canonical rotation of its conjugacy class, and `second` the
// shortlex minimum over the residual centralizer action. Sign is carried
// through untouched. Requires distinct nontrivial classes.
ChordTerm canonicalize_term(const ChordTerm& t);

BracketResult reduce_terms(const std::vector<ChordTerm>& raw);

// The one-chord-diagram Poisson bracket of two free homotopy classes.
BracketResult amr_bracket(const FreeClass& a1, const FreeClass& a2,
                          const RibbonRose& rose);

// Replace the chord by the based product of the two loops.
std::pair<int, FreeClass> smooth(const ChordTerm& t);

// Signed classes of the smoothed bracket terms, zeros dropped.
std::map<CyclicWord, long> goldman_bracket(const FreeClass& a1,
                                           const FreeClass& a2,
                                           const RibbonRose& rose);

long self_intersection(const FreeClass& a, const RibbonRose& rose);

long min_intersection(const FreeClass& a1, const FreeClass& a2,
                      const RibbonRose& rose);

// Self-intersection number recovered from the bracket of two powers:
// terms({a^p, a^q}) / (2|pq|) + n - 1.
long theorem2_selfint(const FreeClass& a, long p, long q,
                      const RibbonRose& rose);

}  // namespace loops
