#include "loops/bracket.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <stdexcept>

namespace loops {

namespace {

// Conjugator carrying w onto the canonical rotation of its class:
// returns g with g w g^-1 = canonical.
Word conjugator_to_canonical(const Word& w) {
  CyclicReduction cr = cyclic_reduce(w);
  CyclicWord canon = CyclicWord::from_cyclically_reduced(cr.core);
  const auto& ls = cr.core.letters();
  std::size_t n = ls.size();
  for (std::size_t r = 0; r < n; ++r) {
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i) {
      match = ls[(r + i) % n] == canon.letters()[i];
    }
    if (match) {
      Word prefix(std::span<const Letter>(ls.data(), r));
      return (cr.conjugator * prefix).inverse();
    }
  }
  throw std::logic_error("unreachable: canonical rotation not found");
}

// Maintains s^i w s^-i across increments of i, with free reduction at both
// junctions.
class ConjugationWalker {
 public:
  ConjugationWalker(const Word& w, const Word& s)
      : v_(w.letters().begin(), w.letters().end()),
        s_(s.letters()),
        s_inv_(s.inverse().letters()) {}

  ConjugationWalker(const ConjugationWalker&) = delete;

  void step() {
    for (auto it = s_.rbegin(); it != s_.rend(); ++it) push_front(*it);
    for (Letter l : s_inv_) push_back(l);
  }

  bool shorter_than(std::size_t len) const { return v_.size() < len; }

  Word word() const {
    return Word(std::vector<Letter>(v_.begin(), v_.end()));
  }

  std::size_t size() const { return v_.size(); }

 private:
  void push_front(Letter l) {
    if (!v_.empty() && v_.front().is_inverse_of(l)) {
      v_.pop_front();
    } else {
      v_.push_front(l);
    }
  }
  void push_back(Letter l) {
    if (!v_.empty() && v_.back().is_inverse_of(l)) {
      v_.pop_back();
    } else {
      v_.push_back(l);
    }
  }

  std::deque<Letter> v_;
  std::vector<Letter> s_;
  std::vector<Letter> s_inv_;
};

struct SameRootData {
  CyclicWord base;  // primitive loop both classes are powers of
  long k1 = 0;      // a1 = <base^k1>; positive since stored exponents are
  long k2 = 0;      // a2 = <base^k2>; nonzero, != k1
};

std::optional<SameRootData> same_root(const FreeClass& a1,
                                      const FreeClass& a2) {
  SameRootData d;
  d.base = a1.root;
  d.k1 = a1.exponent;
  if (a2.root == a1.root) {
    d.k2 = a2.exponent;
  } else if (a2.root == a1.root.inverse()) {
    d.k2 = -a2.exponent;
  } else {
    return std::nullopt;
  }
  return d;
}

void append_copies(std::vector<ChordTerm>& raw, const ChordTerm& t,
                   long copies) {
  for (long i = 0; i < copies; ++i) raw.push_back(t);
}

}  // namespace

ChordTerm canonicalize_term(const ChordTerm& t) {
  if (t.first.empty() || t.second.empty()) {
    throw std::invalid_argument("chord term loops must be nontrivial");
  }
  FreeClass c1 = free_class(t.first);
  FreeClass c2 = free_class(t.second);
  if (c1 == c2) {
    throw std::invalid_argument(
        "ordered-pair canonicalization undefined; use skew-symmetry");
  }
  Word g0 = conjugator_to_canonical(t.first);
  Word u = c1.canonical.word();
  Word s = c1.root.word();
  Word w = conjugate(g0, t.second);
  // Candidates longer than w cannot beat the i = 0 candidate under
  // shortlex, so scanning the window while tracking the running minimum is
  // exhaustive over the whole centralizer orbit.
  long window = 2 * static_cast<long>(w.size() + u.size()) + 2;
  Word best = w;
  for (Word s_dir : {s, s.inverse()}) {
    ConjugationWalker walk(w, s_dir);
    for (long i = 1; i <= window; ++i) {
      walk.step();
      if (walk.shorter_than(best.size() + 1)) {
        Word cand = walk.word();
        if (cand < best) best = std::move(cand);
      }
    }
  }
  return ChordTerm{t.sign, u, best};
}

BracketResult reduce_terms(const std::vector<ChordTerm>& raw) {
  BracketResult res;
  res.raw = raw;
  if (raw.empty()) return res;
  FreeClass f1 = free_class(raw.front().first);
  FreeClass f2 = free_class(raw.front().second);
  std::map<TermKey, TermKey> memo;
  for (const ChordTerm& t : raw) {
    TermKey in{t.first, t.second};
    auto it = memo.find(in);
    if (it == memo.end()) {
      if (!(free_class(t.first) == f1) || !(free_class(t.second) == f2)) {
        throw std::invalid_argument("mixed class pairs");
      }
      ChordTerm c = canonicalize_term(t);
      it = memo.emplace(std::move(in), TermKey{c.first, c.second}).first;
    }
    res.reduced[it->second] += t.sign;
  }
  for (auto it = res.reduced.begin(); it != res.reduced.end();) {
    it = it->second == 0 ? res.reduced.erase(it) : std::next(it);
  }
  return res;
}

BracketResult amr_bracket(const FreeClass& a1, const FreeClass& a2,
                          const RibbonRose& rose) {
  BracketResult res;
  if (a1.is_trivial() || a2.is_trivial()) return res;
  if (a1 == a2) return res;  // skew symmetry
  std::vector<ChordTerm> raw;
  if (auto sr = same_root(a1, a2)) {
    // Both classes run along the same primitive loop; the bracket comes
    // from the 2|k1 k2| intersections near each self-crossing of the base,
    // with the two pushed-off circles split there into the loops h1, h2.
    long copies = std::labs(sr->k1 * sr->k2);
    for (const SelfCrossing& sc : self_crossings(sr->base, rose)) {
      Word h1h2 = sc.first_loop * sc.second_loop;
      Word h2h1 = sc.second_loop * sc.first_loop;
      append_copies(raw, ChordTerm{+1, h1h2.power(sr->k1), h2h1.power(sr->k2)},
                    copies);
      append_copies(raw, ChordTerm{-1, h2h1.power(sr->k1), h1h2.power(sr->k2)},
                    copies);
    }
  } else {
    for (const Crossing& c :
         crossings_between(a1.canonical, a2.canonical, rose)) {
      raw.push_back(
          ChordTerm{c.sign,
                    a1.canonical.rotation(
                        static_cast<std::size_t>(c.pass1.position)),
                    a2.canonical.rotation(
                        static_cast<std::size_t>(c.pass2.position))});
    }
  }
  if (raw.empty()) return res;
  return reduce_terms(raw);
}

std::pair<int, FreeClass> smooth(const ChordTerm& t) {
  return {t.sign, free_class(t.first * t.second)};
}

std::map<CyclicWord, long> goldman_bracket(const FreeClass& a1,
                                           const FreeClass& a2,
                                           const RibbonRose& rose) {
  std::map<CyclicWord, long> out;
  BracketResult br = amr_bracket(a1, a2, rose);
  for (const ChordTerm& t : br.raw) {
    auto [sign, cls] = smooth(t);
    out[cls.canonical] += sign;
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

long self_intersection(const FreeClass& a, const RibbonRose& rose) {
  if (a.is_trivial()) return 0;
  long n = a.exponent;
  long base = self_crossing_count(a.root, rose);
  return base * n * n + n - 1;
}

long min_intersection(const FreeClass& a1, const FreeClass& a2,
                      const RibbonRose& rose) {
  if (a1.is_trivial() || a2.is_trivial()) return 0;
  if (a1 == a2) {
    return 2 * (self_intersection(a1, rose) - (a1.exponent - 1));
  }
  return amr_bracket(a1, a2, rose).terms_count();
}

long theorem2_selfint(const FreeClass& a, long p, long q,
                      const RibbonRose& rose) {
  if (p == q || p == 0 || q == 0) {
    throw std::invalid_argument("p and q must be distinct nonzero integers");
  }
  if (a.is_trivial()) {
    throw std::invalid_argument(
        "power-formula self-intersection of the trivial class");
  }
  long n = a.exponent;
  long worst = std::max(std::labs(p), std::labs(q));
  if (worst > 1000000 / (n * static_cast<long>(a.root.size()) + 1)) {
    throw std::invalid_argument("powers too large for this class");
  }
  FreeClass ap = free_class(a.root.word().power(n * p));
  FreeClass aq = free_class(a.root.word().power(n * q));
  long terms = amr_bracket(ap, aq, rose).terms_count();
  long denom = 2 * std::labs(p * q);
  if (terms % denom != 0) {
    throw std::logic_error("bracket term count not divisible by 2|pq|");
  }
  return terms / denom + n - 1;
}

}  // namespace loops
