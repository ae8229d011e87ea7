#include "loops/verify.hpp"

#include <cstdlib>
#include <sstream>

namespace loops::verify {

namespace {

Word parse(const char* s) { return Word::parse(s); }

// Surfaces the fuzz suites cycle through: every rank-2 rose plus a planar
// and a nonplanar rank-3 rose.
std::vector<RibbonRose> fuzz_roses() {
  std::vector<RibbonRose> roses = enumerate_rank2_roses();
  roses.push_back(RibbonRose::genus_boundary(0, 4));
  roses.push_back(RibbonRose::genus_boundary(1, 2));
  return roses;
}

std::vector<ChordTerm> example_terms() {
  return {ChordTerm{+1, parse("BBa"), parse("aB")},
          ChordTerm{-1, parse("aBB"), parse("Ba")},
          ChordTerm{-1, parse("aBB"), parse("aB")},
          ChordTerm{+1, parse("BaB"), parse("aB")}};
}

struct DistinctRootPair {
  FreeClass a1;
  FreeClass a2;
};

DistinctRootPair random_distinct_root_pair(std::mt19937_64& rng, int rank,
                                           int max_len) {
  for (;;) {
    FreeClass a1 = free_class(random_word(rng, rank, max_len));
    FreeClass a2 = free_class(random_word(rng, rank, max_len));
    if (a1.is_trivial() || a2.is_trivial()) continue;
    if (a1.root == a2.root || a1.root == a2.root.inverse()) continue;
    return {a1, a2};
  }
}

std::string term_str(const TermKey& k) {
  return k.first.str() + " . " + k.second.str();
}

}  // namespace

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

CyclicWord random_cyclic_word(std::mt19937_64& rng, int rank, int max_len) {
  for (;;) {
    Word w = random_word(rng, rank, max_len);
    Word core = cyclic_reduce(w).core;
    if (!core.empty()) return CyclicWord::from_cyclically_reduced(core);
  }
}

FreeClass random_class(std::mt19937_64& rng, int rank, int max_root_len,
                       int max_exp) {
  std::uniform_int_distribution<int> exp(1, max_exp);
  for (;;) {
    CyclicWord w = random_cyclic_word(rng, rank, max_root_len);
    RootDecomposition rd = primitive_root(w);
    if (rd.exponent != 1) continue;
    return free_class(rd.root.word().power(exp(rng)));
  }
}

RibbonRose pinned_rose() {
  FreeClass a1 = free_class(parse("aBB"));
  FreeClass a2 = free_class(parse("aB"));
  for (const RibbonRose& rose : enumerate_rank2_roses()) {
    BracketResult br = amr_bracket(a1, a2, rose);
    if (br.terms_count() == 2 &&
        min_intersection(a1, a2, rose) == 2) {
      return rose;
    }
  }
  throw std::logic_error("no rank-2 rose realizes the example pair");
}

PropertyReport check_simconj_oracle(unsigned long seed, long cases) {
  PropertyReport rep{"simultaneous-conjugacy-vs-brute-force", true, cases, ""};
  std::mt19937_64 rng(seed ^ 0x51c0u);
  for (long i = 0; i < cases; ++i) {
    Word u1 = random_word(rng, 2, 4);
    if (u1.empty()) u1 = parse("a");
    Word u2 = random_word(rng, 2, 4);
    Word v1 = random_word(rng, 2, 4);
    Word v2 = random_word(rng, 2, 4);
    auto fast = simultaneous_conjugacy(u1, u2, v1, v2);
    auto slow = brute_force_simconj(u1, u2, v1, v2, 6);
    bool ok = fast.has_value() == slow.has_value();
    if (ok && fast) {
      ok = conjugate(*fast, u1) == v1 && conjugate(*fast, u2) == v2;
    }
    if (!ok) {
      rep.pass = false;
      rep.detail = "tuple (" + u1.str() + ", " + u2.str() + ", " + v1.str() +
                   ", " + v2.str() + ")";
      return rep;
    }
  }
  return rep;
}

PropertyReport check_theorem1_no_cancellation(unsigned long seed, long cases) {
  PropertyReport rep{"theorem1-no-cancellation", true, cases, ""};
  std::mt19937_64 rng(seed ^ 0x7e01u);
  auto roses = fuzz_roses();
  for (long i = 0; i < cases; ++i) {
    const RibbonRose& rose = roses[static_cast<std::size_t>(i) % roses.size()];
    auto [a1, a2] = random_distinct_root_pair(rng, rose.rank() > 2 ? 3 : 2, 8);
    BracketResult br = amr_bracket(a1, a2, rose);
    if (br.terms_count() != static_cast<long>(br.raw.size())) {
      rep.pass = false;
      rep.detail = "pair <" + a1.str() + ">, <" + a2.str() + "> on " +
                   rose.str() + ": raw " + std::to_string(br.raw.size()) +
                   " != reduced " + std::to_string(br.terms_count());
      return rep;
    }
  }
  return rep;
}

PropertyReport check_theorem2_identity(unsigned long seed, long cases) {
  PropertyReport rep{"theorem2-power-identity", true, cases, ""};
  std::mt19937_64 rng(seed ^ 0x7e02u);
  auto roses = fuzz_roses();
  const long pq[] = {-2, -1, 1, 2, 3};
  std::uniform_int_distribution<int> pick(0, 4);
  for (long i = 0; i < cases; ++i) {
    const RibbonRose& rose = roses[static_cast<std::size_t>(i) % roses.size()];
    FreeClass a = random_class(rng, rose.rank() > 2 ? 3 : 2, 8, 3);
    long p = pq[pick(rng)];
    long q = pq[pick(rng)];
    while (q == p) q = pq[pick(rng)];
    long via_bracket = theorem2_selfint(a, p, q, rose);
    long direct = self_intersection(a, rose);
    if (via_bracket != direct) {
      rep.pass = false;
      rep.detail = "<" + a.str() + "> p=" + std::to_string(p) +
                   " q=" + std::to_string(q) + " on " + rose.str() + ": " +
                   std::to_string(via_bracket) +
                   " != " + std::to_string(direct);
      return rep;
    }
  }
  return rep;
}

PropertyReport check_power_law(unsigned long seed, long cases) {
  PropertyReport rep{"hass-scott-power-law", true, cases, ""};
  std::mt19937_64 rng(seed ^ 0x7e03u);
  auto roses = fuzz_roses();
  for (long i = 0; i < cases; ++i) {
    const RibbonRose& rose = roses[static_cast<std::size_t>(i) % roses.size()];
    FreeClass b = random_class(rng, rose.rank() > 2 ? 3 : 2, 8, 1);
    long ib = self_crossing_count(b.root, rose);
    for (long k = 1; k <= 4; ++k) {
      FreeClass bk = free_class(b.root.word().power(k));
      long lhs = self_intersection(bk, rose);
      long rhs = ib * k * k + k - 1;
      if (lhs != rhs) {
        rep.pass = false;
        rep.detail = "<" + b.str() + ">^" + std::to_string(k) + " on " +
                     rose.str() + ": " + std::to_string(lhs) +
                     " != " + std::to_string(rhs);
        return rep;
      }
    }
  }
  return rep;
}

PropertyReport check_goldman_le_amr(unsigned long seed, long cases) {
  PropertyReport rep{"goldman-bound-le-amr", true, cases, ""};
  // same stream as the no-cancellation fuzz, so the bound is checked on
  // exactly those pairs
  std::mt19937_64 rng(seed ^ 0x7e01u);
  auto roses = fuzz_roses();
  for (long i = 0; i < cases; ++i) {
    const RibbonRose& rose = roses[static_cast<std::size_t>(i) % roses.size()];
    auto [a1, a2] = random_distinct_root_pair(rng, rose.rank() > 2 ? 3 : 2, 8);
    long amr = amr_bracket(a1, a2, rose).terms_count();
    long goldman = 0;
    for (const auto& [cls, coef] : goldman_bracket(a1, a2, rose)) {
      goldman += std::labs(coef);
    }
    if (goldman > amr) {
      rep.pass = false;
      rep.detail = "pair <" + a1.str() + ">, <" + a2.str() + "> on " +
                   rose.str() + ": goldman " + std::to_string(goldman) +
                   " > amr " + std::to_string(amr);
      return rep;
    }
  }
  // The bundled example separates the two bounds strictly.
  RibbonRose rose = pinned_rose();
  FreeClass a1 = free_class(parse("aBB"));
  FreeClass a2 = free_class(parse("aB"));
  long amr = amr_bracket(a1, a2, rose).terms_count();
  long goldman = 0;
  for (const auto& [cls, coef] : goldman_bracket(a1, a2, rose)) {
    goldman += std::labs(coef);
  }
  if (!(goldman == 0 && amr == 2)) {
    rep.pass = false;
    rep.detail = "example pair: goldman " + std::to_string(goldman) +
                 ", amr " + std::to_string(amr) + " (want 0 and 2)";
  }
  return rep;
}

PropertyReport check_skew_symmetry(unsigned long seed, long cases) {
  PropertyReport rep{"skew-symmetry", true, cases, ""};
  std::mt19937_64 rng(seed ^ 0x7e05u);
  auto roses = fuzz_roses();
  for (long i = 0; i < cases; ++i) {
    const RibbonRose& rose = roses[static_cast<std::size_t>(i) % roses.size()];
    auto [a1, a2] = random_distinct_root_pair(rng, rose.rank() > 2 ? 3 : 2, 6);
    BracketResult fwd = amr_bracket(a1, a2, rose);
    BracketResult bwd = amr_bracket(a2, a1, rose);
    bool ok = fwd.terms_count() == bwd.terms_count();
    for (const auto& [key, coef] : fwd.reduced) {
      if (!ok) break;
      ChordTerm sw = canonicalize_term(ChordTerm{+1, key.second, key.first});
      auto it = bwd.reduced.find({sw.first, sw.second});
      ok = it != bwd.reduced.end() && it->second == -coef;
    }
    if (!ok) {
      rep.pass = false;
      rep.detail =
          "pair <" + a1.str() + ">, <" + a2.str() + "> on " + rose.str();
      return rep;
    }
  }
  return rep;
}

PropertyReport check_equal_class_formula(unsigned long seed, long cases) {
  PropertyReport rep{"equal-class-formula", true, cases, ""};
  std::mt19937_64 rng(seed ^ 0x7e06u);
  auto roses = fuzz_roses();
  for (long i = 0; i < cases; ++i) {
    const RibbonRose& rose = roses[static_cast<std::size_t>(i) % roses.size()];
    FreeClass a = random_class(rng, rose.rank() > 2 ? 3 : 2, 6, 3);
    long lhs = min_intersection(a, a, rose);
    long rhs = 2 * (self_intersection(a, rose) - (a.exponent - 1));
    FreeClass ainv = free_class(a.canonical.word().inverse());
    long via_inverse = min_intersection(a, ainv, rose);
    bool ok = lhs == rhs && lhs == via_inverse && lhs % 2 == 0;
    // powers of a single generator bound disks off the rose
    if (ok && a.root.size() == 1) ok = lhs == 0;
    if (!ok) {
      rep.pass = false;
      rep.detail = "<" + a.str() + "> on " + rose.str() + ": formula " +
                   std::to_string(rhs) + ", direct " + std::to_string(lhs) +
                   ", inverse-pair " + std::to_string(via_inverse);
      return rep;
    }
  }
  return rep;
}

PropertyReport check_torus_pairing(unsigned long seed, long cases) {
  PropertyReport rep{"torus-determinant", true, cases, ""};
  std::mt19937_64 rng(seed ^ 0x7e07u);
  std::uniform_int_distribution<long> coord(-50, 50);
  for (long i = 0; i < cases; ++i) {
    TorusClass c1{coord(rng), coord(rng)};
    TorusClass c2{coord(rng), coord(rng)};
    long direct = std::labs(c1.m * c2.l - c1.l * c2.m);
    bool ok = torus_min_intersection(c1, c2) == direct &&
              torus_min_intersection(c2, c1) == direct &&
              torus_min_intersection(c1, c1) == 0;
    if (!ok) {
      rep.pass = false;
      rep.detail = "(" + std::to_string(c1.m) + "," + std::to_string(c1.l) +
                   ") x (" + std::to_string(c2.m) + "," +
                   std::to_string(c2.l) + ")";
      return rep;
    }
  }
  return rep;
}

PropertyReport check_example_fixture() {
  PropertyReport rep{"example-fixture", true, 1, ""};
  auto terms = example_terms();
  BracketResult res = reduce_terms(terms);
  ChordTerm c1 = canonicalize_term(terms[0]);
  ChordTerm c2 = canonicalize_term(terms[1]);
  bool ok = res.reduced.size() == 2 && res.terms_count() == 2;
  ok = ok && res.reduced.count({c1.first, c1.second}) == 1 &&
       res.reduced.at({c1.first, c1.second}) == +1;
  ok = ok && res.reduced.count({c2.first, c2.second}) == 1 &&
       res.reduced.at({c2.first, c2.second}) == -1;
  // smoothing the four raw terms cancels completely
  std::map<CyclicWord, long> goldman;
  for (const ChordTerm& t : terms) {
    auto [sign, cls] = smooth(t);
    goldman[cls.canonical] += sign;
  }
  for (const auto& [cls, coef] : goldman) ok = ok && coef == 0;
  if (!ok) {
    std::ostringstream os;
    os << "reduced size " << res.reduced.size() << ", terms "
       << res.terms_count() << ";";
    for (const auto& [key, coef] : res.reduced) {
      os << " (" << term_str(key) << ") -> " << coef << ";";
    }
    rep.pass = false;
    rep.detail = os.str();
  }
  return rep;
}

PropertyReport check_example_end_to_end() {
  PropertyReport rep{"example-end-to-end", true, 3, ""};
  FreeClass a1 = free_class(parse("aBB"));
  FreeClass a2 = free_class(parse("aB"));
  bool found = false;
  std::ostringstream os;
  for (const RibbonRose& rose : enumerate_rank2_roses()) {
    BracketResult br = amr_bracket(a1, a2, rose);
    long raw = static_cast<long>(br.raw.size());
    long reduced = br.terms_count();
    long mi = min_intersection(a1, a2, rose);
    os << rose.str() << ": raw=" << raw << " reduced=" << reduced
       << " minint=" << mi << "; ";
    if (raw == 4 && reduced == 2 && mi == 2) found = true;
  }
  rep.pass = found;
  rep.detail = os.str();
  return rep;
}

bool Report::all_pass() const {
  for (const auto& p : properties) {
    if (!p.pass) return false;
  }
  return true;
}

std::string Report::text() const {
  std::ostringstream os;
  long passed = 0;
  for (const auto& p : properties) {
    os << (p.pass ? "PASS" : "FAIL") << ' ' << p.name << " cases=" << p.cases;
    if (!p.detail.empty()) os << " [" << p.detail << "]";
    os << '\n';
    if (p.pass) ++passed;
  }
  os << "result: " << passed << '/' << properties.size() << " properties\n";
  return os.str();
}

Report run(unsigned long seed, long budget) {
  if (budget < 1) budget = 1;
  Report rep;
  rep.properties.push_back(check_simconj_oracle(seed, budget));
  rep.properties.push_back(check_theorem1_no_cancellation(seed, budget));
  rep.properties.push_back(check_theorem2_identity(seed, budget));
  rep.properties.push_back(check_goldman_le_amr(seed, budget));
  rep.properties.push_back(check_skew_symmetry(seed, budget));
  rep.properties.push_back(check_example_fixture());
  return rep;
}

}  // namespace loops::verify
