#include "loops/conjugacy.hpp"

#include <algorithm>
#include <stdexcept>

namespace loops {

namespace {

// Index of the lexicographically least rotation (smallest index on ties).
std::size_t least_rotation(const std::vector<Letter>& v) {
  std::size_t n = v.size();
  if (n <= 1) return 0;
  std::size_t best = 0;
  for (std::size_t cand = 1; cand < n; ++cand) {
    for (std::size_t i = 0; i < n; ++i) {
      Letter a = v[(cand + i) % n];
      Letter b = v[(best + i) % n];
      if (a < b) {
        best = cand;
        break;
      }
      if (b < a) break;
    }
  }
  return best;
}

bool cyclically_reduced(const Word& w) {
  return w.size() < 2 || !w.letters().front().is_inverse_of(w.letters().back());
}

}  // namespace

CyclicWord CyclicWord::from_cyclically_reduced(const Word& w) {
  if (!cyclically_reduced(w)) {
    throw std::invalid_argument("word is not cyclically reduced: " + w.str());
  }
  CyclicWord c;
  const auto& ls = w.letters();
  std::size_t r = least_rotation(ls);
  c.letters_.reserve(ls.size());
  for (std::size_t i = 0; i < ls.size(); ++i) {
    c.letters_.push_back(ls[(r + i) % ls.size()]);
  }
  return c;
}

Word CyclicWord::rotation(std::size_t k) const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    out.push_back(letters_[(k + i) % letters_.size()]);
  }
  return Word(out);
}

CyclicWord CyclicWord::inverse() const {
  return from_cyclically_reduced(word().inverse());
}

RootDecomposition primitive_root(const CyclicWord& c) {
  if (c.empty()) {
    throw std::invalid_argument("primitive_root of the empty cyclic word");
  }
  std::size_t n = c.size();
  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool period = true;
    for (std::size_t i = 0; i + p < n && period; ++i) {
      period = c.letters()[i] == c.letters()[i + p];
    }
    if (period) {
      Word root_word(std::span<const Letter>(c.letters().data(), p));
      // The least rotation of root^n starts with the least rotation of root,
      // so this prefix is itself canonical.
      RootDecomposition out;
      out.root = CyclicWord::from_cyclically_reduced(root_word);
      out.exponent = static_cast<long>(n / p);
      return out;
    }
  }
  throw std::logic_error("unreachable: word is its own period");
}

FreeClass free_class(const Word& w) {
  CyclicReduction cr = cyclic_reduce(w);
  FreeClass fc;
  if (cr.core.empty()) return fc;  // trivial class
  fc.canonical = CyclicWord::from_cyclically_reduced(cr.core);
  RootDecomposition rd = primitive_root(fc.canonical);
  fc.root = rd.root;
  fc.exponent = rd.exponent;
  return fc;
}

Word centralizer_generator(const Word& w) {
  if (w.empty()) {
    throw std::invalid_argument("trivial word has full-group centralizer");
  }
  CyclicReduction cr = cyclic_reduce(w);
  CyclicWord core = CyclicWord::from_cyclically_reduced(cr.core);
  RootDecomposition rd = primitive_root(core);
  // Undo the canonical rotation: we need the root of cr.core as written.
  // cr.core = rot^-r(canonical) and canonical = root^n, so cr.core equals
  // (rotation of root)^n for the matching rotation of the root.
  const auto& ls = cr.core.letters();
  std::size_t p = rd.root.size();
  Word root_as_written(std::span<const Letter>(ls.data(), p));
  return cr.conjugator * root_as_written * cr.conjugator.inverse();
}

std::optional<Word> find_conjugator(const Word& u, const Word& v) {
  if (u.empty() || v.empty()) {
    if (u.empty() && v.empty()) return Word();
    return std::nullopt;
  }
  CyclicReduction cu = cyclic_reduce(u);
  CyclicReduction cv = cyclic_reduce(v);
  if (cu.core.size() != cv.core.size()) return std::nullopt;
  const auto& a = cu.core.letters();
  const auto& b = cv.core.letters();
  std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i) {
      match = a[(k + i) % n] == b[i];
    }
    if (match) {
      // rot_k(core_u) = P^-1 core_u P for the length-k prefix P.
      Word prefix(std::span<const Letter>(a.data(), k));
      return cv.conjugator * prefix.inverse() * cu.conjugator.inverse();
    }
  }
  return std::nullopt;
}

std::optional<Word> simultaneous_conjugacy(const Word& u1, const Word& u2,
                                           const Word& v1, const Word& v2) {
  if (u1.empty()) {
    throw std::invalid_argument("trivial word has full-group centralizer");
  }
  std::optional<Word> g0 = find_conjugator(u1, v1);
  if (!g0) return std::nullopt;
  Word s = centralizer_generator(v1);
  Word w = conjugate(*g0, u2);
  long window = 2 * static_cast<long>(w.size() + v2.size()) + 2;
  for (long i = -window; i <= window; ++i) {
    Word si = s.power(i);
    if (conjugate(si, w) == v2) return si * *g0;
  }
  return std::nullopt;
}

std::optional<Word> brute_force_simconj(const Word& u1, const Word& u2,
                                        const Word& v1, const Word& v2,
                                        int max_len) {
  if (max_len < 0) {
    throw std::invalid_argument("max_len must be nonnegative");
  }
  int rank = 1 + std::max({u1.max_index(), u2.max_index(), v1.max_index(),
                           v2.max_index(), 0});
  auto satisfies = [&](const Word& g) {
    return conjugate(g, u1) == v1 && conjugate(g, u2) == v2;
  };
  std::vector<std::vector<Letter>> frontier{{}};
  if (satisfies(Word())) return Word();
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& stem : frontier) {
      for (int idx = 0; idx < rank; ++idx) {
        for (bool inv : {false, true}) {
          Letter l{static_cast<std::uint16_t>(idx), inv};
          if (!stem.empty() && stem.back().is_inverse_of(l)) continue;
          auto cand = stem;
          cand.push_back(l);
          Word g(cand);
          if (satisfies(g)) return g;
          next.push_back(std::move(cand));
        }
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace loops
