#pragma once

#include <optional>

#include "loops/word.hpp"

namespace loops {

// A cyclically reduced word stored in its canonical rotation (the
// lexicographically least one under the Letter order). Two group elements
// are conjugate iff their CyclicWords are equal.
class CyclicWord {
 public:
  CyclicWord() = default;

  // `w` must already be cyclically reduced; rotates it into canonical form.
  static CyclicWord from_cyclically_reduced(const Word& w);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter at_mod(long i) const {
    long n = static_cast<long>(letters_.size());
    return letters_[static_cast<std::size_t>(((i % n) + n) % n)];
  }

  // The based loop obtained by reading the cycle starting at position k.
  Word rotation(std::size_t k) const;
  Word word() const { return rotation(0); }
  CyclicWord inverse() const;

  std::string str() const { return word().str(); }

  bool operator==(const CyclicWord&) const = default;
  auto operator<=>(const CyclicWord& rhs) const {
    if (auto c = letters_.size() <=> rhs.letters_.size(); c != 0) return c;
    return letters_ <=> rhs.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

// root repeated `exponent` times gives `canonical`; root is primitive.
// The trivial class is exponent 0 with empty words.
struct FreeClass {
  CyclicWord canonical;
  CyclicWord root;
  long exponent = 0;

  bool is_trivial() const { return exponent == 0; }
  std::string str() const { return canonical.str(); }
  bool operator==(const FreeClass& o) const { return canonical == o.canonical; }
  auto operator<=>(const FreeClass& o) const { return canonical <=> o.canonical; }
};

struct RootDecomposition {
  CyclicWord root;
  long exponent = 0;
};

// Smallest-period decomposition c = root^n, n maximal.
RootDecomposition primitive_root(const CyclicWord& c);

FreeClass free_class(const Word& w);

// Generator s of the centralizer of a nontrivial w (always infinite cyclic).
Word centralizer_generator(const Word& w);

// Some g with g u g^-1 = v, if u and v are conjugate.
std::optional<Word> find_conjugator(const Word& u, const Word& v);

// Some g with g u1 g^-1 = v1 and g u2 g^-1 = v2. Requires u1 nontrivial.
std::optional<Word> simultaneous_conjugacy(const Word& u1, const Word& u2,
                                           const Word& v1, const Word& v2);

// Exhaustive reference for simultaneous_conjugacy: first (shortlex) witness
// among all reduced words of length <= max_len over the generators present.
std::optional<Word> brute_force_simconj(const Word& u1, const Word& u2,
                                        const Word& v1, const Word& v2,
                                        int max_len);

}  // namespace loops
