#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace loops {

// One generator or its inverse. Ordered a1 < a1^-1 < a2 < a2^-1 < ...,
// i.e. by (index, inverted); this order fixes all canonical rotations.
struct Letter {
  std::uint16_t index = 0;
  bool inverted = false;

  Letter inverse() const { return Letter{index, !inverted}; }
  bool is_inverse_of(Letter o) const {
    return index == o.index && inverted != o.inverted;
  }
  auto operator<=>(const Letter&) const = default;
};

// A freely reduced word in a free group of unbounded rank. Immutable after
// construction; every constructor reduces its input.
class Word {
 public:
  Word() = default;
  explicit Word(std::span<const Letter> raw) : letters_(reduce(raw)) {}
  explicit Word(std::initializer_list<Letter> raw)
      : letters_(reduce(std::span<const Letter>(raw.begin(), raw.end()))) {}

  static Word parse(std::string_view text);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter at(std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  Word operator*(const Word& rhs) const;
  Word power(long k) const;

  // Prints in compact letter form (a..z, inverses A..Z) when every index
  // fits, otherwise "x3 x1^-1 ..." form. The empty word prints as "1".
  std::string str() const;

  bool operator==(const Word&) const = default;
  // Shortlex: length first, then letter order. Used for canonical minima.
  std::strong_ordering operator<=>(const Word& rhs) const {
    if (auto c = letters_.size() <=> rhs.letters_.size(); c != 0) return c;
    return letters_ <=> rhs.letters_;
  }

  // Highest generator index occurring, or -1 for the empty word.
  int max_index() const;

 private:
  static std::vector<Letter> reduce(std::span<const Letter> raw);
  std::vector<Letter> letters_;
};

inline Word conjugate(const Word& g, const Word& w) {
  return g * w * g.inverse();
}

// w = conjugator * core * conjugator^-1 with core cyclically reduced.
struct CyclicReduction {
  Word core;
  Word conjugator;
};
CyclicReduction cyclic_reduce(const Word& w);

std::string letter_str(Letter l);
Letter parse_letter(std::string_view token);

}  // namespace loops
