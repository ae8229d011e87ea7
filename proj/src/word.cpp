#include "loops/word.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace loops {

std::vector<Letter> Word::reduce(std::span<const Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (!out.empty() && out.back().is_inverse_of(l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word Word::inverse() const {
  std::vector<Letter> rev;
  rev.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    rev.push_back(it->inverse());
  }
  Word w;
  w.letters_ = std::move(rev);  // reversal of a reduced word is reduced
  return w;
}

Word Word::operator*(const Word& rhs) const {
  std::vector<Letter> cat = letters_;
  cat.insert(cat.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(cat);
}

Word Word::power(long k) const {
  if (k == 0 || empty()) return Word();
  Word base = k > 0 ? *this : inverse();
  long n = k > 0 ? k : -k;
  // Cyclically reduce once so repetition needs no further cancellation.
  CyclicReduction cr = cyclic_reduce(base);
  std::vector<Letter> body;
  body.reserve(cr.core.size() * static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    body.insert(body.end(), cr.core.letters().begin(), cr.core.letters().end());
  }
  return cr.conjugator * Word(body) * cr.conjugator.inverse();
}

int Word::max_index() const {
  int m = -1;
  for (Letter l : letters_) m = std::max(m, static_cast<int>(l.index));
  return m;
}

std::string letter_str(Letter l) {
  if (l.index < 26) {
    char c = static_cast<char>((l.inverted ? 'A' : 'a') + l.index);
    return std::string(1, c);
  }
  std::string s = "x" + std::to_string(l.index + 1);
  if (l.inverted) s += "^-1";
  return s;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  bool compact = max_index() < 26;
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += compact ? letter_str(letters_[i])
                   : (std::string("x") + std::to_string(letters_[i].index + 1) +
                      (letters_[i].inverted ? "^-1" : ""));
  }
  return out;
}

Letter parse_letter(std::string_view token) {
  if (token.size() == 1 && std::isalpha(static_cast<unsigned char>(token[0]))) {
    char c = token[0];
    if (c >= 'a' && c <= 'z')
      return Letter{static_cast<std::uint16_t>(c - 'a'), false};
    return Letter{static_cast<std::uint16_t>(c - 'A'), true};
  }
  if (!token.empty() && (token[0] == 'x' || token[0] == 'X')) {
    std::string_view rest = token.substr(1);
    std::size_t caret = rest.find('^');
    std::string_view num = rest.substr(0, caret);
    int idx = 0;
    auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), idx);
    if (ec == std::errc() && p == num.data() + num.size() && idx >= 1) {
      bool inv = false;
      if (caret != std::string_view::npos) {
        std::string_view exp = rest.substr(caret + 1);
        if (exp == "-1")
          inv = true;
        else if (exp != "1")
          throw std::invalid_argument("word parse error: bad exponent in '" +
                                      std::string(token) + "'");
      }
      return Letter{static_cast<std::uint16_t>(idx - 1), inv};
    }
  }
  throw std::invalid_argument("word parse error: bad letter token '" +
                              std::string(token) + "'");
}

Word Word::parse(std::string_view text) {
  std::vector<Letter> raw;
  // Explicit form: whitespace separated x<k>[^±1] tokens, possibly mixed
  // with single letters. Compact form: a string of letters.
  bool explicit_form = text.find_first_of(" \t^") != std::string_view::npos ||
                       text.find_first_of("0123456789") != std::string_view::npos;
  if (text == "1") return Word();
  if (!explicit_form) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (!std::isalpha(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("word parse error at position " +
                                    std::to_string(i) + ": '" +
                                    std::string(1, c) + "'");
      }
      raw.push_back(parse_letter(text.substr(i, 1)));
    }
    return Word(raw);
  }
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])))
      ++j;
    std::string_view token = text.substr(i, j - i);
    if (token == "1" && text.size() == 1) return Word();
    try {
      raw.push_back(parse_letter(token));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("word parse error at position " +
                                  std::to_string(i) + ": '" +
                                  std::string(token) + "'");
    }
    i = j;
  }
  return Word(raw);
}

CyclicReduction cyclic_reduce(const Word& w) {
  const auto& ls = w.letters();
  std::size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo].is_inverse_of(ls[hi - 1])) {
    ++lo;
    --hi;
  }
  CyclicReduction out;
  out.conjugator = Word(std::span<const Letter>(ls.data(), lo));
  out.core = Word(std::span<const Letter>(ls.data() + lo, hi - lo));
  return out;
}

}  // namespace loops
