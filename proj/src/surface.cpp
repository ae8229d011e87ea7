#include "loops/surface.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace loops {

namespace {

int parse_int(std::string_view s, const char* what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw std::invalid_argument(std::string("surface parse error: bad ") +
                                what + " '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

RibbonRose RibbonRose::from_order(std::vector<Letter> sigma) {
  if (sigma.empty() || sigma.size() % 2 != 0) {
    throw std::invalid_argument("surface spec must list 2n directions");
  }
  int rank = static_cast<int>(sigma.size() / 2);
  std::vector<bool> seen(sigma.size(), false);
  for (Letter d : sigma) {
    if (d.index >= rank) {
      throw std::invalid_argument("direction " + letter_str(d) +
                                  " out of range for rank " +
                                  std::to_string(rank));
    }
    std::size_t slot = 2 * d.index + (d.inverted ? 1 : 0);
    if (seen[slot]) {
      throw std::invalid_argument("duplicate direction " + letter_str(d));
    }
    seen[slot] = true;
  }
  // Each direction exactly once, since 2n slots are all filled.
  auto cut = std::find(sigma.begin(), sigma.end(), Letter{0, false});
  std::rotate(sigma.begin(), cut, sigma.end());
  RibbonRose rose;
  rose.rank_ = rank;
  rose.sigma_ = std::move(sigma);
  rose.pos_.assign(2 * rank, 0);
  for (int i = 0; i < 2 * rank; ++i) {
    Letter d = rose.sigma_[i];
    rose.pos_[2 * d.index + (d.inverted ? 1 : 0)] = i;
  }
  return rose;
}

RibbonRose RibbonRose::pants() {
  return from_order({{0, false}, {0, true}, {1, false}, {1, true}});
}

RibbonRose RibbonRose::torus1() {
  return from_order({{0, false}, {1, false}, {0, true}, {1, true}});
}

RibbonRose RibbonRose::genus_boundary(int genus, int boundary) {
  if (genus < 0 || boundary < 0) {
    throw std::invalid_argument("genus and boundary must be nonnegative");
  }
  if (boundary == 0) {
    throw std::invalid_argument(
        "closed surfaces unsupported except via torus module");
  }
  int rank = 2 * genus + boundary - 1;
  if (rank <= 0) {
    throw std::invalid_argument("surface has trivial fundamental group");
  }
  std::vector<Letter> sigma;
  sigma.reserve(2 * rank);
  for (int i = 0; i < genus; ++i) {
    auto a = static_cast<std::uint16_t>(2 * i);
    auto b = static_cast<std::uint16_t>(2 * i + 1);
    sigma.push_back({a, false});
    sigma.push_back({b, false});
    sigma.push_back({a, true});
    sigma.push_back({b, true});
  }
  for (int j = 0; j < boundary - 1; ++j) {
    auto c = static_cast<std::uint16_t>(2 * genus + j);
    sigma.push_back({c, false});
    sigma.push_back({c, true});
  }
  return from_order(std::move(sigma));
}

RibbonRose RibbonRose::parse(std::string_view spec) {
  if (spec == "pants") return pants();
  if (spec == "torus1") return torus1();
  if (spec.rfind("rose:", 0) == 0) {
    std::string_view body = spec.substr(5);
    std::vector<Letter> sigma;
    std::size_t i = 0;
    while (i <= body.size()) {
      std::size_t j = body.find(',', i);
      if (j == std::string_view::npos) j = body.size();
      std::string_view token = body.substr(i, j - i);
      if (token.empty()) {
        throw std::invalid_argument("surface parse error: empty direction");
      }
      sigma.push_back(parse_letter(token));
      i = j + 1;
      if (j == body.size()) break;
    }
    return from_order(std::move(sigma));
  }
  if (spec.rfind("genus=", 0) == 0) {
    std::size_t comma = spec.find(',');
    if (comma == std::string_view::npos ||
        spec.substr(comma + 1).rfind("boundary=", 0) != 0) {
      throw std::invalid_argument(
          "surface parse error: expected genus=<g>,boundary=<r>");
    }
    int g = parse_int(spec.substr(6, comma - 6), "genus");
    int r = parse_int(spec.substr(comma + 10), "boundary");
    return genus_boundary(g, r);
  }
  throw std::invalid_argument("surface parse error: unknown spec '" +
                              std::string(spec) + "'");
}

int RibbonRose::position(Letter d) const {
  if (d.index >= rank_) {
    throw std::invalid_argument("generator " + letter_str(d) +
                                " out of range for rank " +
                                std::to_string(rank_));
  }
  return pos_[2 * d.index + (d.inverted ? 1 : 0)];
}

int RibbonRose::distance(Letter d, Letter e) const {
  int n2 = 2 * rank_;
  return ((position(e) - position(d)) % n2 + n2) % n2;
}

int RibbonRose::boundary_components() const {
  // Boundary walk: leaving along d, the next departure is the successor of
  // d^-1 in sigma.
  int n2 = 2 * rank_;
  std::vector<bool> visited(n2, false);
  int cycles = 0;
  for (int start = 0; start < n2; ++start) {
    if (visited[start]) continue;
    ++cycles;
    int cur = start;
    while (!visited[cur]) {
      visited[cur] = true;
      Letter d = sigma_[cur];
      cur = (position(d.inverse()) + 1) % n2;
    }
  }
  return cycles;
}

std::string RibbonRose::str() const {
  std::string out = "rose:";
  for (std::size_t i = 0; i < sigma_.size(); ++i) {
    if (i) out += ',';
    out += letter_str(sigma_[i]);
  }
  return out;
}

std::vector<RibbonRose> enumerate_rank2_roses() {
  // Fix a1 first and enumerate the 3! orders of the rest; identify each
  // order with its reversal.
  std::vector<Letter> rest{{0, true}, {1, false}, {1, true}};
  std::sort(rest.begin(), rest.end());
  std::vector<std::vector<Letter>> reps;
  do {
    std::vector<Letter> order{Letter{0, false}};
    order.insert(order.end(), rest.begin(), rest.end());
    std::vector<Letter> mirror{Letter{0, false}};
    for (auto it = rest.rbegin(); it != rest.rend(); ++it) mirror.push_back(*it);
    if (std::find(reps.begin(), reps.end(), mirror) == reps.end()) {
      reps.push_back(order);
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  std::vector<RibbonRose> roses;
  roses.reserve(reps.size());
  for (auto& r : reps) roses.push_back(RibbonRose::from_order(std::move(r)));
  return roses;
}

}  // namespace loops
