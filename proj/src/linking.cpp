#include "loops/linking.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace loops {

namespace {

// Crossing decision for one ordered pass pair, on precomputed coordinate
// streams of equal depth. A pair of taut strands crosses iff their four
// boundary rays interleave; of the several vertex corners a fellow-traveling
// pair shares, the crossing is charged to the corner where the first
// strand's backward edge leaves the shared path, so each strand pair is
// counted exactly once per orientation.
struct PairDecision {
  bool linked = false;
  bool charged = false;
  int sign = 0;
};

struct PassStreams {
  Pass pass;
  std::vector<int> in;
  std::vector<int> out;
};

PairDecision decide(const PassStreams& p1, const PassStreams& p2) {
  std::array<const std::vector<int>*, 4> rays{&p1.in, &p1.out, &p2.in, &p2.out};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (*rays[i] == *rays[j]) throw std::logic_error("root violation");
    }
  }
  std::array<int, 4> order{0, 1, 2, 3};
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return *rays[a] < *rays[b]; });
  auto strand = [](int ray_id) { return ray_id / 2; };
  PairDecision d;
  d.linked = strand(order[0]) != strand(order[1]) &&
             strand(order[1]) != strand(order[2]) &&
             strand(order[2]) != strand(order[3]);
  if (!d.linked) return d;
  // Read the positive circular order starting at I1 (ray id 0).
  int at = 0;
  while (order[at] != 0) ++at;
  int next = order[(at + 1) % 4];
  d.sign = next == 3 ? +1 : -1;  // (I1,O2,O1,I2) -> +1, (I1,I2,O1,O2) -> -1
  Letter back1 = p1.pass.in_ray.at(0);
  d.charged =
      back1 != p2.pass.in_ray.at(0) && back1 != p2.pass.out_ray.at(0);
  return d;
}

std::vector<PassStreams> word_streams(const CyclicWord& w, int word_id,
                                      const RibbonRose& rose, int depth) {
  std::vector<PassStreams> out;
  out.reserve(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    PassStreams ps;
    ps.pass = make_pass(w, word_id, static_cast<int>(k));
    ps.in = ray_coordinates(ps.pass.in_ray, rose, depth);
    ps.out = ray_coordinates(ps.pass.out_ray, rose, depth);
    out.push_back(std::move(ps));
  }
  return out;
}

int stream_depth(std::size_t n1, std::size_t n2) {
  return static_cast<int>(2 * std::lcm(n1, n2) + 2);
}

void check_rank(const CyclicWord& w, const RibbonRose& rose) {
  for (Letter l : w.letters()) {
    if (l.index >= rose.rank()) {
      throw std::invalid_argument("generator " + letter_str(l) +
                                  " out of range for rank " +
                                  std::to_string(rose.rank()));
    }
  }
}

}  // namespace

Ray make_ray(std::vector<Letter> preperiod, std::vector<Letter> period) {
  if (period.empty()) {
    throw std::invalid_argument("ray period must be nonempty");
  }
  auto check = [](Letter a, Letter b, const char* where) {
    if (a.is_inverse_of(b)) {
      throw std::invalid_argument(std::string("ray not reduced at ") + where);
    }
  };
  for (std::size_t i = 0; i + 1 < preperiod.size(); ++i) {
    check(preperiod[i], preperiod[i + 1], "preperiod");
  }
  for (std::size_t i = 0; i + 1 < period.size(); ++i) {
    check(period[i], period[i + 1], "period");
  }
  if (!preperiod.empty()) check(preperiod.back(), period.front(), "junction");
  check(period.back(), period.front(), "period wrap");
  return Ray{std::move(preperiod), std::move(period)};
}

Pass make_pass(const CyclicWord& w, int word_id, int position) {
  if (w.empty()) {
    throw std::invalid_argument("pass of an empty cyclic word");
  }
  long n = static_cast<long>(w.size());
  std::vector<Letter> out, in;
  out.reserve(w.size());
  in.reserve(w.size());
  for (long i = 0; i < n; ++i) {
    out.push_back(w.at_mod(position + i));
    in.push_back(w.at_mod(position - 1 - i).inverse());
  }
  Pass p;
  p.word_id = word_id;
  p.position = position;
  p.in_ray = make_ray({}, std::move(in));
  p.out_ray = make_ray({}, std::move(out));
  return p;
}

std::vector<int> ray_coordinates(const Ray& r, const RibbonRose& rose,
                                 int depth) {
  if (depth < 1) {
    throw std::invalid_argument("ray_coordinates needs depth >= 1");
  }
  std::vector<int> coords;
  coords.reserve(static_cast<std::size_t>(depth));
  coords.push_back(rose.position(r.at(0)));
  for (int k = 1; k < depth; ++k) {
    coords.push_back(rose.distance(r.at(static_cast<std::size_t>(k) - 1).inverse(),
                                   r.at(static_cast<std::size_t>(k))));
  }
  return coords;
}

std::strong_ordering compare_rays(const Ray& r1, const Ray& r2,
                                  const RibbonRose& rose) {
  // Streams of two eventually periodic rays that agree past both preperiods
  // and one common period are equal everywhere.
  long depth = static_cast<long>(r1.preperiod.size() + r2.preperiod.size()) +
               2 * static_cast<long>(std::lcm(r1.period.size(),
                                              r2.period.size())) +
               2;
  int c1 = rose.position(r1.at(0));
  int c2 = rose.position(r2.at(0));
  if (c1 != c2) return c1 <=> c2;
  for (long k = 1; k < depth; ++k) {
    auto i = static_cast<std::size_t>(k);
    int d1 = rose.distance(r1.at(i - 1).inverse(), r1.at(i));
    int d2 = rose.distance(r2.at(i - 1).inverse(), r2.at(i));
    if (d1 != d2) return d1 <=> d2;
  }
  return std::strong_ordering::equal;
}

std::vector<Crossing> crossings_between(const CyclicWord& w1,
                                        const CyclicWord& w2,
                                        const RibbonRose& rose) {
  if (w1.empty() || w2.empty()) {
    throw std::invalid_argument("crossings_between needs nonempty words");
  }
  check_rank(w1, rose);
  check_rank(w2, rose);
  CyclicWord r1 = primitive_root(w1).root;
  CyclicWord r2 = primitive_root(w2).root;
  if (r1 == r2 || r1 == r2.inverse()) {
    throw std::invalid_argument("use same-root path");
  }
  int depth = stream_depth(w1.size(), w2.size());
  auto s1 = word_streams(w1, 1, rose, depth);
  auto s2 = word_streams(w2, 2, rose, depth);
  std::vector<Crossing> out;
  for (const auto& p1 : s1) {
    for (const auto& p2 : s2) {
      PairDecision d = decide(p1, p2);
      if (d.charged) out.push_back(Crossing{p1.pass, p2.pass, d.sign});
    }
  }
  return out;  // loops above run in (k1, k2) order
}

std::vector<SelfCrossing> self_crossings(const CyclicWord& w,
                                         const RibbonRose& rose) {
  if (w.empty()) {
    throw std::invalid_argument("self_crossings of the empty word");
  }
  check_rank(w, rose);
  if (primitive_root(w).exponent != 1) {
    throw std::invalid_argument("use power formula");
  }
  long n = static_cast<long>(w.size());
  int depth = stream_depth(w.size(), w.size());
  auto streams = word_streams(w, 1, rose, depth);
  // Each geometric self-crossing is charged under exactly two ordered
  // (k, k') labelings, with opposite frame signs; keeping the positive one
  // yields one entry per crossing with a frame-canonical loop order.
  std::vector<SelfCrossing> out;
  for (long k = 0; k < n; ++k) {
    for (long kp = 0; kp < n; ++kp) {
      if (k == kp) continue;
      PairDecision d = decide(streams[static_cast<std::size_t>(k)],
                              streams[static_cast<std::size_t>(kp)]);
      if (!d.charged || d.sign != +1) continue;
      SelfCrossing sc;
      sc.k = static_cast<int>(k);
      sc.k_prime = static_cast<int>(kp);
      std::vector<Letter> h1, h2;
      for (long i = k; i % n != kp; ++i) h1.push_back(w.at_mod(i));
      for (long i = kp; i % n != k; ++i) h2.push_back(w.at_mod(i));
      sc.first_loop = Word(h1);
      sc.second_loop = Word(h2);
      out.push_back(std::move(sc));
    }
  }
  return out;
}

long self_crossing_count(const CyclicWord& w, const RibbonRose& rose) {
  return static_cast<long>(self_crossings(w, rose).size());
}

}  // namespace loops
