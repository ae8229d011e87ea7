#pragma once

#include <compare>
#include <vector>

#include "loops/conjugacy.hpp"
#include "loops/surface.hpp"
#include "loops/word.hpp"

namespace loops {

// An eventually periodic infinite reduced word, read as a ray leaving the
// base vertex. Junctions (preperiod/period and period wrap) must be reduced.
struct Ray {
  std::vector<Letter> preperiod;
  std::vector<Letter> period;

  Letter at(std::size_t i) const {
    if (i < preperiod.size()) return preperiod[i];
    return period[(i - preperiod.size()) % period.size()];
  }
};

Ray make_ray(std::vector<Letter> preperiod, std::vector<Letter> period);

// The corner of a taut loop at the vertex: position k of the cyclic word,
// with the backward ray x_{k-1}^-1 x_{k-2}^-1 ... and the forward ray
// x_k x_{k+1} ....
struct Pass {
  int word_id = 0;
  int position = 0;
  Ray in_ray;
  Ray out_ray;
};

Pass make_pass(const CyclicWord& w, int word_id, int position);

struct Crossing {
  Pass pass1;
  Pass pass2;
  int sign = 0;  // +1 or -1
};

// First `depth` coordinates of the ray's boundary address: c0 is the sigma
// position of the first letter; c_k is the positive sigma distance from
// y_k^-1 to y_{k+1}. Lexicographic order of the streams is the circular
// order of rays at the vertex, cut just before direction a1.
std::vector<int> ray_coordinates(const Ray& r, const RibbonRose& rose,
                                 int depth);

std::strong_ordering compare_rays(const Ray& r1, const Ray& r2,
                                  const RibbonRose& rose);

// Crossings of the taut representatives of two cyclic words with distinct
// primitive roots (also distinct after inversion). One crossing per linked
// pass pair, sorted by (k1, k2).
std::vector<Crossing> crossings_between(const CyclicWord& w1,
                                        const CyclicWord& w2,
                                        const RibbonRose& rose);

// A self-crossing of the taut representative of a primitive cyclic word:
// the two passes and the two based subloops at the crossing, ordered by the
// positive frame there (first = w[k..k'), second = w[k'..k)).
struct SelfCrossing {
  int k = 0;
  int k_prime = 0;
  Word first_loop;
  Word second_loop;
};

std::vector<SelfCrossing> self_crossings(const CyclicWord& w,
                                         const RibbonRose& rose);

long self_crossing_count(const CyclicWord& w, const RibbonRose& rose);

}  // namespace loops
