#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "loops/word.hpp"

namespace loops {

// An oriented surface with free fundamental group, modeled as a rose with
// one vertex and `rank` bands: sigma is the positive circular order of the
// 2*rank departure directions at the vertex, stored cut at a1.
class RibbonRose {
 public:
  static RibbonRose from_order(std::vector<Letter> sigma);
  static RibbonRose pants();
  static RibbonRose torus1();
  static RibbonRose genus_boundary(int genus, int boundary);
  static RibbonRose parse(std::string_view spec);

  int rank() const { return rank_; }
  const std::vector<Letter>& sigma() const { return sigma_; }
  int position(Letter d) const;
  // Steps from d to e in the positive direction, in {1, ..., 2n-1} for d != e.
  int distance(Letter d, Letter e) const;

  int boundary_components() const;
  std::string str() const;

  bool operator==(const RibbonRose&) const = default;

 private:
  int rank_ = 0;
  std::vector<Letter> sigma_;
  std::vector<int> pos_;  // indexed by 2*index + inverted
};

// The three circular orders of the four rank-2 directions up to rotation and
// reflection, each cut at a1. Reflection reverses orientation, which flips
// crossing signs but no counts.
std::vector<RibbonRose> enumerate_rank2_roses();

}  // namespace loops
