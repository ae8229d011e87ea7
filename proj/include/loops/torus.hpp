#pragma once

#include <cstdlib>

namespace loops {

// A free homotopy class on the torus, identified with its homology class.
struct TorusClass {
  long m = 0;
  long l = 0;

  bool operator==(const TorusClass&) const = default;
};

// |m1*l2 - l1*m2|: the minimal intersection number on the torus.
inline long torus_min_intersection(TorusClass c1, TorusClass c2) {
  return std::labs(c1.m * c2.l - c1.l * c2.m);
}

}  // namespace loops
