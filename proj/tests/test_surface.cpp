#include <doctest.h>

#include <stdexcept>

#include "loops/surface.hpp"

using namespace loops;

TEST_CASE("parse_surface") {
  RibbonRose r = RibbonRose::parse("rose:a,b,A,B");
  CHECK(r.rank() == 2);
  CHECK(r == RibbonRose::torus1());
  CHECK(RibbonRose::parse("pants").str() == "rose:a,A,b,B");
  CHECK(RibbonRose::parse("torus1").str() == "rose:a,b,A,B");
  CHECK_THROWS_AS(RibbonRose::parse("rose:a,b,A"), std::invalid_argument);
  CHECK_THROWS_AS(RibbonRose::parse("rose:a,b,A,b"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(RibbonRose::parse("genus=1,boundary=0"),
                       "closed surfaces unsupported except via torus module",
                       std::invalid_argument);
  CHECK_THROWS_AS(RibbonRose::parse("nonsense"), std::invalid_argument);
}

TEST_CASE("standard constructors") {
  CHECK(RibbonRose::genus_boundary(1, 1) == RibbonRose::torus1());
  CHECK(RibbonRose::genus_boundary(0, 3) == RibbonRose::pants());
  CHECK(RibbonRose::genus_boundary(2, 1).rank() == 4);
  CHECK(RibbonRose::genus_boundary(1, 3).rank() == 4);
  for (int g = 0; g <= 3; ++g) {
    for (int rr = 1; rr <= 4; ++rr) {
      if (2 * g + rr - 1 <= 0) continue;
      RibbonRose rose = RibbonRose::genus_boundary(g, rr);
      CHECK(static_cast<int>(rose.sigma().size()) == 2 * rose.rank());
      CHECK(rose.boundary_components() == rr);
      CHECK(RibbonRose::parse(rose.str()) == rose);
    }
  }
}

TEST_CASE("sigma positions stored cut at a1") {
  RibbonRose r = RibbonRose::parse("rose:b,B,a,A");
  CHECK(r.sigma().front() == Letter{0, false});
  CHECK(r.str() == "rose:a,A,b,B");
  CHECK(r.position(Letter{0, false}) == 0);
  CHECK(r.distance(Letter{0, false}, Letter{0, true}) == 1);
}

TEST_CASE("enumerate_rank2_roses") {
  auto roses = enumerate_rank2_roses();
  CHECK(roses.size() == 3);
  bool has_pants = false, has_torus = false;
  for (const auto& r : roses) {
    CHECK(r.sigma().front() == Letter{0, false});
    CHECK(RibbonRose::parse(r.str()) == r);
    if (r == RibbonRose::pants()) has_pants = true;
    if (r == RibbonRose::torus1()) has_torus = true;
  }
  CHECK(has_pants);
  CHECK(has_torus);
}

TEST_CASE("boundary walk") {
  CHECK(RibbonRose::pants().boundary_components() == 3);
  CHECK(RibbonRose::torus1().boundary_components() == 1);
  CHECK(RibbonRose::parse("rose:a,A,B,b").boundary_components() == 3);
}
