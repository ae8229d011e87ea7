#pragma once

#include <random>
#include <string>
#include <vector>

#include "loops/bracket.hpp"
#include "loops/surface.hpp"
#include "loops/torus.hpp"

namespace loops::verify {

struct PropertyReport {
  std::string name;
  bool pass = false;
  long cases = 0;
  std::string detail;  // counterexample or summary; deterministic per seed
};

struct Report {
  std::vector<PropertyReport> properties;

  bool all_pass() const;
  std::string text() const;  // byte-stable for a fixed seed and budget
};

// Deterministic generators used by the oracle suites.
Word random_word(std::mt19937_64& rng, int rank, int max_len);
CyclicWord random_cyclic_word(std::mt19937_64& rng, int rank, int max_len);
FreeClass random_class(std::mt19937_64& rng, int rank, int max_root_len,
                       int max_exp);

// The rank-2 rose on which the bundled example pair attains minimal
// intersection 2 with two reduced terms, found by scanning the three roses.
RibbonRose pinned_rose();

PropertyReport check_simconj_oracle(unsigned long seed, long cases);
PropertyReport check_theorem1_no_cancellation(unsigned long seed, long cases);
PropertyReport check_theorem2_identity(unsigned long seed, long cases);
PropertyReport check_power_law(unsigned long seed, long cases);
PropertyReport check_goldman_le_amr(unsigned long seed, long cases);
PropertyReport check_skew_symmetry(unsigned long seed, long cases);
PropertyReport check_equal_class_formula(unsigned long seed, long cases);
PropertyReport check_torus_pairing(unsigned long seed, long cases);
PropertyReport check_example_fixture();
PropertyReport check_example_end_to_end();

// The suite behind `loopcalc verify`: oracle comparison, the bracket
// identity fuzzes, and the pinned example fixture.
Report run(unsigned long seed, long budget);

}  // namespace loops::verify
