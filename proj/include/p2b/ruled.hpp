#pragma once

// What the P^1-bundle structure of P(E) looks like through integers: its
// restriction over lines, two anticanonical intersection numbers, the
// uniqueness bound for the bundle structure, and Betti numbers.

#include <array>

#include "p2b/chern_pair.hpp"

namespace p2b::ruled {

// Restriction of E to a line: O(a) + O(c1 - a).
struct LineSplitting {
  Int a = 0;
  Int c1 = 0;

  std::array<Int, 2> degrees() const { return {a, c1 - a}; }
  // Index of the Hirzebruch surface P(E|line): 2a - c1.
  Int hirzebruch_index() const;
};

struct HirzebruchType {
  Int index = 0;  // |c1 - 2d|
  Int signed_index = 0; // c1 - 2d
};

// Hirzebruch surface over a generic line for a bundle of splitting type d.
HirzebruchType generic_hirzebruch_type(Int c1, Int d);
inline Int generic_hirzebruch(Int c1, Int d) { return generic_hirzebruch_type(c1, d).index; }

// -K_X on the negative section of the restricted surface F_b: -b - 1.
Int neg_section_anticanonical(Int b);

// -K_X on a fiber of either ruling.
constexpr Int fiber_anticanonical() { return 2; }

// d > 3 + c1: above this bound the P^1-bundle structure is unique up to
// automorphisms of P^2. Requires c1 in {0, -1}.
bool unique_structure(Int c1_norm, Int d);

inline constexpr std::array<Int, 7> kBettiProfile{1, 0, 2, 0, 2, 0, 1};

constexpr std::array<Int, 7> betti_profile() { return kBettiProfile; }

} // namespace p2b::ruled
