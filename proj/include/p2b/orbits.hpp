#pragma once

// The Z-action of twisting on Chern pairs and its orbit invariants.

#include <optional>

#include "p2b/chern_pair.hpp"

namespace p2b::orbits {

// Representative with c1 in {0, -1} plus the twist that reaches it.
struct NormalForm {
  ChernPair rep;
  Int l_used = 0;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

// The convention for representatives, recorded in machine output.
inline constexpr const char* kConvention = "c1 in {0,-1}";

// c1^2 - 4 c2; unchanged by twisting.
Int discriminant(const ChernPair& p);

NormalForm normalize(const ChernPair& p);

// Decided by c1 parity and discriminant.
bool same_orbit(const ChernPair& p, const ChernPair& q);

// The only possible twist is l = (q.c1 - p.c1) / 2; returned when it works.
std::optional<Int> orbit_witness(const ChernPair& p, const ChernPair& q);

} // namespace p2b::orbits
