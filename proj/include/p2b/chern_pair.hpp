#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "p2b/integer.hpp"

namespace p2b {

// Chern classes (c1, c2) of a rank-two bundle on the projective plane, in units
// of H and H^2. Every integer pair occurs, and the pair determines the bundle
// up to the invariants this library cares about.
struct ChernPair {
  Int c1 = 0;
  Int c2 = 0;

  friend constexpr auto operator<=>(const ChernPair&, const ChernPair&) = default;
};

std::string to_string(const ChernPair& p);

// Parses "c1,c2" with no whitespace; returns nullopt on malformed input.
std::optional<ChernPair> parse_pair(std::string_view text);

} // namespace p2b
