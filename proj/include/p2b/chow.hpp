#pragma once

// Exact arithmetic in CH*(P^2) = Z[H]/(H^3) and in the Chow ring of a
// projectivized rank-two bundle, Z[H,tau]/(H^3, tau^2 + c1 H tau + c2 H^2).

#include <array>

#include <json.hpp>

#include "p2b/chern_pair.hpp"

namespace p2b::chow {

// a0 + a1 H + a2 H^2.
struct P2Class {
  std::array<Int, 3> coeffs{};

  friend bool operator==(const P2Class&, const P2Class&) = default;
};

P2Class p2_add(const P2Class& x, const P2Class& y);
P2Class p2_mul(const P2Class& x, const P2Class& y);

// Inverse of a unit (constant term +1 or -1) by truncated geometric series.
P2Class p2_unit_inverse(const P2Class& x);

// Degree of a nonzero homogeneous class; nullopt for zero or mixed classes.
std::optional<int> p2_degree(const P2Class& x);

// Basis of the projective-bundle ring, in serialization order.
enum class Basis : int { One = 0, H = 1, H2 = 2, Tau = 3, HTau = 4, H2Tau = 5 };

inline constexpr std::array<int, 6> kBasisDegree{0, 1, 2, 1, 2, 3};
inline constexpr std::array<const char*, 6> kBasisNames{"1", "H", "H2", "tau", "Htau", "H2tau"};

// The ring is fixed by the bundle's Chern pair through tau^2 = -c1 H tau - c2 H^2.
struct PBRing {
  ChernPair chern;

  friend bool operator==(const PBRing&, const PBRing&) = default;
};

struct PBClass {
  PBRing ring;
  std::array<Int, 6> coeffs{};

  static PBClass zero(const PBRing& ring) { return {ring, {}}; }
  static PBClass basis(const PBRing& ring, Basis b);
  // a H + b tau.
  static PBClass divisor(const PBRing& ring, Int a, Int b);

  Int operator[](Basis b) const { return coeffs[static_cast<int>(b)]; }

  friend bool operator==(const PBClass&, const PBClass&) = default;
};

// Order in which the two rewriting rules are applied during multiplication.
// Both must give the same normal form; tests compare them.
enum class Reduction {
  TauFirst,      // substitute tau^2, then drop H^k for k >= 3
  TruncateFirst, // drop H^k for k >= 3, substitute tau^2, drop again
};

PBClass pb_add(const PBClass& x, const PBClass& y);
PBClass pb_scale(Int k, const PBClass& x);
PBClass pb_mul(const PBRing& ring, const PBClass& x, const PBClass& y,
               Reduction order = Reduction::TauFirst);

// Degree of a nonzero homogeneous class; nullopt for zero or mixed classes.
std::optional<int> pb_degree(const PBClass& x);

// Coefficient of H^2 tau in (a H + b tau)^3, computed by ring multiplication.
Int triple_self_product(const PBRing& ring, Int a, Int b);

// "Z[H,tau]/<H^3, tau^2 + c1*H*tau + c2*H^2>" with the numbers filled in.
std::string presentation(const PBRing& ring);

nlohmann::json to_json(const P2Class& x);
nlohmann::json to_json(const PBClass& x);

} // namespace p2b::chow
