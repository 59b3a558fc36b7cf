#pragma once

// Numerology of the moduli spaces M(d) of bundles of pure splitting type d:
// their dimension, the codimension bounds gamma(d; e) for loci deformable to
// lower type, and the thresholds beyond which those bounds are all positive.
//
// Functions that take a normalized pair require c1 in {0, -1}; callers holding
// an arbitrary pair should pass orbits::normalize(p).rep.

#include <map>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "p2b/chern_pair.hpp"

namespace p2b::moduli {

struct Empty {
  friend bool operator==(const Empty&, const Empty&) = default;
};
struct Point {
  friend bool operator==(const Point&, const Point&) = default;
};
struct Dim {
  Int n = 0;
  friend bool operator==(const Dim&, const Dim&) = default;
};

using ModuliDim = std::variant<Empty, Point, Dim>;

std::string to_string(const ModuliDim& m);
nlohmann::json to_json(const ModuliDim& m);

struct QValues {
  Int q1 = 0, q2 = 0, q3 = 0, q4 = 0, q5 = 0;

  friend bool operator==(const QValues&, const QValues&) = default;
};

// How Q3 treats the e-dependent terms.
enum class Q3Reading {
  // binom(d-e-1, 2) - (e^2 - e c1 + c2), i.e. the existence inequality moved to one side.
  Inequality,
  // binom(d-e-1, 2) - e^2 - e c1 + c2, the literal printed polynomial (kept for audits).
  AsPrinted,
};

// d^2 - d c1 + c2.
Int q1(const ChernPair& p, Int d);

// Empty if q1 < 0, a point if q1 = 0, else of dimension 3 q1 - 1.
ModuliDim moduli_dim(const ChernPair& p, Int d);

// (x - 1)(x - 2 - c1) - c2.
Int p_poly(const ChernPair& p, Int x);

// P(d) when e = -1 or e = c1 = c2 = 0, otherwise P(d) - P(e) + 1. Needs d > e >= -1.
Int gamma(const ChernPair& p, Int d, Int e);

// n(n-1)/2 for n >= 2, zero below.
Int binomial2(Int n);

// binom(d-e-1, 2) >= e^2 - e c1 + c2. Needs d > e >= -1.
bool equality_component_condition(const ChernPair& p, Int d, Int e);

QValues q_values(const ChernPair& p, Int d, Int e, Q3Reading reading = Q3Reading::Inequality);

// True when M(d) is positive-dimensional and the codimension bound gamma(d; e)
// exceeds its dimension, so the locus deformable to type e must be empty.
bool codim_bound_exceeds_dim(const ChernPair& p, Int d, Int e);

// Whether q1(d) > 0 and gamma(d; e) > 0 for every -1 <= e < d.
bool threshold_condition(const ChernPair& p, Int d);

// Least t >= 0 such that threshold_condition holds for every d >= t. The
// condition is not monotone in d (for (0,1) it holds at d = 0 but fails at
// d = 1), so the least single d is not a threshold.
Int stromme_threshold(const ChernPair& p);

// k consecutive splitting types starting at max(threshold, 4 + c1).
std::vector<Int> non_cobordant_types(const ChernPair& p, Int k);

// One row of a moduli table: gamma keyed by e for every -1 <= e < d.
struct ModuliRow {
  Int d = 0;
  Int q1 = 0;
  ModuliDim dim;
  std::map<Int, Int> gamma;
};

ModuliRow moduli_row(const ChernPair& p, Int d);

} // namespace p2b::moduli
