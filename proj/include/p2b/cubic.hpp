#pragma once

// Binary cubic forms, the Picard cubic form of a projectivized bundle, and the
// GL2(Z) substitution action.

#include <array>

#include <json.hpp>

#include "p2b/chern_pair.hpp"

namespace p2b::cubic {

// A x^3 + B x^2 y + C x y^2 + D y^3.
struct BinaryCubicForm {
  Int A = 0, B = 0, C = 0, D = 0;

  std::array<Int, 4> coeffs() const { return {A, B, C, D}; }

  friend bool operator==(const BinaryCubicForm&, const BinaryCubicForm&) = default;
};

// Integer 2x2 matrix with determinant +1 or -1. Acts on forms by substitution:
// (f . g)(x, y) = f(m00 x + m01 y, m10 x + m11 y).
class UnimodularMatrix {
public:
  // Throws DomainError unless det = +-1.
  UnimodularMatrix(Int m00, Int m01, Int m10, Int m11);

  static UnimodularMatrix identity() { return {1, 0, 0, 1}; }

  Int m00() const { return m_[0]; }
  Int m01() const { return m_[1]; }
  Int m10() const { return m_[2]; }
  Int m11() const { return m_[3]; }
  Int det() const;
  const std::array<Int, 4>& entries() const { return m_; }

  friend UnimodularMatrix operator*(const UnimodularMatrix& g, const UnimodularMatrix& h);
  friend bool operator==(const UnimodularMatrix&, const UnimodularMatrix&) = default;

private:
  std::array<Int, 4> m_;
};

Int determinant(Int m00, Int m01, Int m10, Int m11);

Int form_eval(const BinaryCubicForm& f, Int x, Int y);

// a H + b tau  |->  (a H + b tau)^3 = 3a^2 b - 3 c1 a b^2 + (c1^2 - c2) b^3, variables (a, b).
BinaryCubicForm picard_cubic(const ChernPair& p);

// 18ABCD - 4B^3 D + B^2 C^2 - 4 A C^3 - 27 A^2 D^2.
Int cubic_discriminant_standard(const BinaryCubicForm& f);

// c1^2 - 4 c2, after checking that the classical discriminant of the Picard
// cubic equals -27 times it. Throws ConsistencyError if not.
Int chern_discriminant(const ChernPair& p);

BinaryCubicForm transform_form(const BinaryCubicForm& f, const UnimodularMatrix& g);

nlohmann::json to_json(const BinaryCubicForm& f);
nlohmann::json to_json(const UnimodularMatrix& g);

} // namespace p2b::cubic
