#include "p2b/cubic.hpp"

#include "p2b/orbits.hpp"

namespace p2b::cubic {

using namespace p2b::checked;

Int determinant(Int m00, Int m01, Int m10, Int m11) { return sub(mul(m00, m11), mul(m01, m10)); }

UnimodularMatrix::UnimodularMatrix(Int m00, Int m01, Int m10, Int m11) : m_{m00, m01, m10, m11} {
  const Int d = determinant(m00, m01, m10, m11);
  if (d != 1 && d != -1)
    throw DomainError("matrix is not unimodular (determinant " + std::to_string(d) + ")");
}

Int UnimodularMatrix::det() const { return determinant(m_[0], m_[1], m_[2], m_[3]); }

UnimodularMatrix operator*(const UnimodularMatrix& g, const UnimodularMatrix& h) {
  return {add(mul(g.m00(), h.m00()), mul(g.m01(), h.m10())),
          add(mul(g.m00(), h.m01()), mul(g.m01(), h.m11())),
          add(mul(g.m10(), h.m00()), mul(g.m11(), h.m10())),
          add(mul(g.m10(), h.m01()), mul(g.m11(), h.m11()))};
}

Int form_eval(const BinaryCubicForm& f, Int x, Int y) {
  const Int x2 = sq(x), y2 = sq(y);
  Int v = mul(f.A, mul(x2, x));
  v = add(v, mul(f.B, mul(x2, y)));
  v = add(v, mul(f.C, mul(x, y2)));
  v = add(v, mul(f.D, mul(y2, y)));
  return v;
}

BinaryCubicForm picard_cubic(const ChernPair& p) {
  return {0, 3, mul(-3, p.c1), sub(sq(p.c1), p.c2)};
}

Int cubic_discriminant_standard(const BinaryCubicForm& f) {
  const auto [A, B, C, D] = f.coeffs();
  Int v = mul(mul(mul(18, A), mul(B, C)), D);
  v = sub(v, mul(mul(4, mul(sq(B), B)), D));
  v = add(v, mul(sq(B), sq(C)));
  v = sub(v, mul(mul(4, A), mul(sq(C), C)));
  v = sub(v, mul(27, mul(sq(A), sq(D))));
  return v;
}

Int chern_discriminant(const ChernPair& p) {
  const Int disc = orbits::discriminant(p);
  const Int standard = cubic_discriminant_standard(picard_cubic(p));
  if (standard != mul(-27, disc))
    throw ConsistencyError("classical discriminant " + std::to_string(standard) +
                           " of the Picard cubic is not -27 * " + std::to_string(disc));
  return disc;
}

namespace {

// Homogeneous polynomial in (x, y) of degree <= 3, indexed by the power of y.
using Poly = std::array<Int, 4>;

Poly poly_mul_linear(const Poly& p, int deg, Int u, Int v) {
  Poly r{};
  for (int k = 0; k <= deg; ++k) {
    r[k] = add(r[k], mul(p[k], u));
    r[k + 1] = add(r[k + 1], mul(p[k], v));
  }
  return r;
}

} // namespace

BinaryCubicForm transform_form(const BinaryCubicForm& f, const UnimodularMatrix& g) {
  // X = m00 x + m01 y, Y = m10 x + m11 y; expand sum_k c_k X^{3-k} Y^k.
  const auto c = f.coeffs();
  Poly total{};
  for (int k = 0; k < 4; ++k) {
    Poly term{1, 0, 0, 0};
    int deg = 0;
    for (int i = 0; i < 3 - k; ++i, ++deg)
      term = poly_mul_linear(term, deg, g.m00(), g.m01());
    for (int i = 0; i < k; ++i, ++deg)
      term = poly_mul_linear(term, deg, g.m10(), g.m11());
    for (int j = 0; j < 4; ++j)
      total[j] = add(total[j], mul(c[k], term[j]));
  }
  return {total[0], total[1], total[2], total[3]};
}

nlohmann::json to_json(const BinaryCubicForm& f) {
  return {{"coeffs", f.coeffs()}, {"vars", {"a", "b"}}};
}

nlohmann::json to_json(const UnimodularMatrix& g) {
  return {{"rows", {{g.m00(), g.m01()}, {g.m10(), g.m11()}}}};
}

} // namespace p2b::cubic
