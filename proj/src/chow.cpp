#include "p2b/chow.hpp"

#include <sstream>

namespace p2b::chow {

using namespace p2b::checked;

P2Class p2_add(const P2Class& x, const P2Class& y) {
  P2Class r;
  for (int i = 0; i < 3; ++i)
    r.coeffs[i] = add(x.coeffs[i], y.coeffs[i]);
  return r;
}

P2Class p2_mul(const P2Class& x, const P2Class& y) {
  P2Class r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; i + j < 3; ++j)
      r.coeffs[i + j] = add(r.coeffs[i + j], mul(x.coeffs[i], y.coeffs[j]));
  return r;
}

P2Class p2_unit_inverse(const P2Class& x) {
  const Int a0 = x.coeffs[0];
  if (a0 != 1 && a0 != -1)
    throw DomainError("p2_unit_inverse: constant term must be +1 or -1, got " + std::to_string(a0));
  // x = a0 (1 + n) with n nilpotent of order 3, so x^-1 = a0 (1 - n + n^2).
  P2Class n{{0, mul(a0, x.coeffs[1]), mul(a0, x.coeffs[2])}};
  P2Class n2 = p2_mul(n, n);
  P2Class inv{{1, neg(n.coeffs[1]), sub(n2.coeffs[2], n.coeffs[2])}};
  for (auto& c : inv.coeffs)
    c = mul(a0, c);
  return inv;
}

std::optional<int> p2_degree(const P2Class& x) {
  std::optional<int> deg;
  for (int i = 0; i < 3; ++i) {
    if (x.coeffs[i] == 0)
      continue;
    if (deg)
      return std::nullopt;
    deg = i;
  }
  return deg;
}

PBClass PBClass::basis(const PBRing& ring, Basis b) {
  PBClass x = zero(ring);
  x.coeffs[static_cast<int>(b)] = 1;
  return x;
}

PBClass PBClass::divisor(const PBRing& ring, Int a, Int b) {
  PBClass x = zero(ring);
  x.coeffs[static_cast<int>(Basis::H)] = a;
  x.coeffs[static_cast<int>(Basis::Tau)] = b;
  return x;
}

namespace {

void require_same_ring(const PBClass& x, const PBClass& y) {
  if (!(x.ring == y.ring))
    throw DomainError("classes belong to different rings " + to_string(x.ring.chern) + " and " +
                      to_string(y.ring.chern));
}

// Unreduced product: coefficient of H^i tau^j with i in [0,4], j in [0,2].
using Dense = std::array<std::array<Int, 3>, 5>;

Dense dense_product(const PBClass& x, const PBClass& y) {
  // Split each class into H-polynomials in front of tau^0 and tau^1.
  auto hpart = [](const PBClass& c, int j) {
    return std::array<Int, 3>{c.coeffs[3 * j], c.coeffs[3 * j + 1], c.coeffs[3 * j + 2]};
  };
  Dense out{};
  for (int jx = 0; jx < 2; ++jx) {
    auto px = hpart(x, jx);
    for (int jy = 0; jy < 2; ++jy) {
      auto py = hpart(y, jy);
      for (int ix = 0; ix < 3; ++ix)
        for (int iy = 0; iy < 3; ++iy)
          out[ix + iy][jx + jy] = add(out[ix + iy][jx + jy], mul(px[ix], py[iy]));
    }
  }
  return out;
}

void truncate_h(Dense& d) {
  for (int i = 3; i < 5; ++i)
    d[i] = {};
}

// tau^2 H^i -> -c1 H^{i+1} tau - c2 H^{i+2}. Terms landing past H^4 are already
// zero modulo H^3 and are dropped.
void substitute_tau_squared(Dense& d, const ChernPair& chern) {
  for (int i = 0; i < 5; ++i) {
    const Int k = d[i][2];
    if (k == 0)
      continue;
    d[i][2] = 0;
    if (i + 1 < 5)
      d[i + 1][1] = sub(d[i + 1][1], mul(chern.c1, k));
    if (i + 2 < 5)
      d[i + 2][0] = sub(d[i + 2][0], mul(chern.c2, k));
  }
}

} // namespace

PBClass pb_add(const PBClass& x, const PBClass& y) {
  require_same_ring(x, y);
  PBClass r = PBClass::zero(x.ring);
  for (int i = 0; i < 6; ++i)
    r.coeffs[i] = add(x.coeffs[i], y.coeffs[i]);
  return r;
}

PBClass pb_scale(Int k, const PBClass& x) {
  PBClass r = x;
  for (auto& c : r.coeffs)
    c = mul(k, c);
  return r;
}

PBClass pb_mul(const PBRing& ring, const PBClass& x, const PBClass& y, Reduction order) {
  if (!(x.ring == ring) || !(y.ring == ring))
    throw DomainError("pb_mul: operand does not belong to ring " + to_string(ring.chern));
  Dense d = dense_product(x, y);
  if (order == Reduction::TauFirst) {
    substitute_tau_squared(d, ring.chern);
    truncate_h(d);
  } else {
    truncate_h(d);
    substitute_tau_squared(d, ring.chern);
    truncate_h(d);
  }
  PBClass r = PBClass::zero(ring);
  for (int i = 0; i < 3; ++i) {
    r.coeffs[i] = d[i][0];
    r.coeffs[3 + i] = d[i][1];
  }
  return r;
}

std::optional<int> pb_degree(const PBClass& x) {
  std::optional<int> deg;
  for (int i = 0; i < 6; ++i) {
    if (x.coeffs[i] == 0)
      continue;
    if (deg && *deg != kBasisDegree[i])
      return std::nullopt;
    deg = kBasisDegree[i];
  }
  return deg;
}

Int triple_self_product(const PBRing& ring, Int a, Int b) {
  const PBClass x = PBClass::divisor(ring, a, b);
  const PBClass cube = pb_mul(ring, pb_mul(ring, x, x), x);
  return cube[Basis::H2Tau];
}

std::string presentation(const PBRing& ring) {
  std::ostringstream os;
  os << "Z[H,tau]/<H^3, tau^2 + (" << ring.chern.c1 << ")*H*tau + (" << ring.chern.c2 << ")*H^2>";
  return os.str();
}

nlohmann::json to_json(const P2Class& x) {
  return {{"basis", {"1", "H", "H2"}}, {"coeffs", x.coeffs}};
}

nlohmann::json to_json(const PBClass& x) {
  return {{"basis", kBasisNames}, {"coeffs", x.coeffs}};
}

} // namespace p2b::chow
