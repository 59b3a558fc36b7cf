#include "p2b/orbits.hpp"

#include "p2b/chern.hpp"

namespace p2b::orbits {

using namespace p2b::checked;

Int discriminant(const ChernPair& p) { return sub(sq(p.c1), mul(4, p.c2)); }

NormalForm normalize(const ChernPair& p) {
  const Int l = mod(p.c1, 2) == 0 ? neg(p.c1 / 2) : (sub(-1, p.c1)) / 2;
  return {chern::twist(p, l), l};
}

bool same_orbit(const ChernPair& p, const ChernPair& q) {
  return mod(p.c1, 2) == mod(q.c1, 2) && discriminant(p) == discriminant(q);
}

std::optional<Int> orbit_witness(const ChernPair& p, const ChernPair& q) {
  const Int delta = sub(q.c1, p.c1);
  if (mod(delta, 2) != 0)
    return std::nullopt;
  const Int l = delta / 2;
  if (chern::twist(p, l) != q)
    return std::nullopt;
  return l;
}

} // namespace p2b::orbits
