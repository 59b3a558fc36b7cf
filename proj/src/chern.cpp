#include "p2b/chern.hpp"

namespace p2b::chern {

using namespace p2b::checked;

ChernPair twist(const ChernPair& p, Int l) {
  return {add(p.c1, mul(2, l)), add(add(p.c2, mul(l, p.c1)), sq(l))};
}

chow::P2Class total_chern(const ChernPair& p) { return {{1, p.c1, p.c2}}; }

chow::P2Class line_bundle_chern(Int k) { return {{1, k, 0}}; }

ChernPair monad_cohomology_chern(const MonadSpec& m) {
  const Int c1 = m.c1_total();
  const auto sub_c = line_bundle_chern(sub(c1, m.d));
  const auto quot_c = line_bundle_chern(m.d);
  const auto middle = chow::p2_mul(chow::p2_mul(sub_c, total_chern(m.bundle)), quot_c);
  const auto result =
      chow::p2_mul(chow::p2_mul(middle, chow::p2_unit_inverse(sub_c)), chow::p2_unit_inverse(quot_c));
  if (result.coeffs[0] != 1)
    throw ConsistencyError("monad cohomology has total Chern class with constant term " +
                           std::to_string(result.coeffs[0]));
  return {result.coeffs[1], result.coeffs[2]};
}

SerreLength serre_length(const ChernPair& p, Int n) {
  const Int len = add(sub(sq(n), mul(n, p.c1)), p.c2);
  return {len, len < 0};
}

CharClasses char_classes(const ChernPair& p) {
  return {mod(p.c1, 2), sub(sq(p.c1), mul(2, p.c2))};
}

nlohmann::json to_json(const ChernPair& p) { return {{"c1", p.c1}, {"c2", p.c2}}; }

ChernPair pair_from_json(const nlohmann::json& j) {
  return {j.at("c1").get<Int>(), j.at("c2").get<Int>()};
}

} // namespace p2b::chern
