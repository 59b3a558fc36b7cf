#include "p2b/moduli.hpp"

namespace p2b::moduli {

using namespace p2b::checked;

namespace {

void require_normalized(const ChernPair& p) {
  if (p.c1 != 0 && p.c1 != -1)
    throw DomainError("c1 = " + std::to_string(p.c1) +
                      " is outside the convention c1 in {0,-1}; normalize the pair first");
}

void require_type_order(Int d, Int e) {
  if (!(d > e && e >= -1))
    throw DomainError("splitting types must satisfy d > e >= -1 (got d=" + std::to_string(d) +
                      ", e=" + std::to_string(e) + ")");
}

} // namespace

std::string to_string(const ModuliDim& m) {
  if (std::holds_alternative<Empty>(m))
    return "empty";
  if (std::holds_alternative<Point>(m))
    return "point";
  return std::to_string(std::get<Dim>(m).n);
}

nlohmann::json to_json(const ModuliDim& m) {
  if (const auto* dim = std::get_if<Dim>(&m))
    return dim->n;
  return to_string(m);
}

Int q1(const ChernPair& p, Int d) { return add(sub(sq(d), mul(d, p.c1)), p.c2); }

ModuliDim moduli_dim(const ChernPair& p, Int d) {
  require_normalized(p);
  if (d < 0)
    throw DomainError("moduli_dim: splitting type d must be >= 0");
  const Int q = q1(p, d);
  if (q < 0)
    return Empty{};
  if (q == 0)
    return Point{};
  return Dim{sub(mul(3, q), 1)};
}

Int p_poly(const ChernPair& p, Int x) {
  return sub(mul(sub(x, 1), sub(sub(x, 2), p.c1)), p.c2);
}

Int gamma(const ChernPair& p, Int d, Int e) {
  require_type_order(d, e);
  if (e == -1 || (e == 0 && p.c1 == 0 && p.c2 == 0))
    return p_poly(p, d);
  return add(sub(p_poly(p, d), p_poly(p, e)), 1);
}

Int binomial2(Int n) { return n < 2 ? 0 : mul(n, n - 1) / 2; }

bool equality_component_condition(const ChernPair& p, Int d, Int e) {
  require_type_order(d, e);
  return binomial2(sub(sub(d, e), 1)) >= q1(p, e);
}

QValues q_values(const ChernPair& p, Int d, Int e, Q3Reading reading) {
  require_type_order(d, e);
  QValues q;
  q.q1 = q1(p, d);
  q.q2 = sub(mul(3, q.q1), 1);
  const Int b = binomial2(sub(sub(d, e), 1));
  if (reading == Q3Reading::Inequality)
    q.q3 = sub(b, q1(p, e));
  else
    q.q3 = add(sub(sub(b, sq(e)), mul(e, p.c1)), p.c2);
  q.q5 = gamma(p, d, e);
  q.q4 = sub(q.q2, q.q5);
  return q;
}

bool codim_bound_exceeds_dim(const ChernPair& p, Int d, Int e) {
  const Int q = q1(p, d);
  return q > 0 && gamma(p, d, e) > sub(mul(3, q), 1);
}

bool threshold_condition(const ChernPair& p, Int d) {
  if (d < 0 || q1(p, d) <= 0)
    return false;
  for (Int e = -1; e < d; ++e)
    if (gamma(p, d, e) <= 0)
      return false;
  return true;
}

Int stromme_threshold(const ChernPair& p) {
  require_normalized(p);
  // For d >= 4 and e >= 0, P(d) - P(e) >= 0 because P increases past its
  // vertex (3 + c1)/2 and P(d) - P(-1) = (d + 1)(d - 4 - c1). There the
  // condition reduces to q1(d) > 0 and P(d) > 0, both increasing in d, so
  // the failures with d >= 4 form an initial segment found by bisection.
  Int last_fail = -1;
  for (Int d = 0; d < 4; ++d)
    if (!threshold_condition(p, d))
      last_fail = d;
  auto fails = [&](Int d) { return q1(p, d) <= 0 || p_poly(p, d) <= 0; };
  if (fails(4)) {
    Int lo = 4, hi = 4 + checked::abs(p.c2); // hi lies past every real root
    while (fails(hi))
      hi = mul(hi, 2);
    while (hi - lo > 1) {
      const Int mid = lo + (hi - lo) / 2;
      (fails(mid) ? lo : hi) = mid;
    }
    last_fail = lo;
  }
  return add(last_fail, 1);
}

std::vector<Int> non_cobordant_types(const ChernPair& p, Int k) {
  require_normalized(p);
  if (k <= 0)
    throw DomainError("non_cobordant_types: count must be positive");
  const Int start = std::max(stromme_threshold(p), add(4, p.c1));
  std::vector<Int> types;
  types.reserve(static_cast<std::size_t>(k));
  for (Int i = 0; i < k; ++i) {
    const Int d = add(start, i);
    if (!threshold_condition(p, d))
      throw ConsistencyError("splitting type " + std::to_string(d) + " fails the threshold condition");
    types.push_back(d);
  }
  return types;
}

ModuliRow moduli_row(const ChernPair& p, Int d) {
  ModuliRow row{d, q1(p, d), moduli_dim(p, d), {}};
  for (Int e = -1; e < d; ++e)
    row.gamma.emplace(e, gamma(p, d, e));
  return row;
}

} // namespace p2b::moduli
