#include <doctest.h>

#include <cstdlib>

#include "p2b/moduli.hpp"

using namespace p2b;
using namespace p2b::moduli;

namespace {

// Reference threshold: evaluates P and gamma from their definitions for every
// d and e on a range well past all roots, with no shared helpers, and returns
// one more than the last failing d.
bool reference_condition(Int c1, Int c2, Int d) {
  auto P = [&](Int x) { return (x - 1) * (x - 2 - c1) - c2; };
  if (d * d - d * c1 + c2 <= 0)
    return false;
  for (Int e = -1; e < d; ++e) {
    const Int g = (e == -1 || (e == 0 && c1 == 0 && c2 == 0)) ? P(d) : P(d) - P(e) + 1;
    if (g <= 0)
      return false;
  }
  return true;
}

Int reference_threshold(Int c1, Int c2) {
  Int last_fail = -1;
  for (Int d = 0; d <= 4 * (std::abs(c2) + 10); ++d)
    if (!reference_condition(c1, c2, d))
      last_fail = d;
  return last_fail + 1;
}

} // namespace

TEST_CASE("q1") {
  CHECK(q1({0, 0}, 0) == 0);
  CHECK(q1({0, -1}, 0) == -1);
  CHECK(q1({0, 1}, 3) == 10);
}

TEST_CASE("moduli_dim examples") {
  CHECK(moduli_dim({0, 0}, 0) == ModuliDim{Point{}});
  CHECK(moduli_dim({0, -1}, 0) == ModuliDim{Empty{}});
  CHECK(moduli_dim({0, 1}, 0) == ModuliDim{Dim{2}});
  CHECK(to_string(moduli_dim({0, 1}, 0)) == "2");
  CHECK(to_json(moduli_dim({0, 0}, 0)) == "point");
  CHECK(to_json(moduli_dim({0, 1}, 0)) == 2);
}

TEST_CASE("moduli_dim rejects unnormalized input") {
  CHECK_THROWS_AS(moduli_dim({2, 1}, 0), DomainError);
  CHECK_THROWS_AS(moduli_dim({0, 0}, -1), DomainError);
  try {
    moduli_dim({1, 0}, 0);
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("normalize") != std::string::npos);
  }
}

TEST_CASE("moduli trichotomy follows the sign of q1") {
  for (Int c1 : {0, -1})
    for (Int c2 = -10; c2 <= 10; ++c2)
      for (Int d = 0; d <= 20; ++d) {
        const Int q = d * d - d * c1 + c2;
        const auto m = moduli_dim({c1, c2}, d);
        if (q < 0)
          CHECK(std::holds_alternative<Empty>(m));
        else if (q == 0)
          CHECK(std::holds_alternative<Point>(m));
        else {
          REQUIRE(std::holds_alternative<Dim>(m));
          CHECK(std::get<Dim>(m).n == 3 * q - 1);
          CHECK(std::get<Dim>(m).n >= 2);
        }
      }
}

TEST_CASE("p_poly") {
  CHECK(p_poly({0, 0}, 1) == 0);
  CHECK(p_poly({0, 0}, 3) == 2);
  CHECK(p_poly({-1, 2}, 4) == 7);
}

TEST_CASE("gamma") {
  CHECK(gamma({0, 0}, 3, -1) == 2);
  CHECK(gamma({0, 0}, 3, 0) == 2);
  CHECK(gamma({0, 0}, 3, 1) == 3);
  // The special branch needs c2 = 0 as well.
  CHECK(gamma({0, 1}, 3, 0) == p_poly({0, 1}, 3) - p_poly({0, 1}, 0) + 1);
  CHECK_THROWS_AS(gamma({0, 0}, 3, 3), DomainError);
  CHECK_THROWS_AS(gamma({0, 0}, 3, -2), DomainError);
}

TEST_CASE("binomial2 and the equality-component condition") {
  CHECK(binomial2(3) == 3);
  CHECK(binomial2(1) == 0);
  CHECK(binomial2(-4) == 0);
  CHECK(equality_component_condition({0, 0}, 5, 1));
  CHECK_FALSE(equality_component_condition({0, 0}, 2, 1));
  CHECK(equality_component_condition({0, 3}, 6, 0));
  CHECK_THROWS_AS(equality_component_condition({0, 0}, 1, 1), DomainError);
}

TEST_CASE("q_values examples") {
  CHECK(q_values({0, 0}, 5, 1) == QValues{25, 74, 2, 61, 13});
  CHECK(q_values({0, 0}, 3, 0) == QValues{9, 26, 1, 24, 2});
  CHECK(q_values({0, -1}, 0, -1).q1 == -1);
  CHECK_THROWS_AS(q_values({0, 0}, 0, 0), DomainError);
}

TEST_CASE("Q3 readings differ only in the e-terms") {
  // d=6, e=1: binom(4,2) = 6.
  const auto ineq = q_values({0, 3}, 6, 1, Q3Reading::Inequality);
  const auto printed = q_values({0, 3}, 6, 1, Q3Reading::AsPrinted);
  CHECK(ineq.q3 == 6 - (1 - 0 + 3));
  CHECK(printed.q3 == 6 - 1 - 0 + 3);
  CHECK(ineq.q1 == printed.q1);
  CHECK(ineq.q5 == printed.q5);
}

TEST_CASE("Q4 = Q2 - Q5") {
  for (Int c1 : {0, -1})
    for (Int c2 = -10; c2 <= 10; ++c2)
      for (Int d = 0; d <= 15; ++d)
        for (Int e = -1; e < d; ++e) {
          const auto q = q_values({c1, c2}, d, e);
          CHECK(q.q4 == q.q2 - q.q5);
          CHECK(q.q5 == gamma({c1, c2}, d, e));
          CHECK((q.q3 >= 0) == equality_component_condition({c1, c2}, d, e));
        }
}

TEST_CASE("codimension bound flag") {
  // (0,0), d=1: Q1=1, dim 2, gamma(1;-1) = P(1) = 0.
  CHECK_FALSE(codim_bound_exceeds_dim({0, 0}, 1, -1));
  // (0,-1), d=1: Q1 = 0, never flagged.
  CHECK_FALSE(codim_bound_exceeds_dim({0, -1}, 1, -1));
  for (Int c1 : {0, -1})
    for (Int c2 = -10; c2 <= 10; ++c2)
      for (Int d = 0; d <= 15; ++d)
        for (Int e = -1; e < d; ++e) {
          const Int q = q1({c1, c2}, d);
          CHECK(codim_bound_exceeds_dim({c1, c2}, d, e) == (q > 0 && gamma({c1, c2}, d, e) > 3 * q - 1));
        }
}

TEST_CASE("stromme_threshold") {
  CHECK(reference_threshold(0, 0) == 3);
  CHECK(stromme_threshold({0, 0}) == 3);
  CHECK(stromme_threshold({0, 1}) == reference_threshold(0, 1));
  CHECK(reference_threshold(0, 1) == 3);
  // The condition alone is not monotone: it holds at d = 0 for (0,1).
  CHECK(threshold_condition({0, 1}, 0));
  CHECK_FALSE(threshold_condition({0, 1}, 1));
  CHECK(stromme_threshold({0, 1}) == 3);
  CHECK(stromme_threshold({0, -1000}) == reference_threshold(0, -1000));
  CHECK(stromme_threshold({-1, 0}) == reference_threshold(-1, 0));
  CHECK(reference_threshold(-1, 0) == 2);
  CHECK_THROWS_AS(stromme_threshold({1, 0}), DomainError);

  for (Int c1 : {0, -1})
    for (Int c2 = -10; c2 <= 10; ++c2) {
      const ChernPair p{c1, c2};
      const Int t = stromme_threshold(p);
      CHECK(t == reference_threshold(c1, c2));
      for (Int d = t; d <= t + 10; ++d) {
        CHECK(threshold_condition(p, d));
        for (Int e = -1; e < d; ++e) {
          const auto q = q_values(p, d, e);
          CHECK(q.q1 > 0);
          CHECK(q.q2 > 0);
          CHECK(q.q5 > 0);
        }
      }
    }
}

TEST_CASE("non_cobordant_types") {
  CHECK(non_cobordant_types({0, 0}, 3) == std::vector<Int>{4, 5, 6});
  CHECK(non_cobordant_types({0, 0}, 1) == std::vector<Int>{4});
  // threshold 2, uniqueness bound needs d > 2, so D = 3.
  CHECK(non_cobordant_types({-1, 0}, 2) == std::vector<Int>{3, 4});
  // Large c2 pushes the threshold past the uniqueness bound.
  const Int t = stromme_threshold({0, -30});
  CHECK(t == reference_threshold(0, -30));
  CHECK(t > 4);
  CHECK(non_cobordant_types({0, -30}, 2) == std::vector<Int>{t, t + 1});
  CHECK_THROWS_AS(non_cobordant_types({0, 0}, 0), DomainError);
  CHECK_THROWS_AS(non_cobordant_types({2, 0}, 1), DomainError);
}

TEST_CASE("moduli_row") {
  const auto row = moduli_row({0, 0}, 3);
  CHECK(row.q1 == 9);
  CHECK(row.dim == ModuliDim{Dim{26}});
  CHECK(row.gamma == std::map<Int, Int>{{-1, 2}, {0, 2}, {1, 3}, {2, 3}});
}
