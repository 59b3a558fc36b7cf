#include <doctest.h>

#include "p2b/chern.hpp"
#include "p2b/classify.hpp"
#include "p2b/orbits.hpp"

using namespace p2b;
using namespace p2b::classify;

TEST_CASE("weak_equivalent") {
  const auto yes = weak_equivalent({0, 0}, {2, 1});
  CHECK(yes.value == Value::Yes);
  CHECK(yes.reason == Reason::TwistOrbit);
  CHECK(yes.witness == 1);

  const auto no = weak_equivalent({0, 0}, {0, 1});
  CHECK(no.value == Value::No);
  CHECK(no.reason == Reason::OrbitInvariantsDiffer);
  CHECK_FALSE(no.witness);

  CHECK(chern::twist({-1, 0}, 3) == ChernPair{5, 6});
  CHECK(weak_equivalent({-1, 0}, {5, 6}).witness == 3);
}

TEST_CASE("weak_equivalent never answers unknown") {
  for (Int a = -5; a <= 5; ++a)
    for (Int b = -5; b <= 5; ++b)
      for (Int c = -5; c <= 5; ++c)
        for (Int d = -5; d <= 5; ++d)
          CHECK(weak_equivalent({a, b}, {c, d}).value != Value::Unknown);
}

TEST_CASE("deformable_to_split") {
  CHECK(deformable_to_split({0, 0}) == 0);
  CHECK(deformable_to_split({0, 1}) == std::nullopt);
  CHECK(deformable_to_split({5, 6}) == 2);
  // Roots -2 and -3: none usable.
  CHECK(deformable_to_split({-5, 6}) == std::nullopt);
  // Roots -1 and 3: the nonnegative one.
  CHECK(deformable_to_split({2, -3}) == 3);
}

TEST_CASE("deformable_to_split matches a root scan") {
  for (Int c1 = -50; c1 <= 50; ++c1)
    for (Int c2 = -50; c2 <= 50; ++c2) {
      std::optional<Int> least;
      for (Int d = 0; d <= 200 && !least; ++d)
        if (d * d - d * c1 + c2 == 0)
          least = d;
      REQUIRE(deformable_to_split({c1, c2}) == least);
    }
}

TEST_CASE("concordance_to_split") {
  const auto a = concordance_to_split({3, 0});
  CHECK(a.value == Value::Yes);
  CHECK(a.witness == 0);

  const auto b = concordance_to_split({5, 6});
  CHECK(b.value == Value::Yes);
  CHECK(b.witness == 2);
  CHECK(chern::twist({5, 6}, -2) == ChernPair{1, 0});

  const auto c = concordance_to_split({0, 1});
  CHECK(c.value == Value::Unknown);
  CHECK(c.reason == Reason::OpenConcordance);
}

TEST_CASE("h_cobordant") {
  const auto a = h_cobordant({0, 0}, {2, 1});
  CHECK(a.value == Value::Yes);
  CHECK(a.witness == 0);

  CHECK(orbits::orbit_witness({0, 1}, {2, 2}) == 1);
  const auto b = h_cobordant({0, 1}, {2, 2});
  CHECK(b.value == Value::Unknown);
  CHECK(b.reason == Reason::OpenNonSplit);

  const auto c = h_cobordant({0, 0}, {0, 1});
  CHECK(c.value == Value::No);
  CHECK(c.reason == Reason::NotWeaklyEquivalent);

  CHECK(h_cobordant({0, 1}, {0, 1}).value == Value::Unknown);
}

TEST_CASE("h-cobordism verdict is consistent with weak equivalence") {
  for (Int a = -8; a <= 8; ++a)
    for (Int b = -8; b <= 8; ++b)
      for (Int c = -8; c <= 8; ++c)
        for (Int d = -8; d <= 8; ++d) {
          const ChernPair p{a, b}, q{c, d};
          const auto h = h_cobordant(p, q);
          const auto w = weak_equivalent(p, q);
          if (h.value == Value::Yes) {
            REQUIRE(w.value == Value::Yes);
            // Weakly equivalent pairs share the discriminant, so q splits over
            // the integers too, although its roots may all be negative.
            REQUIRE(is_perfect_square(q.c1 * q.c1 - 4 * q.c2));
          }
          REQUIRE((h.value == Value::No) == (w.value == Value::No));
        }
}

TEST_CASE("split-concordant bundles are h-cobordant to all their twists") {
  for (Int a = -10; a <= 10; ++a)
    for (Int b = -10; b <= 10; ++b) {
      const ChernPair p{a, b};
      if (concordance_to_split(p).value != Value::Yes)
        continue;
      for (Int l = -5; l <= 5; ++l)
        CHECK(h_cobordant(p, chern::twist(p, l)).value == Value::Yes);
    }
}

TEST_CASE("deformation_equivalent_bundles") {
  CHECK(deformation_equivalent_bundles({0, 3}, {0, 3}).value == Value::Yes);
  CHECK(deformation_equivalent_bundles({0, 3}, {2, 4}).value == Value::No);
  CHECK(weak_equivalent({0, 3}, {2, 4}).value == Value::Yes);
  CHECK(deformation_equivalent_bundles({1, 1}, {1, 2}).value == Value::No);
}

TEST_CASE("complex_report") {
  const auto a = complex_report({0, 0}, {2, 1});
  for (auto rel : {Relation::A1WeakEquivalence, Relation::HomotopyEquivalence, Relation::Diffeomorphism,
                   Relation::DeformationEquivalence})
    CHECK(a[rel].value == Value::Yes);
  CHECK(a[Relation::A1HCobordism].value == Value::Yes);
  CHECK(a[Relation::A1ConcordanceOfBundles].value == Value::Unknown);

  const auto b = complex_report({0, 1}, {0, 2});
  CHECK(b[Relation::Diffeomorphism].value == Value::No);
  CHECK(b[Relation::A1HCobordism].value == Value::No);

  const auto c = complex_report({0, 1}, {0, 1});
  CHECK(c[Relation::HomotopyEquivalence].value == Value::Yes);
  CHECK(c[Relation::A1HCobordism].value == Value::Unknown);
  CHECK(c[Relation::A1ConcordanceOfBundles].value == Value::Yes);
}

TEST_CASE("direct_hcob_type_obstruction") {
  CHECK(direct_hcob_type_obstruction(0, 4, 5).value == Value::Yes);
  CHECK(direct_hcob_type_obstruction(0, 4, 5).reason == Reason::DistinctRigidTypes);
  CHECK(direct_hcob_type_obstruction(0, 4, 4).value == Value::Unknown);
  CHECK(direct_hcob_type_obstruction(0, 2, 5).value == Value::Unknown);
  CHECK(direct_hcob_type_obstruction(-1, 3, 4).value == Value::Yes);
  CHECK_THROWS_AS(direct_hcob_type_obstruction(1, 4, 5), DomainError);
  CHECK_THROWS_AS(direct_hcob_type_obstruction(0, -1, 5), DomainError);
}

TEST_CASE("verdict JSON round-trips") {
  for (auto v : {Verdict{Value::Yes, Reason::TwistOrbit, 3}, Verdict{Value::No, Reason::ChernClassesDiffer, {}},
                 Verdict{Value::Unknown, Reason::OpenNonSplit, {}}}) {
    const auto j = to_json(v);
    CHECK(verdict_from_json(j) == v);
    CHECK(j.contains("witness"));
  }
  CHECK(to_json(Verdict{Value::Yes, Reason::TwistOrbit, 1}).dump() ==
        R"({"reason":"twist_orbit","value":"yes","witness":1})");
  CHECK_THROWS_AS(verdict_from_json({{"value", "maybe"}, {"reason", "twist_orbit"}, {"witness", nullptr}}),
                  DomainError);

  const auto report = to_json(complex_report({0, 0}, {2, 1}));
  CHECK(report.size() == 6);
  CHECK(report.contains("a1_concordance_of_bundles"));
}
