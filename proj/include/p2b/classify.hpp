#pragma once

// Yes/No/Unknown verdicts for the equivalence relations between
// projectivized rank-two bundles, each tagged with the reason that decided it.

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "p2b/chern_pair.hpp"

namespace p2b::classify {

enum class Value { Yes, No, Unknown };

// Closed set of justifications. Yes/No reasons name the deciding criterion;
// Unknown reasons name the open case.
enum class Reason {
  TwistOrbit,            // same twist orbit of Chern pairs
  OrbitInvariantsDiffer, // c1 parity or discriminant differ
  SplitDeformation,      // d^2 - d c1 + c2 = 0 has a root d >= 0
  NotWeaklyEquivalent,   // h-cobordism implies weak equivalence
  OpenNonSplit,          // weakly equivalent, no split root
  OpenConcordance,       // concordance outside the split case
  EqualChernClasses,
  ChernClassesDiffer,
  DistinctRigidTypes,    // distinct types above the uniqueness bound
  NoTypeObstruction,     // equal types, or a type at or below the bound
};

std::string_view to_string(Value v);
std::string_view to_string(Reason r);
std::optional<Value> value_from_string(std::string_view s);
std::optional<Reason> reason_from_string(std::string_view s);

struct Verdict {
  Value value = Value::Unknown;
  Reason reason = Reason::OpenNonSplit;
  std::optional<Int> witness;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

nlohmann::json to_json(const Verdict& v);
Verdict verdict_from_json(const nlohmann::json& j);

enum class Relation {
  A1WeakEquivalence,
  HomotopyEquivalence,
  Diffeomorphism,
  DeformationEquivalence,
  A1HCobordism,
  A1ConcordanceOfBundles,
};

inline constexpr std::array<Relation, 6> kRelations{
    Relation::A1WeakEquivalence, Relation::HomotopyEquivalence,    Relation::Diffeomorphism,
    Relation::DeformationEquivalence, Relation::A1HCobordism, Relation::A1ConcordanceOfBundles};

std::string_view to_string(Relation r);

struct RelationReport {
  std::array<Verdict, 6> verdicts;

  const Verdict& operator[](Relation r) const { return verdicts[static_cast<int>(r)]; }
  Verdict& operator[](Relation r) { return verdicts[static_cast<int>(r)]; }
};

nlohmann::json to_json(const RelationReport& r);

// Yes with the twist as witness iff the pairs lie in one twist orbit.
Verdict weak_equivalent(const ChernPair& p, const ChernPair& q);

// Least d >= 0 with d^2 - d c1 + c2 = 0.
std::optional<Int> deformable_to_split(const ChernPair& p);

// Yes (witness d) when E(-d) has c2 = 0 for some d >= 0; otherwise Unknown.
Verdict concordance_to_split(const ChernPair& p);

Verdict h_cobordant(const ChernPair& p, const ChernPair& q);

// Bundle-level: equal Chern classes.
Verdict deformation_equivalent_bundles(const ChernPair& p, const ChernPair& q);

RelationReport complex_report(const ChernPair& p, const ChernPair& q);

// Whether distinct splitting types d0 != d1 rule out a direct h-cobordism
// through families of constant type. Requires c1 in {0,-1}, d0, d1 >= 0.
Verdict direct_hcob_type_obstruction(Int c1_norm, Int d0, Int d1);

} // namespace p2b::classify
