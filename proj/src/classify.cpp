#include "p2b/classify.hpp"

#include "p2b/chern.hpp"
#include "p2b/orbits.hpp"
#include "p2b/ruled.hpp"

namespace p2b::classify {

using namespace p2b::checked;

namespace {

constexpr std::array<std::string_view, 3> kValueNames{"yes", "no", "unknown"};

constexpr std::array<std::string_view, 10> kReasonNames{
    "twist_orbit",
    "orbit_invariants_differ",
    "split_deformation",
    "not_weakly_equivalent",
    "open_nonsplit_hcobordism",
    "open_concordance",
    "equal_chern_classes",
    "chern_classes_differ",
    "distinct_rigid_splitting_types",
    "no_type_obstruction",
};

constexpr std::array<std::string_view, 6> kRelationNames{
    "a1_weak_equivalence",     "homotopy_equivalence", "diffeomorphism",
    "deformation_equivalence", "a1_h_cobordism",       "a1_concordance_of_bundles",
};

template <typename E, std::size_t N>
std::optional<E> lookup(const std::array<std::string_view, N>& names, std::string_view s) {
  for (std::size_t i = 0; i < N; ++i)
    if (names[i] == s)
      return static_cast<E>(i);
  return std::nullopt;
}

} // namespace

std::string_view to_string(Value v) { return kValueNames[static_cast<int>(v)]; }
std::string_view to_string(Reason r) { return kReasonNames[static_cast<int>(r)]; }
std::string_view to_string(Relation r) { return kRelationNames[static_cast<int>(r)]; }

std::optional<Value> value_from_string(std::string_view s) { return lookup<Value>(kValueNames, s); }
std::optional<Reason> reason_from_string(std::string_view s) { return lookup<Reason>(kReasonNames, s); }

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j{{"value", to_string(v.value)}, {"reason", to_string(v.reason)}};
  j["witness"] = v.witness ? nlohmann::json(*v.witness) : nlohmann::json(nullptr);
  return j;
}

Verdict verdict_from_json(const nlohmann::json& j) {
  auto value = value_from_string(j.at("value").get<std::string>());
  auto reason = reason_from_string(j.at("reason").get<std::string>());
  if (!value || !reason)
    throw DomainError("unrecognized verdict value or reason");
  Verdict v{*value, *reason, std::nullopt};
  if (!j.at("witness").is_null())
    v.witness = j.at("witness").get<Int>();
  return v;
}

nlohmann::json to_json(const RelationReport& r) {
  nlohmann::json j = nlohmann::json::object();
  for (Relation rel : kRelations)
    j[std::string(to_string(rel))] = to_json(r[rel]);
  return j;
}

Verdict weak_equivalent(const ChernPair& p, const ChernPair& q) {
  if (!orbits::same_orbit(p, q))
    return {Value::No, Reason::OrbitInvariantsDiffer, std::nullopt};
  auto l = orbits::orbit_witness(p, q);
  if (!l)
    throw ConsistencyError("orbit invariants agree for " + p2b::to_string(p) + " and " +
                           p2b::to_string(q) + " but no twist maps one to the other");
  return {Value::Yes, Reason::TwistOrbit, l};
}

std::optional<Int> deformable_to_split(const ChernPair& p) {
  const Int disc = orbits::discriminant(p);
  if (!is_perfect_square(disc))
    return std::nullopt;
  const Int s = isqrt(disc);
  // disc = c1^2 (mod 4), so s and c1 have the same parity and both roots are integers.
  if (mod(sub(s, p.c1), 2) != 0)
    throw ConsistencyError("square root of discriminant has the wrong parity for " + p2b::to_string(p));
  const Int lo = sub(p.c1, s) / 2;
  const Int hi = add(p.c1, s) / 2;
  std::optional<Int> root;
  if (lo >= 0)
    root = lo;
  else if (hi >= 0)
    root = hi;
  if (root && add(sub(sq(*root), mul(*root, p.c1)), p.c2) != 0)
    throw ConsistencyError("computed root does not solve d^2 - d c1 + c2 = 0");
  return root;
}

Verdict concordance_to_split(const ChernPair& p) {
  auto d = deformable_to_split(p);
  if (!d)
    return {Value::Unknown, Reason::OpenConcordance, std::nullopt};
  if (chern::twist(p, neg(*d)).c2 != 0)
    throw ConsistencyError("twisting by the split root does not kill c2");
  return {Value::Yes, Reason::SplitDeformation, d};
}

Verdict h_cobordant(const ChernPair& p, const ChernPair& q) {
  if (weak_equivalent(p, q).value == Value::No)
    return {Value::No, Reason::NotWeaklyEquivalent, std::nullopt};
  if (auto d = deformable_to_split(p))
    return {Value::Yes, Reason::SplitDeformation, d};
  return {Value::Unknown, Reason::OpenNonSplit, std::nullopt};
}

Verdict deformation_equivalent_bundles(const ChernPair& p, const ChernPair& q) {
  if (p == q)
    return {Value::Yes, Reason::EqualChernClasses, std::nullopt};
  return {Value::No, Reason::ChernClassesDiffer, std::nullopt};
}

RelationReport complex_report(const ChernPair& p, const ChernPair& q) {
  RelationReport r;
  const Verdict weak = weak_equivalent(p, q);
  r[Relation::A1WeakEquivalence] = weak;
  r[Relation::HomotopyEquivalence] = weak;
  r[Relation::Diffeomorphism] = weak;
  r[Relation::DeformationEquivalence] = weak;
  r[Relation::A1HCobordism] = h_cobordant(p, q);
  if (p == q)
    r[Relation::A1ConcordanceOfBundles] = {Value::Yes, Reason::EqualChernClasses, std::nullopt};
  else
    r[Relation::A1ConcordanceOfBundles] = {Value::Unknown, Reason::OpenConcordance, std::nullopt};
  return r;
}

Verdict direct_hcob_type_obstruction(Int c1_norm, Int d0, Int d1) {
  if (d0 < 0 || d1 < 0)
    throw DomainError("splitting types must be >= 0");
  const bool rigid0 = ruled::unique_structure(c1_norm, d0);
  const bool rigid1 = ruled::unique_structure(c1_norm, d1);
  if (d0 != d1 && rigid0 && rigid1)
    return {Value::Yes, Reason::DistinctRigidTypes, std::nullopt};
  return {Value::Unknown, Reason::NoTypeObstruction, std::nullopt};
}

} // namespace p2b::classify
