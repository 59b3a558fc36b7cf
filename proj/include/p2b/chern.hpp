#pragma once

// Chern-class bookkeeping for rank-two bundles on P^2.

#include <json.hpp>

#include "p2b/chern_pair.hpp"
#include "p2b/chow.hpp"

namespace p2b::chern {

// Chern pair of E(l): (c1 + 2l, c2 + l c1 + l^2).
ChernPair twist(const ChernPair& p, Int l);

// 1 + c1 H + c2 H^2.
chow::P2Class total_chern(const ChernPair& p);

// Total Chern class of the line bundle O(k).
chow::P2Class line_bundle_chern(Int k);

// The monad O(c1-d) -> O(c1-d) + F + O(d) -> O(d), kept only at the level of
// Chern data. Sections and the deformation parameter are not modeled.
struct MonadSpec {
  Int d = 0;
  ChernPair bundle;

  Int c1_total() const { return bundle.c1; }
};

// Chern pair of the monad's cohomology, c(middle) / (c(sub) c(quot)).
ChernPair monad_cohomology_chern(const MonadSpec& m);

struct SerreLength {
  Int length = 0;
  // No bundle with a section vanishing in codimension two has negative length.
  bool negative = false;
};

// Length of the zero scheme of a section of E(-N): N^2 - N c1 + c2.
SerreLength serre_length(const ChernPair& p, Int n);

struct CharClasses {
  Int w2 = 0; // in {0, 1}
  Int p1 = 0;
};

// Topological classes of the underlying complex bundle: w2 = c1 mod 2, p1 = c1^2 - 2 c2.
CharClasses char_classes(const ChernPair& p);

nlohmann::json to_json(const ChernPair& p);
ChernPair pair_from_json(const nlohmann::json& j);

} // namespace p2b::chern
