#pragma once

// Brute-force reference implementations. These deliberately avoid the
// closed-form code paths in chern/orbits/cubic/classify and only share the
// checked integer primitives, so agreement between the two is evidence.

#include <optional>
#include <string>
#include <vector>

#include "p2b/chern_pair.hpp"
#include "p2b/cubic.hpp"

namespace p2b::oracles {

// Entry or range bound for exhaustive searches, always >= 1.
class SearchBound {
public:
  explicit SearchBound(Int b);
  Int value() const { return b_; }

private:
  Int b_;
};

// Twist l with (p twisted by l) == q, found by direct substitution. Also scans
// every l within |q.c1 - p.c1| + 2 and throws ConsistencyError if the scan
// finds a different answer.
std::optional<Int> orbit_oracle(const ChernPair& p, const ChernPair& q);

// Matrix searches try the identity, then every matrix with entries in [-B, B]
// in lexicographic order of (m00, m01, m10, m11); the first hit is returned.

// First M with f(M(x, y)) == g(x, y), compared pointwise on a grid that
// determines cubics.
std::optional<cubic::UnimodularMatrix> gl2z_form_search(const cubic::BinaryCubicForm& f,
                                                        const cubic::BinaryCubicForm& g,
                                                        SearchBound bound);

// First degree-one map H -> m00 H + m01 tau, tau -> m10 H + m11 tau from the
// Chow ring of p to that of q which kills the defining relations of p's ring
// and is invertible in degrees one and two.
std::optional<cubic::UnimodularMatrix> ring_iso_search(const ChernPair& p, const ChernPair& q,
                                                       SearchBound bound);

// All d in [0, dmax] with d^2 - d c1 + c2 = 0, by evaluation.
std::vector<Int> integer_root_search(const ChernPair& p, Int dmax);

// Any nonnegative root is at most this.
Int root_magnitude_bound(const ChernPair& p);

struct SweepResult {
  std::string name;
  long long checked = 0;
  long long failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

// Oracle-versus-closed-form sweeps on fixed grids.
std::vector<SweepResult> verification_sweeps();

} // namespace p2b::oracles
