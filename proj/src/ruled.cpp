#include "p2b/ruled.hpp"

#include <string>

namespace p2b::ruled {

using namespace p2b::checked;

Int LineSplitting::hirzebruch_index() const { return sub(mul(2, a), c1); }

HirzebruchType generic_hirzebruch_type(Int c1, Int d) {
  const Int s = sub(c1, mul(2, d));
  return {checked::abs(s), s};
}

Int neg_section_anticanonical(Int b) {
  if (b < 0)
    throw DomainError("neg_section_anticanonical: Hirzebruch index must be >= 0");
  return sub(neg(b), 1);
}

bool unique_structure(Int c1_norm, Int d) {
  if (c1_norm != 0 && c1_norm != -1)
    throw DomainError("unique_structure: c1 = " + std::to_string(c1_norm) +
                      " is outside {0,-1}; normalize the pair first");
  return d > add(3, c1_norm);
}

} // namespace p2b::ruled
