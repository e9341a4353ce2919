// Symbolic identity checks over the generic quartic and octavic.
#pragma once

#include "binform/forms.hpp"

#include <string>
#include <vector>

namespace binform {

struct IdentityCheck {
  std::string name;
  PolyForm lhs;
  PolyForm rhs;
  bool holds() const { return lhs == rhs; }
};

/// 64-bit FNV-1a over the coefficient strings joined by ';'.
std::string xpoly_hash(const PolyForm& p);

/// P_{2,2} = (F,F)_4 and P_{2,3} = (F,(F,F)_2)_4 for the generic quartic.
std::vector<IdentityCheck> quartic_identities();

/// P_{4,2} = J2, P_{4,3} = J3, P_{4,4} = 8/5 J4 + 7/30 J2^2,
/// P_{4,5} = 6/5 J5 + 13/30 J2 J3 for the generic octavic.
std::vector<IdentityCheck> octavic_trace_identities();

/// Bracket relations among degree-3 covariants of the octavic:
/// A211 = 0, A31 = A4/2, A22 = A4/2, A4 = (F,(F,F)_6)_4,
/// B332 = -2 B431, B44 = 6/5 B53 - 1/5 B62.
std::vector<IdentityCheck> octavic_bracket_identities();

}  // namespace binform
