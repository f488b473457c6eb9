#pragma once

// Fixed small examples.
//
// b2: a=0, b=1, ab=2, ba=3, 0=4 with aba=a, bab=b, a^2=b^2=0.
// y: the subsemigroup {a, ab, ba, 0} of b2, in that order; y_in_b2 maps it
// back to indices {0, 2, 3, 4}.
// c3: 1, g, g^2.
// fig2_base: states 0..3; a the 4-cycle, b the transposition of states 0
// and 1, c sends 0 to 1 and fixes the rest.
// q3a3: states 0..2; a the 3-cycle, b and c the identity.

#include <string>
#include <vector>

#include "zigzag/construct.hpp"
#include "zigzag/semigroup.hpp"
#include "zigzag/transformation.hpp"

namespace zigzag::catalog {

  FiniteSemigroup b2();
  FiniteSemigroup y();
  Subset          y_in_b2();
  std::vector<element_index> y_to_b2();
  FiniteSemigroup trivial();
  FiniteSemigroup cyclic_group(std::size_t n);
  FiniteSemigroup c3();
  // r_i r_j = r_j
  FiniteSemigroup right_zero(std::size_t n);

  Semiautomaton fig2_base();
  Semiautomaton q3a3();

  // M0(4, C3, 4, P) with P rows (1,1,1,1), (0,g,0,0), (0,0,1,0), (0,0,0,1).
  ReesMatrixSpec rees49_spec();
  // I = Lambda = 2 over the trivial group with P the identity pattern.
  ReesMatrixSpec b2_rees_spec();
  // The 0-group over the trivial group, M0(1, 1, 1, (1)).
  ReesMatrixSpec zero_group_spec();

  // b2 -> rees_semigroup(b2_rees_spec()): a -> (1,1,2), b -> (2,1,1).
  std::vector<element_index> b2_to_rees();

}  // namespace zigzag::catalog
