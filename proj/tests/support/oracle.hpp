#pragma once

// An independent dominion oracle: direct search for zigzag systems
//   d = x1 u1, u1 = v1 y1, x(i-1) v(i-1) = xi ui, ui y(i-1) = vi yi,
//   x(m-1) v(m-1) = um, um y(m-1) = d
// with ui, vi in U and xi, yi in S, of length m <= |S|^2 + 1. Layers are
// the triples (xi, vi, yi) reachable after i steps.

#include "zigzag/semigroup.hpp"

namespace zigzag::testing {

  // d in U, or some zigzag for d over U of bounded length exists.
  bool oracle_dominated(FiniteSemigroup const& S, Subset const& U, element_index d);

  Subset oracle_dominion(FiniteSemigroup const& S, Subset const& U);

}  // namespace zigzag::testing
