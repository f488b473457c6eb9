#pragma once

// The fixed suite of published numbers and statements, each recomputed
// from scratch.

#include <optional>
#include <string>
#include <vector>

#include "zigzag/transformation.hpp"

namespace zigzag {

  struct ReproduceItem {
    std::string name;
    std::string expected;
    std::string actual;
    bool        pass = false;
    // Informational items are reported but never fail the suite.
    bool   informational = false;
    double ms            = 0;
  };

  struct ReproduceOptions {
    // Skips the items built on the order-4097 enlargement.
    bool quick = false;
    // Replaces the catalog fig2 automaton.
    std::optional<Semiautomaton> fig2;
  };

  std::vector<ReproduceItem> reproduce(ReproduceOptions const& options = {});

  bool all_pass(std::vector<ReproduceItem> const& items);

  // The displayed zigzag for b over Y in b2, m = 3 with spine
  // (ab, a, a, a, ba) and x1 = x2 = y1 = y2 = b.
  struct ZigzagCertificate;
  ZigzagCertificate b2_displayed_zigzag();

}  // namespace zigzag
