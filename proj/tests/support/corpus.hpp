#pragma once

// Small semigroups for property and equivalence suites: subsemigroups of
// T3 and T4 of order at most 6 drawn from a seeded generator, plus the
// catalog examples of that size.

#include <cstdint>
#include <string>
#include <vector>

#include "zigzag/semigroup.hpp"

namespace zigzag::testing {

  struct CorpusSemigroup {
    std::string     name;
    FiniteSemigroup S;
  };

  struct CorpusPair {
    std::size_t semigroup;  // index into the semigroup list
    Subset      U;
  };

  struct Corpus {
    std::vector<CorpusSemigroup> semigroups;
    std::vector<CorpusPair>      pairs;  // every subsemigroup of every entry
  };

  // Distinct multiplication tables only; deterministic for a given seed.
  std::vector<CorpusSemigroup> corpus_semigroups(std::uint64_t seed    = 0,
                                                 std::size_t   max_order = 6,
                                                 std::size_t   target  = 60);

  // All subsemigroups of S, by increasing bit mask of members.
  std::vector<Subset> all_subsemigroups(FiniteSemigroup const& S);

  Corpus build_corpus(std::uint64_t seed = 0);

}  // namespace zigzag::testing
