#include <catch_amalgamated.hpp>

#include "corpus.hpp"
#include "zigzag/dominion.hpp"
#include "zigzag/green.hpp"
#include "zigzag/pseudo.hpp"

using namespace zigzag;

namespace {
  testing::Corpus const& corpus() {
    static testing::Corpus const c = testing::build_corpus();
    return c;
  }

  bool proper_epi(FiniteSemigroup const& S, Subset const& U) {
    return U.size() < S.order() && dominion(S, U).size() == S.order();
  }

  FiniteSemigroup as_semigroup(FiniteSemigroup const& S, Subset const& U) {
    return induced_subsemigroup(S, U).semigroup;
  }
}  // namespace

TEST_CASE("corpus size") {
  CHECK(corpus().pairs.size() >= 200);
  std::size_t epi = 0;
  for (auto const& [si, U] : corpus().pairs) {
    epi += proper_epi(corpus().semigroups[si].S, U);
  }
  CHECK(epi > 0);
}

TEST_CASE("dominions are subsemigroups containing U and are closed") {
  for (auto const& [si, U] : corpus().pairs) {
    auto const& S = corpus().semigroups[si].S;
    auto        D = dominion(S, U);
    CHECK(U.is_subset_of(D));
    CHECK(is_subsemigroup(S, D));
    CHECK(dominion(S, D) == D);
  }
}

TEST_CASE("no proper epimorphic embedding violates the saturation theorems") {
  for (auto const& [si, U] : corpus().pairs) {
    auto const& S = corpus().semigroups[si].S;
    if (!proper_epi(S, U)) {
      continue;
    }
    INFO(corpus().semigroups[si].name);
    auto T = as_semigroup(S, U);
    CHECK_FALSE(in_DS(S));
    CHECK_FALSE(in_V1(T));
    CHECK_FALSE(in_V2(T));
    CHECK_FALSE(in_V3(T));
    CHECK_FALSE(is_regular_semigroup(T, green_relations(T)));
  }
}

TEST_CASE("J-maximal elements outside an epimorphically embedded U are regular") {
  for (auto const& [si, U] : corpus().pairs) {
    auto const& S = corpus().semigroups[si].S;
    if (!proper_epi(S, U)) {
      continue;
    }
    auto G = green_relations(S);
    for (auto d : j_maximal(G, set_difference(Subset::all(S.order()), U))) {
      CHECK(G.is_regular(d));
    }
  }
}

TEST_CASE("idempotent-rich D-classes admit zigzags inside D") {
  std::size_t instances = 0;
  for (auto const& [si, U] : corpus().pairs) {
    auto const& S = corpus().semigroups[si].S;
    if (!proper_epi(S, U)) {
      continue;
    }
    auto G = green_relations(S);
    for (auto d : j_maximal(G, set_difference(Subset::all(S.order()), U))) {
      auto const& members = G.d_members[G.d_class[d]];
      std::vector<char> r_hit(G.r_count, 0), l_hit(G.l_count, 0);
      for (auto s : members) {
        if (U.contains(s) && S.is_idempotent(s)) {
          r_hit[G.r_class[s]] = 1;
          l_hit[G.l_class[s]] = 1;
        }
      }
      bool rich = std::all_of(members.begin(), members.end(), [&](element_index s) {
        return r_hit[G.r_class[s]] && l_hit[G.l_class[s]];
      });
      if (!rich) {
        continue;
      }
      ++instances;
      Subset D(S.order(), members);
      auto   cert = zigzag_for(S, U, d, D);
      REQUIRE(cert.has_value());
      CHECK(verify_zigzag(S, U, *cert).valid);
    }
  }
  CHECK(instances > 0);
}

TEST_CASE("Dom(EUE, ESE) = ESE whenever U is epimorphically embedded") {
  for (auto const& [si, U] : corpus().pairs) {
    auto const& S = corpus().semigroups[si].S;
    if (dominion(S, U).size() != S.order()) {
      continue;
    }
    auto EUE = compute_EUE(S, U);
    auto ESE = compute_ESE(S, U);
    REQUIRE(EUE.is_subset_of(ESE));
    auto local = induced_subsemigroup(S, ESE);
    std::vector<element_index> inner;
    for (std::size_t k = 0; k < local.inclusion.size(); ++k) {
      if (EUE.contains(local.inclusion[k])) {
        inner.push_back(static_cast<element_index>(k));
      }
    }
    Subset V(local.semigroup.order(), inner);
    CHECK(dominion(local.semigroup, V).size() == local.semigroup.order());
  }
}

TEST_CASE("the amalgam separates every eligible reduced pair") {
  std::size_t eligible = 0;
  for (auto const& [si, U] : corpus().pairs) {
    auto const& S = corpus().semigroups[si].S;
    if (U.size() == S.order()) {
      continue;
    }
    auto r = reduce_to_top_J(S, U);
    for (auto const& [T, V] : {std::pair{S, U}, std::pair{r.quotient, r.u}}) {
      if (amalgam_obstruction(T, V)) {
        continue;
      }
      ++eligible;
      auto a = amalgam(T, V);
      CHECK(verify_amalgam(T, V, a).ok());
      CHECK(a.W.order() == 2 * T.order() - a.V.size());
      auto D = dominion(T, V);
      CHECK(set_intersection(D, set_difference(Subset::all(T.order()), a.V)).empty());
    }
  }
  CHECK(eligible >= 20);
}
