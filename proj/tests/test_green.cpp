#include <catch_amalgamated.hpp>

#include "corpus.hpp"
#include "zigzag/catalog.hpp"
#include "zigzag/construct.hpp"
#include "zigzag/green.hpp"

using namespace zigzag;

TEST_CASE("Green structure of b2") {
  auto S = catalog::b2();
  auto G = green_relations(S);
  CHECK(G.d_count == 2);
  CHECK(G.h_count == 5);
  CHECK(G.d_class[0] == G.d_class[1]);
  CHECK(G.d_class[0] != G.d_class[4]);
  CHECK(G.r_related(0, 2));  // a R ab
  CHECK(G.l_related(0, 3));  // a L ba
  CHECK(G.j_less(4, 0));
  auto const& box = G.eggbox[G.d_class[0]];
  CHECK(box.rows() == 2);
  CHECK(box.cols() == 2);
  CHECK(box.regular);
  int starred = 0;
  for (auto const& row : box.idempotent_cell) {
    for (bool b : row) {
      starred += b;
    }
  }
  CHECK(starred == 2);
  CHECK(idempotents(S).members() == std::vector<element_index>{2, 3, 4});
}

TEST_CASE("omega powers") {
  auto C = catalog::cyclic_group(4);
  auto p = power_data(C, 1);
  CHECK(p.index == 1);
  CHECK(p.period == 4);
  CHECK(p.omega == 0);
  CHECK(omega_plus_one(C, 1) == 1);
  auto S = catalog::b2();
  CHECK(omega_power(S, 0) == 4);
  CHECK(omega_power(S, 2) == 2);
}

TEST_CASE("D-classes agree with the reference J-class computation on the corpus") {
  for (auto const& [name, S] : testing::corpus_semigroups()) {
    INFO(name);
    auto G = green_relations(S);
    CHECK(G.d_class == j_classes_reference(S));
  }
}

TEST_CASE("The Miller-Clifford criterion holds on every corpus semigroup") {
  for (auto const& [name, S] : testing::corpus_semigroups()) {
    INFO(name);
    CHECK(miller_clifford_check(S).empty());
  }
}

TEST_CASE("j_maximal") {
  auto S = catalog::b2();
  CHECK(j_maximal(S, Subset(5, {1, 4})).members() == std::vector<element_index>{1});
  CHECK(j_maximal(S, Subset(5, {0, 1, 4})).size() == 2);
  CHECK_THROWS_AS(j_maximal(S, Subset(5, {})), PreconditionFailed);
}

TEST_CASE("structure predicates") {
  CHECK(is_completely_0_simple(catalog::b2()));
  CHECK_FALSE(is_completely_0_simple(catalog::y()));
  CHECK(is_completely_simple(catalog::c3()));
  CHECK(is_completely_simple(catalog::right_zero(3)));
  CHECK(is_completely_regular(catalog::c3()));
  CHECK_FALSE(is_completely_regular(catalog::b2()));
  CHECK(is_completely_0_simple(rees_semigroup(catalog::rees49_spec()).semigroup));
}

TEST_CASE("EUE and ESE") {
  auto S = catalog::b2();
  auto U = catalog::y_in_b2();
  auto EUE = compute_EUE(S, U);
  auto ESE = compute_ESE(S, U);
  // ab a ba = a, so E(U) U E(U) recovers Y; ba b ab = b puts b in ESE.
  CHECK(EUE == U);
  CHECK(ESE.size() == 5);
}

TEST_CASE("eggbox DOT output") {
  auto S   = catalog::b2();
  auto G   = green_relations(S);
  auto dot = eggbox_dot(S, G, G.d_class[0]);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot == eggbox_dot(S, G, G.d_class[0]));
  auto count = [&](std::string const& needle) {
    std::size_t c = 0;
    for (auto p = dot.find(needle); p != std::string::npos; p = dot.find(needle, p + 1)) {
      ++c;
    }
    return c;
  };
  CHECK(count("*") == 2);
  auto C = catalog::c3();
  auto H = green_relations(C);
  CHECK(H.eggbox[0].rows() == 1);
  CHECK(H.eggbox[0].cols() == 1);
}
