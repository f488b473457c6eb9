#include <catch_amalgamated.hpp>

#include "zigzag/catalog.hpp"
#include "zigzag/semigroup.hpp"

using namespace zigzag;

TEST_CASE("make_semigroup accepts b2 and finds its zero") {
  auto S = catalog::b2();
  CHECK(S.order() == 5);
  CHECK(S.zero() == element_index{4});
  CHECK_FALSE(S.identity().has_value());
  CHECK(S.find_label("ab") == element_index{2});
  CHECK(S.label(3) == "ba");
  CHECK(S.product(0, 1) == 2);
  CHECK(S.product(1, 0) == 3);
  CHECK(S.product(0, 0) == 4);
}

TEST_CASE("make_semigroup reports the first non-associative triple") {
  // x*y = y+1 mod 2 style table: (00)0 = 1*0 = 1, 0(00) = 0*1 = 0.
  std::vector<std::vector<element_index>> rows{{1, 0}, {1, 0}};
  try {
    make_semigroup(rows);
    FAIL("expected AssociativityError");
  } catch (AssociativityError const& e) {
    CHECK(e.triple() == Triple{0, 0, 0});
  }
}

TEST_CASE("make_semigroup rejects malformed tables") {
  CHECK_THROWS_AS(make_semigroup(0, {}), IndexError);
  CHECK_THROWS_AS(make_semigroup(2, {0, 1, 1}), IndexError);
  CHECK_THROWS_AS(make_semigroup(1, {1}), IndexError);
  CHECK_THROWS_AS(make_semigroup(1, {0}, {"a", "b"}), ValidationError);
  CHECK_THROWS_AS(make_semigroup(2, {0, 0, 0, 0}, {"a", "a"}), ValidationError);
}

TEST_CASE("identities, closures and ideals") {
  auto C = catalog::c3();
  CHECK(C.identity() == element_index{0});
  auto g = closure(C, Subset(3, {1}));
  CHECK(g.size() == 3);

  auto S = catalog::b2();
  auto zero = Subset(5, {4});
  CHECK(is_ideal(S, zero));
  CHECK_FALSE(is_ideal(S, Subset(5, {2, 4})));
  CHECK(is_subsemigroup(S, catalog::y_in_b2()));
  CHECK_FALSE(is_subsemigroup(S, Subset(5, {0, 1})));
  CHECK(closure(S, Subset(5, {0, 1})).size() == 5);
  CHECK_THROWS_AS(closure(S, Subset(5, {})), PreconditionFailed);
}

TEST_CASE("Subset operations") {
  Subset a(6, {5, 1, 3, 1});
  CHECK(a.members() == std::vector<element_index>{1, 3, 5});
  Subset b(6, {0, 1});
  CHECK(set_union(a, b).size() == 4);
  CHECK(set_intersection(a, b).members() == std::vector<element_index>{1});
  CHECK(set_difference(a, b).members() == std::vector<element_index>{3, 5});
  CHECK(set_intersection(a, b).is_subset_of(a));
  CHECK_THROWS_AS(Subset(3, {3}), IndexError);
}

TEST_CASE("adjoin_identity always adds a fresh element") {
  auto C  = catalog::c3();
  auto C1 = adjoin_identity(C);
  CHECK(C1.order() == 4);
  CHECK(C1.identity() == element_index{3});
  for (element_index x = 0; x < 4; ++x) {
    CHECK(C1.product(3, x) == x);
    CHECK(C1.product(x, 3) == x);
  }
}

TEST_CASE("Rees quotient collapses the ideal to a zero") {
  auto S = catalog::b2();
  // {ab, ba, 0} is not an ideal, {0} is.
  auto Q = rees_quotient(S, Subset(5, {4}));
  CHECK(Q.semigroup.order() == 5);
  CHECK(is_morphism(Q.map, S, Q.semigroup));
  CHECK_THROWS_AS(rees_quotient(S, Subset(5, {2})), NotAnIdeal);
}

TEST_CASE("morphisms and embeddings") {
  auto Y = catalog::y();
  auto S = catalog::b2();
  CHECK(is_embedding(catalog::y_to_b2(), Y, S));
  std::vector<element_index> collapse(4, 4);
  CHECK(is_morphism(collapse, Y, S));
  CHECK_FALSE(is_embedding(collapse, Y, S));
}

TEST_CASE("induced subsemigroup keeps the member order") {
  auto S   = catalog::b2();
  auto sub = induced_subsemigroup(S, catalog::y_in_b2());
  CHECK(sub.semigroup.order() == 4);
  CHECK(sub.inclusion == std::vector<element_index>{0, 2, 3, 4});
  CHECK(is_embedding(sub.inclusion, sub.semigroup, S));
  CHECK_THROWS_AS(induced_subsemigroup(S, Subset(5, {0, 1})), NotASubsemigroup);
}

TEST_CASE("generators generate") {
  auto S = catalog::b2();
  Subset g(S.order(), S.generators());
  CHECK(closure(S, g).size() == S.order());
}
