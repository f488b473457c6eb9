#include <catch_amalgamated.hpp>

#include "zigzag/catalog.hpp"
#include "zigzag/construct.hpp"
#include "zigzag/dominion.hpp"
#include "zigzag/green.hpp"
#include "zigzag/pseudo.hpp"

using namespace zigzag;

TEST_CASE("Rees matrix semigroups") {
  auto R = rees_semigroup(catalog::b2_rees_spec());
  CHECK(R.semigroup.order() == 5);
  CHECK(R.zero() == 4);
  CHECK(is_embedding(catalog::b2_to_rees(), catalog::b2(), R.semigroup));
  auto c = R.coordinates(R.index(1, 0, 0));
  REQUIRE(c.has_value());
  CHECK(c->i == 1);
  CHECK(c->lambda == 0);
  CHECK_FALSE(R.coordinates(R.zero()).has_value());
  CHECK(R.semigroup.label(R.index(0, 0, 1)) == "(1,0,2)");
  auto R49l = rees_semigroup(catalog::rees49_spec());
  CHECK(R49l.semigroup.label(R49l.index(0, 1, 1)) == "(1,g,2)");

  auto R49 = rees_semigroup(catalog::rees49_spec());
  CHECK(R49.semigroup.order() == 49);
  CHECK(is_completely_0_simple(R49.semigroup));
}

TEST_CASE("Rees matrix validation") {
  auto spec = catalog::b2_rees_spec();
  spec.P[0][0].reset();
  spec.P[0][1].reset();
  CHECK_THROWS_AS(validate(spec), RegularityError);
  auto bad = catalog::b2_rees_spec();
  bad.group = catalog::b2();
  CHECK_THROWS_AS(validate(bad), NotAGroup);
  auto shape = catalog::b2_rees_spec();
  shape.P.pop_back();
  CHECK_THROWS_AS(validate(shape), ValidationError);
  CHECK(group_inverse(catalog::c3(), 1) == 2);
}

TEST_CASE("cs0 enlargement of b2") {
  auto data = cs0_enlarge(catalog::b2_rees_spec());
  CHECK(data.T.semigroup.order() == 16);
  CHECK(data.U.size() == 9);
  CHECK(cs0_expected_U_order(data) == 9);
  auto r = cs0_verify(data);
  CHECK(r.ok());
  CHECK(r.zigzags_checked > 0);
  CHECK(in_VY(induced_subsemigroup(data.T.semigroup, data.U).semigroup));
}

TEST_CASE("cs0 enlargement of other inputs") {
  auto z = cs0_enlarge(catalog::zero_group_spec());
  CHECK(cs0_verify(z).ok());
  CHECK(z.T.semigroup.order() == 7);
  auto r = cs0_enlarge(catalog::rees49_spec());
  auto rep = cs0_verify(r);
  CHECK(rep.ok());
  CHECK(rep.T_order == 136);
  CHECK(rep.U_order == rep.expected_U_order);
}

TEST_CASE("automaton enlargement") {
  auto A = catalog::q3a3();
  auto E = enlarge_automaton(A);
  CHECK(E.enlarged.states == 12);
  CHECK(E.enlarged.letter_count() == 6);
  CHECK(E.enlarged.alphabet[E.primed(0)] == "a'");
  CHECK(E.block_state(0, 0) == 3);
  CHECK(moving_letters(A) == std::vector<std::size_t>{0});
  // a a' a acts as a.
  auto aaa = word_action(E.enlarged, {0, E.primed(0), 0});
  CHECK(aaa == E.enlarged.action[0]);
}

TEST_CASE("prop52 items on the cycle-modified example") {
  auto A = cycle_modify(catalog::q3a3());
  auto r = prop52_report(A);
  CHECK(r.T_A_order == 3);
  CHECK(r.T_enlarged_order == 49);
  CHECK(r.U_order == 9);
  CHECK(r.items.size() == 7);
  for (auto const& item : r.items) {
    INFO(item.name << ": " << item.detail);
    CHECK(item.pass);
  }
  auto f = order_formula_check(A, true);
  CHECK(f.holds);
  CHECK(f.predicted == 49);
  CHECK_THROWS_AS(order_formula_check(A), IdentityLetterPresent);
}

TEST_CASE("incomplete automata get items 1 and 2 only") {
  auto A = make_semiautomaton(2, {"a"}, {PartialTransformation({1, undefined_point})});
  CHECK_THROWS_AS(prop52_report(A), IncompleteAutomaton);
  auto r = prop52_basic(A);
  CHECK(r.items.size() == 2);
  CHECK(r.all_pass());
  CHECK_THROWS_AS(cycle_modify(A), IncompleteAutomaton);
}

TEST_CASE("Rees coordinates and isomorphisms") {
  auto A = cycle_modify(catalog::q3a3());
  auto T = transition_semigroup(enlarge_automaton(A).enlarged);
  auto c = rees_coordinates(T.semigroup);
  CHECK(c.spec.I == 4);
  CHECK(c.spec.Lambda == 4);
  CHECK(c.spec.group.order() == 3);
  CHECK(isomorphism_to_rees(T.semigroup, catalog::rees49_spec()).has_value());
  CHECK(isomorphism_to_rees(catalog::b2(), catalog::b2_rees_spec()).has_value());
  CHECK_FALSE(rees_isomorphism(catalog::b2_rees_spec(), catalog::zero_group_spec()).has_value());
  CHECK_THROWS_AS(rees_coordinates(catalog::y()), PreconditionFailed);
}

TEST_CASE("eggbox of the order-49 semigroup is a 4 by 4 grid with H-classes of size 3") {
  auto S = rees_semigroup(catalog::rees49_spec()).semigroup;
  auto G = green_relations(S);
  auto const& box = G.eggbox[G.d_class[0]];
  CHECK(box.rows() == 4);
  CHECK(box.cols() == 4);
  CHECK(box.cells[0][0].size() == 3);
}
