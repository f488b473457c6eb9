#include <catch_amalgamated.hpp>

#include "zigzag/catalog.hpp"
#include "zigzag/green.hpp"
#include "zigzag/pseudo.hpp"

using namespace zigzag;

TEST_CASE("parse and render omega-terms") {
  auto t = parse_term("(x y)^w z");
  CHECK(t.variables() == std::vector<std::string>{"x", "y", "z"});
  CHECK(parse_term(t.to_string()) == t);
  CHECK(parse_term("x^3") == parse_term("x x x"));
  CHECK(parse_term("x^w+1") == OmegaTerm::omega_plus_one(OmegaTerm::variable("x")));
  CHECK(parse_term("x12 y") == OmegaTerm::product(OmegaTerm::variable("x12"),
                                                  OmegaTerm::variable("y")));
  CHECK_THROWS_AS(parse_term(""), ParseError);
  CHECK_THROWS_AS(parse_term("(x"), ParseError);
  CHECK_THROWS_AS(parse_term("x)"), ParseError);
  CHECK_THROWS_AS(parse_term("x^0"), ParseError);
  CHECK_THROWS_AS(parse_term("3"), ParseError);
  CHECK_THROWS_AS(parse_pseudoidentity("x = y", {"x"}), UnboundVariable);
  CHECK_THROWS_AS(parse_pseudoidentity("x y"), ParseError);
}

TEST_CASE("evaluation") {
  auto S = catalog::b2();
  auto t = parse_term("(x y)^w");
  CHECK(eval_term(t, {{"x", 0}, {"y", 1}}, S) == 2);
  CHECK(eval_term(parse_term("x^w"), {{"x", 0}}, S) == 4);
  CHECK_THROWS_AS(eval_term(t, {{"x", 0}}, S), UnboundVariable);
  CHECK_THROWS_AS(eval_term(t, {{"x", 0}, {"y", 9}}, S), IndexError);
}

TEST_CASE("satisfies with counterexamples and budget") {
  auto S  = catalog::c3();
  auto id = parse_pseudoidentity("x y = y x");
  CHECK(satisfies(S, id).holds);
  auto B = catalog::b2();
  auto r = satisfies(B, id);
  CHECK_FALSE(r.holds);
  CHECK(r.counterexample == std::vector<element_index>{0, 1});
  CHECK_THROWS_AS(satisfies(B, parse_pseudoidentity("x y z = z y x"), 100), BudgetExceeded);
  CHECK(satisfies(B, parse_pseudoidentity("x^w = x^w x^w")).holds);
}

TEST_CASE("membership of the worked examples") {
  CHECK_FALSE(in_DS(catalog::b2()));
  CHECK(in_DS(catalog::y()));
  CHECK(in_VY(catalog::y()));
  CHECK_FALSE(in_VY(catalog::b2()));
  CHECK_FALSE(in_V1(catalog::y()));
  CHECK_FALSE(in_V2(catalog::y()));
  CHECK_FALSE(in_V3(catalog::y()));
  for (auto const& S : {catalog::trivial(), catalog::c3()}) {
    CHECK(in_V1(S));
    CHECK(in_V2(S));
    CHECK(in_V3(S));
    CHECK(in_DS(S));
  }
  auto ds = check_DS(catalog::b2());
  REQUIRE_FALSE(ds.holds);
  REQUIRE(ds.counterexample.size() == 2);
  auto const S = catalog::b2();
  auto       G = green_relations(S);
  CHECK(G.d_class[ds.counterexample[0]] == G.d_class[ds.counterexample[1]]);
  CHECK(G.d_class[S.product(ds.counterexample[0], ds.counterexample[1])]
        != G.d_class[ds.counterexample[0]]);
}

TEST_CASE("V-membership counterexamples really fail") {
  auto const Y = catalog::y();
  for (auto check : {check_V1, check_V2, check_V3, check_VY}) {
    auto r = check(Y, default_assignment_cap);
    if (r.holds) {
      continue;
    }
    std::map<std::string, element_index> a;
    for (std::size_t i = 0; i < r.variables.size(); ++i) {
      a[r.variables[i]] = r.counterexample[i];
    }
    auto id = parse_pseudoidentity(r.identity, r.variables);
    CHECK(eval_term(id.lhs, a, Y) != eval_term(id.rhs, a, Y));
  }
}
