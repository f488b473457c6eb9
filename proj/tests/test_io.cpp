#include <catch_amalgamated.hpp>

#include <filesystem>

#include "zigzag/catalog.hpp"
#include "zigzag/io.hpp"

using namespace zigzag;

TEST_CASE("semigroups round-trip") {
  auto S = catalog::b2();
  auto j = io::to_json(S);
  CHECK(io::semigroup_from_json(j) == S);
  CHECK(io::to_json(io::semigroup_from_json(j)).dump() == j.dump());
  auto p = io::parse_json(j.dump());
  CHECK(io::semigroup_from_json(p) == S);
}

TEST_CASE("automata and Rees specs round-trip") {
  auto A = catalog::fig2_base();
  auto j = io::to_json(A);
  CHECK(io::to_json(io::automaton_from_json(j)).dump() == j.dump());
  auto R = catalog::rees49_spec();
  auto k = io::to_json(R);
  CHECK(k["P"][1][1] == 2);
  CHECK(k["P"][1][0] == 0);
  CHECK(io::to_json(io::rees_spec_from_json(k)).dump() == k.dump());
}

TEST_CASE("certificates round-trip") {
  auto S    = catalog::b2();
  auto U    = catalog::y_in_b2();
  auto cert = *zigzag_for(S, U, 1);
  auto j    = io::to_json(cert);
  auto back = io::certificate_from_json(j, S);
  CHECK(back.chain == cert.chain);
  CHECK(back.classic == cert.classic);
  CHECK(verify_zigzag(S, U, back).valid);
  // The chain alone is enough.
  j.erase("classic");
  CHECK(verify_zigzag(S, U, io::certificate_from_json(j, S)).valid);
}

TEST_CASE("malformed input raises ParseError or a validation error") {
  CHECK_THROWS_AS(io::parse_json("{"), ParseError);
  CHECK_THROWS_AS(io::semigroup_from_json(io::parse_json("{\"order\": 2}")), ParseError);
  CHECK_THROWS_AS(io::semigroup_from_json(io::parse_json(
                      R"({"order": 2, "table": [[1, 0], [1, 0]]})")),
                  AssociativityError);
  CHECK_THROWS_AS(io::read_json_file("/nonexistent/file.json"), ParseError);
  CHECK_THROWS_AS(io::parse_subset("1,x", 4), ParseError);
  CHECK_THROWS_AS(io::parse_subset("7", 4), IndexError);
  CHECK_THROWS_AS(io::parse_subset("99999999999999999999", 4), ParseError);
  CHECK(io::parse_subset("all", 3).size() == 3);
  CHECK(io::parse_subset("2,0", 3).members() == std::vector<element_index>{0, 2});
}

TEST_CASE("files round-trip") {
  auto path = std::filesystem::temp_directory_path() / "zigzag_io_test.json";
  auto S    = catalog::y();
  io::write_json_file(path.string(), io::to_json(S));
  CHECK(io::semigroup_from_json(io::read_json_file(path.string())) == S);
  std::filesystem::remove(path);
}
