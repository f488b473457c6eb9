#pragma once

// JSON interchange. Field order is fixed (ordered_json), so serialising a
// parsed object reproduces the canonical text.
//
//   semigroup:     {"order": n, "table": [[...]], "labels": [...]}
//   semiautomaton: {"states": n, "alphabet": [...], "action": {"a": [...]}}
//                  with 0-based images and null for undefined points
//   rees matrix:   {"I": n, "Lambda": m, "group": <semigroup>, "P": [[...]]}
//                  with 0 for zero and 1-based group indices otherwise
//   certificate:   {"d": .., "chain": [{"p", "q", "x", "u", "y", "dir"}],
//                   "classic": {"m", "spine", "x", "y"}}; index |S| is the
//                  adjoined identity and (p, q) is the pair a step starts at

#include <string>

#include "json.hpp"

#include "zigzag/construct.hpp"
#include "zigzag/dominion.hpp"
#include "zigzag/semigroup.hpp"
#include "zigzag/transformation.hpp"

namespace zigzag::io {

  using Json = nlohmann::ordered_json;

  Json            to_json(FiniteSemigroup const& S);
  FiniteSemigroup semigroup_from_json(Json const& j);

  Json          to_json(Semiautomaton const& A);
  Semiautomaton automaton_from_json(Json const& j);

  Json           to_json(ReesMatrixSpec const& spec);
  ReesMatrixSpec rees_spec_from_json(Json const& j);

  Json to_json(ZigzagCertificate const& cert);
  // Step endpoints other than the starting pair are recomputed from the
  // witnesses; a missing chain is rebuilt from the classic form.
  ZigzagCertificate certificate_from_json(Json const& j, FiniteSemigroup const& S);

  Json to_json(Cs0Report const& r);
  Json to_json(Prop52Report const& r);
  Json to_json(OrderFormula const& r);

  // Throws ParseError.
  Json read_json_file(std::string const& path);
  Json parse_json(std::string const& text);
  void write_json_file(std::string const& path, Json const& j);

  // "all" or a comma separated list of 0-based indices. Throws ParseError
  // and IndexError.
  Subset parse_subset(std::string const& text, std::size_t universe);

}  // namespace zigzag::io
