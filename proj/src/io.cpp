#include "zigzag/io.hpp"

#include <fstream>
#include <sstream>

namespace zigzag::io {

  namespace {
    template <typename T>
    T get(Json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field \"") + key + "\"");
      }
      try {
        return j.at(key).get<T>();
      } catch (nlohmann::json::exception const& e) {
        throw ParseError(std::string("field \"") + key + "\": " + e.what());
      }
    }

    Json const& field(Json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field \"") + key + "\"");
      }
      return j.at(key);
    }

    element_index index_value(Json const& j) {
      if (!j.is_number_integer() || j.get<std::int64_t>() < 0
          || j.get<std::int64_t>() >= std::int64_t{undefined_point}) {
        throw ParseError("expected a nonnegative integer, got " + j.dump());
      }
      return j.get<element_index>();
    }
  }  // namespace

  Json to_json(FiniteSemigroup const& S) {
    Json j;
    j["order"] = S.order();
    Json rows  = Json::array();
    for (element_index x = 0; x < S.order(); ++x) {
      auto r = S.row(x);
      rows.push_back(std::vector<element_index>(r.begin(), r.end()));
    }
    j["table"] = std::move(rows);
    if (S.has_labels()) {
      j["labels"] = S.labels();
    }
    return j;
  }

  FiniteSemigroup semigroup_from_json(Json const& j) {
    auto n = get<std::size_t>(j, "order");
    if (!field(j, "table").is_array()) {
      throw ParseError("\"table\" must be an array of rows");
    }
    std::vector<element_index> table;
    for (auto const& row : field(j, "table")) {
      if (!row.is_array()) {
        throw ParseError("\"table\" must be an array of rows");
      }
      if (row.size() != n) {
        throw IndexError("table row of length " + std::to_string(row.size())
                         + " in a semigroup of order " + std::to_string(n));
      }
      for (auto const& v : row) {
        table.push_back(index_value(v));
      }
    }
    if (field(j, "table").size() != n) {
      throw IndexError("table has " + std::to_string(field(j, "table").size()) + " rows");
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      labels = get<std::vector<std::string>>(j, "labels");
    }
    return make_semigroup(n, std::move(table), std::move(labels));
  }

  Json to_json(Semiautomaton const& A) {
    Json j;
    j["states"]   = A.states;
    j["alphabet"] = A.alphabet;
    Json act      = Json::object();
    for (std::size_t a = 0; a < A.letter_count(); ++a) {
      Json im = Json::array();
      for (std::size_t q = 0; q < A.states; ++q) {
        if (A.action[a].is_defined(q)) {
          im.push_back(A.action[a][q]);
        } else {
          im.push_back(nullptr);
        }
      }
      act[A.alphabet[a]] = std::move(im);
    }
    j["action"] = std::move(act);
    return j;
  }

  Semiautomaton automaton_from_json(Json const& j) {
    auto n        = get<std::size_t>(j, "states");
    auto alphabet = get<std::vector<std::string>>(j, "alphabet");
    if (!field(j, "action").is_object()) {
      throw ParseError("\"action\" must map letters to image lists");
    }
    std::vector<PartialTransformation> action;
    for (auto const& a : alphabet) {
      if (!field(j, "action").contains(a)) {
        throw ParseError("no action given for letter " + a);
      }
      auto const& im = field(j, "action")[a];
      if (!im.is_array()) {
        throw ParseError("action of " + a + " must be a list");
      }
      std::vector<element_index> images;
      for (auto const& v : im) {
        images.push_back(v.is_null() ? undefined_point : index_value(v));
      }
      if (images.size() != n) {
        throw DegreeMismatch("letter " + a + " acts on " + std::to_string(images.size())
                             + " states, expected " + std::to_string(n));
      }
      action.emplace_back(std::move(images));
    }
    if (field(j, "action").size() != alphabet.size()) {
      throw ParseError("action names a letter outside the alphabet");
    }
    return make_semiautomaton(n, std::move(alphabet), std::move(action));
  }

  Json to_json(ReesMatrixSpec const& spec) {
    Json j;
    j["I"]      = spec.I;
    j["Lambda"] = spec.Lambda;
    j["group"]  = to_json(spec.group);
    Json P      = Json::array();
    for (auto const& row : spec.P) {
      Json r = Json::array();
      for (auto const& p : row) {
        r.push_back(p ? *p + 1 : 0);
      }
      P.push_back(std::move(r));
    }
    j["P"] = std::move(P);
    return j;
  }

  ReesMatrixSpec rees_spec_from_json(Json const& j) {
    ReesMatrixSpec spec;
    spec.I      = get<std::size_t>(j, "I");
    spec.Lambda = get<std::size_t>(j, "Lambda");
    if (!j.contains("group")) {
      throw ParseError("missing field \"group\"");
    }
    spec.group = semigroup_from_json(field(j, "group"));
    if (!j.contains("P") || !field(j, "P").is_array()) {
      throw ParseError("\"P\" must be a matrix");
    }
    for (auto const& row : field(j, "P")) {
      if (!row.is_array()) {
        throw ParseError("\"P\" must be a matrix");
      }
      std::vector<std::optional<element_index>> r;
      for (auto const& v : row) {
        auto k = index_value(v);
        r.push_back(k == 0 ? std::nullopt : std::optional<element_index>(k - 1));
      }
      spec.P.push_back(std::move(r));
    }
    validate(spec);
    return spec;
  }

  Json to_json(ZigzagCertificate const& cert) {
    Json j;
    j["d"]     = cert.d;
    Json chain = Json::array();
    for (auto const& s : cert.chain) {
      Json step;
      step["p"]   = s.from.p;
      step["q"]   = s.from.q;
      step["x"]   = s.x;
      step["u"]   = s.u;
      step["y"]   = s.y;
      step["dir"] = s.dir == FlipDirection::left ? "L" : "R";
      chain.push_back(std::move(step));
    }
    j["chain"] = std::move(chain);
    if (cert.classic) {
      Json c;
      c["m"]       = cert.classic->m;
      c["spine"]   = cert.classic->spine;
      c["x"]       = cert.classic->x;
      c["y"]       = cert.classic->y;
      j["classic"] = std::move(c);
    }
    return j;
  }

  ZigzagCertificate certificate_from_json(Json const& j, FiniteSemigroup const& S) {
    ZigzagCertificate cert;
    if (!j.is_object() || !j.contains("d")) {
      throw ParseError("missing field \"d\"");
    }
    cert.d           = index_value(field(j, "d"));
    auto const bound = S.order() + 1;
    auto       in_s1 = [&](element_index v) {
      if (v >= bound) {
        throw IndexError("certificate element " + std::to_string(v) + " out of range");
      }
      return v;
    };
    auto mul = [&](element_index a, element_index b) {
      auto one = static_cast<element_index>(S.order());
      return a == one ? b : b == one ? a : S.product(a, b);
    };
    if (j.contains("classic")) {
      auto const&   c = field(j, "classic");
      ClassicZigzag z;
      z.m = get<std::size_t>(c, "m");
      if (z.m == 0) {
        throw ParseError("classic form needs m >= 1");
      }
      auto in_s = [&](Json const& v) {
        auto k = index_value(v);
        if (k >= S.order()) {
          throw IndexError("classic factor " + std::to_string(k) + " out of range");
        }
        return k;
      };
      for (auto const& v : field(c, "spine")) {
        z.spine.push_back(in_s(v));
      }
      for (auto const& v : field(c, "x")) {
        z.x.push_back(in_s(v));
      }
      for (auto const& v : field(c, "y")) {
        z.y.push_back(in_s(v));
      }
      cert.classic = std::move(z);
    }
    if (j.contains("chain")) {
      if (!field(j, "chain").is_array()) {
        throw ParseError("\"chain\" must be a list of steps");
      }
      for (auto const& s : field(j, "chain")) {
        FlipStep step;
        step.from.p = in_s1(index_value(field(s, "p")));
        step.from.q = in_s1(index_value(field(s, "q")));
        step.x      = in_s1(index_value(field(s, "x")));
        step.u      = in_s1(index_value(field(s, "u")));
        step.y      = in_s1(index_value(field(s, "y")));
        auto const& d = field(s, "dir");
        auto dir      = d.is_string() ? d.get<std::string>() : std::string();
        if (dir == "L") {
          step.dir = FlipDirection::left;
          step.to  = {step.x, mul(step.u, step.y)};
        } else if (dir == "R") {
          step.dir = FlipDirection::right;
          step.to  = {mul(step.x, step.u), step.y};
        } else {
          throw ParseError("step direction must be \"L\" or \"R\"");
        }
        cert.chain.push_back(step);
      }
    } else if (cert.classic) {
      if (cert.classic->spine.size() != 2 * cert.classic->m - 1
          || cert.classic->x.size() + 1 != cert.classic->m
          || cert.classic->y.size() + 1 != cert.classic->m) {
        throw ParseError("classic form has inconsistent length");
      }
      cert.chain = chain_from_classic(S, *cert.classic);
    } else {
      throw ParseError("a certificate needs a chain or a classic form");
    }
    return cert;
  }

  Json to_json(Cs0Report const& r) {
    Json j;
    j["T_order"]                = r.T_order;
    j["U_order"]                = r.U_order;
    j["expected_U_order"]       = r.expected_U_order;
    j["U_subsemigroup"]         = r.u_subsemigroup;
    j["U_in_VY"]                = r.u_in_VY;
    j["dominion_is_T"]          = r.dominion_all;
    j["S_embeds"]               = r.embeds;
    j["image_meets_U_in_zero"]  = r.image_meets_u_in_zero;
    j["T_completely_0_simple"]  = r.T_completely_0_simple;
    j["zigzags_checked"]        = r.zigzags_checked;
    j["zigzags_valid"]          = r.zigzags_valid;
    j["ok"]                     = r.ok();
    return j;
  }

  Json to_json(Prop52Report const& r) {
    Json j;
    j["T_A_order"]        = r.T_A_order;
    j["T_enlarged_order"] = r.T_enlarged_order;
    j["B_order"]          = r.B_order;
    if (r.items.size() > 2) {
      j["U_order"]          = r.U_order;
      j["expected_U_order"] = r.expected_U_order;
    }
    Json items = Json::array();
    for (auto const& i : r.items) {
      items.push_back(Json{{"item", i.name}, {"pass", i.pass}, {"detail", i.detail}});
    }
    j["items"]    = std::move(items);
    j["all_pass"] = r.all_pass();
    return j;
  }

  Json to_json(OrderFormula const& r) {
    return Json{{"T_A_order", r.T_A_order},
                {"T_enlarged_order", r.T_enlarged_order},
                {"predicted", r.predicted},
                {"holds", r.holds}};
  }

  Json parse_json(std::string const& text) {
    try {
      return Json::parse(text);
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("malformed JSON: ") + e.what());
    }
  }

  Json read_json_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError("cannot read " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str());
  }

  void write_json_file(std::string const& path, Json const& j) {
    std::ofstream out(path);
    if (!out) {
      throw Error("cannot write " + path);
    }
    out << j.dump(2) << '\n';
  }

  Subset parse_subset(std::string const& text, std::size_t universe) {
    if (text == "all") {
      return Subset::all(universe);
    }
    std::vector<element_index> members;
    std::stringstream          in(text);
    std::string                item;
    while (std::getline(in, item, ',')) {
      if (item.empty() || item.size() > 9
          || item.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("bad subset entry \"" + item + "\" in \"" + text + "\"");
      }
      members.push_back(static_cast<element_index>(std::stoul(item)));
    }
    if (members.empty() && !text.empty()) {
      throw ParseError("empty subset list");
    }
    return Subset(universe, std::move(members));
  }

}  // namespace zigzag::io
