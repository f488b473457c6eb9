#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <ostream>

#include <openssl/evp.h>

#include "CLI11.hpp"

#include "zigzag/catalog.hpp"
#include "zigzag/construct.hpp"
#include "zigzag/dominion.hpp"
#include "zigzag/green.hpp"
#include "zigzag/io.hpp"
#include "zigzag/pseudo.hpp"
#include "zigzag/reproduce.hpp"

#ifndef ZIGZAG_VERSION
#define ZIGZAG_VERSION "0.0.0"
#endif

namespace zigzag::cli {

  using io::Json;

  std::string sha256_hex(std::string const& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int  len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
      throw Error("SHA-256 computation failed");
    }
    std::string hex;
    char        buf[3];
    for (unsigned int i = 0; i < len; ++i) {
      std::snprintf(buf, sizeof buf, "%02x", digest[i]);
      hex += buf;
    }
    return hex;
  }

  namespace {

    enum class Kind { semigroup, automaton, rees };

    char const* kind_name(Kind k) {
      switch (k) {
        case Kind::semigroup: return "semigroup";
        case Kind::automaton: return "semiautomaton";
        case Kind::rees: return "rees";
      }
      return "";
    }

    std::map<std::string, std::function<Json()>> const& catalog_entries() {
      static std::map<std::string, std::function<Json()>> const entries{
          {"b2", [] { return io::to_json(catalog::b2()); }},
          {"y", [] { return io::to_json(catalog::y()); }},
          {"c3", [] { return io::to_json(catalog::c3()); }},
          {"trivial", [] { return io::to_json(catalog::trivial()); }},
          {"fig2", [] { return io::to_json(catalog::fig2_base()); }},
          {"q3a3", [] { return io::to_json(catalog::q3a3()); }},
          {"rees49", [] { return io::to_json(catalog::rees49_spec()); }},
          {"b2-rees", [] { return io::to_json(catalog::b2_rees_spec()); }},
          {"zero-group", [] { return io::to_json(catalog::zero_group_spec()); }},
      };
      return entries;
    }

    Json catalog_json(std::string const& name) {
      auto it = catalog_entries().find(name);
      if (it == catalog_entries().end()) {
        std::string known;
        for (auto const& [k, _] : catalog_entries()) {
          known += (known.empty() ? "" : ", ") + k;
        }
        throw ParseError("unknown catalog entry '" + name + "' (known: " + known + ")");
      }
      return it->second();
    }

    // A parsed input file or @name, kept in canonical form.
    struct Input {
      std::string name;
      Kind        kind;
      Json        json;

      FiniteSemigroup semigroup() const {
        switch (kind) {
          case Kind::semigroup: return io::semigroup_from_json(json);
          case Kind::automaton:
            return transition_semigroup(io::automaton_from_json(json)).semigroup;
          case Kind::rees: return rees_semigroup(io::rees_spec_from_json(json)).semigroup;
        }
        return {};
      }

      Semiautomaton automaton() const {
        if (kind != Kind::automaton) {
          throw ParseError(name + " is not a semiautomaton");
        }
        return io::automaton_from_json(json);
      }

      ReesMatrixSpec rees() const {
        if (kind != Kind::rees) {
          throw ParseError(name + " is not a Rees matrix description");
        }
        return io::rees_spec_from_json(json);
      }
    };

    Input load(std::string const& source) {
      Json raw = source.starts_with('@') ? catalog_json(source.substr(1))
                                           : io::read_json_file(source);
      if (!raw.is_object()) {
        throw ParseError(source + ": expected a JSON object");
      }
      Input in{source, Kind::semigroup, {}};
      if (raw.contains("P")) {
        in.kind = Kind::rees;
        in.json = io::to_json(io::rees_spec_from_json(raw));
      } else if (raw.contains("action")) {
        in.kind = Kind::automaton;
        in.json = io::to_json(io::automaton_from_json(raw));
      } else {
        in.json = io::to_json(io::semigroup_from_json(raw));
      }
      return in;
    }

    class Report {
     public:
      Report(std::vector<std::string> const& args, std::uint64_t seed) {
        std::string cmd;
        for (auto const& a : args) {
          cmd += (cmd.empty() ? "" : " ") + a;
        }
        json["command"] = cmd;
        json["inputs"]  = Json::array();
        json["results"] = Json::object();
        json["timing"]  = Json::object();
        json["version"] = ZIGZAG_VERSION;
        json["seed"]    = seed;
      }

      void input(Input const& in) {
        json["inputs"].push_back(
            {{"name", in.name}, {"kind", kind_name(in.kind)}, {"sha256", sha256_hex(in.json.dump())}});
      }

      template <typename F>
      auto timed(std::string const& step, F&& f) {
        auto t0   = std::chrono::steady_clock::now();
        auto done = [&] {
          json["timing"][step] = std::chrono::duration<double, std::milli>(
                                     std::chrono::steady_clock::now() - t0)
                                     .count();
        };
        if constexpr (std::is_void_v<decltype(f())>) {
          f();
          done();
        } else {
          auto r = f();
          done();
          return r;
        }
      }

      Json& results() {
        return json["results"];
      }

      Json json;
    };

    void flatten(std::ostream& out, std::string const& prefix, Json const& j) {
      if (j.is_object() && !j.empty()) {
        for (auto const& [k, v] : j.items()) {
          flatten(out, prefix.empty() ? k : prefix + "." + k, v);
        }
        return;
      }
      out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
    }

    Json index_list(Subset const& X) {
      return Json(X.members());
    }

    Json membership_json(MembershipResult const& r, FiniteSemigroup const& S) {
      Json j{{"holds", r.holds}};
      if (!r.holds) {
        j["identity"] = r.identity;
        Json ce       = Json::object();
        for (std::size_t i = 0; i < r.counterexample.size(); ++i) {
          std::string var = i < r.variables.size() ? r.variables[i] : std::to_string(i);
          ce[var]         = S.label(r.counterexample[i]);
        }
        j["counterexample"] = ce;
      }
      return j;
    }

    struct Options {
      bool        json = false;
      std::uint64_t seed = 0;
    };

    void emit(std::ostream& out, Options const& opt, Report& report) {
      if (opt.json) {
        out << report.json.dump(2) << '\n';
      } else {
        flatten(out, "", report.results());
      }
    }

    void store_artifact(Report& report, std::string const& out_path, Json const& artifact) {
      if (out_path.empty()) {
        report.results()["artifact"] = artifact;
      } else {
        io::write_json_file(out_path, artifact);
        report.results()["artifact_path"] = out_path;
      }
    }

    int run_impl(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
      CLI::App app{"Dominions, zigzags and Green's structure of finite semigroups", "zigzag"};
      app.require_subcommand(1);
      Options opt;
      app.add_flag("--json", opt.json, "Machine-readable JSON report");
      app.add_option("--seed", opt.seed, "Seed for randomised generation")->capture_default_str();
      app.set_version_flag("--version", ZIGZAG_VERSION);

      std::string input, second, subset, restrict_spec, out_path, kind, fig2_path;

      auto* check = app.add_subcommand("check", "Pseudovariety and structure predicates");
      check->add_option("input", input, "Semigroup file or @name")->required();
      bool ds = false, v1 = false, v2 = false, v3 = false, vy = false, cr = false, cs = false,
           c0s = false;
      std::uint64_t cap = default_assignment_cap;
      check->add_flag("--ds", ds, "Membership in DS");
      check->add_flag("--v1", v1, "Membership in V1");
      check->add_flag("--v2", v2, "Membership in V2");
      check->add_flag("--v3", v3, "Membership in V3");
      check->add_flag("--vy", vy, "Membership in V{Y}");
      check->add_flag("--cr", cr, "Completely regular");
      check->add_flag("--cs", cs, "Completely simple");
      check->add_flag("--c0s", c0s, "Completely 0-simple");
      check->add_option("--cap", cap, "Assignment budget per pseudoidentity")->capture_default_str();

      auto* dom = app.add_subcommand("dominion", "Dominion of a subsemigroup");
      dom->add_option("input", input, "Semigroup file or @name")->required();
      dom->add_option("--subset", subset, "'all' or comma separated 0-based indices")->required();
      std::optional<element_index> witness;
      dom->add_option("--witness", witness, "Element to certify with a zigzag");
      dom->add_option("--restrict", restrict_spec, "Factors allowed in the zigzag");

      auto* con = app.add_subcommand("construct", "Build a semigroup or automaton");
      con->add_option("kind", kind, "rees | cs0 | enlarge | cycle-modify")
          ->required()
          ->check(CLI::IsMember({"rees", "cs0", "enlarge", "cycle-modify"}));
      con->add_option("input", input, "Input file or @name")->required();
      con->add_option("--out", out_path, "Write the constructed object here");

      auto* rep = app.add_subcommand("reproduce", "Recompute the published numbers");
      bool  quick = false;
      rep->add_flag("--quick", quick, "Skip the order-4097 items");
      rep->add_option("--fig2", fig2_path, "Replacement for the fig2 automaton");

      auto* egg = app.add_subcommand("eggbox", "Graphviz eggbox diagram");
      egg->add_option("input", input, "Semigroup file or @name")->required();
      std::optional<std::uint32_t> dclass;
      egg->add_option("--dclass", dclass, "Only this D-class (0-based)");

      auto* ver = app.add_subcommand("verify", "Check a zigzag certificate");
      ver->add_option("input", input, "Semigroup file or @name")->required();
      ver->add_option("certificate", second, "Certificate JSON file")->required();
      ver->add_option("--subset", subset, "'all' or comma separated 0-based indices")->required();

      auto* cat = app.add_subcommand("catalog", "Print a named example as JSON");
      cat->add_option("name", input, "Catalog entry")->required();
      cat->add_option("--out", out_path, "Write it to this file");

      try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
      } catch (CLI::ParseError const& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_validation;
      }

      Report report(args, opt.seed);
      auto&  results = report.results();

      if (check->parsed()) {
        Input in = load(input);
        report.input(in);
        auto S   = report.timed("load", [&] { return in.semigroup(); });
        results["order"] = S.order();
        auto member = [&](bool flag, char const* name, auto f) {
          if (flag) {
            results[name] = report.timed(name, [&] { return membership_json(f(S), S); });
          }
        };
        member(ds, "ds", [](auto const& T) { return check_DS(T); });
        member(v1, "v1", [&](auto const& T) { return check_V1(T, cap); });
        member(v2, "v2", [&](auto const& T) { return check_V2(T, cap); });
        member(v3, "v3", [&](auto const& T) { return check_V3(T, cap); });
        member(vy, "vy", [&](auto const& T) { return check_VY(T, cap); });
        if (cr) {
          results["cr"] = report.timed("cr", [&] { return is_completely_regular(S); });
        }
        if (cs) {
          results["cs"] = report.timed("cs", [&] { return is_completely_simple(S); });
        }
        if (c0s) {
          results["c0s"] = report.timed("c0s", [&] { return is_completely_0_simple(S); });
        }
        emit(out, opt, report);
        return exit_ok;
      }

      if (dom->parsed()) {
        Input in = load(input);
        report.input(in);
        auto S = report.timed("load", [&] { return in.semigroup(); });
        auto U = io::parse_subset(subset, S.order());
        auto D = report.timed("dominion", [&] { return dominion(S, U); });
        bool proper_u = U.size() < S.order();
        bool all      = D.size() == S.order();
        results["order"]    = S.order();
        results["subset"]   = index_list(U);
        results["dominion"] = index_list(D);
        results["dominion_is_all"] = all;
        results["epi_embedding"]   = all && proper_u;
        if (witness) {
          if (*witness >= S.order()) {
            throw IndexError("witness " + std::to_string(*witness) + " is not an element");
          }
          std::optional<Subset> restrict;
          if (!restrict_spec.empty()) {
            restrict = io::parse_subset(restrict_spec, S.order());
          }
          auto cert = report.timed("zigzag", [&] { return zigzag_for(S, U, *witness, restrict); });
          if (cert) {
            results["certificate"] = io::to_json(*cert);
            results["verified"]    = verify_zigzag(S, U, *cert).valid;
            results["m"] = cert->classic ? Json(cert->classic->m) : Json(nullptr);
          } else {
            results["certificate"] = nullptr;
          }
        }
        emit(out, opt, report);
        return all && proper_u ? exit_epi_found : exit_ok;
      }

      if (con->parsed()) {
        Input in = load(input);
        report.input(in);
        bool ok = true;
        if (kind == "rees") {
          auto T = report.timed("construct", [&] { return rees_semigroup(in.rees()); });
          results["order"] = T.semigroup.order();
          store_artifact(report, out_path, io::to_json(T.semigroup));
        } else if (kind == "cs0") {
          auto data = report.timed("construct", [&] { return cs0_enlarge(in.rees()); });
          auto r    = report.timed("verify", [&] { return cs0_verify(data); });
          results["report"] = io::to_json(r);
          results["U"]      = index_list(data.U);
          ok                = r.ok();
          store_artifact(report, out_path, io::to_json(data.spec));
        } else if (kind == "enlarge") {
          auto A = in.automaton();
          auto E = report.timed("construct", [&] { return enlarge_automaton(A); });
          if (is_complete(A)) {
            auto r = report.timed("prop52", [&] { return prop52_report(A); });
            auto f = report.timed("order_formula", [&] { return order_formula_check(A, true); });
            results["report"]        = io::to_json(r);
            results["order_formula"] = io::to_json(f);
            ok                       = r.all_pass() && f.holds;
          } else {
            auto r = report.timed("prop52", [&] { return prop52_basic(A); });
            results["report"] = io::to_json(r);
            ok                = r.all_pass();
          }
          store_artifact(report, out_path, io::to_json(E.enlarged));
        } else {
          auto B = report.timed("construct", [&] { return cycle_modify(in.automaton()); });
          results["T_order"] = transition_semigroup(B).semigroup.order();
          store_artifact(report, out_path, io::to_json(B));
        }
        results["checks_pass"] = ok;
        emit(out, opt, report);
        return ok ? exit_ok : exit_mismatch;
      }

      if (rep->parsed()) {
        ReproduceOptions ro;
        ro.quick = quick;
        if (!fig2_path.empty()) {
          Input in = load(fig2_path);
          report.input(in);
          ro.fig2 = in.automaton();
        }
        auto items = report.timed("reproduce", [&] { return reproduce(ro); });
        bool pass  = all_pass(items);
        if (opt.json) {
          Json rows = Json::array();
          for (auto const& i : items) {
            rows.push_back({{"name", i.name},
                            {"expected", i.expected},
                            {"actual", i.actual},
                            {"pass", i.pass},
                            {"informational", i.informational}});
            report.json["timing"][i.name] = i.ms;
          }
          results["items"]    = rows;
          results["all_pass"] = pass;
          emit(out, opt, report);
        } else {
          for (auto const& i : items) {
            char const* status = i.pass ? "PASS" : (i.informational ? "INFO" : "FAIL");
            out << status << "  " << i.name << "  expected " << i.expected << ", got "
                << i.actual << '\n';
          }
          out << (pass ? "all checks pass" : "some checks FAILED") << '\n';
        }
        return pass ? exit_ok : exit_mismatch;
      }

      if (egg->parsed()) {
        Input in = load(input);
        report.input(in);
        auto S = in.semigroup();
        auto G = green_relations(S);
        if (dclass && *dclass >= G.d_count) {
          throw IndexError("D-class " + std::to_string(*dclass) + " does not exist ("
                           + std::to_string(G.d_count) + " classes)");
        }
        auto dot = eggbox_dot(S, G, dclass);
        if (opt.json) {
          results["dot"] = dot;
          emit(out, opt, report);
        } else {
          out << dot;
        }
        return exit_ok;
      }

      if (ver->parsed()) {
        Input in = load(input);
        report.input(in);
        auto S    = in.semigroup();
        auto U    = io::parse_subset(subset, S.order());
        auto cert = io::certificate_from_json(io::read_json_file(second), S);
        auto r    = report.timed("verify", [&] { return verify_zigzag(S, U, cert); });
        results["valid"] = r.valid;
        if (!r.valid) {
          results["failure"] = r.failure;
        }
        emit(out, opt, report);
        return r.valid ? exit_ok : exit_mismatch;
      }

      if (cat->parsed()) {
        Input in = load("@" + input);
        if (out_path.empty()) {
          out << in.json.dump(2) << '\n';
        } else {
          io::write_json_file(out_path, in.json);
        }
        return exit_ok;
      }
      return exit_validation;
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    try {
      return run_impl(args, out, err);
    } catch (ValidationError const& e) {
      err << "error: " << e.what() << '\n';
      return exit_validation;
    } catch (PreconditionError const& e) {
      err << "error: " << e.what() << '\n';
      return exit_precondition;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << '\n';
      return exit_mismatch;
    }
  }

}  // namespace zigzag::cli
