#include "zigzag/pseudo.hpp"

#include <algorithm>
#include <cctype>

#include "zigzag/green.hpp"
#include "zigzag/kernels.hpp"

namespace zigzag {

  OmegaTerm OmegaTerm::variable(std::string name) {
    if (name.empty()) {
      throw ParseError("empty variable name");
    }
    OmegaTerm t;
    t._tokens.push_back({Op::variable, std::move(name)});
    return t;
  }

  OmegaTerm OmegaTerm::product(OmegaTerm const& a, OmegaTerm const& b) {
    OmegaTerm t = a;
    t._tokens.insert(t._tokens.end(), b._tokens.begin(), b._tokens.end());
    t._tokens.push_back({Op::product, {}});
    return t;
  }

  OmegaTerm OmegaTerm::omega(OmegaTerm const& a) {
    OmegaTerm t = a;
    t._tokens.push_back({Op::omega, {}});
    return t;
  }

  OmegaTerm OmegaTerm::omega_plus_one(OmegaTerm const& a) {
    return product(omega(a), a);
  }

  std::vector<std::string> OmegaTerm::variables() const {
    std::vector<std::string> out;
    for (auto const& tok : _tokens) {
      if (tok.op == Op::variable
          && std::find(out.begin(), out.end(), tok.name) == out.end()) {
        out.push_back(tok.name);
      }
    }
    return out;
  }

  std::string OmegaTerm::to_string() const {
    std::vector<std::string> stack;
    for (auto const& tok : _tokens) {
      switch (tok.op) {
        case Op::variable: stack.push_back(tok.name); break;
        case Op::omega: stack.back() = "(" + stack.back() + ")^w"; break;
        case Op::product: {
          auto b = std::move(stack.back());
          stack.pop_back();
          stack.back() = "(" + stack.back() + " " + b + ")";
          break;
        }
      }
    }
    return stack.back();
  }

  namespace {
    // Postfix program over variable slots; slot < 0 marks an operator.
    struct Program {
      static constexpr int product = -1;
      static constexpr int omega   = -2;
      std::vector<int>     code;
      std::size_t          depth = 0;
    };

    Program compile(OmegaTerm const& t, std::vector<std::string> const& vars) {
      Program     p;
      std::size_t d = 0;
      for (auto const& tok : t.tokens()) {
        switch (tok.op) {
          case OmegaTerm::Op::variable: {
            auto it = std::find(vars.begin(), vars.end(), tok.name);
            if (it == vars.end()) {
              throw UnboundVariable("variable " + tok.name + " is not bound");
            }
            p.code.push_back(static_cast<int>(it - vars.begin()));
            p.depth = std::max(p.depth, ++d);
            break;
          }
          case OmegaTerm::Op::product:
            p.code.push_back(Program::product);
            --d;
            break;
          case OmegaTerm::Op::omega: p.code.push_back(Program::omega); break;
        }
      }
      return p;
    }

    std::vector<element_index> omega_table(FiniteSemigroup const& S) {
      std::vector<element_index> w(S.order());
      for (element_index s = 0; s < S.order(); ++s) {
        w[s] = omega_power(S, s);
      }
      return w;
    }

    element_index run(Program const&                    p,
                      std::span<element_index const>    values,
                      FiniteSemigroup const&            S,
                      std::vector<element_index> const& omega,
                      element_index*                    stack) {
      std::size_t top = 0;
      for (int c : p.code) {
        if (c >= 0) {
          stack[top++] = values[c];
        } else if (c == Program::omega) {
          stack[top - 1] = omega[stack[top - 1]];
        } else {
          --top;
          stack[top - 1] = S.product(stack[top - 1], stack[top]);
        }
      }
      return stack[0];
    }
  }  // namespace

  element_index eval_term(OmegaTerm const&                            t,
                          std::map<std::string, element_index> const& assignment,
                          FiniteSemigroup const&                      S) {
    std::vector<std::string>   vars;
    std::vector<element_index> values;
    for (auto const& [name, v] : assignment) {
      if (v >= S.order()) {
        throw IndexError("assigned element " + std::to_string(v) + " out of range");
      }
      vars.push_back(name);
      values.push_back(v);
    }
    auto                       p = compile(t, vars);
    std::vector<element_index> stack(p.depth);
    auto                       omega = omega_table(S);
    return run(p, values, S, omega, stack.data());
  }

  Pseudoidentity make_pseudoidentity(OmegaTerm                lhs,
                                     OmegaTerm                rhs,
                                     std::vector<std::string> vars) {
    if (vars.empty()) {
      vars = lhs.variables();
      for (auto const& v : rhs.variables()) {
        if (std::find(vars.begin(), vars.end(), v) == vars.end()) {
          vars.push_back(v);
        }
      }
    }
    compile(lhs, vars);
    compile(rhs, vars);
    return Pseudoidentity{std::move(lhs), std::move(rhs), std::move(vars)};
  }

  namespace {
    class Parser {
     public:
      explicit Parser(std::string const& text) : _s(text) {}

      OmegaTerm whole_term() {
        auto t = term();
        skip();
        if (_pos != _s.size()) {
          fail("unexpected character");
        }
        return t;
      }

      OmegaTerm term() {
        auto t = factor();
        while (true) {
          skip();
          if (_pos < _s.size() && (std::isalpha(uc()) || _s[_pos] == '(')) {
            t = OmegaTerm::product(t, factor());
          } else {
            return t;
          }
        }
      }

      std::size_t pos() const noexcept {
        return _pos;
      }

     private:
      unsigned char uc() const {
        return static_cast<unsigned char>(_s[_pos]);
      }

      void skip() {
        while (_pos < _s.size() && std::isspace(uc())) {
          ++_pos;
        }
      }

      [[noreturn]] void fail(std::string const& what) const {
        throw ParseError(what + " at position " + std::to_string(_pos) + " in \""
                         + _s + "\"");
      }

      OmegaTerm atom() {
        skip();
        if (_pos >= _s.size()) {
          fail("expected a term");
        }
        if (_s[_pos] == '(') {
          ++_pos;
          auto t = term();
          skip();
          if (_pos >= _s.size() || _s[_pos] != ')') {
            fail("expected ')'");
          }
          ++_pos;
          return t;
        }
        if (!std::isalpha(uc())) {
          fail("expected a variable or '('");
        }
        std::string name(1, _s[_pos++]);
        while (_pos < _s.size() && std::isdigit(uc())) {
          name += _s[_pos++];
        }
        return OmegaTerm::variable(name);
      }

      OmegaTerm factor() {
        auto t = atom();
        while (true) {
          skip();
          if (_pos >= _s.size() || _s[_pos] != '^') {
            return t;
          }
          ++_pos;
          skip();
          if (_pos < _s.size() && _s[_pos] == 'w') {
            ++_pos;
            if (_s.compare(_pos, 2, "+1") == 0) {
              _pos += 2;
              t = OmegaTerm::omega_plus_one(t);
            } else {
              t = OmegaTerm::omega(t);
            }
          } else if (_pos < _s.size() && std::isdigit(uc())) {
            std::size_t k = 0;
            while (_pos < _s.size() && std::isdigit(uc())) {
              k = k * 10 + static_cast<std::size_t>(_s[_pos++] - '0');
              if (k > 64) {
                fail("exponent too large");
              }
            }
            if (k == 0) {
              fail("exponent must be positive");
            }
            auto base = t;
            for (std::size_t i = 1; i < k; ++i) {
              t = OmegaTerm::product(t, base);
            }
          } else {
            fail("expected 'w' or a positive exponent after '^'");
          }
        }
      }

      std::string const& _s;
      std::size_t        _pos = 0;
    };
  }  // namespace

  OmegaTerm parse_term(std::string const& text) {
    return Parser(text).whole_term();
  }

  Pseudoidentity parse_pseudoidentity(std::string const&       text,
                                      std::vector<std::string> vars) {
    auto eq = text.find('=');
    if (eq == std::string::npos || text.find('=', eq + 1) != std::string::npos) {
      throw ParseError("a pseudoidentity needs exactly one '=' in \"" + text + "\"");
    }
    return make_pseudoidentity(parse_term(text.substr(0, eq)),
                               parse_term(text.substr(eq + 1)),
                               std::move(vars));
  }

  SatisfactionResult satisfies(FiniteSemigroup const& S,
                               Pseudoidentity const&  id,
                               std::uint64_t          cap) {
    auto const    n     = S.order();
    auto const    arity = id.variables.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < arity; ++i) {
      if (total > cap / n) {
        throw BudgetExceeded(std::to_string(n) + "^" + std::to_string(arity)
                             + " assignments exceed the cap of "
                             + std::to_string(cap));
      }
      total *= n;
    }
    if (total > cap) {
      throw BudgetExceeded("assignment count exceeds the cap");
    }
    auto lhs   = compile(id.lhs, id.variables);
    auto rhs   = compile(id.rhs, id.variables);
    auto omega = omega_table(S);
    auto depth = std::max(lhs.depth, rhs.depth);

    auto holds = [&](std::span<element_index const> values) {
      thread_local std::vector<element_index> stack;
      stack.resize(std::max(stack.size(), depth));
      return run(lhs, values, S, omega, stack.data())
             == run(rhs, values, S, omega, stack.data());
    };
    SatisfactionResult result;
    if (arity == 0) {
      result.holds = holds({});
      return result;
    }
    auto bad = kernels::omp::first_failing_assignment(n, arity, holds);
    if (bad) {
      result.holds = false;
      result.counterexample.resize(arity);
      kernels::decode_assignment(*bad, n, result.counterexample);
    }
    return result;
  }

  Pseudoidentity v1_identity() {
    return parse_pseudoidentity("(t^w x z^w)^w+1 = t^w x z^w", {"x", "t", "z"});
  }

  Pseudoidentity v2_identity() {
    return parse_pseudoidentity("t^w x z^w (t^w z^w)^w = t^w x z^w",
                                {"x", "t", "z"});
  }

  Pseudoidentity v3_identity() {
    return parse_pseudoidentity("(t^w z^w)^w t^w x z^w = t^w x z^w",
                                {"x", "t", "z"});
  }

  std::vector<Pseudoidentity> vy_identities() {
    return {parse_pseudoidentity("x^3 = x^2", {"x"}),
            parse_pseudoidentity("xyx = x^2y^2", {"x", "y"}),
            parse_pseudoidentity("x^2y^2 = y^2x^2", {"x", "y"})};
  }

  namespace {
    MembershipResult check_all(FiniteSemigroup const&             S,
                               std::vector<Pseudoidentity> const& ids,
                               std::uint64_t                      cap) {
      MembershipResult m;
      for (auto const& id : ids) {
        auto r = satisfies(S, id, cap);
        if (!r.holds) {
          m.holds          = false;
          m.identity       = id.lhs.to_string() + " = " + id.rhs.to_string();
          m.variables      = id.variables;
          m.counterexample = std::move(r.counterexample);
          return m;
        }
      }
      return m;
    }
  }  // namespace

  MembershipResult check_V1(FiniteSemigroup const& S, std::uint64_t cap) {
    return check_all(S, {v1_identity()}, cap);
  }

  MembershipResult check_V2(FiniteSemigroup const& S, std::uint64_t cap) {
    return check_all(S, {v2_identity()}, cap);
  }

  MembershipResult check_V3(FiniteSemigroup const& S, std::uint64_t cap) {
    return check_all(S, {v3_identity()}, cap);
  }

  MembershipResult check_VY(FiniteSemigroup const& S, std::uint64_t cap) {
    return check_all(S, vy_identities(), cap);
  }

  MembershipResult check_DS(FiniteSemigroup const& S) {
    auto             G = green_relations(S);
    MembershipResult m;
    for (std::size_t c = 0; c < G.d_count; ++c) {
      if (!G.eggbox[c].regular) {
        continue;
      }
      for (auto a : G.d_members[c]) {
        for (auto b : G.d_members[c]) {
          if (G.d_class[S.product(a, b)] != c) {
            m.holds          = false;
            m.identity       = "regular D-classes are subsemigroups";
            m.variables      = {"a", "b"};
            m.counterexample = {a, b};
            return m;
          }
        }
      }
    }
    return m;
  }

  bool in_V1(FiniteSemigroup const& S) {
    return check_V1(S).holds;
  }
  bool in_V2(FiniteSemigroup const& S) {
    return check_V2(S).holds;
  }
  bool in_V3(FiniteSemigroup const& S) {
    return check_V3(S).holds;
  }
  bool in_VY(FiniteSemigroup const& S) {
    return check_VY(S).holds;
  }
  bool in_DS(FiniteSemigroup const& S) {
    return check_DS(S).holds;
  }

}  // namespace zigzag
