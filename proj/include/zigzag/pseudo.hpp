#pragma once

// Omega-terms over {product, omega-power}, exhaustive pseudoidentity checks
// with an explicit budget, and membership in DS, V1, V2, V3 and V{Y}.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zigzag/semigroup.hpp"

namespace zigzag {

  // A term stored in postfix form. Values are immutable.
  class OmegaTerm {
   public:
    enum class Op : std::uint8_t {
      variable,
      product,
      omega
    };

    struct Token {
      Op          op;
      std::string name;  // variables only
    };

    static OmegaTerm variable(std::string name);
    static OmegaTerm product(OmegaTerm const& a, OmegaTerm const& b);
    static OmegaTerm omega(OmegaTerm const& a);
    // t^(omega+1), that is Product(Omega(t), t).
    static OmegaTerm omega_plus_one(OmegaTerm const& a);

    std::vector<Token> const& tokens() const noexcept {
      return _tokens;
    }

    // Variables in order of first occurrence.
    std::vector<std::string> variables() const;

    // Fully parenthesised rendering that parse_term reads back.
    std::string to_string() const;

    friend bool operator==(OmegaTerm const& a, OmegaTerm const& b) {
      return a.to_string() == b.to_string();
    }

   private:
    std::vector<Token> _tokens;
  };

  // Evaluates t; every variable of t must be assigned. Throws UnboundVariable.
  element_index eval_term(OmegaTerm const&                            t,
                          std::map<std::string, element_index> const& assignment,
                          FiniteSemigroup const&                      S);

  struct Pseudoidentity {
    OmegaTerm                lhs;
    OmegaTerm                rhs;
    std::vector<std::string> variables;
  };

  // Throws UnboundVariable when lhs or rhs uses a variable not in vars. With
  // vars empty, the variables of lhs then rhs in order of occurrence.
  Pseudoidentity make_pseudoidentity(OmegaTerm                lhs,
                                     OmegaTerm                rhs,
                                     std::vector<std::string> vars = {});

  // Text syntax: juxtaposition is product, t^w is Omega(t), t^w+1 is
  // Product(Omega(t), t), t^k for k >= 1 repeats t, parentheses group.
  // A variable is a letter optionally followed by digits. Throws ParseError.
  OmegaTerm      parse_term(std::string const& text);
  Pseudoidentity parse_pseudoidentity(std::string const&       text,
                                      std::vector<std::string> vars = {});

  inline constexpr std::uint64_t default_assignment_cap = 10'000'000;

  struct SatisfactionResult {
    bool holds = true;
    // First failing assignment in odometer order (variable 0 most
    // significant), one element per variable.
    std::vector<element_index> counterexample;
  };

  // Exhaustive check of all |S|^k assignments. Throws BudgetExceeded when
  // |S|^k exceeds cap.
  SatisfactionResult satisfies(FiniteSemigroup const& S,
                               Pseudoidentity const&  id,
                               std::uint64_t          cap = default_assignment_cap);

  struct MembershipResult {
    bool holds = true;
    // For a failure: the violated identity in text form, its variables and
    // the counterexample (for DS, the pair a, b of a regular D-class with ab
    // outside it).
    std::string                identity;
    std::vector<std::string>   variables;
    std::vector<element_index> counterexample;
  };

  // The defining pseudoidentities, with e = t^w and f = z^w over variables
  // (x, t, z).
  Pseudoidentity v1_identity();
  Pseudoidentity v2_identity();
  Pseudoidentity v3_identity();
  std::vector<Pseudoidentity> vy_identities();

  MembershipResult check_V1(FiniteSemigroup const& S,
                            std::uint64_t          cap = default_assignment_cap);
  MembershipResult check_V2(FiniteSemigroup const& S,
                            std::uint64_t          cap = default_assignment_cap);
  MembershipResult check_V3(FiniteSemigroup const& S,
                            std::uint64_t          cap = default_assignment_cap);
  MembershipResult check_VY(FiniteSemigroup const& S,
                            std::uint64_t          cap = default_assignment_cap);
  MembershipResult check_DS(FiniteSemigroup const& S);

  bool in_V1(FiniteSemigroup const& S);
  bool in_V2(FiniteSemigroup const& S);
  bool in_V3(FiniteSemigroup const& S);
  bool in_VY(FiniteSemigroup const& S);
  bool in_DS(FiniteSemigroup const& S);

}  // namespace zigzag
