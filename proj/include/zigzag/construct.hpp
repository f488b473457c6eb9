#pragma once

// Rees matrix semigroups, the enlargement of a completely 0-simple
// semigroup to one with an epimorphically embedded subsemigroup in V{Y},
// the semiautomaton enlargement with its generator sets B and C, the cycle
// modification, and Rees coordinates for isomorphism checks.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "zigzag/dominion.hpp"
#include "zigzag/semigroup.hpp"
#include "zigzag/transformation.hpp"

namespace zigzag {

  // M0(I, G, Lambda, P) with P a Lambda x I matrix; nullopt entries are
  // zero, others index elements of the group.
  struct ReesMatrixSpec {
    std::size_t                                         I      = 0;
    std::size_t                                         Lambda = 0;
    FiniteSemigroup                                     group;
    std::vector<std::vector<std::optional<element_index>>> P;
  };

  // Throws NotAGroup, RegularityError for a zero row or column of P, and
  // ValidationError for P of the wrong shape or an entry outside the group.
  void validate(ReesMatrixSpec const& spec);

  // Inverse of g in a validated group.
  element_index group_inverse(FiniteSemigroup const& G, element_index g);

  struct ReesSemigroup {
    FiniteSemigroup semigroup;
    std::size_t     I = 0, G = 0, Lambda = 0;

    element_index index(std::size_t i, element_index g, std::size_t lambda) const {
      return static_cast<element_index>((i * G + g) * Lambda + lambda);
    }
    element_index zero() const {
      return static_cast<element_index>(I * G * Lambda);
    }
    struct Coordinates {
      std::size_t   i;
      element_index g;
      std::size_t   lambda;
    };
    // nothing for the zero
    std::optional<Coordinates> coordinates(element_index x) const;
  };

  // Elements (i, g, lambda) in lexicographic order, then the zero. Labels
  // read "(i,g,l)" with 1-based i, l and the group's labels.
  ReesSemigroup rees_semigroup(ReesMatrixSpec const& spec);

  struct EnlargementData {
    ReesMatrixSpec input;
    ReesMatrixSpec spec;      // the enlarged spec (I', G, Lambda', P')
    ReesSemigroup  T;
    Subset         U;
    std::vector<element_index> embed;  // element of the input -> T
    std::size_t                lambda0 = 0;
    // phi(l) = I + l for l in Lambda'; I'' has its natural order, so
    // phi(lambda0) is its maximum.
    std::size_t input_I = 0, input_Lambda = 0;

    std::size_t phi(std::size_t lambda) const noexcept {
      return input_I + lambda;
    }
  };

  EnlargementData cs0_enlarge(ReesMatrixSpec const& spec);

  std::size_t cs0_expected_U_order(EnlargementData const& data);

  struct Cs0Report {
    std::size_t T_order = 0, U_order = 0, expected_U_order = 0;
    bool        u_subsemigroup      = false;
    bool        u_in_VY             = false;
    bool        dominion_all        = false;
    bool        embeds              = false;
    bool        image_meets_u_in_zero = false;
    bool        T_completely_0_simple = false;
    // The displayed zigzag for each t = (i', g, l') with i' in I'' and
    // i' > phi(l'); count and whether every one verified.
    std::size_t zigzags_checked = 0;
    bool        zigzags_valid   = false;

    bool ok() const noexcept {
      return u_subsemigroup && u_in_VY && dominion_all && embeds
             && image_meets_u_in_zero && T_completely_0_simple && zigzags_valid
             && U_order == expected_U_order;
    }
  };

  // The zigzag for t = (i', g, l'), i' in I'' with i' > phi(l').
  ZigzagCertificate cs0_zigzag(EnlargementData const& data,
                               std::size_t            i,
                               element_index          g,
                               std::size_t            lambda);

  Cs0Report cs0_verify(EnlargementData const& data);

  struct AutomatonEnlargement {
    Semiautomaton base;
    Semiautomaton enlarged;

    // q_a = |Q| + a |Q| + q
    std::size_t block_state(std::size_t a, std::size_t q) const noexcept {
      return base.states * (a + 1) + q;
    }
    // a' = |A| + a
    std::size_t primed(std::size_t a) const noexcept {
      return base.letter_count() + a;
    }
  };

  // States Q then the blocks Q_a in alphabet order; letters A then A'
  // (named a + "'"). Throws ValidationError when a primed name collides.
  AutomatonEnlargement enlarge_automaton(Semiautomaton const& A);

  // Letters of A whose action moves at least one state.
  std::vector<std::size_t> moving_letters(Semiautomaton const& A);

  // Action of a nonempty word over the alphabet of A. Throws ValidationError
  // for the empty word.
  PartialTransformation word_action(Semiautomaton const&            A,
                                    std::vector<std::size_t> const& word);

  struct Prop52Item {
    std::string name;
    bool        pass = false;
    std::string detail;
  };

  struct Prop52Report {
    std::size_t T_A_order = 0, T_enlarged_order = 0, U_order = 0,
                expected_U_order = 0, B_order = 0;
    std::vector<Prop52Item> items;

    bool all_pass() const noexcept;
  };

  // Items 1 and 2, for any semiautomaton.
  Prop52Report prop52_basic(Semiautomaton const& A);

  // Items 1 to 7. Throws IncompleteAutomaton.
  Prop52Report prop52_report(Semiautomaton const& A);

  struct OrderFormula {
    std::size_t T_A_order = 0, T_enlarged_order = 0, predicted = 0;
    bool        holds = false;
  };

  // |T(enlarged)| = (|A| + 1)^2 |T(A)| + 1. Throws IncompleteAutomaton, and
  // IdentityLetterPresent unless allow_identity_letters.
  OrderFormula order_formula_check(Semiautomaton const& A,
                                   bool allow_identity_letters = false);

  // Moving letters become the cycle q -> q + 1 (mod |Q|); others stay.
  // Throws IncompleteAutomaton.
  Semiautomaton cycle_modify(Semiautomaton const& A);

  struct ReesCoordinates {
    ReesMatrixSpec             spec;
    // element of S -> element of rees_semigroup(spec)
    std::vector<element_index> map;
  };

  // Coordinates over the H-class of the least idempotent of the nonzero
  // D-class. Throws PreconditionFailed when S is not completely 0-simple.
  ReesCoordinates rees_coordinates(FiniteSemigroup const& S);

  // An isomorphism rees_semigroup(a) -> rees_semigroup(b) of the form
  // (i, g, l) -> (sigma i, u_i alpha(g) v_l, tau l), or nothing. Brute force
  // over permutations, group isomorphisms and scalings; meant for small
  // index sets and groups.
  std::optional<std::vector<element_index>>
  rees_isomorphism(ReesMatrixSpec const& a, ReesMatrixSpec const& b);

  // S -> rees_semigroup(spec), verified with is_morphism and bijectivity.
  std::optional<std::vector<element_index>>
  isomorphism_to_rees(FiniteSemigroup const& S, ReesMatrixSpec const& spec);

}  // namespace zigzag
