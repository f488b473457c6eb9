#pragma once

// Partial transformations acting on the right, semiautomata, and transition
// semigroups generated by orbit closure.

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "zigzag/semigroup.hpp"

namespace zigzag {

  inline constexpr element_index undefined_point
      = std::numeric_limits<element_index>::max();

  // A partial map of {0, ..., degree-1} into itself; q maps to (*this)[q] or
  // is outside the domain when that is undefined_point.
  class PartialTransformation {
   public:
    // Throws IndexError for a defined image >= degree, DegreeMismatch for
    // degree 0.
    explicit PartialTransformation(std::vector<element_index> images);

    static PartialTransformation identity(std::size_t degree);
    static PartialTransformation empty(std::size_t degree);

    std::size_t degree() const noexcept {
      return _images.size();
    }

    element_index operator[](std::size_t q) const noexcept {
      return _images[q];
    }

    bool is_defined(std::size_t q) const noexcept {
      return _images[q] != undefined_point;
    }

    bool is_total() const noexcept;
    bool is_identity() const noexcept;
    bool is_empty() const noexcept;

    // True when some point in the domain is not fixed.
    bool moves_some_point() const noexcept;

    std::vector<element_index> const& images() const noexcept {
      return _images;
    }

    friend bool operator==(PartialTransformation const&,
                           PartialTransformation const&)
        = default;

   private:
    std::vector<element_index> _images;
  };

  // q(f g) = ((q)f)g. Throws DegreeMismatch.
  PartialTransformation compose(PartialTransformation const& f,
                                PartialTransformation const& g);

  // The restriction of f to the points in domain (others become undefined).
  PartialTransformation restrict_to(PartialTransformation const& f,
                                    std::span<element_index const> domain);

  struct Semiautomaton {
    std::size_t                        states = 0;
    std::vector<std::string>           alphabet;
    std::vector<PartialTransformation> action;

    std::size_t letter_count() const noexcept {
      return alphabet.size();
    }

    std::optional<std::size_t> find_letter(std::string const& a) const;
  };

  // Throws ValidationError for an empty alphabet, zero states, repeated
  // letters, or an action count different from the alphabet size, and
  // DegreeMismatch when an action does not have degree states.
  Semiautomaton make_semiautomaton(std::size_t                        states,
                                   std::vector<std::string>           alphabet,
                                   std::vector<PartialTransformation> action);

  bool is_complete(Semiautomaton const& A);

  struct TransformationHash {
    std::size_t operator()(PartialTransformation const& f) const noexcept;
  };

  // A transformation semigroup together with how it was generated.
  struct TransitionSemigroup {
    FiniteSemigroup                    semigroup;
    std::vector<PartialTransformation> elements;
    // A shortest word over the generators for each element; among words of
    // equal length, the first found in breadth-first order.
    std::vector<std::vector<std::size_t>> words;
    // right_cayley[x * generators + a] = x * generator a.
    std::vector<element_index> right_cayley;
    std::size_t                generator_count = 0;
    std::unordered_map<PartialTransformation, element_index, TransformationHash>
        index;

    std::optional<element_index> find(PartialTransformation const& f) const;
  };

  // The semigroup generated by gens (all of the same degree). Elements are
  // enumerated breadth first from the generators; generators whose action
  // repeats an earlier one contribute no new element. Labels spell words
  // using letter_names when given.
  TransitionSemigroup
  generate_transformation_semigroup(std::span<PartialTransformation const> gens,
                                    std::vector<std::string> letter_names = {});

  // T(A): the actions of all nonempty words. Empty alphabets are rejected at
  // construction of the automaton.
  TransitionSemigroup transition_semigroup(Semiautomaton const& A);

  // States S^1 (state S.order() is the adjoined identity), one letter per
  // generator acting by right multiplication. Throws NotGenerating.
  Semiautomaton cayley_semiautomaton(FiniteSemigroup const& S,
                                     Subset const&          generators);

  // Evaluates the word of every element of T in S, letter a standing for
  // generators[a]. For T generated from cayley_semiautomaton(S, generators)
  // this is an isomorphism T(A) -> S.
  std::vector<element_index> evaluate_words(TransitionSemigroup const& T,
                                            FiniteSemigroup const&     S,
                                            Subset const&              generators);

}  // namespace zigzag
