#pragma once

// Dominions via connectivity of the pair graph on S^1 x S^1, zigzag
// certificates (search, verification, normalisation), the reduction to a
// top J-class, and the two-copy amalgam that refutes epimorphisms.
//
// Certificates live in S^1: the index S.order() stands for the adjoined
// identity.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zigzag/green.hpp"
#include "zigzag/semigroup.hpp"

namespace zigzag {

  struct Pair {
    element_index p, q;
    friend bool operator==(Pair const&, Pair const&) = default;
  };

  enum class FlipDirection : std::uint8_t {
    // (xu, y) -> (x, uy)
    left,
    // (x, uy) -> (xu, y)
    right
  };

  struct FlipStep {
    Pair          from, to;
    element_index x, u, y;
    FlipDirection dir;
    friend bool operator==(FlipStep const&, FlipStep const&) = default;
  };

  // d = x1 u1, u1 = v1 y1, x(i-1) v(i-1) = xi ui, ui y(i-1) = vi yi,
  // x(m-1) v(m-1) = um, um y(m-1) = d; for m = 1 simply u1 = d.
  struct ClassicZigzag {
    std::size_t m = 0;
    // u1, v1, u2, ..., v(m-1), um
    std::vector<element_index> spine;
    // x1..x(m-1) and y1..y(m-1), all in S
    std::vector<element_index> x, y;

    element_index u(std::size_t i) const {
      return spine[2 * (i - 1)];
    }
    element_index v(std::size_t i) const {
      return spine[2 * (i - 1) + 1];
    }
    friend bool operator==(ClassicZigzag const&, ClassicZigzag const&) = default;
  };

  struct ZigzagCertificate {
    element_index                d = 0;
    std::vector<FlipStep>        chain;
    std::optional<ClassicZigzag> classic;
  };

  // Cached S^1 and its pair-graph components for one pair (S, U).
  class DominionData {
   public:
    DominionData(FiniteSemigroup const& S, Subset const& U);

    FiniteSemigroup const& s1() const noexcept {
      return _s1;
    }
    element_index one() const noexcept {
      return static_cast<element_index>(_s1.order() - 1);
    }
    std::uint32_t component(element_index p, element_index q) const noexcept {
      return _components[static_cast<std::size_t>(p) * _s1.order() + q];
    }
    bool dominated(element_index d) const noexcept {
      return component(d, one()) == component(one(), d);
    }
    Subset const& dominion() const noexcept {
      return _dominion;
    }

   private:
    FiniteSemigroup            _s1;
    std::vector<std::uint32_t> _components;
    Subset                     _dominion;
  };

  // Throws NotASubsemigroup.
  Subset dominion(FiniteSemigroup const& S, Subset const& U);

  // Breadth-first search in the fiber of d from (d, 1) to (1, d). With
  // restrict, witnesses use x, y in restrict or 1 and u in U and restrict.
  // Returns a shortest flip chain together with its classic form, or
  // nothing when no chain exists.
  std::optional<ZigzagCertificate>
  zigzag_for(FiniteSemigroup const&       S,
             Subset const&                U,
             element_index                d,
             std::optional<Subset> const& restrict = std::nullopt);

  // Merges runs of equal direction; nothing when an intermediate factor is
  // the identity (only possible for chains that are not shortest).
  std::optional<ClassicZigzag> classic_from_chain(FiniteSemigroup const&       S,
                                                  std::vector<FlipStep> const& chain);

  // L(x1, u1, 1), R(x1, v1, y1), L(x2, u2, y1), ..., L(1, um, y(m-1)) with
  // endpoints computed from the witnesses.
  std::vector<FlipStep> chain_from_classic(FiniteSemigroup const& S,
                                           ClassicZigzag const&   z);

  struct ZigzagCheck {
    bool        valid = true;
    std::string failure;  // first failing condition, empty when valid
  };

  // Table lookups only. Checks the chain, and the classic form when
  // present.
  ZigzagCheck verify_zigzag(FiniteSemigroup const&   S,
                            Subset const&            U,
                            ZigzagCertificate const& cert);

  // Observation-style rewrites: a factor y_i = w y' with w in U and y' in
  // S \ U strictly J-above y_i moves w into v_i and u_(i+1); dually for
  // x_i = x' w. Applied with least (y', w) first until none applies. Throws
  // InvalidCertificate when cert is invalid or has no classic form.
  ZigzagCertificate normalize_zigzag(FiniteSemigroup const&   S,
                                     Subset const&            U,
                                     ZigzagCertificate const& cert);

  struct EpiCheck {
    bool epi    = false;
    bool proper = false;
  };

  EpiCheck is_epi_embedding(FiniteSemigroup const& S, Subset const& U);

  struct Reduction {
    FiniteSemigroup            quotient;
    std::vector<element_index> map;  // S -> quotient
    Subset                     u;    // image of U
    Subset                     ideal;
    Subset                     j_class;   // in S
    bool                       unchanged = false;
    // (S/I) \ U' lies in the image of J together with the zero.
    bool certified = false;
  };

  // J is the class of the first J-maximal element of S \ U; I is the union
  // of J-classes not above J. An empty I returns S and U as they are.
  // Throws NotProper.
  Reduction reduce_to_top_J(FiniteSemigroup const& S, Subset const& U);

  struct AmalgamResult {
    FiniteSemigroup            W;
    std::vector<element_index> phi, psi;
    Subset                     V;
  };

  // Why amalgam would refuse (S, U), or nothing when it applies.
  std::optional<std::string> amalgam_obstruction(FiniteSemigroup const& S,
                                                 Subset const&          U);

  // W holds S' (in the order of S) then S'' \ V''. Throws PreconditionFailed
  // naming the violated hypothesis: U proper, S \ U inside one D-class D,
  // an L-class missing U, and every element not J-above D being a zero
  // that lies in U.
  AmalgamResult amalgam(FiniteSemigroup const& S, Subset const& U);

  struct AmalgamCheck {
    bool associative = false;
    bool morphisms   = false;
    bool injective   = false;
    bool agree_exactly_on_v = false;
    bool u_inside_v  = false;
    bool distinct    = false;
    bool ok() const noexcept {
      return associative && morphisms && injective && agree_exactly_on_v
             && u_inside_v && distinct;
    }
  };

  AmalgamCheck verify_amalgam(FiniteSemigroup const& S,
                              Subset const&          U,
                              AmalgamResult const&   r);

}  // namespace zigzag
