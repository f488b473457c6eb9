#pragma once

// Green's relations of a finite semigroup, the J-order, eggbox grids,
// idempotents and omega-powers.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zigzag/kernels.hpp"
#include "zigzag/semigroup.hpp"

namespace zigzag {

  // One D-class laid out as R-class rows by L-class columns. Rows and columns
  // are ordered by least member; cells[r][c] lists the H-class in ascending
  // order (empty cells never occur in a D-class of a finite semigroup).
  struct Eggbox {
    std::vector<std::uint32_t>                            r_classes;
    std::vector<std::uint32_t>                            l_classes;
    std::vector<std::vector<std::vector<element_index>>> cells;
    std::vector<std::vector<bool>>                        idempotent_cell;
    bool                                                  regular = false;

    std::size_t rows() const noexcept {
      return r_classes.size();
    }
    std::size_t cols() const noexcept {
      return l_classes.size();
    }
  };

  // Class indices are assigned in order of least member, so class 0 always
  // contains element 0. D and J coincide for finite semigroups; j_class is
  // d_class.
  struct GreenData {
    std::size_t order = 0;

    std::vector<std::uint32_t> r_class, l_class, h_class, d_class;
    std::size_t                r_count = 0, l_count = 0, h_count = 0, d_count = 0;

    // Members of each D-class, ascending.
    std::vector<std::vector<element_index>> d_members;
    std::vector<Eggbox>                     eggbox;

    // ideals.test(c, x): x lies in the principal two-sided ideal of the
    // D-class c.
    kernels::BitRows ideals;

    bool j_leq(element_index x, element_index y) const noexcept {
      return ideals.test(d_class[y], x);
    }

    bool j_less(element_index x, element_index y) const noexcept {
      return j_leq(x, y) && !j_leq(y, x);
    }

    bool d_class_leq(std::uint32_t c, std::uint32_t c2) const noexcept {
      return ideals.test(c2, d_members[c].front());
    }

    bool is_regular(element_index x) const noexcept {
      return eggbox[d_class[x]].regular;
    }

    bool r_related(element_index x, element_index y) const noexcept {
      return r_class[x] == r_class[y];
    }
    bool l_related(element_index x, element_index y) const noexcept {
      return l_class[x] == l_class[y];
    }
  };

  GreenData green_relations(FiniteSemigroup const& S);

  // Reference computation of the J-classes from full two-sided ideals
  // S^1 x S^1 built by a triple loop; class numbering as in GreenData.
  std::vector<std::uint32_t> j_classes_reference(FiniteSemigroup const& S);

  Subset idempotents(FiniteSemigroup const& S);

  struct PowerData {
    // s^index = s^(index + period) is the first repetition.
    std::size_t   index  = 0;
    std::size_t   period = 0;
    element_index omega  = 0;
  };

  PowerData     power_data(FiniteSemigroup const& S, element_index s);
  element_index omega_power(FiniteSemigroup const& S, element_index s);
  element_index omega_plus_one(FiniteSemigroup const& S, element_index s);

  // s in X with no t in X strictly J-above s. Throws PreconditionFailed for
  // an empty X.
  Subset j_maximal(GreenData const& G, Subset const& X);
  Subset j_maximal(FiniteSemigroup const& S, Subset const& X);

  struct MillerCliffordViolation {
    element_index s, t;
  };

  // Pairs (s, t) on which "st in R_s and L_t" and "L_s meets R_t in an
  // idempotent" disagree.
  std::vector<MillerCliffordViolation>
  miller_clifford_check(FiniteSemigroup const& S, GreenData const& G);
  std::vector<MillerCliffordViolation>
  miller_clifford_check(FiniteSemigroup const& S);

  // The subsemigroup generated by {e u f : e, f in E(U), u in U}. Empty when
  // U has no idempotents (impossible for nonempty finite U). Throws
  // NotASubsemigroup.
  Subset compute_EUE(FiniteSemigroup const& S, Subset const& U);
  // Same with u ranging over all of S; e, f still range over E(U).
  Subset compute_ESE(FiniteSemigroup const& S, Subset const& U);

  bool is_regular_semigroup(FiniteSemigroup const& S, GreenData const& G);
  bool is_completely_regular(FiniteSemigroup const& S);
  bool is_completely_simple(FiniteSemigroup const& S);
  bool is_completely_simple(FiniteSemigroup const& S, GreenData const& G);
  bool is_completely_0_simple(FiniteSemigroup const& S);
  bool is_completely_0_simple(FiniteSemigroup const& S, GreenData const& G);

  // Graphviz text: one cluster per D-class (or only dclass) holding an
  // HTML table of its H-classes; idempotent cells are starred.
  std::string eggbox_dot(FiniteSemigroup const&       S,
                         GreenData const&             G,
                         std::optional<std::uint32_t> dclass = std::nullopt);

}  // namespace zigzag
