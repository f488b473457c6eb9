#pragma once

// Dense finite semigroups, subsets of them, and the basic machinery built
// on top of a multiplication table: closures, ideals, Rees quotients,
// morphism checks.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zigzag/error.hpp"

namespace zigzag {

  // A finite semigroup given by its full multiplication table. Elements are
  // the indices 0..order()-1; entry (x, y) of the table is x*y. Instances are
  // immutable and always validated: the only way to obtain one is through
  // make_semigroup (or a construction that calls it). A default-constructed
  // value has order 0 and only serves as a placeholder to assign to.
  class FiniteSemigroup {
   public:
    FiniteSemigroup() = default;

    std::size_t order() const noexcept {
      return _n;
    }

    element_index product(element_index x, element_index y) const noexcept {
      return _table[static_cast<std::size_t>(x) * _n + y];
    }

    std::span<element_index const> row(element_index x) const noexcept {
      return {_table.data() + static_cast<std::size_t>(x) * _n, _n};
    }

    std::span<element_index const> table() const noexcept {
      return _table;
    }

    bool has_labels() const noexcept {
      return !_labels.empty();
    }

    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    // The display label, or the decimal index when the semigroup is
    // unlabelled.
    std::string label(element_index x) const;

    std::optional<element_index> find_label(std::string_view name) const;

    std::optional<element_index> identity() const noexcept {
      return _identity;
    }

    std::optional<element_index> zero() const noexcept {
      return _zero;
    }

    // A generating set chosen greedily in index order; every element is a
    // product of these.
    std::vector<element_index> const& generators() const noexcept {
      return _generators;
    }

    bool is_idempotent(element_index x) const noexcept {
      return product(x, x) == x;
    }

    friend bool operator==(FiniteSemigroup const& a, FiniteSemigroup const& b) {
      return a._n == b._n && a._table == b._table && a._labels == b._labels;
    }

   private:
    friend FiniteSemigroup make_semigroup(std::size_t,
                                          std::vector<element_index>,
                                          std::vector<std::string>);

    std::size_t                  _n = 0;
    std::vector<element_index>   _table;
    std::vector<std::string>     _labels;
    std::optional<element_index> _identity;
    std::optional<element_index> _zero;
    std::vector<element_index>   _generators;
  };

  // Validates and builds a semigroup from a row-major n*n table.
  //
  // Throws IndexError for n == 0, a table of the wrong size or an entry >= n,
  // ValidationError for repeated labels or a label count different from n, and
  // AssociativityError carrying the lexicographically first triple (i, j, k)
  // with (ij)k != i(jk).
  FiniteSemigroup make_semigroup(std::size_t                n,
                                 std::vector<element_index> table,
                                 std::vector<std::string>   labels = {});

  FiniteSemigroup
  make_semigroup(std::vector<std::vector<element_index>> const& rows,
                 std::vector<std::string>                       labels = {});

  // An ordered duplicate-free set of element indices of some semigroup of
  // order universe().
  class Subset {
   public:
    Subset() = default;

    // Sorts and removes duplicates; throws IndexError for members >=
    // universe.
    Subset(std::size_t universe, std::vector<element_index> members);

    static Subset all(std::size_t universe);

    std::size_t universe() const noexcept {
      return _universe;
    }

    std::size_t size() const noexcept {
      return _members.size();
    }

    bool empty() const noexcept {
      return _members.empty();
    }

    bool contains(element_index x) const noexcept {
      return x < _mask.size() && _mask[x];
    }

    std::vector<element_index> const& members() const noexcept {
      return _members;
    }

    auto begin() const noexcept {
      return _members.begin();
    }

    auto end() const noexcept {
      return _members.end();
    }

    element_index operator[](std::size_t i) const noexcept {
      return _members[i];
    }

    bool is_subset_of(Subset const& other) const noexcept;

    friend bool operator==(Subset const& a, Subset const& b) noexcept {
      return a._universe == b._universe && a._members == b._members;
    }

   private:
    std::size_t                _universe = 0;
    std::vector<element_index> _members;
    std::vector<char>          _mask;
  };

  Subset set_difference(Subset const& a, Subset const& b);
  Subset set_intersection(Subset const& a, Subset const& b);
  Subset set_union(Subset const& a, Subset const& b);

  // S^1: a fresh identity with index S.order() is always added, even when S
  // is already a monoid.
  FiniteSemigroup adjoin_identity(FiniteSemigroup const& S);

  // Smallest subsemigroup containing seed. Throws PreconditionFailed for an
  // empty seed.
  Subset closure(FiniteSemigroup const& S, Subset const& seed);

  bool is_subsemigroup(FiniteSemigroup const& S, Subset const& X);
  bool is_ideal(FiniteSemigroup const& S, Subset const& X);

  struct Quotient {
    FiniteSemigroup semigroup;
    // Element of S -> element of S/I.
    std::vector<element_index> map;
  };

  // S/I: the elements of S \ I in their original order followed by the zero
  // that represents I. Throws NotAnIdeal.
  Quotient rees_quotient(FiniteSemigroup const& S, Subset const& I);

  bool is_morphism(std::span<element_index const> map,
                   FiniteSemigroup const&         S,
                   FiniteSemigroup const&         T);
  bool is_embedding(std::span<element_index const> map,
                    FiniteSemigroup const&         S,
                    FiniteSemigroup const&         T);

  struct InducedSubsemigroup {
    FiniteSemigroup semigroup;
    // Element of the subsemigroup -> element of the parent.
    std::vector<element_index> inclusion;
  };

  // X as a semigroup in its own right, elements in the order of X. Throws
  // NotASubsemigroup.
  InducedSubsemigroup induced_subsemigroup(FiniteSemigroup const& S,
                                           Subset const&          X);

  Subset image(std::span<element_index const> map,
               Subset const&                  X,
               std::size_t                    target_order);

  void require_subsemigroup(FiniteSemigroup const& S,
                            Subset const&          U,
                            char const*            what = "U");

}  // namespace zigzag
