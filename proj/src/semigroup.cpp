#include "zigzag/semigroup.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "zigzag/kernels.hpp"

namespace zigzag {

  namespace {
    std::vector<element_index> greedy_generators(std::size_t                       n,
                                                 std::vector<element_index> const& table) {
      std::vector<element_index> gens;
      std::vector<char>          in(n, 0);
      std::vector<element_index> members;
      members.reserve(n);
      auto mul = [&](element_index x, element_index y) {
        return table[static_cast<std::size_t>(x) * n + y];
      };
      for (element_index g = 0; g < n; ++g) {
        if (in[g]) {
          continue;
        }
        gens.push_back(g);
        std::deque<element_index> queue{g};
        in[g] = 1;
        members.push_back(g);
        while (!queue.empty()) {
          auto const z = queue.front();
          queue.pop_front();
          // z against everything already present, on both sides; members
          // grows while we scan, which covers the new-new products.
          for (std::size_t i = 0; i < members.size(); ++i) {
            auto const m = members[i];
            for (auto p : {mul(z, m), mul(m, z)}) {
              if (!in[p]) {
                in[p] = 1;
                members.push_back(p);
                queue.push_back(p);
              }
            }
          }
        }
      }
      return gens;
    }
  }  // namespace

  std::string FiniteSemigroup::label(element_index x) const {
    return _labels.empty() ? std::to_string(x) : _labels[x];
  }

  std::optional<element_index>
  FiniteSemigroup::find_label(std::string_view name) const {
    for (std::size_t i = 0; i < _labels.size(); ++i) {
      if (_labels[i] == name) {
        return static_cast<element_index>(i);
      }
    }
    return std::nullopt;
  }

  FiniteSemigroup make_semigroup(std::size_t                n,
                                 std::vector<element_index> table,
                                 std::vector<std::string>   labels) {
    if (n == 0) {
      throw IndexError("a semigroup must have at least one element");
    }
    if (table.size() != n * n) {
      throw IndexError("table has " + std::to_string(table.size())
                       + " entries, expected " + std::to_string(n * n));
    }
    for (std::size_t p = 0; p < table.size(); ++p) {
      if (table[p] >= n) {
        throw IndexError("table entry (" + std::to_string(p / n) + ", "
                         + std::to_string(p % n) + ") = "
                         + std::to_string(table[p]) + " is out of range");
      }
    }
    if (!labels.empty()) {
      if (labels.size() != n) {
        throw ValidationError("expected " + std::to_string(n) + " labels, got "
                              + std::to_string(labels.size()));
      }
      std::set<std::string> seen(labels.begin(), labels.end());
      if (seen.size() != n) {
        throw ValidationError("labels are not pairwise distinct");
      }
    }

    FiniteSemigroup S;
    S._n          = n;
    S._table      = std::move(table);
    S._labels     = std::move(labels);
    S._generators = greedy_generators(n, S._table);

    kernels::TableView view{S._table.data(), n};
    if (!kernels::omp::generators_associate(view, S._generators)) {
      throw AssociativityError(*kernels::omp::first_nonassociative(view));
    }

    for (element_index e = 0; e < n && !S._identity; ++e) {
      bool ok = true;
      for (element_index x = 0; x < n && ok; ++x) {
        ok = S.product(e, x) == x && S.product(x, e) == x;
      }
      if (ok) {
        S._identity = e;
      }
    }
    for (element_index z = 0; z < n && !S._zero; ++z) {
      bool ok = true;
      for (element_index x = 0; x < n && ok; ++x) {
        ok = S.product(z, x) == z && S.product(x, z) == z;
      }
      if (ok) {
        S._zero = z;
      }
    }
    return S;
  }

  FiniteSemigroup
  make_semigroup(std::vector<std::vector<element_index>> const& rows,
                 std::vector<std::string>                       labels) {
    auto const                 n = rows.size();
    std::vector<element_index> table;
    table.reserve(n * n);
    for (auto const& r : rows) {
      if (r.size() != n) {
        throw IndexError("table is not square");
      }
      table.insert(table.end(), r.begin(), r.end());
    }
    return make_semigroup(n, std::move(table), std::move(labels));
  }

  ////////////////////////////////////////////////////////////////////////
  // Subset
  ////////////////////////////////////////////////////////////////////////

  Subset::Subset(std::size_t universe, std::vector<element_index> members)
      : _universe(universe), _members(std::move(members)), _mask(universe, 0) {
    std::sort(_members.begin(), _members.end());
    _members.erase(std::unique(_members.begin(), _members.end()),
                   _members.end());
    for (auto x : _members) {
      if (x >= universe) {
        throw IndexError("element " + std::to_string(x)
                         + " is out of range for a semigroup of order "
                         + std::to_string(universe));
      }
      _mask[x] = 1;
    }
  }

  Subset Subset::all(std::size_t universe) {
    std::vector<element_index> m(universe);
    for (std::size_t i = 0; i < universe; ++i) {
      m[i] = static_cast<element_index>(i);
    }
    return Subset(universe, std::move(m));
  }

  bool Subset::is_subset_of(Subset const& other) const noexcept {
    return std::all_of(_members.begin(), _members.end(), [&](auto x) {
      return other.contains(x);
    });
  }

  Subset set_difference(Subset const& a, Subset const& b) {
    std::vector<element_index> out;
    for (auto x : a) {
      if (!b.contains(x)) {
        out.push_back(x);
      }
    }
    return Subset(a.universe(), std::move(out));
  }

  Subset set_intersection(Subset const& a, Subset const& b) {
    std::vector<element_index> out;
    for (auto x : a) {
      if (b.contains(x)) {
        out.push_back(x);
      }
    }
    return Subset(a.universe(), std::move(out));
  }

  Subset set_union(Subset const& a, Subset const& b) {
    std::vector<element_index> out(a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return Subset(std::max(a.universe(), b.universe()), std::move(out));
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructions on tables
  ////////////////////////////////////////////////////////////////////////

  FiniteSemigroup adjoin_identity(FiniteSemigroup const& S) {
    auto const                 n = S.order();
    auto const                 m = n + 1;
    std::vector<element_index> table(m * m);
    for (element_index x = 0; x < m; ++x) {
      for (element_index y = 0; y < m; ++y) {
        element_index p;
        if (x == n) {
          p = y;
        } else if (y == n) {
          p = x;
        } else {
          p = S.product(x, y);
        }
        table[x * m + y] = p;
      }
    }
    std::vector<std::string> labels;
    if (S.has_labels()) {
      labels = S.labels();
      std::string one = "1";
      while (std::find(labels.begin(), labels.end(), one) != labels.end()) {
        one += "'";
      }
      labels.push_back(one);
    }
    return make_semigroup(m, std::move(table), std::move(labels));
  }

  Subset closure(FiniteSemigroup const& S, Subset const& seed) {
    if (seed.empty()) {
      throw PreconditionFailed("closure of an empty set");
    }
    auto const                 n = S.order();
    std::vector<char>          in(n, 0);
    std::vector<element_index> members;
    for (auto x : seed) {
      in[x] = 1;
      members.push_back(x);
    }
    // Every pair (i, j) with i, j < members.size() is multiplied exactly
    // once, in both orders, as members grows.
    for (std::size_t j = 0; j < members.size(); ++j) {
      for (std::size_t i = 0; i <= j; ++i) {
        auto const a = members[i];
        auto const b = members[j];
        for (auto p : {S.product(a, b), S.product(b, a)}) {
          if (!in[p]) {
            in[p] = 1;
            members.push_back(p);
          }
        }
      }
    }
    return Subset(n, std::move(members));
  }

  bool is_subsemigroup(FiniteSemigroup const& S, Subset const& X) {
    if (X.empty() || X.universe() != S.order()) {
      return false;
    }
    for (auto x : X) {
      for (auto y : X) {
        if (!X.contains(S.product(x, y))) {
          return false;
        }
      }
    }
    return true;
  }

  void require_subsemigroup(FiniteSemigroup const& S,
                            Subset const&          U,
                            char const*            what) {
    if (U.universe() != S.order()) {
      throw NotASubsemigroup(std::string(what)
                             + " belongs to a semigroup of a different order");
    }
    if (!is_subsemigroup(S, U)) {
      throw NotASubsemigroup(std::string(what) + " is not a subsemigroup");
    }
  }

  bool is_ideal(FiniteSemigroup const& S, Subset const& X) {
    if (X.empty() || X.universe() != S.order()) {
      return false;
    }
    for (auto x : X) {
      for (element_index s = 0; s < S.order(); ++s) {
        if (!X.contains(S.product(s, x)) || !X.contains(S.product(x, s))) {
          return false;
        }
      }
    }
    return true;
  }

  Quotient rees_quotient(FiniteSemigroup const& S, Subset const& I) {
    if (!is_ideal(S, I)) {
      throw NotAnIdeal("the given set is not a nonempty ideal");
    }
    auto const                 n = S.order();
    std::vector<element_index> map(n);
    std::vector<element_index> kept;
    for (element_index x = 0; x < n; ++x) {
      if (!I.contains(x)) {
        map[x] = static_cast<element_index>(kept.size());
        kept.push_back(x);
      }
    }
    auto const zero = static_cast<element_index>(kept.size());
    for (auto x : I) {
      map[x] = zero;
    }
    auto const                 m = kept.size() + 1;
    std::vector<element_index> table(m * m, zero);
    for (std::size_t a = 0; a < kept.size(); ++a) {
      for (std::size_t b = 0; b < kept.size(); ++b) {
        table[a * m + b] = map[S.product(kept[a], kept[b])];
      }
    }
    std::vector<std::string> labels;
    if (S.has_labels()) {
      for (auto x : kept) {
        labels.push_back(S.label(x));
      }
      std::string z = "0";
      while (std::find(labels.begin(), labels.end(), z) != labels.end()) {
        z += "_I";
      }
      labels.push_back(z);
    }
    return {make_semigroup(m, std::move(table), std::move(labels)),
            std::move(map)};
  }

  bool is_morphism(std::span<element_index const> map,
                   FiniteSemigroup const&         S,
                   FiniteSemigroup const&         T) {
    if (map.size() != S.order()) {
      return false;
    }
    for (auto m : map) {
      if (m >= T.order()) {
        return false;
      }
    }
    for (element_index x = 0; x < S.order(); ++x) {
      for (element_index y = 0; y < S.order(); ++y) {
        if (map[S.product(x, y)] != T.product(map[x], map[y])) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_embedding(std::span<element_index const> map,
                    FiniteSemigroup const&         S,
                    FiniteSemigroup const&         T) {
    if (!is_morphism(map, S, T)) {
      return false;
    }
    std::vector<element_index> sorted(map.begin(), map.end());
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }

  InducedSubsemigroup induced_subsemigroup(FiniteSemigroup const& S,
                                           Subset const&          X) {
    require_subsemigroup(S, X, "X");
    std::vector<element_index> local(S.order(), 0);
    for (std::size_t i = 0; i < X.size(); ++i) {
      local[X[i]] = static_cast<element_index>(i);
    }
    auto const                 m = X.size();
    std::vector<element_index> table(m * m);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        table[a * m + b] = local[S.product(X[a], X[b])];
      }
    }
    std::vector<std::string> labels;
    if (S.has_labels()) {
      for (auto x : X) {
        labels.push_back(S.label(x));
      }
    }
    return {make_semigroup(m, std::move(table), std::move(labels)),
            X.members()};
  }

  Subset image(std::span<element_index const> map,
               Subset const&                  X,
               std::size_t                    target_order) {
    std::vector<element_index> out;
    out.reserve(X.size());
    for (auto x : X) {
      out.push_back(map[x]);
    }
    return Subset(target_order, std::move(out));
  }

}  // namespace zigzag
