#include "zigzag/green.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string_view>
#include <unordered_map>

namespace zigzag {

  namespace {
    // Numbers the distinct bit rows in order of first occurrence.
    std::vector<std::uint32_t> classes_of_rows(kernels::BitRows const& rows,
                                               std::size_t             n,
                                               std::size_t&            count) {
      std::unordered_map<std::string_view, std::uint32_t> seen;
      std::vector<std::uint32_t>                          cls(n);
      for (std::size_t x = 0; x < n; ++x) {
        std::string_view key(reinterpret_cast<char const*>(rows.row(x)),
                             rows.words * sizeof(std::uint64_t));
        auto [it, fresh]
            = seen.emplace(key, static_cast<std::uint32_t>(seen.size()));
        cls[x] = it->second;
      }
      count = seen.size();
      return cls;
    }

    // Renumbers labels so classes appear in order of least member.
    std::vector<std::uint32_t> renumber(std::vector<std::uint32_t> const& raw,
                                        std::size_t&                      count) {
      std::unordered_map<std::uint32_t, std::uint32_t> fresh;
      std::vector<std::uint32_t>                       out(raw.size());
      for (std::size_t x = 0; x < raw.size(); ++x) {
        auto [it, _] = fresh.emplace(raw[x], static_cast<std::uint32_t>(fresh.size()));
        out[x]       = it->second;
      }
      count = fresh.size();
      return out;
    }

    std::uint32_t find(std::vector<std::uint32_t>& parent, std::uint32_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    }
  }  // namespace

  GreenData green_relations(FiniteSemigroup const& S) {
    auto const n = S.order();
    GreenData  G;
    G.order = n;

    kernels::BitRows right(n, n), left(n, n);
#pragma omp parallel for schedule(static)
    for (std::size_t x = 0; x < n; ++x) {
      right.set(x, x);
      left.set(x, x);
      for (std::size_t s = 0; s < n; ++s) {
        right.set(x, S.product(x, s));
        left.set(x, S.product(s, x));
      }
    }
    G.r_class = classes_of_rows(right, n, G.r_count);
    G.l_class = classes_of_rows(left, n, G.l_count);

    std::vector<std::uint32_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<std::int64_t> first_r(G.r_count, -1), first_l(G.l_count, -1);
    for (std::uint32_t x = 0; x < n; ++x) {
      for (auto* first : {&first_r[G.r_class[x]], &first_l[G.l_class[x]]}) {
        if (*first < 0) {
          *first = x;
        } else {
          auto a = find(parent, x), b = find(parent, static_cast<std::uint32_t>(*first));
          if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
          }
        }
      }
    }
    std::vector<std::uint32_t> raw(n);
    for (std::uint32_t x = 0; x < n; ++x) {
      raw[x] = find(parent, x);
    }
    G.d_class = renumber(raw, G.d_count);

    std::vector<std::uint32_t> hraw(n);
    for (std::size_t x = 0; x < n; ++x) {
      hraw[x] = static_cast<std::uint32_t>(G.r_class[x] * G.l_count + G.l_class[x]);
    }
    G.h_class = renumber(hraw, G.h_count);

    G.d_members.assign(G.d_count, {});
    for (element_index x = 0; x < n; ++x) {
      G.d_members[G.d_class[x]].push_back(x);
    }
    std::vector<element_index> reps;
    for (auto const& m : G.d_members) {
      reps.push_back(m.front());
    }
    G.ideals = kernels::omp::principal_ideals(
        kernels::TableView{S.table().data(), n}, reps);

    G.eggbox.resize(G.d_count);
    for (std::size_t c = 0; c < G.d_count; ++c) {
      auto& box = G.eggbox[c];
      for (auto x : G.d_members[c]) {
        if (std::find(box.r_classes.begin(), box.r_classes.end(), G.r_class[x])
            == box.r_classes.end()) {
          box.r_classes.push_back(G.r_class[x]);
        }
        if (std::find(box.l_classes.begin(), box.l_classes.end(), G.l_class[x])
            == box.l_classes.end()) {
          box.l_classes.push_back(G.l_class[x]);
        }
      }
      box.cells.assign(box.rows(),
                       std::vector<std::vector<element_index>>(box.cols()));
      box.idempotent_cell.assign(box.rows(), std::vector<bool>(box.cols(), false));
      for (auto x : G.d_members[c]) {
        auto r = std::find(box.r_classes.begin(), box.r_classes.end(), G.r_class[x])
                 - box.r_classes.begin();
        auto l = std::find(box.l_classes.begin(), box.l_classes.end(), G.l_class[x])
                 - box.l_classes.begin();
        box.cells[r][l].push_back(x);
        if (S.is_idempotent(x)) {
          box.idempotent_cell[r][l] = true;
          box.regular               = true;
        }
      }
    }
    return G;
  }

  std::vector<std::uint32_t> j_classes_reference(FiniteSemigroup const& S) {
    auto const                 n = S.order();
    std::vector<element_index> all(n);
    std::iota(all.begin(), all.end(), 0);
    auto ideals = kernels::serial::principal_ideals(
        kernels::TableView{S.table().data(), n}, all);
    std::size_t count = 0;
    return classes_of_rows(ideals, n, count);
  }

  Subset idempotents(FiniteSemigroup const& S) {
    std::vector<element_index> e;
    for (element_index x = 0; x < S.order(); ++x) {
      if (S.is_idempotent(x)) {
        e.push_back(x);
      }
    }
    return Subset(S.order(), std::move(e));
  }

  PowerData power_data(FiniteSemigroup const& S, element_index s) {
    std::vector<std::size_t>   exponent(S.order(), 0);
    std::vector<element_index> powers{s};
    element_index              p = s;
    exponent[p]                  = 1;
    while (true) {
      p = S.product(p, s);
      if (exponent[p] != 0) {
        break;
      }
      powers.push_back(p);
      exponent[p] = powers.size();
    }
    PowerData d;
    d.index  = exponent[p];
    d.period = powers.size() + 1 - d.index;
    // The cycle {s^index, ..., s^(index+period-1)} is a group; its identity
    // is s^k for the multiple k of period in that range.
    auto k  = ((d.index + d.period - 1) / d.period) * d.period;
    d.omega = powers[k - 1];
    return d;
  }

  element_index omega_power(FiniteSemigroup const& S, element_index s) {
    return power_data(S, s).omega;
  }

  element_index omega_plus_one(FiniteSemigroup const& S, element_index s) {
    return S.product(omega_power(S, s), s);
  }

  Subset j_maximal(GreenData const& G, Subset const& X) {
    if (X.empty()) {
      throw PreconditionFailed("j_maximal of an empty set");
    }
    std::vector<element_index> out;
    for (auto s : X) {
      bool dominated = std::any_of(X.begin(), X.end(), [&](element_index t) {
        return G.j_less(s, t);
      });
      if (!dominated) {
        out.push_back(s);
      }
    }
    return Subset(X.universe(), std::move(out));
  }

  Subset j_maximal(FiniteSemigroup const& S, Subset const& X) {
    return j_maximal(green_relations(S), X);
  }

  std::vector<MillerCliffordViolation>
  miller_clifford_check(FiniteSemigroup const& S, GreenData const& G) {
    auto const n = S.order();
    // has_idem[l * r_count + r]: L-class l meets R-class r in an idempotent.
    std::vector<char> has_idem(G.l_count * G.r_count, 0);
    for (element_index e = 0; e < n; ++e) {
      if (S.is_idempotent(e)) {
        has_idem[G.l_class[e] * G.r_count + G.r_class[e]] = 1;
      }
    }
    std::vector<MillerCliffordViolation> out;
    for (element_index s = 0; s < n; ++s) {
      for (element_index t = 0; t < n; ++t) {
        auto st  = S.product(s, t);
        bool lhs = G.r_class[st] == G.r_class[s] && G.l_class[st] == G.l_class[t];
        bool rhs = has_idem[G.l_class[s] * G.r_count + G.r_class[t]] != 0;
        if (lhs != rhs) {
          out.push_back({s, t});
        }
      }
    }
    return out;
  }

  std::vector<MillerCliffordViolation>
  miller_clifford_check(FiniteSemigroup const& S) {
    return miller_clifford_check(S, green_relations(S));
  }

  namespace {
    Subset local_closure(FiniteSemigroup const&            S,
                         Subset const&                     U,
                         std::vector<element_index> const& middle) {
      require_subsemigroup(S, U);
      std::vector<element_index> E;
      for (auto u : U) {
        if (S.is_idempotent(u)) {
          E.push_back(u);
        }
      }
      std::vector<element_index> seed;
      for (auto e : E) {
        for (auto u : middle) {
          auto eu = S.product(e, u);
          for (auto f : E) {
            seed.push_back(S.product(eu, f));
          }
        }
      }
      if (seed.empty()) {
        return Subset(S.order(), {});
      }
      return closure(S, Subset(S.order(), std::move(seed)));
    }
  }  // namespace

  Subset compute_EUE(FiniteSemigroup const& S, Subset const& U) {
    return local_closure(S, U, U.members());
  }

  Subset compute_ESE(FiniteSemigroup const& S, Subset const& U) {
    return local_closure(S, U, Subset::all(S.order()).members());
  }

  bool is_regular_semigroup(FiniteSemigroup const&, GreenData const& G) {
    return std::all_of(G.eggbox.begin(), G.eggbox.end(), [](auto const& b) {
      return b.regular;
    });
  }

  bool is_completely_regular(FiniteSemigroup const& S) {
    for (element_index s = 0; s < S.order(); ++s) {
      if (omega_plus_one(S, s) != s) {
        return false;
      }
    }
    return true;
  }

  namespace {
    // ef = fe = e implies e = f, for idempotents e, f other than skip.
    bool idempotents_primitive(FiniteSemigroup const&       S,
                               std::optional<element_index> skip) {
      std::vector<element_index> E;
      for (element_index e = 0; e < S.order(); ++e) {
        if (S.is_idempotent(e) && e != skip) {
          E.push_back(e);
        }
      }
      for (auto e : E) {
        for (auto f : E) {
          if (e != f && S.product(e, f) == e && S.product(f, e) == e) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace

  bool is_completely_simple(FiniteSemigroup const& S, GreenData const& G) {
    return G.d_count == 1 && idempotents_primitive(S, std::nullopt);
  }

  bool is_completely_simple(FiniteSemigroup const& S) {
    return is_completely_simple(S, green_relations(S));
  }

  bool is_completely_0_simple(FiniteSemigroup const& S, GreenData const& G) {
    auto z = S.zero();
    if (!z || G.d_count != 2 || G.d_members[G.d_class[*z]].size() != 1) {
      return false;
    }
    bool nonnull = std::any_of(S.table().begin(), S.table().end(),
                               [&](element_index p) { return p != *z; });
    return nonnull && idempotents_primitive(S, z);
  }

  bool is_completely_0_simple(FiniteSemigroup const& S) {
    return is_completely_0_simple(S, green_relations(S));
  }

  namespace {
    std::string html_escape(std::string const& s) {
      std::string out;
      for (char c : s) {
        switch (c) {
          case '<': out += "&lt;"; break;
          case '>': out += "&gt;"; break;
          case '&': out += "&amp;"; break;
          case '"': out += "&quot;"; break;
          default: out += c;
        }
      }
      return out;
    }
  }  // namespace

  std::string eggbox_dot(FiniteSemigroup const&       S,
                         GreenData const&             G,
                         std::optional<std::uint32_t> dclass) {
    if (dclass && *dclass >= G.d_count) {
      throw IndexError("D-class " + std::to_string(*dclass) + " does not exist");
    }
    std::ostringstream out;
    out << "digraph eggbox {\n  node [shape=plaintext];\n";
    for (std::uint32_t c = 0; c < G.d_count; ++c) {
      if (dclass && c != *dclass) {
        continue;
      }
      auto const& box = G.eggbox[c];
      out << "  subgraph cluster_d" << c << " {\n    label=\"D" << c
          << (box.regular ? " (regular)" : "") << "\";\n    d" << c
          << " [label=<<table border=\"0\" cellborder=\"1\" cellspacing=\"0\">";
      for (std::size_t r = 0; r < box.rows(); ++r) {
        out << "<tr>";
        for (std::size_t l = 0; l < box.cols(); ++l) {
          out << "<td>";
          if (box.idempotent_cell[r][l]) {
            out << "*";
          }
          for (std::size_t k = 0; k < box.cells[r][l].size(); ++k) {
            out << (k ? " " : "") << html_escape(S.label(box.cells[r][l][k]));
          }
          out << "</td>";
        }
        out << "</tr>";
      }
      out << "</table>>];\n  }\n";
    }
    // Hasse edges of the J-order between the D-classes shown.
    for (std::uint32_t c = 0; c < G.d_count; ++c) {
      for (std::uint32_t c2 = 0; c2 < G.d_count; ++c2) {
        if (dclass || c == c2 || !G.d_class_leq(c2, c) || G.d_class_leq(c, c2)) {
          continue;
        }
        bool covered = false;
        for (std::uint32_t m = 0; m < G.d_count && !covered; ++m) {
          covered = m != c && m != c2 && G.d_class_leq(m, c) && !G.d_class_leq(c, m)
                    && G.d_class_leq(c2, m) && !G.d_class_leq(m, c2);
        }
        if (!covered) {
          out << "  d" << c << " -> d" << c2 << ";\n";
        }
      }
    }
    out << "}\n";
    return out.str();
  }

}  // namespace zigzag
