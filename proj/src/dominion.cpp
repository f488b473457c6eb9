#include "zigzag/dominion.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "zigzag/kernels.hpp"

namespace zigzag {

  DominionData::DominionData(FiniteSemigroup const& S, Subset const& U)
      : _s1(adjoin_identity(S)) {
    require_subsemigroup(S, U);
    auto const N = _s1.order();
    _components  = kernels::omp::pair_components(
        kernels::TableView{_s1.table().data(), N}, U.members());
    std::vector<element_index> dom;
    for (element_index d = 0; d < S.order(); ++d) {
      if (dominated(d)) {
        dom.push_back(d);
      }
    }
    _dominion = Subset(S.order(), std::move(dom));
  }

  Subset dominion(FiniteSemigroup const& S, Subset const& U) {
    return DominionData(S, U).dominion();
  }

  namespace {
    FlipStep left_step(FiniteSemigroup const& s1,
                       element_index          x,
                       element_index          u,
                       element_index          y) {
      return FlipStep{{s1.product(x, u), y}, {x, s1.product(u, y)}, x, u, y,
                      FlipDirection::left};
    }

    FlipStep right_step(FiniteSemigroup const& s1,
                        element_index          x,
                        element_index          u,
                        element_index          y) {
      return FlipStep{{x, s1.product(u, y)}, {s1.product(x, u), y}, x, u, y,
                      FlipDirection::right};
    }

    // Compressed lists: entries [start[k * N + p], start[k * N + p + 1]).
    struct Preimages {
      std::vector<std::uint32_t> start;
      std::vector<element_index> items;
    };

    // For each spine candidate u_k and each target p, the allowed z with
    // z*u_k = p (left) or u_k*z = p (right), ascending.
    Preimages preimages(FiniteSemigroup const&            s1,
                        std::vector<element_index> const& us,
                        std::vector<char> const&          allowed,
                        bool                              left) {
      auto const N = s1.order();
      Preimages  pre;
      pre.start.assign(us.size() * N + 1, 0);
      for (std::size_t k = 0; k < us.size(); ++k) {
        for (element_index z = 0; z < N; ++z) {
          if (allowed[z]) {
            auto p = left ? s1.product(z, us[k]) : s1.product(us[k], z);
            ++pre.start[k * N + p + 1];
          }
        }
      }
      for (std::size_t i = 1; i < pre.start.size(); ++i) {
        pre.start[i] += pre.start[i - 1];
      }
      pre.items.resize(pre.start.back());
      auto fill = pre.start;
      for (std::size_t k = 0; k < us.size(); ++k) {
        for (element_index z = 0; z < N; ++z) {
          if (allowed[z]) {
            auto p = left ? s1.product(z, us[k]) : s1.product(us[k], z);
            pre.items[fill[k * N + p]++] = z;
          }
        }
      }
      return pre;
    }
  }  // namespace

  std::optional<ZigzagCertificate> zigzag_for(FiniteSemigroup const&       S,
                                              Subset const&                U,
                                              element_index                d,
                                              std::optional<Subset> const& restrict) {
    require_subsemigroup(S, U);
    if (d >= S.order()) {
      throw IndexError("element " + std::to_string(d) + " is out of range");
    }
    auto const          s1  = adjoin_identity(S);
    auto const          N   = s1.order();
    element_index const one = static_cast<element_index>(S.order());

    std::vector<char> allowed(N, 1);
    if (restrict) {
      for (element_index z = 0; z < S.order(); ++z) {
        allowed[z] = restrict->contains(z);
      }
    }
    std::vector<element_index> us;
    for (auto u : U) {
      if (allowed[u]) {
        us.push_back(u);
      }
    }
    auto const lpre = preimages(s1, us, allowed, true);
    auto const rpre = preimages(s1, us, allowed, false);

    auto key = [N](element_index p, element_index q) {
      return static_cast<std::uint64_t>(p) * N + q;
    };
    // Parent step for every discovered vertex; the start has none.
    std::unordered_map<std::uint64_t, std::optional<FlipStep>> parent;
    std::deque<Pair>                                           queue;
    parent.emplace(key(d, one), std::nullopt);
    queue.push_back({d, one});
    Pair const target{one, d};
    bool       found = false;

    while (!queue.empty() && !found) {
      auto const [p, q] = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < us.size() && !found; ++k) {
        auto const u = us[k];
        auto       visit = [&](FlipStep step) {
          if (parent.emplace(key(step.to.p, step.to.q), step).second) {
            if (step.to == target) {
              found = true;
            } else {
              queue.push_back(step.to);
            }
          }
        };
        if (allowed[q]) {
          for (auto i = lpre.start[k * N + p]; i < lpre.start[k * N + p + 1] && !found;
               ++i) {
            visit(left_step(s1, lpre.items[i], u, q));
          }
        }
        if (allowed[p]) {
          for (auto i = rpre.start[k * N + q]; i < rpre.start[k * N + q + 1] && !found;
               ++i) {
            visit(right_step(s1, p, u, rpre.items[i]));
          }
        }
      }
    }
    if (!found) {
      return std::nullopt;
    }
    ZigzagCertificate cert;
    cert.d = d;
    for (Pair v = target;;) {
      auto const& step = parent.at(key(v.p, v.q));
      if (!step) {
        break;
      }
      cert.chain.push_back(*step);
      v = step->from;
    }
    std::reverse(cert.chain.begin(), cert.chain.end());
    cert.classic = classic_from_chain(S, cert.chain);
    if (cert.classic) {
      ZigzagCertificate only_classic{d, chain_from_classic(S, *cert.classic), cert.classic};
      if (!verify_zigzag(S, U, only_classic).valid) {
        cert.classic.reset();
      }
    }
    return cert;
  }

  std::optional<ClassicZigzag> classic_from_chain(FiniteSemigroup const&       S,
                                                  std::vector<FlipStep> const& chain) {
    if (chain.empty()) {
      return std::nullopt;
    }
    element_index const one = static_cast<element_index>(S.order());
    auto mul = [&](element_index a, element_index b) {
      return a == one ? b : b == one ? a : S.product(a, b);
    };
    std::vector<FlipStep> merged;
    for (auto const& s : chain) {
      if (!merged.empty() && merged.back().dir == s.dir) {
        auto& last = merged.back();
        if (s.dir == FlipDirection::left) {
          last.u = mul(s.u, last.u);
          last.x = s.x;
        } else {
          last.u = mul(last.u, s.u);
          last.y = s.y;
        }
        last.to = s.to;
      } else {
        merged.push_back(s);
      }
    }
    if (merged.size() % 2 == 0) {
      return std::nullopt;
    }
    for (std::size_t i = 0; i < merged.size(); ++i) {
      auto want = i % 2 == 0 ? FlipDirection::left : FlipDirection::right;
      if (merged[i].dir != want) {
        return std::nullopt;
      }
    }
    ClassicZigzag z;
    z.m = (merged.size() + 1) / 2;
    if (merged.front().y != one || merged.back().x != one) {
      return std::nullopt;
    }
    for (std::size_t i = 0; i < merged.size(); ++i) {
      z.spine.push_back(merged[i].u);
      if (i % 2 == 1) {
        z.x.push_back(merged[i].x);
        z.y.push_back(merged[i].y);
      }
    }
    for (std::size_t i = 0; i + 1 < z.m; ++i) {
      if (z.x[i] == one || z.y[i] == one) {
        return std::nullopt;
      }
    }
    return z;
  }

  std::vector<FlipStep> chain_from_classic(FiniteSemigroup const& S,
                                           ClassicZigzag const&   z) {
    auto const            s1  = adjoin_identity(S);
    element_index const   one = static_cast<element_index>(S.order());
    std::vector<FlipStep> chain;
    for (std::size_t i = 1; i <= z.m; ++i) {
      auto x    = i < z.m ? z.x[i - 1] : one;
      auto yprev = i > 1 ? z.y[i - 2] : one;
      chain.push_back(left_step(s1, x, z.u(i), yprev));
      if (i < z.m) {
        chain.push_back(right_step(s1, x, z.v(i), z.y[i - 1]));
      }
    }
    return chain;
  }

  namespace {
    std::string pair_text(Pair p) {
      return "(" + std::to_string(p.p) + ", " + std::to_string(p.q) + ")";
    }

    ZigzagCheck fail(std::string what) {
      return ZigzagCheck{false, std::move(what)};
    }

    ZigzagCheck verify_chain(FiniteSemigroup const&       s1,
                             Subset const&                U,
                             element_index                d,
                             std::vector<FlipStep> const& chain) {
      auto const    N   = s1.order();
      element_index one = static_cast<element_index>(N - 1);
      if (chain.empty()) {
        return fail("empty chain");
      }
      if (!(chain.front().from == Pair{d, one})) {
        return fail("chain does not start at (d, 1)");
      }
      if (!(chain.back().to == Pair{one, d})) {
        return fail("chain does not end at (1, d)");
      }
      for (std::size_t k = 0; k < chain.size(); ++k) {
        auto const& s    = chain[k];
        auto const  name = "step " + std::to_string(k + 1) + ": ";
        for (auto z : {s.from.p, s.from.q, s.to.p, s.to.q, s.x, s.y}) {
          if (z >= N) {
            return fail(name + "element out of range");
          }
        }
        if (s.u >= N - 1 || !U.contains(s.u)) {
          return fail(name + "u = " + std::to_string(s.u) + " is not in U");
        }
        auto xu = s1.product(s.x, s.u), uy = s1.product(s.u, s.y);
        Pair lhs = s.dir == FlipDirection::left ? Pair{xu, s.y} : Pair{s.x, uy};
        Pair rhs = s.dir == FlipDirection::left ? Pair{s.x, uy} : Pair{xu, s.y};
        if (!(s.from == lhs) || !(s.to == rhs)) {
          return fail(name + "witness does not reproduce " + pair_text(s.from)
                      + " -> " + pair_text(s.to));
        }
        if (s1.product(s.from.p, s.from.q) != d || s1.product(s.to.p, s.to.q) != d) {
          return fail(name + "product is not d");
        }
        if (k > 0 && !(chain[k - 1].to == s.from)) {
          return fail(name + "does not start where the previous step ended");
        }
      }
      return {};
    }

    ZigzagCheck verify_classic(FiniteSemigroup const& S,
                               Subset const&          U,
                               element_index          d,
                               ClassicZigzag const&   z) {
      auto const n = S.order();
      if (z.m == 0 || z.spine.size() != 2 * z.m - 1 || z.x.size() != z.m - 1
          || z.y.size() != z.m - 1) {
        return fail("classic form has inconsistent length");
      }
      for (std::size_t i = 0; i < z.spine.size(); ++i) {
        if (z.spine[i] >= n || !U.contains(z.spine[i])) {
          return fail("spine entry " + std::to_string(i + 1) + " is not in U");
        }
      }
      for (std::size_t i = 0; i + 1 < z.m; ++i) {
        if (z.x[i] >= n || z.y[i] >= n) {
          return fail("factor x" + std::to_string(i + 1) + " or y"
                      + std::to_string(i + 1) + " is not in S");
        }
      }
      auto eq = [&](element_index a, element_index b, std::string text) {
        return a == b ? ZigzagCheck{} : fail(std::move(text));
      };
      auto const m  = z.m;
      auto       mul = [&](element_index a, element_index b) {
        return S.product(a, b);
      };
      auto s = [](std::size_t i) {
        return std::to_string(i);
      };
      if (m == 1) {
        return eq(z.u(1), d, "u1 = d");
      }
      auto                     r = eq(d, mul(z.x[0], z.u(1)), "d = x1u1");
      if (!r.valid) {
        return r;
      }
      if (!(r = eq(z.u(1), mul(z.v(1), z.y[0]), "u1 = v1y1")).valid) {
        return r;
      }
      for (std::size_t i = 2; i + 1 <= m - 1; ++i) {
        r = eq(mul(z.x[i - 2], z.v(i - 1)), mul(z.x[i - 1], z.u(i)),
               "x" + s(i - 1) + "v" + s(i - 1) + " = x" + s(i) + "u" + s(i));
        if (!r.valid) {
          return r;
        }
        r = eq(mul(z.u(i), z.y[i - 2]), mul(z.v(i), z.y[i - 1]),
               "u" + s(i) + "y" + s(i - 1) + " = v" + s(i) + "y" + s(i));
        if (!r.valid) {
          return r;
        }
      }
      r = eq(mul(z.x[m - 2], z.v(m - 1)), z.u(m),
             "x" + s(m - 1) + "v" + s(m - 1) + " = u" + s(m));
      if (!r.valid) {
        return r;
      }
      return eq(mul(z.u(m), z.y[m - 2]), d, "u" + s(m) + "y" + s(m - 1) + " = d");
    }
  }  // namespace

  ZigzagCheck verify_zigzag(FiniteSemigroup const&   S,
                            Subset const&            U,
                            ZigzagCertificate const& cert) {
    if (cert.d >= S.order()) {
      return fail("d is out of range");
    }
    if (U.universe() != S.order()) {
      return fail("U belongs to a different semigroup");
    }
    if (!cert.chain.empty() || !cert.classic) {
      auto r = verify_chain(adjoin_identity(S), U, cert.d, cert.chain);
      if (!r.valid) {
        return r;
      }
    }
    if (cert.classic) {
      return verify_classic(S, U, cert.d, *cert.classic);
    }
    return {};
  }

  ZigzagCertificate normalize_zigzag(FiniteSemigroup const&   S,
                                     Subset const&            U,
                                     ZigzagCertificate const& cert) {
    if (!cert.classic) {
      throw InvalidCertificate("normalisation needs the classic form");
    }
    if (auto r = verify_zigzag(S, U, cert); !r.valid) {
      throw InvalidCertificate("invalid certificate: " + r.failure);
    }
    auto const G = green_relations(S);
    auto       z = *cert.classic;
    auto const n = static_cast<element_index>(S.order());

    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 1; i < z.m && !changed; ++i) {
        // y_i = w y' moves w into v_i and u_(i+1).
        auto const yi = z.y[i - 1];
        for (element_index yp = 0; yp < n && !changed; ++yp) {
          if (U.contains(yp) || !G.j_less(yi, yp)) {
            continue;
          }
          for (auto w : U) {
            if (S.product(w, yp) == yi) {
              z.spine[2 * (i - 1) + 1] = S.product(z.v(i), w);
              z.spine[2 * i]           = S.product(z.u(i + 1), w);
              z.y[i - 1]               = yp;
              changed                  = true;
              break;
            }
          }
        }
        // x_i = x' w moves w into u_i and v_i.
        auto const xi = z.x[i - 1];
        for (element_index xp = 0; xp < n && !changed; ++xp) {
          if (U.contains(xp) || !G.j_less(xi, xp)) {
            continue;
          }
          for (auto w : U) {
            if (S.product(xp, w) == xi) {
              z.spine[2 * (i - 1)]     = S.product(w, z.u(i));
              z.spine[2 * (i - 1) + 1] = S.product(w, z.v(i));
              z.x[i - 1]               = xp;
              changed                  = true;
              break;
            }
          }
        }
      }
    }
    ZigzagCertificate out{cert.d, chain_from_classic(S, z), z};
    if (auto r = verify_zigzag(S, U, out); !r.valid) {
      throw InvalidCertificate("normalisation broke the certificate: " + r.failure);
    }
    return out;
  }

  EpiCheck is_epi_embedding(FiniteSemigroup const& S, Subset const& U) {
    auto dom = dominion(S, U);
    return EpiCheck{dom.size() == S.order(), U.size() < S.order()};
  }

  Reduction reduce_to_top_J(FiniteSemigroup const& S, Subset const& U) {
    require_subsemigroup(S, U);
    if (U.size() == S.order()) {
      throw NotProper("U is all of S");
    }
    auto const G      = green_relations(S);
    auto const all    = Subset::all(S.order());
    auto const top    = j_maximal(G, set_difference(all, U));
    auto const d      = top[0];
    auto const& jmem  = G.d_members[G.d_class[d]];

    Reduction r;
    r.j_class = Subset(S.order(), jmem);
    std::vector<element_index> ideal;
    for (element_index s = 0; s < S.order(); ++s) {
      if (!G.j_leq(d, s)) {
        ideal.push_back(s);
      }
    }
    r.ideal = Subset(S.order(), std::move(ideal));
    if (r.ideal.empty()) {
      r.quotient  = S;
      r.map.resize(S.order());
      for (element_index s = 0; s < S.order(); ++s) {
        r.map[s] = s;
      }
      r.u         = U;
      r.unchanged = true;
    } else {
      auto q     = rees_quotient(S, r.ideal);
      r.quotient = std::move(q.semigroup);
      r.map      = std::move(q.map);
      r.u        = image(r.map, U, r.quotient.order());
    }
    auto const jim  = image(r.map, r.j_class, r.quotient.order());
    r.certified     = true;
    for (element_index s = 0; s < r.quotient.order(); ++s) {
      bool is_zero = !r.unchanged && s + 1 == r.quotient.order();
      if (!r.u.contains(s) && !jim.contains(s) && !is_zero) {
        r.certified = false;
      }
    }
    return r;
  }

  std::optional<std::string> amalgam_obstruction(FiniteSemigroup const& S,
                                                 Subset const&          U) {
    require_subsemigroup(S, U);
    auto const n = S.order();
    if (U.size() == n) {
      return "U is not a proper subsemigroup";
    }
    auto const G    = green_relations(S);
    auto const rest = set_difference(Subset::all(n), U);
    auto const D    = G.d_class[rest[0]];
    for (auto s : rest) {
      if (G.d_class[s] != D) {
        return "S \\ U is not contained in one D-class";
      }
    }
    std::vector<char> meets(G.l_count, 0);
    for (auto u : U) {
      meets[G.l_class[u]] = 1;
    }
    if (std::all_of(meets.begin(), meets.end(), [](char c) { return c != 0; })) {
      return "every L-class meets U";
    }
    auto const rep = G.d_members[D].front();
    for (element_index s = 0; s < n; ++s) {
      if (!G.j_leq(rep, s) && !(S.zero() == s && U.contains(s))) {
        return "an element not J-above D is not a zero lying in U";
      }
    }
    return std::nullopt;
  }

  AmalgamResult amalgam(FiniteSemigroup const& S, Subset const& U) {
    if (auto why = amalgam_obstruction(S, U)) {
      throw PreconditionFailed(*why);
    }
    auto const n = S.order();
    auto const G = green_relations(S);

    std::vector<char> meets(G.l_count, 0);
    for (auto u : U) {
      meets[G.l_class[u]] = 1;
    }
    std::vector<element_index> vmem;
    for (element_index s = 0; s < n; ++s) {
      if (meets[G.l_class[s]]) {
        vmem.push_back(s);
      }
    }
    AmalgamResult r;
    r.V = Subset(n, std::move(vmem));

    r.phi.resize(n);
    r.psi.resize(n);
    element_index next = static_cast<element_index>(n);
    for (element_index s = 0; s < n; ++s) {
      r.phi[s] = s;
      r.psi[s] = r.V.contains(s) ? s : next++;
    }
    auto const         order = static_cast<std::size_t>(next);
    std::vector<element_index> base(order);
    std::vector<char>  second(order, 0);
    for (element_index s = 0; s < n; ++s) {
      base[s] = s;
      if (!r.V.contains(s)) {
        base[r.psi[s]]   = s;
        second[r.psi[s]] = 1;
      }
    }
    std::vector<element_index> table(order * order);
    for (std::size_t a = 0; a < order; ++a) {
      for (std::size_t b = 0; b < order; ++b) {
        auto s = base[a], t = base[b];
        bool tag = r.V.contains(t) ? second[a] : second[b];
        auto st  = S.product(s, t);
        table[a * order + b] = tag ? r.psi[st] : r.phi[st];
      }
    }
    std::vector<std::string> labels;
    if (S.has_labels()) {
      for (std::size_t a = 0; a < order; ++a) {
        auto s = base[a];
        labels.push_back(r.V.contains(s) ? S.label(s)
                                         : S.label(s) + (second[a] ? "''" : "'"));
      }
      std::vector<std::string> sorted = labels;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        labels.clear();
      }
    }
    r.W = make_semigroup(order, std::move(table), std::move(labels));
    return r;
  }

  AmalgamCheck verify_amalgam(FiniteSemigroup const& S,
                              Subset const&          U,
                              AmalgamResult const&   r) {
    AmalgamCheck c;
    c.associative = !kernels::omp::first_nonassociative(
                         kernels::TableView{r.W.table().data(), r.W.order()})
                         .has_value();
    c.morphisms = is_morphism(r.phi, S, r.W) && is_morphism(r.psi, S, r.W);
    c.injective = is_embedding(r.phi, S, r.W) && is_embedding(r.psi, S, r.W);
    c.agree_exactly_on_v = true;
    for (element_index s = 0; s < S.order(); ++s) {
      if ((r.phi[s] == r.psi[s]) != r.V.contains(s)) {
        c.agree_exactly_on_v = false;
      }
    }
    c.u_inside_v = U.is_subset_of(r.V);
    c.distinct   = r.phi != r.psi;
    return c;
  }

}  // namespace zigzag
