#include "zigzag/construct.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "zigzag/green.hpp"
#include "zigzag/pseudo.hpp"

namespace zigzag {

  element_index group_inverse(FiniteSemigroup const& G, element_index g) {
    auto e = *G.identity();
    for (element_index h = 0; h < G.order(); ++h) {
      if (G.product(g, h) == e) {
        return h;
      }
    }
    throw NotAGroup("element " + G.label(g) + " has no inverse");
  }

  void validate(ReesMatrixSpec const& spec) {
    auto const& G = spec.group;
    if (G.order() == 0 || !G.identity()) {
      throw NotAGroup("the group has no identity");
    }
    for (element_index g = 0; g < G.order(); ++g) {
      auto h = group_inverse(G, g);
      if (G.product(h, g) != *G.identity()) {
        throw NotAGroup("element " + G.label(g) + " has no two-sided inverse");
      }
    }
    if (spec.I == 0 || spec.Lambda == 0) {
      throw ValidationError("index sets must be nonempty");
    }
    if (spec.P.size() != spec.Lambda) {
      throw ValidationError("P must have Lambda rows");
    }
    std::vector<char> col_nonzero(spec.I, 0);
    for (std::size_t l = 0; l < spec.Lambda; ++l) {
      if (spec.P[l].size() != spec.I) {
        throw ValidationError("every row of P must have I entries");
      }
      bool row_nonzero = false;
      for (std::size_t i = 0; i < spec.I; ++i) {
        if (auto p = spec.P[l][i]) {
          if (*p >= G.order()) {
            throw ValidationError("entry of P outside the group");
          }
          row_nonzero    = true;
          col_nonzero[i] = 1;
        }
      }
      if (!row_nonzero) {
        throw RegularityError("row " + std::to_string(l + 1) + " of P is zero");
      }
    }
    for (std::size_t i = 0; i < spec.I; ++i) {
      if (!col_nonzero[i]) {
        throw RegularityError("column " + std::to_string(i + 1) + " of P is zero");
      }
    }
  }

  std::optional<ReesSemigroup::Coordinates>
  ReesSemigroup::coordinates(element_index x) const {
    if (x >= zero()) {
      return std::nullopt;
    }
    std::size_t r = x;
    Coordinates c;
    c.lambda = r % Lambda;
    r /= Lambda;
    c.g = static_cast<element_index>(r % G);
    c.i = r / G;
    return c;
  }

  ReesSemigroup rees_semigroup(ReesMatrixSpec const& spec) {
    validate(spec);
    ReesSemigroup R;
    R.I      = spec.I;
    R.G      = spec.group.order();
    R.Lambda = spec.Lambda;
    auto const N = R.I * R.G * R.Lambda + 1;
    auto const z = R.zero();

    std::vector<element_index> table(N * N, z);
    for (element_index x = 0; x < z; ++x) {
      auto a = *R.coordinates(x);
      for (element_index y = 0; y < z; ++y) {
        auto b = *R.coordinates(y);
        if (auto p = spec.P[a.lambda][b.i]) {
          auto g = spec.group.product(spec.group.product(a.g, *p), b.g);
          table[static_cast<std::size_t>(x) * N + y] = R.index(a.i, g, b.lambda);
        }
      }
    }
    std::vector<std::string> labels;
    for (element_index x = 0; x < z; ++x) {
      auto c = *R.coordinates(x);
      labels.push_back("(" + std::to_string(c.i + 1) + "," + spec.group.label(c.g)
                       + "," + std::to_string(c.lambda + 1) + ")");
    }
    labels.push_back("0");
    R.semigroup = make_semigroup(N, std::move(table), std::move(labels));
    return R;
  }

  EnlargementData cs0_enlarge(ReesMatrixSpec const& spec) {
    validate(spec);
    EnlargementData data;
    data.input        = spec;
    data.input_I      = spec.I;
    data.input_Lambda = spec.Lambda;
    data.lambda0      = spec.Lambda;

    auto const e      = *spec.group.identity();
    auto const Lp     = spec.Lambda + 1;
    auto const Ip     = spec.I + Lp;
    data.spec.I       = Ip;
    data.spec.Lambda  = Lp;
    data.spec.group   = spec.group;
    data.spec.P.assign(Lp, std::vector<std::optional<element_index>>(Ip));
    for (std::size_t l = 0; l < Lp; ++l) {
      for (std::size_t i = 0; i < Ip; ++i) {
        if (l < spec.Lambda && i < spec.I) {
          data.spec.P[l][i] = spec.P[l][i];
        } else if (data.phi(l) == i) {
          data.spec.P[l][i] = e;
        }
      }
    }
    data.T = rees_semigroup(data.spec);

    auto const&                T = data.T;
    std::vector<element_index> u;
    for (std::size_t l = 0; l < Lp; ++l) {
      for (std::size_t i = spec.I; i < data.phi(l); ++i) {
        for (element_index g = 0; g < T.G; ++g) {
          u.push_back(T.index(i, g, l));
        }
      }
      u.push_back(T.index(data.phi(l), e, l));
    }
    for (std::size_t i = 0; i < spec.I; ++i) {
      for (element_index g = 0; g < T.G; ++g) {
        u.push_back(T.index(i, g, data.lambda0));
      }
    }
    u.push_back(T.zero());
    data.U = Subset(T.semigroup.order(), std::move(u));

    ReesSemigroup S;
    S.I      = spec.I;
    S.G      = spec.group.order();
    S.Lambda = spec.Lambda;
    data.embed.resize(S.I * S.G * S.Lambda + 1);
    for (element_index x = 0; x < S.zero(); ++x) {
      auto c        = *S.coordinates(x);
      data.embed[x] = T.index(c.i, c.g, c.lambda);
    }
    data.embed[S.zero()] = T.zero();
    return data;
  }

  std::size_t cs0_expected_U_order(EnlargementData const& data) {
    auto const L = data.input_Lambda + 1;
    auto const G = data.input.group.order();
    return G * (L * (L - 1) / 2) + L + data.input_I * G + 1;
  }

  ZigzagCertificate cs0_zigzag(EnlargementData const& data,
                               std::size_t            i,
                               element_index          g,
                               std::size_t            lambda) {
    auto const& T  = data.T;
    auto const  e  = *data.spec.group.identity();
    auto const  mu = i - data.input_I;
    auto const  t  = T.index(i, g, lambda);
    ClassicZigzag z;
    z.m     = 2;
    z.spine = {T.index(data.phi(lambda), e, lambda),
               T.index(data.phi(lambda), group_inverse(data.spec.group, g), mu),
               T.index(i, e, mu)};
    z.x     = {t};
    z.y     = {t};
    return ZigzagCertificate{t, chain_from_classic(T.semigroup, z), z};
  }

  Cs0Report cs0_verify(EnlargementData const& data) {
    auto const& T = data.T.semigroup;
    Cs0Report   r;
    r.T_order          = T.order();
    r.U_order          = data.U.size();
    r.expected_U_order = cs0_expected_U_order(data);
    r.u_subsemigroup   = is_subsemigroup(T, data.U);
    if (r.u_subsemigroup) {
      r.u_in_VY      = in_VY(induced_subsemigroup(T, data.U).semigroup);
      r.dominion_all = dominion(T, data.U).size() == T.order();
    }
    auto const S = rees_semigroup(data.input);
    r.embeds     = data.embed.size() == S.semigroup.order()
               && is_embedding(data.embed, S.semigroup, T);
    if (r.embeds) {
      auto meet = set_intersection(
          image(data.embed, Subset::all(S.semigroup.order()), T.order()), data.U);
      r.image_meets_u_in_zero = meet == Subset(T.order(), {data.T.zero()});
    }
    r.T_completely_0_simple = is_completely_0_simple(T);

    r.zigzags_valid = true;
    for (std::size_t l = 0; l < data.spec.Lambda; ++l) {
      for (std::size_t i = data.phi(l) + 1; i < data.spec.I; ++i) {
        for (element_index g = 0; g < data.T.G; ++g) {
          ++r.zigzags_checked;
          if (!verify_zigzag(T, data.U, cs0_zigzag(data, i, g, l)).valid) {
            r.zigzags_valid = false;
          }
        }
      }
    }
    return r;
  }

  AutomatonEnlargement enlarge_automaton(Semiautomaton const& A) {
    auto const n = A.states;
    auto const k = A.letter_count();
    auto const N = n * (k + 1);

    AutomatonEnlargement E;
    E.base = A;
    std::vector<std::string>           alphabet = A.alphabet;
    std::vector<PartialTransformation> action;
    for (std::size_t a = 0; a < k; ++a) {
      std::vector<element_index> im(N, undefined_point);
      for (std::size_t q = 0; q < n; ++q) {
        im[q]                    = A.action[a][q];
        im[E.block_state(a, q)] = static_cast<element_index>(q);
      }
      action.emplace_back(std::move(im));
    }
    for (std::size_t a = 0; a < k; ++a) {
      std::vector<element_index> im(N, undefined_point);
      for (std::size_t q = 0; q < n; ++q) {
        im[q] = static_cast<element_index>(E.block_state(a, q));
      }
      alphabet.push_back(A.alphabet[a] + "'");
      action.emplace_back(std::move(im));
    }
    E.enlarged = make_semiautomaton(N, std::move(alphabet), std::move(action));
    return E;
  }

  std::vector<std::size_t> moving_letters(Semiautomaton const& A) {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < A.letter_count(); ++a) {
      if (A.action[a].moves_some_point()) {
        out.push_back(a);
      }
    }
    return out;
  }

  PartialTransformation word_action(Semiautomaton const&            A,
                                    std::vector<std::size_t> const& word) {
    if (word.empty()) {
      throw ValidationError("empty word");
    }
    auto f = A.action.at(word[0]);
    for (std::size_t i = 1; i < word.size(); ++i) {
      f = compose(f, A.action.at(word[i]));
    }
    return f;
  }

  bool Prop52Report::all_pass() const noexcept {
    return !items.empty() && std::all_of(items.begin(), items.end(), [](auto const& i) {
      return i.pass;
    });
  }

  namespace {
    struct Prop52Context {
      AutomatonEnlargement E;
      TransitionSemigroup  TA, TE;
      std::vector<element_index> B;
      Subset                     B_closure;
    };

    element_index lookup(TransitionSemigroup const& T, PartialTransformation const& f) {
      auto x = T.find(f);
      if (!x) {
        throw Error("word action missing from the transition semigroup");
      }
      return *x;
    }

    Prop52Context basic_items(Semiautomaton const& A, Prop52Report& rep) {
      Prop52Context c{enlarge_automaton(A), transition_semigroup(A),
                      transition_semigroup(enlarge_automaton(A).enlarged), {}, {}};
      auto const&   E = c.E;
      auto const    n = A.states;
      auto const    k = A.letter_count();
      rep.T_A_order        = c.TA.semigroup.order();
      rep.T_enlarged_order = c.TE.semigroup.order();

      for (std::size_t a = 0; a < k; ++a) {
        c.B.push_back(lookup(c.TE, word_action(E.enlarged, {E.primed(a), a, a})));
      }
      c.B_closure = closure(c.TE.semigroup, Subset(c.TE.semigroup.order(), c.B));
      rep.B_order = c.B_closure.size();

      // Item 1: restriction to Q is an isomorphism <B> -> T(A).
      auto                       sub = induced_subsemigroup(c.TE.semigroup, c.B_closure);
      std::vector<element_index> map;
      bool                       ok = true;
      for (auto x : sub.inclusion) {
        auto const&                f = c.TE.elements[x];
        std::vector<element_index> im(n);
        for (std::size_t q = 0; q < n; ++q) {
          im[q] = f[q];
          ok    = ok && (im[q] == undefined_point || im[q] < n);
        }
        for (std::size_t q = n; q < f.degree(); ++q) {
          ok = ok && !f.is_defined(q);
        }
        if (!ok) {
          break;
        }
        auto y = c.TA.find(PartialTransformation(std::move(im)));
        if (!y) {
          ok = false;
          break;
        }
        map.push_back(*y);
      }
      ok = ok && sub.semigroup.order() == c.TA.semigroup.order()
           && is_embedding(map, sub.semigroup, c.TA.semigroup);
      rep.items.push_back({"1", ok,
                           "<B> has order " + std::to_string(rep.B_order)
                               + ", T(A) has order " + std::to_string(rep.T_A_order)});

      // Item 2
      bool eq = true;
      for (std::size_t a = 0; a < k; ++a) {
        auto a1 = E.primed(a);
        eq      = eq && word_action(E.enlarged, {a, a1, a}) == E.enlarged.action[a]
             && word_action(E.enlarged, {a1, a, a1}) == E.enlarged.action[a1];
      }
      rep.items.push_back({"2", eq, "aa'a = a and a'aa' = a' for every letter"});
      return c;
    }

    // Letters of A_mu send state 0 to 1 and fix the rest.
    Semiautomaton twin_automaton(Semiautomaton const& A) {
      auto twin = A;
      for (auto a : moving_letters(A)) {
        auto im = PartialTransformation::identity(A.states).images();
        im[0]   = 1;
        twin.action[a] = PartialTransformation(std::move(im));
      }
      return twin;
    }

    std::vector<PartialTransformation> c_generators(AutomatonEnlargement const& E) {
      std::vector<PartialTransformation> C;
      for (std::size_t a = 0; a < E.base.letter_count(); ++a) {
        auto a1 = E.primed(a);
        C.push_back(E.enlarged.action[a1]);
        C.push_back(word_action(E.enlarged, {a, a1}));
        C.push_back(word_action(E.enlarged, {a1, a}));
      }
      return C;
    }
  }  // namespace

  Prop52Report prop52_basic(Semiautomaton const& A) {
    Prop52Report rep;
    basic_items(A, rep);
    return rep;
  }

  Prop52Report prop52_report(Semiautomaton const& A) {
    if (!is_complete(A)) {
      throw IncompleteAutomaton("items 3 to 7 need a complete semiautomaton");
    }
    Prop52Report rep;
    auto         c  = basic_items(A, rep);
    auto const&  E  = c.E;
    auto const&  TE = c.TE.semigroup;
    auto const   k  = A.letter_count();
    auto const   zero = TE.zero();

    // Item 3
    auto const                 C = c_generators(E);
    std::vector<element_index> cidx;
    for (auto const& f : C) {
      cidx.push_back(lookup(c.TE, f));
    }
    auto const U         = closure(TE, Subset(TE.order(), cidx));
    rep.U_order          = U.size();
    rep.expected_U_order = 2 * k + moving_letters(A).size() + 2;
    rep.items.push_back({"3", rep.U_order == rep.expected_U_order,
                         "|U| = " + std::to_string(rep.U_order) + ", formula gives "
                             + std::to_string(rep.expected_U_order)});

    // Item 4: generator correspondence with a second automaton of the same
    // parameters.
    {
      auto twin = twin_automaton(A);
      if (twin.action == A.action) {
        twin = cycle_modify(A);
      }
      bool        distinct = twin.action != A.action;
      auto const  E2       = enlarge_automaton(twin);
      auto const  C2       = c_generators(E2);
      auto const  U1       = generate_transformation_semigroup(C);
      auto const  U2       = generate_transformation_semigroup(C2);
      bool        ok       = U1.semigroup.order() == U2.semigroup.order();
      std::vector<element_index> f;
      for (std::size_t x = 0; ok && x < U1.words.size(); ++x) {
        auto g = C2[U1.words[x][0]];
        for (std::size_t i = 1; i < U1.words[x].size(); ++i) {
          g = compose(g, C2[U1.words[x][i]]);
        }
        auto y = U2.find(g);
        ok     = y.has_value();
        if (ok) {
          f.push_back(*y);
        }
      }
      for (std::size_t j = 0; ok && j < C.size(); ++j) {
        ok = f[*U1.find(C[j])] == *U2.find(C2[j]);
      }
      ok = ok && is_embedding(f, U1.semigroup, U2.semigroup);
      rep.items.push_back(
          {"4", ok,
           distinct ? "isomorphic to U of a different automaton with the same "
                      "|Q|, |A| and |A_mu|"
                    : "no different automaton with these parameters exists"});
    }

    auto const G = green_relations(TE);

    // Item 5
    {
      std::vector<char> short_class(G.d_count, 0);
      for (std::size_t a = 0; a < k; ++a) {
        short_class[G.d_class[lookup(c.TE, E.enlarged.action[a])]] = 1;
        for (std::size_t b = 0; b < k; ++b) {
          short_class[G.d_class[lookup(c.TE, word_action(E.enlarged, {a, b}))]] = 1;
        }
      }
      bool ok = true;
      for (auto u : U) {
        if (u != zero && !short_class[G.d_class[u]]) {
          ok = false;
        }
      }
      rep.items.push_back({"5", ok,
                           "every nonzero element of U is J-equivalent to the "
                           "action of a word of length at most 2"});
    }

    // Item 6
    {
      std::vector<char> reached(G.d_count, 0);
      for (auto b : c.B_closure) {
        reached[G.d_class[b]] = 1;
      }
      reached[G.d_class[lookup(c.TE, word_action(E.enlarged, {E.primed(0), 0}))]] = 1;
      bool        ok      = true;
      std::size_t missing = 0;
      for (element_index t = 0; t < TE.order(); ++t) {
        if (t != zero && !reached[G.d_class[t]]) {
          ok = false;
          ++missing;
        }
      }
      rep.items.push_back({"6", ok,
                           std::to_string(missing)
                               + " nonzero elements outside the J-classes of <B> "
                                 "and 1_Q"});
    }

    // Item 7
    {
      bool all = dominion(TE, U).size() == TE.order();
      bool zz  = true;
      for (std::size_t a = 0; a < k; ++a) {
        auto          a1 = E.primed(a);
        auto          da = lookup(c.TE, E.enlarged.action[a]);
        ClassicZigzag z;
        z.m     = 2;
        z.spine = {lookup(c.TE, word_action(E.enlarged, {a1, a})),
                   lookup(c.TE, E.enlarged.action[a1]),
                   lookup(c.TE, word_action(E.enlarged, {a, a1}))};
        z.x     = {da};
        z.y     = {da};
        ZigzagCertificate cert{da, chain_from_classic(TE, z), z};
        zz = zz && verify_zigzag(TE, U, cert).valid;
      }
      rep.items.push_back({"7", all && zz,
                           std::string(all ? "Dom(U, T) = T" : "Dom(U, T) != T")
                               + (zz ? ", letter zigzags verify"
                                     : ", a letter zigzag fails")});
    }
    return rep;
  }

  OrderFormula order_formula_check(Semiautomaton const& A, bool allow_identity_letters) {
    if (!is_complete(A)) {
      throw IncompleteAutomaton("the order formula needs a complete semiautomaton");
    }
    if (!allow_identity_letters && moving_letters(A).size() != A.letter_count()) {
      throw IdentityLetterPresent("some letter acts as the identity");
    }
    OrderFormula r;
    r.T_A_order        = transition_semigroup(A).semigroup.order();
    r.T_enlarged_order = transition_semigroup(enlarge_automaton(A).enlarged).semigroup.order();
    auto const k       = A.letter_count() + 1;
    r.predicted        = k * k * r.T_A_order + 1;
    r.holds            = r.predicted == r.T_enlarged_order;
    return r;
  }

  Semiautomaton cycle_modify(Semiautomaton const& A) {
    if (!is_complete(A)) {
      throw IncompleteAutomaton("cycle modification needs a complete semiautomaton");
    }
    std::vector<element_index> cyc(A.states);
    for (std::size_t q = 0; q < A.states; ++q) {
      cyc[q] = static_cast<element_index>((q + 1) % A.states);
    }
    auto out = A;
    for (auto a : moving_letters(A)) {
      out.action[a] = PartialTransformation(cyc);
    }
    return out;
  }

  ReesCoordinates rees_coordinates(FiniteSemigroup const& S) {
    auto const G = green_relations(S);
    if (!is_completely_0_simple(S, G)) {
      throw PreconditionFailed("the semigroup is not completely 0-simple");
    }
    auto const z = *S.zero();
    auto const D = G.d_class[z == 0 ? 1 : 0];
    element_index e = z;
    for (auto x : G.d_members[D]) {
      if (S.is_idempotent(x)) {
        e = x;
        break;
      }
    }
    auto const& box = G.eggbox[D];
    auto        rows = box.r_classes, cols = box.l_classes;
    std::stable_partition(rows.begin(), rows.end(),
                          [&](auto r) { return r == G.r_class[e]; });
    std::stable_partition(cols.begin(), cols.end(),
                          [&](auto l) { return l == G.l_class[e]; });

    auto cell = [&](std::uint32_t r, std::uint32_t l) -> std::vector<element_index> const& {
      auto ri = std::find(box.r_classes.begin(), box.r_classes.end(), r)
                - box.r_classes.begin();
      auto li = std::find(box.l_classes.begin(), box.l_classes.end(), l)
                - box.l_classes.begin();
      return box.cells[ri][li];
    };
    auto const& He    = cell(G.r_class[e], G.l_class[e]);
    auto        group = induced_subsemigroup(S, Subset(S.order(), He));

    std::vector<element_index> r(rows.size()), q(cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      r[i] = i == 0 ? e : cell(rows[i], G.l_class[e]).front();
    }
    for (std::size_t l = 0; l < cols.size(); ++l) {
      q[l] = l == 0 ? e : cell(G.r_class[e], cols[l]).front();
    }
    auto group_index = [&](element_index x) -> std::optional<element_index> {
      auto it = std::find(He.begin(), He.end(), x);
      if (it == He.end()) {
        return std::nullopt;
      }
      return static_cast<element_index>(it - He.begin());
    };

    ReesCoordinates out;
    out.spec.I      = rows.size();
    out.spec.Lambda = cols.size();
    out.spec.group  = group.semigroup;
    out.spec.P.assign(cols.size(),
                      std::vector<std::optional<element_index>>(rows.size()));
    for (std::size_t l = 0; l < cols.size(); ++l) {
      for (std::size_t i = 0; i < rows.size(); ++i) {
        out.spec.P[l][i] = group_index(S.product(q[l], r[i]));
      }
    }
    auto R = rees_semigroup(out.spec);
    out.map.assign(S.order(), R.zero());
    std::vector<char> hit(S.order(), 0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (element_index g = 0; g < He.size(); ++g) {
        for (std::size_t l = 0; l < cols.size(); ++l) {
          auto s    = S.product(S.product(r[i], He[g]), q[l]);
          out.map[s] = R.index(i, g, l);
          hit[s]     = 1;
        }
      }
    }
    hit[z] = 1;
    if (std::count(hit.begin(), hit.end(), 1) != static_cast<long>(S.order())
        || !is_embedding(out.map, S, R.semigroup)) {
      throw Error("Rees coordinatisation failed");
    }
    return out;
  }

  namespace {
    // All isomorphisms between two groups of equal order, as index maps.
    std::vector<std::vector<element_index>> group_isomorphisms(FiniteSemigroup const& A,
                                                               FiniteSemigroup const& B) {
      std::vector<std::vector<element_index>> out;
      if (A.order() != B.order()) {
        return out;
      }
      if (A.order() > 8) {
        throw PreconditionFailed("group too large for the isomorphism search");
      }
      std::vector<element_index> perm(A.order());
      std::iota(perm.begin(), perm.end(), 0);
      do {
        if (perm[*A.identity()] == *B.identity() && is_morphism(perm, A, B)) {
          out.push_back(perm);
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      return out;
    }

    // Solves v_l P'(tau l, sigma j) u_j = alpha(P(l, j)) on each component
    // of the bipartite support graph.
    bool solve_scaling(ReesMatrixSpec const&             a,
                       ReesMatrixSpec const&             b,
                       std::vector<std::size_t> const&   sigma,
                       std::vector<std::size_t> const&   tau,
                       std::vector<element_index> const& alpha,
                       std::vector<element_index>&       u,
                       std::vector<element_index>&       v) {
      auto const& G  = b.group;
      auto const  I  = a.I, L = a.Lambda;
      auto        mul = [&](element_index x, element_index y) {
        return G.product(x, y);
      };
      auto inv = [&](element_index x) {
        return group_inverse(G, x);
      };
      std::vector<int> comp(I + L, -1);
      int              ncomp = 0;
      for (std::size_t s = 0; s < I; ++s) {
        if (comp[s] >= 0) {
          continue;
        }
        std::vector<std::size_t> nodes;
        std::deque<std::size_t>  queue{s};
        comp[s] = ncomp;
        while (!queue.empty()) {
          auto x = queue.front();
          queue.pop_front();
          nodes.push_back(x);
          for (std::size_t y = 0; y < (x < I ? L : I); ++y) {
            auto l = x < I ? y : x - I;
            auto j = x < I ? x : y;
            auto w = x < I ? I + y : y;
            if (a.P[l][j] && comp[w] < 0) {
              comp[w] = ncomp;
              queue.push_back(w);
            }
          }
        }
        bool solved = false;
        for (element_index c = 0; c < G.order() && !solved; ++c) {
          std::vector<char> known(I + L, 0);
          u[s]     = c;
          known[s] = 1;
          for (auto x : nodes) {
            for (std::size_t y = 0; y < (x < I ? L : I); ++y) {
              auto l = x < I ? y : x - I;
              auto j = x < I ? x : y;
              if (!a.P[l][j]) {
                continue;
              }
              auto pa = alpha[*a.P[l][j]];
              auto pb = *b.P[tau[l]][sigma[j]];
              if (known[j] && !known[I + l]) {
                v[l]         = mul(mul(pa, inv(u[j])), inv(pb));
                known[I + l] = 1;
              } else if (known[I + l] && !known[j]) {
                u[j]     = mul(mul(inv(pb), inv(v[l])), pa);
                known[j] = 1;
              }
            }
          }
          solved = true;
          for (auto x : nodes) {
            if (x >= I) {
              continue;
            }
            for (std::size_t l = 0; l < L; ++l) {
              if (a.P[l][x]
                  && (!known[x] || !known[I + l]
                      || mul(mul(v[l], *b.P[tau[l]][sigma[x]]), u[x])
                             != alpha[*a.P[l][x]])) {
                solved = false;
              }
            }
          }
        }
        if (!solved) {
          return false;
        }
        ++ncomp;
      }
      return true;
    }
  }  // namespace

  std::optional<std::vector<element_index>> rees_isomorphism(ReesMatrixSpec const& a,
                                                             ReesMatrixSpec const& b) {
    validate(a);
    validate(b);
    if (a.I != b.I || a.Lambda != b.Lambda || a.group.order() != b.group.order()) {
      return std::nullopt;
    }
    if (a.I > 8 || a.Lambda > 8) {
      throw PreconditionFailed("index sets too large for the isomorphism search");
    }
    auto const alphas = group_isomorphisms(a.group, b.group);
    auto const Ra     = rees_semigroup(a);
    auto const Rb     = rees_semigroup(b);

    std::vector<std::size_t> sigma(a.I), tau(a.Lambda);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      std::iota(tau.begin(), tau.end(), 0);
      do {
        bool pattern = true;
        for (std::size_t l = 0; l < a.Lambda && pattern; ++l) {
          for (std::size_t j = 0; j < a.I && pattern; ++j) {
            pattern = a.P[l][j].has_value() == b.P[tau[l]][sigma[j]].has_value();
          }
        }
        if (!pattern) {
          continue;
        }
        for (auto const& alpha : alphas) {
          std::vector<element_index> u(a.I), v(a.Lambda);
          if (!solve_scaling(a, b, sigma, tau, alpha, u, v)) {
            continue;
          }
          std::vector<element_index> f(Ra.semigroup.order(), Rb.zero());
          for (element_index x = 0; x < Ra.zero(); ++x) {
            auto c = *Ra.coordinates(x);
            auto g = b.group.product(b.group.product(u[c.i], alpha[c.g]), v[c.lambda]);
            f[x]   = Rb.index(sigma[c.i], g, tau[c.lambda]);
          }
          if (is_embedding(f, Ra.semigroup, Rb.semigroup)) {
            return f;
          }
        }
      } while (std::next_permutation(tau.begin(), tau.end()));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return std::nullopt;
  }

  std::optional<std::vector<element_index>>
  isomorphism_to_rees(FiniteSemigroup const& S, ReesMatrixSpec const& spec) {
    auto target = rees_semigroup(spec);
    if (target.semigroup.order() != S.order()) {
      return std::nullopt;
    }
    auto coords = rees_coordinates(S);
    auto iso    = rees_isomorphism(coords.spec, spec);
    if (!iso) {
      return std::nullopt;
    }
    std::vector<element_index> f(S.order());
    for (element_index s = 0; s < S.order(); ++s) {
      f[s] = (*iso)[coords.map[s]];
    }
    if (!is_embedding(f, S, target.semigroup)) {
      return std::nullopt;
    }
    return f;
  }

}  // namespace zigzag
