// One line per acceptance criterion; the exit status is nonzero when any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "oracle.hpp"
#include "zigzag/catalog.hpp"
#include "zigzag/construct.hpp"
#include "zigzag/dominion.hpp"
#include "zigzag/green.hpp"
#include "zigzag/pseudo.hpp"
#include "zigzag/reproduce.hpp"

using namespace zigzag;

namespace {

  // Collects the failed sub-checks of one criterion.
  struct Checks {
    std::vector<std::string> failed;

    void operator()(bool ok, std::string what) {
      if (!ok) {
        failed.push_back(std::move(what));
      }
    }
  };

  int failures = 0;

  void criterion(int number, std::string const& title, double limit_ms,
                 std::function<void(Checks&)> body) {
    Checks c;
    auto   t0 = std::chrono::steady_clock::now();
    try {
      body(c);
    } catch (std::exception const& e) {
      c.failed.push_back(std::string("exception: ") + e.what());
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
    if (ms > limit_ms) {
      std::ostringstream s;
      s << "took " << ms << " ms, limit " << limit_ms << " ms";
      c.failed.push_back(s.str());
    }
    bool pass = c.failed.empty();
    failures += !pass;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " ("
              << static_cast<long>(ms) << " ms)";
    for (auto const& f : c.failed) {
      std::cout << " | " << f;
    }
    std::cout << std::endl;
  }

  std::string str(std::size_t n) {
    return std::to_string(n);
  }

  bool proper_epi(FiniteSemigroup const& S, Subset const& U) {
    return U.size() < S.order() && dominion(S, U).size() == S.order();
  }

}  // namespace

int main() {
  criterion(1, "Y is epimorphically embedded in b2 with the displayed zigzag for b", 100,
            [](Checks& check) {
              auto S = catalog::b2();
              auto U = catalog::y_in_b2();
              check(dominion(S, U).size() == 5, "Dom(Y, b2) != b2");
              auto cert = zigzag_for(S, U, 1);
              check(cert && cert->classic, "no classic zigzag for b");
              if (cert && cert->classic) {
                check(verify_zigzag(S, U, *cert).valid, "found zigzag does not verify");
                check(cert->classic->m == 3,
                      "zigzag_for gives m = " + str(cert->classic->m) + ", expected 3");
                check(cert->classic->spine == std::vector<element_index>{2, 0, 0, 0, 3},
                      "zigzag_for spine differs from (ab, a, a, a, ba)");
              }
              check(verify_zigzag(S, U, b2_displayed_zigzag()).valid,
                    "the transcribed zigzag is rejected");
            });

  criterion(2, "DS, V{Y}, V1, V2, V3 membership of b2 and Y", 1000, [](Checks& check) {
    auto B = catalog::b2();
    auto Y = catalog::y();
    check(!in_DS(B), "b2 in DS");
    check(in_VY(Y), "Y not in V{Y}");
    check(!in_V1(Y), "Y in V1");
    check(!in_V2(Y), "Y in V2");
    check(!in_V3(Y), "Y in V3");
    check(in_DS(Y), "Y not in DS");
  });

  criterion(3, "cs0 enlargement of b2: |T| = 16, |U| = 9, U in V{Y}, Dom(U, T) = T, b2 embeds",
            5000, [](Checks& check) {
              auto data = cs0_enlarge(catalog::b2_rees_spec());
              auto r    = cs0_verify(data);
              check(r.T_order == 16, "|T| = " + str(r.T_order));
              check(r.U_order == 9, "|U| = " + str(r.U_order));
              check(r.u_in_VY, "U not in V{Y}");
              check(r.dominion_all, "Dom(U, T) != T");
              check(r.embeds, "b2 does not embed");
              check(r.ok(), "some enlargement check failed");
            });

  criterion(4, "fig2 automaton: |T(A)| = 256, |T(A~)| = 4097, |U| = 11, items 1-7, order formula", 60000,
            [](Checks& check) {
              auto A = catalog::fig2_base();
              auto r = prop52_report(A);
              check(r.T_A_order == 256, "|T(A)| = " + str(r.T_A_order));
              check(r.T_enlarged_order == 4097, "|T(A~)| = " + str(r.T_enlarged_order));
              check(r.U_order == 11, "|U| = " + str(r.U_order));
              check(r.U_order == 2 * A.letter_count() + moving_letters(A).size() + 2,
                    "|U| differs from 2|A| + |A_mu| + 2");
              for (auto const& item : r.items) {
                check(item.pass, "item " + item.name + " fails: " + item.detail);
              }
              check(r.items.size() == 7, "expected 7 items");
              auto f = order_formula_check(A);
              check(f.holds && f.predicted == 4097, "order formula fails");
            });

  criterion(5, "cycle-modified example: |T(A~)| = 49, |U| = 9, T(A~) = M0(4, C3, 4, P)", 5000,
            [](Checks& check) {
              auto A = cycle_modify(catalog::q3a3());
              auto r = prop52_report(A);
              check(r.T_enlarged_order == 49, "|T(A~)| = " + str(r.T_enlarged_order));
              check(r.U_order == 9, "|U| = " + str(r.U_order));
              auto T = transition_semigroup(enlarge_automaton(A).enlarged);
              check(isomorphism_to_rees(T.semigroup, catalog::rees49_spec()).has_value(),
                    "not isomorphic to M0(4, C3, 4, P)");
            });

  auto const corpus = testing::build_corpus();

  criterion(6, "dominion agrees with bounded zigzag enumeration on >= 200 corpus pairs", 300000,
            [&](Checks& check) {
              check(corpus.pairs.size() >= 200, "corpus has " + str(corpus.pairs.size()) + " pairs");
              std::size_t bad = 0, bfs_bad = 0;
              for (auto const& [si, U] : corpus.pairs) {
                auto const& S = corpus.semigroups[si].S;
                auto        D = dominion(S, U);
                bad += D != testing::oracle_dominion(S, U);
                for (element_index d = 0; d < S.order(); ++d) {
                  bfs_bad += zigzag_for(S, U, d).has_value() != D.contains(d);
                }
              }
              check(bad == 0, str(bad) + " pairs disagree with the oracle");
              check(bfs_bad == 0, str(bfs_bad) + " elements disagree with the fiber search");
            });

  criterion(7, "no proper epimorphic embedding with S in DS, U in V2 or V3, or U regular; "
               "all have U outside V1, V2, V3",
            300000, [&](Checks& check) {
              std::size_t found = 0, violations = 0;
              for (auto const& [si, U] : corpus.pairs) {
                auto const& S = corpus.semigroups[si].S;
                if (!proper_epi(S, U)) {
                  continue;
                }
                ++found;
                auto T = induced_subsemigroup(S, U).semigroup;
                violations += in_DS(S);
                violations += in_V1(T) || in_V2(T) || in_V3(T);
                violations += is_regular_semigroup(T, green_relations(T));
              }
              check(found > 0, "no proper epimorphic embedding in the corpus");
              check(violations == 0, str(violations) + " violations among " + str(found));
            });

  criterion(8, "J-maximal regularity, Dom(EUE, ESE) = ESE, Miller-Clifford, amalgam on >= 20 pairs",
            300000, [&](Checks& check) {
              std::size_t irregular = 0, local = 0, mc = 0, eligible = 0, amalgam_bad = 0;
              for (auto const& [name, S] : corpus.semigroups) {
                mc += !miller_clifford_check(S).empty();
              }
              for (auto const& [si, U] : corpus.pairs) {
                auto const& S = corpus.semigroups[si].S;
                if (U.size() == S.order()) {
                  continue;
                }
                if (proper_epi(S, U)) {
                  auto G = green_relations(S);
                  for (auto d : j_maximal(G, set_difference(Subset::all(S.order()), U))) {
                    irregular += !G.is_regular(d);
                  }
                  auto EUE = compute_EUE(S, U);
                  auto ESE = compute_ESE(S, U);
                  auto sub = induced_subsemigroup(S, ESE);
                  std::vector<element_index> inner;
                  for (std::size_t k = 0; k < sub.inclusion.size(); ++k) {
                    if (EUE.contains(sub.inclusion[k])) {
                      inner.push_back(static_cast<element_index>(k));
                    }
                  }
                  local += dominion(sub.semigroup, Subset(sub.semigroup.order(), inner)).size()
                           != sub.semigroup.order();
                }
                auto r = reduce_to_top_J(S, U);
                for (auto const& [T, V] : {std::pair{S, U}, std::pair{r.quotient, r.u}}) {
                  if (amalgam_obstruction(T, V)) {
                    continue;
                  }
                  ++eligible;
                  auto a   = amalgam(T, V);
                  auto chk = verify_amalgam(T, V, a);
                  amalgam_bad += !(chk.associative && chk.agree_exactly_on_v && chk.ok());
                }
              }
              check(irregular == 0, str(irregular) + " irregular J-maximal elements");
              check(local == 0, str(local) + " pairs with Dom(EUE, ESE) != ESE");
              check(mc == 0, str(mc) + " Miller-Clifford violations");
              check(eligible >= 20, "only " + str(eligible) + " amalgam instances");
              check(amalgam_bad == 0, str(amalgam_bad) + " amalgams fail their postconditions");
            });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
