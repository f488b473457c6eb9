#include "zigzag/reproduce.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "zigzag/catalog.hpp"
#include "zigzag/construct.hpp"
#include "zigzag/dominion.hpp"
#include "zigzag/green.hpp"
#include "zigzag/pseudo.hpp"

namespace zigzag {

  ZigzagCertificate b2_displayed_zigzag() {
    auto const    S = catalog::b2();
    ClassicZigzag z;
    z.m     = 3;
    z.spine = {2, 0, 0, 0, 3};
    z.x     = {1, 1};
    z.y     = {1, 1};
    return ZigzagCertificate{1, chain_from_classic(S, z), z};
  }

  bool all_pass(std::vector<ReproduceItem> const& items) {
    return std::all_of(items.begin(), items.end(), [](auto const& i) {
      return i.pass || i.informational;
    });
  }

  namespace {
    std::string yes(bool b) {
      return b ? "true" : "false";
    }

    class Runner {
     public:
      // f returns the computed value; the item passes when it equals expected.
      void check(std::string name, std::string expected, std::function<std::string()> f,
                 bool informational = false) {
        auto          t0 = std::chrono::steady_clock::now();
        ReproduceItem item{std::move(name), std::move(expected), {}, false,
                           informational, 0};
        try {
          item.actual = f();
          item.pass   = item.actual == item.expected;
        } catch (std::exception const& e) {
          item.actual = std::string("error: ") + e.what();
        }
        item.ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        items.push_back(std::move(item));
      }

      std::vector<ReproduceItem> items;
    };
  }  // namespace

  std::vector<ReproduceItem> reproduce(ReproduceOptions const& options) {
    Runner     run;
    auto const B2 = catalog::b2();
    auto const Y  = catalog::y();
    auto const UY = catalog::y_in_b2();

    run.check("b2 order", "5", [&] { return std::to_string(B2.order()); });
    run.check("Y embeds in b2", "true",
              [&] { return yes(is_embedding(catalog::y_to_b2(), Y, B2)); });
    run.check("Dom(Y, b2) = b2", "true",
              [&] { return yes(dominion(B2, UY).size() == B2.order()); });
    run.check("displayed zigzag for b verifies", "true", [&] {
      return yes(verify_zigzag(B2, UY, b2_displayed_zigzag()).valid);
    });
    run.check("displayed zigzag length", "3",
              [&] { return std::to_string(b2_displayed_zigzag().classic->m); });
    run.check(
        "shortest flip-chain zigzag length for b", "3",
        [&] {
          auto cert = zigzag_for(B2, UY, 1);
          return cert && cert->classic ? std::to_string(cert->classic->m)
                                       : std::string("none");
        },
        true);
    run.check("Y in V{Y}", "true", [&] { return yes(in_VY(Y)); });
    run.check("b2 in DS", "false", [&] { return yes(in_DS(B2)); });
    run.check("Y in DS", "true", [&] { return yes(in_DS(Y)); });
    run.check("Y in V1, V2, V3", "false false false", [&] {
      return yes(in_V1(Y)) + " " + yes(in_V2(Y)) + " " + yes(in_V3(Y));
    });

    run.check("cs0 enlargement of b2: |T| |U| checks", "16 9 true", [&] {
      auto data = cs0_enlarge(catalog::b2_rees_spec());
      auto r    = cs0_verify(data);
      return std::to_string(r.T_order) + " " + std::to_string(r.U_order) + " "
             + yes(r.ok());
    });

    auto const fig2 = options.fig2 ? *options.fig2 : catalog::fig2_base();
    run.check("|T(A)| for fig2", "256", [&] {
      return std::to_string(transition_semigroup(fig2).semigroup.order());
    });
    if (!options.quick) {
      run.check("|T(enlarged A)| for fig2", "4097", [&] {
        return std::to_string(
            transition_semigroup(enlarge_automaton(fig2).enlarged).semigroup.order());
      });
      run.check("fig2 items 1-7 and |U|", "true 11", [&] {
        auto r = prop52_report(fig2);
        return yes(r.all_pass()) + " " + std::to_string(r.U_order);
      });
      run.check("order formula for fig2", "4097 = 16*256+1", [&] {
        auto r = order_formula_check(fig2);
        return std::to_string(r.T_enlarged_order) + " = "
               + std::to_string((fig2.letter_count() + 1) * (fig2.letter_count() + 1))
               + "*" + std::to_string(r.T_A_order) + "+1" + (r.holds ? "" : " (fails)");
      });
    }

    run.check("cycle-modified |Q|=|A|=3, |A_mu|=1: |T(A)| |T| |U|", "3 49 9", [&] {
      auto A = cycle_modify(catalog::q3a3());
      auto r = prop52_report(A);
      return std::to_string(r.T_A_order) + " " + std::to_string(r.T_enlarged_order)
             + " " + std::to_string(r.U_order);
    });
    run.check("order-49 T is M0(4, C3, 4, P)", "true", [&] {
      auto A = cycle_modify(catalog::q3a3());
      auto T = transition_semigroup(enlarge_automaton(A).enlarged);
      return yes(isomorphism_to_rees(T.semigroup, catalog::rees49_spec()).has_value());
    });
    run.check("|M0(4, C3, 4, P)|", "49", [&] {
      return std::to_string(rees_semigroup(catalog::rees49_spec()).semigroup.order());
    });
    return std::move(run.items);
  }

}  // namespace zigzag
