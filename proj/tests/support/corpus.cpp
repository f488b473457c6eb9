#include "corpus.hpp"

#include <random>
#include <set>

#include "zigzag/catalog.hpp"
#include "zigzag/construct.hpp"
#include "zigzag/transformation.hpp"

namespace zigzag::testing {

  namespace {
    PartialTransformation random_map(std::mt19937_64& rng, std::size_t degree) {
      std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(degree - 1));
      std::vector<std::uint32_t> images(degree);
      for (auto& x : images) {
        x = pick(rng);
      }
      return PartialTransformation(std::move(images));
    }
  }  // namespace

  std::vector<CorpusSemigroup> corpus_semigroups(std::uint64_t seed,
                                                 std::size_t   max_order,
                                                 std::size_t   target) {
    std::vector<CorpusSemigroup>            out;
    std::set<std::vector<element_index>>    seen;
    auto add = [&](std::string name, FiniteSemigroup S) {
      if (S.order() > max_order) {
        return;
      }
      std::vector<element_index> key(S.table().begin(), S.table().end());
      key.push_back(static_cast<element_index>(S.order()));
      if (seen.insert(key).second) {
        out.push_back({std::move(name), std::move(S)});
      }
    };
    add("b2", catalog::b2());
    add("y", catalog::y());
    add("c3", catalog::c3());
    add("trivial", catalog::trivial());
    add("right_zero_3", catalog::right_zero(3));
    add("zero_group", rees_semigroup(catalog::zero_group_spec()).semigroup);
    add("b2_monoid", adjoin_identity(catalog::b2()));
    add("y_monoid", adjoin_identity(catalog::y()));

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> gens(1, 3);
    std::bernoulli_distribution        four(0.5);
    for (std::size_t attempt = 0; out.size() < target && attempt < 20000; ++attempt) {
      std::size_t degree = four(rng) ? 4 : 3;
      std::vector<PartialTransformation> g;
      for (int k = gens(rng); k > 0; --k) {
        g.push_back(random_map(rng, degree));
      }
      auto T = generate_transformation_semigroup(g);
      add("T" + std::to_string(degree) + "_" + std::to_string(attempt), T.semigroup);
    }
    return out;
  }

  std::vector<Subset> all_subsemigroups(FiniteSemigroup const& S) {
    std::size_t const   n = S.order();
    std::vector<Subset> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      bool closed = true;
      for (std::size_t x = 0; x < n && closed; ++x) {
        if (!(mask >> x & 1)) {
          continue;
        }
        for (std::size_t y = 0; y < n; ++y) {
          if ((mask >> y & 1) && !(mask >> S.product(x, y) & 1)) {
            closed = false;
            break;
          }
        }
      }
      if (closed) {
        std::vector<element_index> members;
        for (std::size_t x = 0; x < n; ++x) {
          if (mask >> x & 1) {
            members.push_back(static_cast<element_index>(x));
          }
        }
        out.emplace_back(n, std::move(members));
      }
    }
    return out;
  }

  Corpus build_corpus(std::uint64_t seed) {
    Corpus c;
    c.semigroups = corpus_semigroups(seed);
    for (std::size_t i = 0; i < c.semigroups.size(); ++i) {
      for (auto& U : all_subsemigroups(c.semigroups[i].S)) {
        c.pairs.push_back({i, std::move(U)});
      }
    }
    return c;
  }

}  // namespace zigzag::testing
