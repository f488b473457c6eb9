#include <catch_amalgamated.hpp>

#include <random>

#include "corpus.hpp"
#include "zigzag/catalog.hpp"
#include "zigzag/kernels.hpp"
#include "zigzag/transformation.hpp"

using namespace zigzag;

namespace {
  kernels::TableView view(FiniteSemigroup const& S) {
    return {S.table().data(), S.order()};
  }

  bool same_rows(kernels::BitRows const& a, kernels::BitRows const& b) {
    return a.bits == b.bits && a.words == b.words && a.data == b.data;
  }
}  // namespace

TEST_CASE("OpenMP and serial kernels agree on the corpus") {
  for (auto const& [name, S] : testing::corpus_semigroups()) {
    INFO(name);
    auto S1 = adjoin_identity(S);
    for (auto const& U : testing::all_subsemigroups(S)) {
      CHECK(kernels::omp::pair_components(view(S1), U.members())
            == kernels::serial::pair_components(view(S1), U.members()));
    }
    std::vector<element_index> reps(S.order());
    for (element_index i = 0; i < S.order(); ++i) {
      reps[i] = i;
    }
    CHECK(same_rows(kernels::omp::principal_ideals(view(S), reps),
                    kernels::serial::principal_ideals(view(S), reps)));
    CHECK(kernels::omp::first_nonassociative(view(S)) == std::nullopt);
    CHECK(kernels::omp::generators_associate(view(S), S.generators()));
  }
}

TEST_CASE("non-associativity is located identically") {
  std::mt19937 rng(0);
  std::uniform_int_distribution<element_index> pick(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<element_index> t(16);
    for (auto& x : t) {
      x = pick(rng);
    }
    kernels::TableView v{t.data(), 4};
    CHECK(kernels::omp::first_nonassociative(v) == kernels::serial::first_nonassociative(v));
  }
}

TEST_CASE("first failing assignment agrees") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t arity = 1; arity <= 3; ++arity) {
      for (std::uint64_t target : {std::uint64_t{0}, std::uint64_t{7}, std::uint64_t{1000}}) {
        auto pred = [&](std::span<element_index const> a) {
          std::uint64_t code = 0;
          for (auto x : a) {
            code = code * n + x;
          }
          return code < target;
        };
        CHECK(kernels::omp::first_failing_assignment(n, arity, pred)
              == kernels::serial::first_failing_assignment(n, arity, pred));
      }
    }
  }
  std::vector<element_index> out(3);
  kernels::decode_assignment(1 * 16 + 2 * 4 + 3, 4, out);
  CHECK(out == std::vector<element_index>{1, 2, 3});
}

TEST_CASE("product tables agree for transition semigroups") {
  auto T = transition_semigroup(catalog::fig2_base());
  std::vector<element_index> images;
  for (auto const& f : T.elements) {
    images.insert(images.end(), f.images().begin(), f.images().end());
  }
  auto serial = kernels::serial::product_table(images, 4);
  auto omp    = kernels::omp::product_table(T.right_cayley, T.generator_count, T.words);
  CHECK(serial == omp);
  CHECK(std::vector<element_index>(T.semigroup.table().begin(), T.semigroup.table().end())
        == serial);
}
