#pragma once

// Hot loops over multiplication tables. Every kernel exists twice with the
// same contract: an OpenMP implementation used by the library and a plain
// serial implementation kept as a reference for tests and benchmarks. Both
// return bit-identical results.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "zigzag/error.hpp"

namespace zigzag::kernels {

  // Row-major n*n multiplication table.
  struct TableView {
    element_index const* data;
    std::size_t          n;

    element_index operator()(element_index x, element_index y) const noexcept {
      return data[static_cast<std::size_t>(x) * n + y];
    }
  };

  // Fixed-width bit rows: row r occupies words [r * words, (r + 1) * words).
  struct BitRows {
    std::size_t                bits  = 0;
    std::size_t                words = 0;
    std::vector<std::uint64_t> data;

    BitRows() = default;
    BitRows(std::size_t rows, std::size_t bits_per_row)
        : bits(bits_per_row),
          words((bits_per_row + 63) / 64),
          data(rows * ((bits_per_row + 63) / 64), 0) {}

    bool test(std::size_t r, std::size_t b) const noexcept {
      return (data[r * words + b / 64] >> (b % 64)) & 1U;
    }

    void set(std::size_t r, std::size_t b) noexcept {
      data[r * words + b / 64] |= std::uint64_t(1) << (b % 64);
    }

    std::uint64_t* row(std::size_t r) noexcept {
      return data.data() + r * words;
    }

    std::uint64_t const* row(std::size_t r) const noexcept {
      return data.data() + r * words;
    }
  };

  // Called with one assignment (one element per variable); returns whether
  // the checked property holds. Must be safe to call concurrently.
  using AssignmentPredicate
      = std::function<bool(std::span<element_index const>)>;

  namespace omp {
    // Lexicographically first (i, j, k) with (ij)k != i(jk).
    std::optional<Triple> first_nonassociative(TableView t);

    // Light's test: (xg)y == x(gy) for every generator g and all x, y. Sound
    // and complete when gens generate the table under multiplication.
    bool generators_associate(TableView t, std::span<element_index const> gens);

    // Connected components of the graph on pairs (p, q) of S^1 x S^1 with an
    // edge (xu, y) -- (x, uy) for all x, y in S^1 and u in U. The table must
    // be that of S^1. Vertex (p, q) has index p * n + q; the label of a vertex
    // is the least vertex index in its component.
    std::vector<std::uint32_t> pair_components(TableView                      s1,
                                               std::span<element_index const> u);

    // For each representative x, the bit row of the two-sided ideal S^1 x S^1.
    BitRows principal_ideals(TableView t, std::span<element_index const> reps);

    // Index (variable 0 most significant, odometer order) of the first of the
    // n^arity assignments on which holds() is false.
    std::optional<std::uint64_t>
    first_failing_assignment(std::size_t                n,
                             std::size_t                arity,
                             AssignmentPredicate const& holds);

    // Products of a transformation semigroup: entry (x, y) is obtained by
    // following the word of y from x in the right Cayley graph
    // right_cayley[x * letters + a].
    std::vector<element_index>
    product_table(std::span<element_index const>          right_cayley,
                  std::size_t                             letters,
                  std::vector<std::vector<std::size_t>> const& words);
  }  // namespace omp

  namespace serial {
    std::optional<Triple> first_nonassociative(TableView t);

    std::vector<std::uint32_t> pair_components(TableView                      s1,
                                               std::span<element_index const> u);

    BitRows principal_ideals(TableView t, std::span<element_index const> reps);

    std::optional<std::uint64_t>
    first_failing_assignment(std::size_t                n,
                             std::size_t                arity,
                             AssignmentPredicate const& holds);

    // Entry (x, y) is the index of the composite image x then y, found by
    // composing the stored partial transformations (degree images each,
    // undefined points encoded as the maximum element_index) and looking the
    // result up.
    std::vector<element_index>
    product_table(std::span<element_index const> images, std::size_t degree);
  }  // namespace serial

  // Decodes an odometer index into one element per variable.
  void decode_assignment(std::uint64_t          index,
                         std::size_t            n,
                         std::span<element_index> out) noexcept;

}  // namespace zigzag::kernels
