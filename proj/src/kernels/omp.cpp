#include <omp.h>

#include <algorithm>
#include <atomic>
#include <limits>

#include "zigzag/kernels.hpp"

namespace zigzag::kernels {

  void decode_assignment(std::uint64_t            index,
                         std::size_t              n,
                         std::span<element_index> out) noexcept {
    for (std::size_t v = out.size(); v-- > 0;) {
      out[v] = static_cast<element_index>(index % n);
      index /= n;
    }
  }

  namespace omp {

    std::optional<Triple> first_nonassociative(TableView t) {
      auto const n    = static_cast<std::int64_t>(t.n);
      auto       best = std::numeric_limits<std::int64_t>::max();
      // Rows of i are scanned independently; the least failing i wins and
      // within a row the scan is in (j, k) order.
#pragma omp parallel for schedule(dynamic, 1) reduction(min : best)
      for (std::int64_t i = 0; i < n; ++i) {
        if (i > best / (n * n)) {
          continue;
        }
        for (std::int64_t j = 0; j < n; ++j) {
          auto const ij = t(i, j);
          for (std::int64_t k = 0; k < n; ++k) {
            if (t(ij, k) != t(i, t(j, k))) {
              best = std::min(best, (i * n + j) * n + k);
              j    = n;
              break;
            }
          }
        }
      }
      if (best == std::numeric_limits<std::int64_t>::max()) {
        return std::nullopt;
      }
      return Triple{static_cast<element_index>(best / (n * n)),
                    static_cast<element_index>((best / n) % n),
                    static_cast<element_index>(best % n)};
    }

    bool generators_associate(TableView t, std::span<element_index const> gens) {
      auto const       n  = static_cast<std::int64_t>(t.n);
      std::atomic<bool> ok = true;
#pragma omp parallel for schedule(static)
      for (std::int64_t x = 0; x < n; ++x) {
        if (!ok.load(std::memory_order_relaxed)) {
          continue;
        }
        for (auto g : gens) {
          auto const xg = t(x, g);
          for (std::int64_t y = 0; y < n; ++y) {
            if (t(xg, y) != t(x, t(g, y))) {
              ok.store(false, std::memory_order_relaxed);
              break;
            }
          }
        }
      }
      return ok.load();
    }

    namespace {
      std::uint32_t find(std::vector<std::atomic<std::uint32_t>>& parent,
                         std::uint32_t                            x) {
        while (true) {
          auto p = parent[x].load(std::memory_order_relaxed);
          if (p == x) {
            return x;
          }
          auto gp = parent[p].load(std::memory_order_relaxed);
          if (gp != p) {
            // Path halving; losing the race only skips a shortcut.
            parent[x].compare_exchange_weak(p, gp, std::memory_order_relaxed);
          }
          x = gp;
        }
      }

      // Roots are only ever linked below smaller roots, so the root of a
      // component is always its least vertex.
      void unite(std::vector<std::atomic<std::uint32_t>>& parent,
                 std::uint32_t                            a,
                 std::uint32_t                            b) {
        while (true) {
          a = find(parent, a);
          b = find(parent, b);
          if (a == b) {
            return;
          }
          if (a > b) {
            std::swap(a, b);
          }
          auto expected = b;
          if (parent[b].compare_exchange_strong(
                  expected, a, std::memory_order_acq_rel)) {
            return;
          }
        }
      }
    }  // namespace

    std::vector<std::uint32_t> pair_components(TableView                      s1,
                                               std::span<element_index const> u) {
      auto const n = static_cast<std::int64_t>(s1.n);
      auto const vertices
          = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
      std::vector<std::atomic<std::uint32_t>> parent(vertices);
#pragma omp parallel for schedule(static)
      for (std::int64_t v = 0; v < static_cast<std::int64_t>(vertices); ++v) {
        parent[v].store(static_cast<std::uint32_t>(v), std::memory_order_relaxed);
      }
      auto const uc   = static_cast<std::int64_t>(u.size());
      auto const pairs = uc * n;
#pragma omp parallel for schedule(dynamic, 16)
      for (std::int64_t ux = 0; ux < pairs; ++ux) {
        auto const uu = u[ux / n];
        auto const x  = static_cast<element_index>(ux % n);
        auto const xu = s1(x, uu);
        for (std::int64_t y = 0; y < n; ++y) {
          auto const a = static_cast<std::uint32_t>(xu * n + y);
          auto const b = static_cast<std::uint32_t>(
              x * n + s1(uu, static_cast<element_index>(y)));
          if (a != b) {
            unite(parent, a, b);
          }
        }
      }
      std::vector<std::uint32_t> label(vertices);
#pragma omp parallel for schedule(static)
      for (std::int64_t v = 0; v < static_cast<std::int64_t>(vertices); ++v) {
        label[v] = find(parent, static_cast<std::uint32_t>(v));
      }
      return label;
    }

    BitRows principal_ideals(TableView t, std::span<element_index const> reps) {
      auto const n = t.n;
      // S^1 y for every y, as bit rows.
      BitRows left(n, n);
#pragma omp parallel for schedule(static)
      for (std::int64_t y = 0; y < static_cast<std::int64_t>(n); ++y) {
        left.set(y, y);
        for (std::size_t s = 0; s < n; ++s) {
          left.set(y, t(s, y));
        }
      }
      BitRows out(reps.size(), n);
#pragma omp parallel for schedule(dynamic, 1)
      for (std::int64_t r = 0; r < static_cast<std::int64_t>(reps.size()); ++r) {
        auto const           x = reps[r];
        std::vector<char>    seen(n, 0);
        std::uint64_t*       dst = out.row(r);
        auto                 absorb = [&](element_index y) {
          if (seen[y]) {
            return;
          }
          seen[y]                 = 1;
          std::uint64_t const* src = left.row(y);
          for (std::size_t w = 0; w < out.words; ++w) {
            dst[w] |= src[w];
          }
        };
        absorb(x);
        for (std::size_t s = 0; s < n; ++s) {
          absorb(t(x, s));
        }
      }
      return out;
    }

    std::optional<std::uint64_t>
    first_failing_assignment(std::size_t                n,
                             std::size_t                arity,
                             AssignmentPredicate const& holds) {
      std::uint64_t total = 1;
      for (std::size_t v = 0; v < arity; ++v) {
        total *= n;
      }
      auto const none = std::numeric_limits<std::int64_t>::max();
      std::atomic<std::int64_t> best = none;
      auto const chunk = std::int64_t{4096};
      auto const chunks
          = (static_cast<std::int64_t>(total) + chunk - 1) / chunk;
#pragma omp parallel
      {
        std::vector<element_index> assignment(arity);
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t c = 0; c < chunks; ++c) {
          auto const first = c * chunk;
          if (first >= best.load(std::memory_order_relaxed)) {
            continue;
          }
          auto const last
              = std::min(first + chunk, static_cast<std::int64_t>(total));
          for (auto k = first; k < last; ++k) {
            decode_assignment(static_cast<std::uint64_t>(k), n, assignment);
            if (!holds(assignment)) {
              auto cur = best.load(std::memory_order_relaxed);
              while (k < cur && !best.compare_exchange_weak(cur, k)) {
              }
              break;
            }
          }
        }
      }
      if (best.load() == none) {
        return std::nullopt;
      }
      return static_cast<std::uint64_t>(best.load());
    }

    std::vector<element_index>
    product_table(std::span<element_index const>               right_cayley,
                  std::size_t                                  letters,
                  std::vector<std::vector<std::size_t>> const& words) {
      auto const                 n = words.size();
      std::vector<element_index> table(n * n);
#pragma omp parallel for schedule(static)
      for (std::int64_t x = 0; x < static_cast<std::int64_t>(n); ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          auto z = static_cast<element_index>(x);
          for (auto a : words[y]) {
            z = right_cayley[static_cast<std::size_t>(z) * letters + a];
          }
          table[static_cast<std::size_t>(x) * n + y] = z;
        }
      }
      return table;
    }

  }  // namespace omp
}  // namespace zigzag::kernels
