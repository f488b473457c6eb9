#include <algorithm>
#include <limits>
#include <numeric>
#include <string_view>
#include <unordered_map>

#include "zigzag/kernels.hpp"

namespace zigzag::kernels::serial {

  std::optional<Triple> first_nonassociative(TableView t) {
    auto const n = static_cast<element_index>(t.n);
    for (element_index i = 0; i < n; ++i) {
      for (element_index j = 0; j < n; ++j) {
        for (element_index k = 0; k < n; ++k) {
          if (t(t(i, j), k) != t(i, t(j, k))) {
            return Triple{i, j, k};
          }
        }
      }
    }
    return std::nullopt;
  }

  std::vector<std::uint32_t> pair_components(TableView                      s1,
                                             std::span<element_index const> u) {
    auto const                 n        = s1.n;
    auto const                 vertices = n * n;
    std::vector<std::uint32_t> parent(vertices);
    std::vector<std::uint32_t> rank(vertices, 0);
    std::iota(parent.begin(), parent.end(), 0U);

    auto find = [&](std::uint32_t x) {
      auto root = x;
      while (parent[root] != root) {
        root = parent[root];
      }
      while (parent[x] != root) {
        auto next = parent[x];
        parent[x] = root;
        x         = next;
      }
      return root;
    };

    for (auto uu : u) {
      for (element_index x = 0; x < n; ++x) {
        auto const xu = s1(x, uu);
        for (element_index y = 0; y < n; ++y) {
          auto a = find(static_cast<std::uint32_t>(xu * n + y));
          auto b = find(static_cast<std::uint32_t>(x * n + s1(uu, y)));
          if (a == b) {
            continue;
          }
          if (rank[a] < rank[b]) {
            std::swap(a, b);
          }
          parent[b] = a;
          if (rank[a] == rank[b]) {
            ++rank[a];
          }
        }
      }
    }

    std::vector<std::uint32_t> least(vertices,
                                     std::numeric_limits<std::uint32_t>::max());
    for (std::uint32_t v = 0; v < vertices; ++v) {
      auto& l = least[find(v)];
      l       = std::min(l, v);
    }
    std::vector<std::uint32_t> label(vertices);
    for (std::uint32_t v = 0; v < vertices; ++v) {
      label[v] = least[find(v)];
    }
    return label;
  }

  BitRows principal_ideals(TableView t, std::span<element_index const> reps) {
    auto const n = static_cast<element_index>(t.n);
    BitRows    out(reps.size(), n);
    // s ranges over S^1, encoded as n for the identity.
    for (std::size_t r = 0; r < reps.size(); ++r) {
      auto const x = reps[r];
      for (element_index s = 0; s <= n; ++s) {
        auto const sx = s == n ? x : t(s, x);
        for (element_index u = 0; u <= n; ++u) {
          out.set(r, u == n ? sx : t(sx, u));
        }
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
    std::vector<element_index> assignment(arity, 0);
    for (std::uint64_t index = 0; index < total; ++index) {
      decode_assignment(index, n, assignment);
      if (!holds(assignment)) {
        return index;
      }
    }
    return std::nullopt;
  }

  std::vector<element_index>
  product_table(std::span<element_index const> images, std::size_t degree) {
    auto const n = images.size() / degree;
    auto key     = [&](element_index const* p) {
      return std::string_view(reinterpret_cast<char const*>(p),
                              degree * sizeof(element_index));
    };
    std::unordered_map<std::string_view, element_index> index;
    for (std::size_t x = 0; x < n; ++x) {
      index.emplace(key(images.data() + x * degree),
                    static_cast<element_index>(x));
    }
    auto const                 undefined = std::numeric_limits<element_index>::max();
    std::vector<element_index> composite(degree);
    std::vector<element_index> table(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t q = 0; q < degree; ++q) {
          auto const mid = images[x * degree + q];
          composite[q]   = mid == undefined ? undefined : images[y * degree + mid];
        }
        table[x * n + y] = index.at(key(composite.data()));
      }
    }
    return table;
  }

}  // namespace zigzag::kernels::serial
