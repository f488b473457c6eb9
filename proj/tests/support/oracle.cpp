#include "oracle.hpp"

#include <vector>

namespace zigzag::testing {

  bool oracle_dominated(FiniteSemigroup const& S, Subset const& U, element_index d) {
    if (U.contains(d)) {
      return true;
    }
    std::size_t const n = S.order();
    auto key = [n, &U](element_index x, std::size_t vi, element_index y) {
      return (static_cast<std::size_t>(x) * U.size() + vi) * n + y;
    };
    std::vector<char>        seen(n * U.size() * n, 0);
    std::vector<std::size_t> layer;  // encoded (x, index of v in U, y)

    // First layer: d = x1 u1 and u1 = v1 y1.
    for (element_index x = 0; x < n; ++x) {
      for (element_index u : U) {
        if (S.product(x, u) != d) {
          continue;
        }
        for (std::size_t vi = 0; vi < U.size(); ++vi) {
          for (element_index y = 0; y < n; ++y) {
            if (S.product(U[vi], y) == u && !seen[key(x, vi, y)]) {
              seen[key(x, vi, y)] = 1;
              layer.push_back(key(x, vi, y));
            }
          }
        }
      }
    }

    std::size_t const max_m = n * n + 1;
    for (std::size_t m = 2; m <= max_m && !layer.empty(); ++m) {
      std::vector<std::size_t> next;
      for (std::size_t code : layer) {
        element_index y_prev = static_cast<element_index>(code % n);
        std::size_t   vi_prev = code / n % U.size();
        element_index x_prev = static_cast<element_index>(code / n / U.size());
        element_index left   = S.product(x_prev, U[vi_prev]);
        // Closing with um = x(m-1) v(m-1).
        if (U.contains(left) && S.product(left, y_prev) == d) {
          return true;
        }
        if (m == max_m) {
          continue;
        }
        for (element_index u : U) {
          element_index right = S.product(u, y_prev);
          for (element_index x = 0; x < n; ++x) {
            if (S.product(x, u) != left) {
              continue;
            }
            for (std::size_t vi = 0; vi < U.size(); ++vi) {
              for (element_index y = 0; y < n; ++y) {
                if (S.product(U[vi], y) == right && !seen[key(x, vi, y)]) {
                  seen[key(x, vi, y)] = 1;
                  next.push_back(key(x, vi, y));
                }
              }
            }
          }
        }
      }
      layer = std::move(next);
    }
    return false;
  }

  Subset oracle_dominion(FiniteSemigroup const& S, Subset const& U) {
    std::vector<element_index> members;
    for (element_index d = 0; d < S.order(); ++d) {
      if (oracle_dominated(S, U, d)) {
        members.push_back(d);
      }
    }
    return Subset(S.order(), std::move(members));
  }

}  // namespace zigzag::testing
