#include "zigzag/catalog.hpp"

namespace zigzag::catalog {

  FiniteSemigroup b2() {
    return make_semigroup({{4, 2, 4, 0, 4},
                           {3, 4, 1, 4, 4},
                           {0, 4, 2, 4, 4},
                           {4, 1, 4, 3, 4},
                           {4, 4, 4, 4, 4}},
                          {"a", "b", "ab", "ba", "0"});
  }

  Subset y_in_b2() {
    return Subset(5, {0, 2, 3, 4});
  }

  std::vector<element_index> y_to_b2() {
    return {0, 2, 3, 4};
  }

  FiniteSemigroup y() {
    return induced_subsemigroup(b2(), y_in_b2()).semigroup;
  }

  FiniteSemigroup trivial() {
    return make_semigroup({{0}});
  }

  FiniteSemigroup cyclic_group(std::size_t n) {
    std::vector<std::vector<element_index>> rows(n, std::vector<element_index>(n));
    std::vector<std::string>                labels;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        rows[i][j] = static_cast<element_index>((i + j) % n);
      }
      labels.push_back(i == 0 ? "1" : i == 1 ? "g" : "g^" + std::to_string(i));
    }
    return make_semigroup(rows, labels);
  }

  FiniteSemigroup c3() {
    return cyclic_group(3);
  }

  FiniteSemigroup right_zero(std::size_t n) {
    std::vector<std::vector<element_index>> rows(n, std::vector<element_index>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        rows[i][j] = static_cast<element_index>(j);
      }
    }
    return make_semigroup(rows);
  }

  Semiautomaton fig2_base() {
    return make_semiautomaton(4, {"a", "b", "c"},
                              {PartialTransformation({1, 2, 3, 0}),
                               PartialTransformation({1, 0, 2, 3}),
                               PartialTransformation({1, 1, 2, 3})});
  }

  Semiautomaton q3a3() {
    return make_semiautomaton(3, {"a", "b", "c"},
                              {PartialTransformation({1, 2, 0}),
                               PartialTransformation({0, 1, 2}),
                               PartialTransformation({0, 1, 2})});
  }

  ReesMatrixSpec rees49_spec() {
    ReesMatrixSpec s;
    s.I      = 4;
    s.Lambda = 4;
    s.group  = c3();
    std::optional<element_index> const o, e = 0, g = 1;
    s.P = {{e, e, e, e}, {o, g, o, o}, {o, o, e, o}, {o, o, o, e}};
    return s;
  }

  ReesMatrixSpec b2_rees_spec() {
    ReesMatrixSpec s;
    s.I      = 2;
    s.Lambda = 2;
    s.group  = trivial();
    std::optional<element_index> const o, e = 0;
    s.P = {{e, o}, {o, e}};
    return s;
  }

  ReesMatrixSpec zero_group_spec() {
    ReesMatrixSpec s;
    s.I      = 1;
    s.Lambda = 1;
    s.group  = trivial();
    s.P      = {{element_index{0}}};
    return s;
  }

  std::vector<element_index> b2_to_rees() {
    // Rees indices: (i, g, l) -> i * 2 + l, zero 4.
    // a=(1,1,2)=1, b=(2,1,1)=2, ab=(1,1,1)=0, ba=(2,1,2)=3.
    return {1, 2, 0, 3, 4};
  }

}  // namespace zigzag::catalog
