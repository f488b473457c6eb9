#include "zigzag/transformation.hpp"

#include <algorithm>
#include <set>
#include <string_view>

#include "zigzag/kernels.hpp"

namespace zigzag {

  PartialTransformation::PartialTransformation(std::vector<element_index> images)
      : _images(std::move(images)) {
    if (_images.empty()) {
      throw DegreeMismatch("a transformation must have positive degree");
    }
    for (auto p : _images) {
      if (p != undefined_point && p >= _images.size()) {
        throw IndexError("image " + std::to_string(p)
                         + " is out of range for degree "
                         + std::to_string(_images.size()));
      }
    }
  }

  PartialTransformation PartialTransformation::identity(std::size_t degree) {
    std::vector<element_index> im(degree);
    for (std::size_t q = 0; q < degree; ++q) {
      im[q] = static_cast<element_index>(q);
    }
    return PartialTransformation(std::move(im));
  }

  PartialTransformation PartialTransformation::empty(std::size_t degree) {
    return PartialTransformation(
        std::vector<element_index>(degree, undefined_point));
  }

  bool PartialTransformation::is_total() const noexcept {
    return std::none_of(_images.begin(), _images.end(), [](auto p) {
      return p == undefined_point;
    });
  }

  bool PartialTransformation::is_identity() const noexcept {
    for (std::size_t q = 0; q < _images.size(); ++q) {
      if (_images[q] != q) {
        return false;
      }
    }
    return true;
  }

  bool PartialTransformation::is_empty() const noexcept {
    return std::all_of(_images.begin(), _images.end(), [](auto p) {
      return p == undefined_point;
    });
  }

  bool PartialTransformation::moves_some_point() const noexcept {
    for (std::size_t q = 0; q < _images.size(); ++q) {
      if (_images[q] != undefined_point && _images[q] != q) {
        return true;
      }
    }
    return false;
  }

  PartialTransformation compose(PartialTransformation const& f,
                                PartialTransformation const& g) {
    if (f.degree() != g.degree()) {
      throw DegreeMismatch("cannot compose transformations of degrees "
                           + std::to_string(f.degree()) + " and "
                           + std::to_string(g.degree()));
    }
    std::vector<element_index> im(f.degree());
    for (std::size_t q = 0; q < f.degree(); ++q) {
      im[q] = f.is_defined(q) ? g[f[q]] : undefined_point;
    }
    return PartialTransformation(std::move(im));
  }

  PartialTransformation restrict_to(PartialTransformation const&   f,
                                    std::span<element_index const> domain) {
    std::vector<element_index> im(f.degree(), undefined_point);
    for (auto q : domain) {
      im[q] = f[q];
    }
    return PartialTransformation(std::move(im));
  }

  std::optional<std::size_t> Semiautomaton::find_letter(std::string const& a) const {
    auto it = std::find(alphabet.begin(), alphabet.end(), a);
    if (it == alphabet.end()) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - alphabet.begin());
  }

  Semiautomaton make_semiautomaton(std::size_t                        states,
                                   std::vector<std::string>           alphabet,
                                   std::vector<PartialTransformation> action) {
    if (states == 0) {
      throw ValidationError("a semiautomaton needs at least one state");
    }
    if (alphabet.empty()) {
      throw ValidationError("a semiautomaton needs a nonempty alphabet");
    }
    if (alphabet.size() != action.size()) {
      throw ValidationError("alphabet and action sizes differ");
    }
    if (std::set<std::string>(alphabet.begin(), alphabet.end()).size()
        != alphabet.size()) {
      throw ValidationError("repeated letter in alphabet");
    }
    for (std::size_t a = 0; a < action.size(); ++a) {
      if (action[a].degree() != states) {
        throw DegreeMismatch("letter " + alphabet[a] + " acts with degree "
                             + std::to_string(action[a].degree()) + " on "
                             + std::to_string(states) + " states");
      }
    }
    return Semiautomaton{states, std::move(alphabet), std::move(action)};
  }

  bool is_complete(Semiautomaton const& A) {
    return std::all_of(A.action.begin(), A.action.end(), [](auto const& f) {
      return f.is_total();
    });
  }

  std::size_t
  TransformationHash::operator()(PartialTransformation const& f) const noexcept {
    auto const& im = f.images();
    return std::hash<std::string_view>{}(
        std::string_view(reinterpret_cast<char const*>(im.data()),
                         im.size() * sizeof(element_index)));
  }

  std::optional<element_index>
  TransitionSemigroup::find(PartialTransformation const& f) const {
    auto it = index.find(f);
    if (it == index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  namespace {
    std::vector<std::string>
    spell_words(std::vector<std::vector<std::size_t>> const& words,
                std::vector<std::string> const&              names) {
      for (std::string sep : {"", "."}) {
        std::vector<std::string> labels;
        labels.reserve(words.size());
        for (auto const& w : words) {
          std::string s;
          for (std::size_t i = 0; i < w.size(); ++i) {
            if (i > 0) {
              s += sep;
            }
            s += names[w[i]];
          }
          labels.push_back(std::move(s));
        }
        if (std::set<std::string>(labels.begin(), labels.end()).size()
            == labels.size()) {
          return labels;
        }
      }
      return {};
    }
  }  // namespace

  TransitionSemigroup
  generate_transformation_semigroup(std::span<PartialTransformation const> gens,
                                    std::vector<std::string> letter_names) {
    if (gens.empty()) {
      throw ValidationError("empty generating set");
    }
    auto const degree = gens[0].degree();
    for (auto const& g : gens) {
      if (g.degree() != degree) {
        throw DegreeMismatch("generators of different degrees");
      }
    }
    TransitionSemigroup T;
    auto const          letters = gens.size();
    T.generator_count           = letters;

    auto add = [&](PartialTransformation f, std::vector<std::size_t> word) {
      auto [it, fresh]
          = T.index.emplace(f, static_cast<element_index>(T.elements.size()));
      if (fresh) {
        T.elements.push_back(std::move(f));
        T.words.push_back(std::move(word));
      }
      return it->second;
    };

    for (std::size_t a = 0; a < letters; ++a) {
      add(gens[a], {a});
    }
    for (std::size_t x = 0; x < T.elements.size(); ++x) {
      for (std::size_t a = 0; a < letters; ++a) {
        auto w = T.words[x];
        w.push_back(a);
        auto const y = add(compose(T.elements[x], gens[a]), std::move(w));
        T.right_cayley.push_back(y);
      }
    }

    auto table = kernels::omp::product_table(T.right_cayley, letters, T.words);
    std::vector<std::string> labels;
    if (!letter_names.empty()) {
      labels = spell_words(T.words, letter_names);
    }
    T.semigroup = make_semigroup(T.elements.size(), std::move(table),
                                 std::move(labels));
    return T;
  }

  TransitionSemigroup transition_semigroup(Semiautomaton const& A) {
    return generate_transformation_semigroup(A.action, A.alphabet);
  }

  Semiautomaton cayley_semiautomaton(FiniteSemigroup const& S,
                                     Subset const&          generators) {
    if (generators.empty() || closure(S, generators).size() != S.order()) {
      throw NotGenerating("the given elements do not generate the semigroup");
    }
    auto const                         n = S.order();
    std::vector<std::string>           alphabet;
    std::vector<PartialTransformation> action;
    for (auto g : generators) {
      std::vector<element_index> im(n + 1);
      for (element_index s = 0; s < n; ++s) {
        im[s] = S.product(s, g);
      }
      im[n] = g;
      alphabet.push_back(S.label(g));
      action.emplace_back(std::move(im));
    }
    return make_semiautomaton(n + 1, std::move(alphabet), std::move(action));
  }

  std::vector<element_index> evaluate_words(TransitionSemigroup const& T,
                                            FiniteSemigroup const&     S,
                                            Subset const&              generators) {
    std::vector<element_index> map;
    map.reserve(T.words.size());
    for (auto const& w : T.words) {
      auto z = generators[w.front()];
      for (std::size_t i = 1; i < w.size(); ++i) {
        z = S.product(z, generators[w[i]]);
      }
      map.push_back(z);
    }
    return map;
  }

}  // namespace zigzag
