#include "gsg/gamma_semigroup.hpp"

#include <algorithm>  // for sort
#include <limits>     // for numeric_limits
#include <set>        // for set

namespace gsg {

  namespace {
    template <typename Index>
    std::map<std::string, Index, std::less<>> make_lookup(
        std::vector<std::string> const& ids,
        std::string_view                what) {
      std::map<std::string, Index, std::less<>> lookup;
      for (Index i = 0; i < ids.size(); ++i) {
        if (ids[i].empty()) {
          throw Error(ErrorKind::invalid_argument,
                      "empty " + std::string(what) + " identifier");
        }
        if (!lookup.emplace(ids[i], i).second) {
          throw Error(ErrorKind::duplicate_identifier,
                      std::string(what) + " '" + ids[i]
                          + "' is declared twice");
        }
      }
      return lookup;
    }

    template <typename Map>
    auto lookup(Map const& m, std::string_view id)
        -> std::optional<typename Map::mapped_type> {
      auto it = m.find(id);
      if (it == m.end()) {
        return std::nullopt;
      }
      return it->second;
    }
  }  // namespace

  GammaSemigroup::GammaSemigroup(std::string                name,
                                 std::vector<std::string>   elements,
                                 std::vector<std::string>   gammas,
                                 std::vector<std::uint32_t> table)
      : _name(std::move(name)),
        _elements(std::move(elements)),
        _gammas(std::move(gammas)),
        _table(std::move(table)),
        _element_lookup(make_lookup<ElementIndex>(_elements, "element")),
        _gamma_lookup(make_lookup<GammaIndex>(_gammas, "gamma")) {
    if (_elements.empty() || _gammas.empty()) {
      throw Error(ErrorKind::invalid_argument,
                  "Γ-semigroup '" + _name
                      + "' needs at least one element and one gamma");
    }
    if (_elements.size() > std::numeric_limits<std::uint32_t>::max()) {
      throw Error(ErrorKind::invalid_argument, "too many elements");
    }
    std::size_t const n = _elements.size();
    if (_table.size() != n * _gammas.size() * n) {
      throw Error(ErrorKind::invalid_argument,
                  "table of '" + _name + "' has " + std::to_string(_table.size())
                      + " cells, expected "
                      + std::to_string(n * _gammas.size() * n));
    }
    for (auto v : _table) {
      if (v >= n) {
        throw Error(ErrorKind::invalid_argument,
                    "table of '" + _name + "' has an out-of-range value");
      }
    }
  }

  std::optional<ElementIndex>
  GammaSemigroup::find_element(std::string_view id) const {
    return lookup(_element_lookup, id);
  }

  std::optional<GammaIndex>
  GammaSemigroup::find_gamma(std::string_view id) const {
    return lookup(_gamma_lookup, id);
  }

  ElementIndex GammaSemigroup::element_index(std::string_view id) const {
    if (auto i = find_element(id)) {
      return *i;
    }
    throw Error(ErrorKind::unknown_identifier,
                "'" + std::string(id) + "' is not an element of '" + _name
                    + "'");
  }

  GammaIndex GammaSemigroup::gamma_index(std::string_view id) const {
    if (auto i = find_gamma(id)) {
      return *i;
    }
    throw Error(ErrorKind::unknown_identifier,
                "'" + std::string(id) + "' is not a gamma of '" + _name + "'");
  }

  GammaSemigroup GammaSemigroup::renamed(std::string name) const {
    GammaSemigroup copy(*this);
    copy._name = std::move(name);
    return copy;
  }

  GammaSemigroup validate_table(RawTable const& raw) {
    auto const elems = make_lookup<ElementIndex>(raw.elements, "element");
    auto const gams  = make_lookup<GammaIndex>(raw.gammas, "gamma");
    if (raw.elements.empty() || raw.gammas.empty()) {
      throw Error(ErrorKind::invalid_argument,
                  "Γ-semigroup '" + raw.name
                      + "' needs at least one element and one gamma",
                  raw.where);
    }

    std::size_t const          n = raw.elements.size();
    std::size_t const          g = raw.gammas.size();
    constexpr auto             undefined = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> table(n * g * n, undefined);

    auto resolve = [&](auto const& m, std::string const& id, char const* what,
                       TableEntry const& e) {
      auto it = m.find(id);
      if (it == m.end()) {
        throw Error(ErrorKind::unknown_identifier,
                    "'" + id + "' is not a declared " + what + " of '"
                        + raw.name + "'",
                    e.where);
      }
      return it->second;
    };

    for (auto const& e : raw.entries) {
      auto a = resolve(elems, e.left, "element", e);
      auto k = resolve(gams, e.gamma, "gamma", e);
      auto b = resolve(elems, e.right, "element", e);
      auto z = resolve(elems, e.result, "element", e);
      auto& cell = table[(a * g + k) * n + b];
      if (cell != undefined && cell != z) {
        throw Error(ErrorKind::duplicate_entry,
                    "'" + e.left + " " + e.gamma + " " + e.right
                        + "' is defined as both '" + raw.elements[cell]
                        + "' and '" + e.result + "'",
                    e.where);
      }
      cell = static_cast<std::uint32_t>(z);
    }

    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t k = 0; k < g; ++k) {
        for (std::size_t b = 0; b < n; ++b) {
          if (table[(a * g + k) * n + b] == undefined) {
            throw Error(ErrorKind::missing_entry,
                        "no entry for '" + raw.elements[a] + " "
                            + raw.gammas[k] + " " + raw.elements[b]
                            + "' in '" + raw.name + "'",
                        raw.where);
          }
        }
      }
    }
    return GammaSemigroup(raw.name, raw.elements, raw.gammas, std::move(table));
  }

  std::optional<AssociativityWitness>
  check_associativity(GammaSemigroup const& s) {
    std::size_t const n = s.size();
    std::size_t const g = s.gamma_count();
    for (ElementIndex a = 0; a < n; ++a) {
      for (GammaIndex gamma = 0; gamma < g; ++gamma) {
        for (ElementIndex b = 0; b < n; ++b) {
          ElementIndex const ab = s.product(a, gamma, b);
          for (GammaIndex mu = 0; mu < g; ++mu) {
            for (ElementIndex c = 0; c < n; ++c) {
              ElementIndex const lhs = s.product(ab, mu, c);
              ElementIndex const rhs = s.product(a, gamma, s.product(b, mu, c));
              if (lhs != rhs) {
                return AssociativityWitness{a, gamma, b, mu, c, lhs, rhs};
              }
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  void require_associative(GammaSemigroup const& s) {
    if (auto w = check_associativity(s)) {
      throw Error(ErrorKind::not_associative, describe(s, *w));
    }
  }

  bool is_subsemigroup(GammaSemigroup const&         s,
                       std::span<ElementIndex const> subset) {
    if (subset.empty()) {
      throw Error(ErrorKind::invalid_argument, "subset must be nonempty");
    }
    std::vector<bool> member(s.size(), false);
    for (auto a : subset) {
      if (a >= s.size()) {
        throw Error(ErrorKind::invalid_argument,
                    "element index " + std::to_string(a) + " out of range");
      }
      member[a] = true;
    }
    for (auto a : subset) {
      for (auto b : subset) {
        for (GammaIndex k = 0; k < s.gamma_count(); ++k) {
          if (!member[s.product(a, k, b)]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool is_subsemigroup(GammaSemigroup const&        s,
                       std::span<std::string const> subset) {
    std::vector<ElementIndex> indices;
    indices.reserve(subset.size());
    for (auto const& id : subset) {
      indices.push_back(s.element_index(id));
    }
    return is_subsemigroup(s, std::span<ElementIndex const>(indices));
  }

  std::string describe(GammaSemigroup const&       s,
                       AssociativityWitness const& w) {
    auto const& e = s.elements();
    auto const& k = s.gammas();
    return "(" + e[w.a] + " " + k[w.gamma] + " " + e[w.b] + ") " + k[w.mu]
           + " " + e[w.c] + " = " + e[w.left_bracketed] + " but " + e[w.a]
           + " " + k[w.gamma] + " (" + e[w.b] + " " + k[w.mu] + " " + e[w.c]
           + ") = " + e[w.right_bracketed];
  }

}  // namespace gsg
