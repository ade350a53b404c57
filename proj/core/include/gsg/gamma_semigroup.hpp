#ifndef GSG_GAMMA_SEMIGROUP_HPP_
#define GSG_GAMMA_SEMIGROUP_HPP_

#include <cstddef>      // for size_t
#include <cstdint>      // for uint32_t
#include <functional>   // for less
#include <map>          // for map
#include <optional>     // for optional
#include <span>         // for span
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "error.hpp"  // for SourceLocation

namespace gsg {

  using ElementIndex = std::size_t;
  using GammaIndex   = std::size_t;

  //! One `x g y = z` line of a table, still in identifier form.
  struct TableEntry {
    std::string                   left;
    std::string                   gamma;
    std::string                   right;
    std::string                   result;
    std::optional<SourceLocation> where = std::nullopt;
  };

  //! A table as read from input: identifiers and an unchecked entry list.
  struct RawTable {
    std::string                   name;
    std::vector<std::string>      elements;
    std::vector<std::string>      gammas;
    std::vector<TableEntry>       entries;
    std::optional<SourceLocation> where = std::nullopt;
  };

  //! A finite Γ-semigroup given by its total operation table
  //! (a, γ, b) -> aγb.
  //!
  //! Elements and gammas are addressed by their position in the declared
  //! lists. Construction checks totality and ranges only; associativity is
  //! a separate check (see check_associativity).
  class GammaSemigroup {
   public:
    //! \p table is indexed `(a * gamma_count + g) * size + b`.
    GammaSemigroup(std::string                name,
                   std::vector<std::string>   elements,
                   std::vector<std::string>   gammas,
                   std::vector<std::uint32_t> table);

    //! Build a table from a function of indices; handy for families such as
    //! x γ_j y = (x + y + j) mod n.
    template <typename Op>
    static GammaSemigroup from_function(std::string              name,
                                        std::vector<std::string> elements,
                                        std::vector<std::string> gammas,
                                        Op&&                     op) {
      std::size_t const          n = elements.size();
      std::size_t const          g = gammas.size();
      std::vector<std::uint32_t> table(n * g * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t k = 0; k < g; ++k) {
          for (std::size_t b = 0; b < n; ++b) {
            table[(a * g + k) * n + b]
                = static_cast<std::uint32_t>(op(a, k, b));
          }
        }
      }
      return GammaSemigroup(std::move(name),
                            std::move(elements),
                            std::move(gammas),
                            std::move(table));
    }

    std::string const& name() const noexcept {
      return _name;
    }

    std::size_t size() const noexcept {
      return _elements.size();
    }

    std::size_t gamma_count() const noexcept {
      return _gammas.size();
    }

    std::vector<std::string> const& elements() const noexcept {
      return _elements;
    }

    std::vector<std::string> const& gammas() const noexcept {
      return _gammas;
    }

    std::string const& element_name(ElementIndex a) const {
      return _elements.at(a);
    }

    std::string const& gamma_name(GammaIndex g) const {
      return _gammas.at(g);
    }

    std::optional<ElementIndex> find_element(std::string_view id) const;
    std::optional<GammaIndex>   find_gamma(std::string_view id) const;

    //! Throws UnknownIdentifier.
    ElementIndex element_index(std::string_view id) const;
    //! Throws UnknownIdentifier.
    GammaIndex gamma_index(std::string_view id) const;

    ElementIndex product(ElementIndex a, GammaIndex g, ElementIndex b) const
        noexcept {
      return _table[(a * _gammas.size() + g) * _elements.size() + b];
    }

    std::span<std::uint32_t const> table() const noexcept {
      return _table;
    }

    //! A copy carrying a different name.
    GammaSemigroup renamed(std::string name) const;

    friend bool operator==(GammaSemigroup const& x, GammaSemigroup const& y) {
      return x._name == y._name && x._elements == y._elements
             && x._gammas == y._gammas && x._table == y._table;
    }

   private:
    std::string                                          _name;
    std::vector<std::string>                             _elements;
    std::vector<std::string>                             _gammas;
    std::vector<std::uint32_t>                           _table;
    std::map<std::string, ElementIndex, std::less<>>     _element_lookup;
    std::map<std::string, GammaIndex, std::less<>>       _gamma_lookup;
  };

  //! Totality check over identifier input. Throws DuplicateIdentifier,
  //! UnknownIdentifier, DuplicateEntry (same triple, different results) and
  //! MissingEntry (first undefined triple in index order).
  GammaSemigroup validate_table(RawTable const& raw);

  //! A violation of (aγb)μc = aγ(bμc).
  struct AssociativityWitness {
    ElementIndex a;
    GammaIndex   gamma;
    ElementIndex b;
    GammaIndex   mu;
    ElementIndex c;
    ElementIndex left_bracketed;   // (aγb)μc
    ElementIndex right_bracketed;  // aγ(bμc)

    friend bool operator==(AssociativityWitness const&,
                           AssociativityWitness const&)
        = default;
  };

  //! Exhaustive scan in lexicographic order of (a, γ, b, μ, c); returns the
  //! first violation, or nothing if the law holds.
  std::optional<AssociativityWitness> check_associativity(
      GammaSemigroup const& s);

  //! Throws NotAssociative carrying the first witness.
  void require_associative(GammaSemigroup const& s);

  //! True iff AΓA ⊆ A. Throws InvalidArgument for an empty or out-of-range
  //! subset.
  bool is_subsemigroup(GammaSemigroup const& s,
                       std::span<ElementIndex const> subset);
  //! Throws UnknownIdentifier for names not in \p s.
  bool is_subsemigroup(GammaSemigroup const& s,
                       std::span<std::string const> subset);

  std::string describe(GammaSemigroup const&       s,
                       AssociativityWitness const& w);

}  // namespace gsg

#endif  // GSG_GAMMA_SEMIGROUP_HPP_
