#ifndef GSG_CONGRUENCE_HPP_
#define GSG_CONGRUENCE_HPP_

#include <cstddef>   // for size_t
#include <memory>    // for shared_ptr
#include <optional>  // for optional
#include <string>    // for string
#include <utility>   // for pair
#include <vector>    // for vector

#include "gamma_semigroup.hpp"
#include "homomorphism.hpp"

namespace gsg {

  //! Union-find with path halving and union by size.
  class DisjointSets {
   public:
    explicit DisjointSets(std::size_t n);

    std::size_t size() const noexcept {
      return _parent.size();
    }

    std::size_t find(std::size_t x) noexcept;

    //! Returns false if \p x and \p y were already in one set.
    bool unite(std::size_t x, std::size_t y) noexcept;

    bool same(std::size_t x, std::size_t y) noexcept {
      return find(x) == find(y);
    }

    //! For every element, the least element of its set.
    std::vector<std::size_t> least_representatives();

   private:
    std::vector<std::size_t> _parent;
    std::vector<std::size_t> _size;
  };

  //! A partition of the carrier of a Γ-semigroup. Every element is mapped
  //! to the least element of its class.
  class Congruence {
   public:
    //! \p representative[x] must be the least member of x's class. The
    //! compatibility law is not checked here; see find_incompatibility.
    Congruence(std::shared_ptr<GammaSemigroup const> subject,
               std::vector<ElementIndex>             representative);

    static Congruence identity(std::shared_ptr<GammaSemigroup const> subject);
    static Congruence universal(std::shared_ptr<GammaSemigroup const> subject);

    GammaSemigroup const& subject() const noexcept {
      return *_subject;
    }

    std::shared_ptr<GammaSemigroup const> const& subject_ptr() const noexcept {
      return _subject;
    }

    ElementIndex representative(ElementIndex x) const {
      return _rep.at(x);
    }

    std::vector<ElementIndex> const& representatives() const noexcept {
      return _rep;
    }

    bool related(ElementIndex x, ElementIndex y) const {
      return _rep.at(x) == _rep.at(y);
    }

    //! Classes in order of their least member, members ascending.
    std::vector<std::vector<ElementIndex>> classes() const;

    std::size_t class_count() const;

    friend bool operator==(Congruence const& x, Congruence const& y) {
      return x._rep == y._rep && *x._subject == *y._subject;
    }

   private:
    std::shared_ptr<GammaSemigroup const> _subject;
    std::vector<ElementIndex>             _rep;
  };

  //! A pair x ρ y and a translation (γ, z) breaking compatibility.
  struct CompatibilityWitness {
    ElementIndex x;
    ElementIndex y;
    GammaIndex   gamma;
    ElementIndex z;
    bool         left;  // z γ x vs z γ y when true, x γ z vs y γ z otherwise
  };

  std::optional<CompatibilityWitness>
  find_incompatibility(Congruence const& rho);

  //! The least congruence containing \p pairs. Throws NotAssociative and
  //! InvalidArgument (index out of range).
  Congruence generate_congruence(
      std::shared_ptr<GammaSemigroup const>                 s,
      std::vector<std::pair<ElementIndex, ElementIndex>> const& pairs);

  //! Name-based overload; throws UnknownIdentifier.
  Congruence generate_congruence(
      std::shared_ptr<GammaSemigroup const>               s,
      std::vector<std::pair<std::string, std::string>> const& pairs);

  struct Quotient {
    GammaSemigroup            semigroup;
    //! ρ#: element of the subject -> element of the quotient.
    std::vector<ElementIndex> projection;
  };

  //! S/ρ with [x] γ [y] = [xγy]; classes are named after their least
  //! member. Throws NotCompatible when representative choices disagree.
  Quotient quotient(Congruence const& rho, std::string name = {});

  //! x ~ y iff f′(x) = f′(y). Throws NotAHomomorphism.
  Congruence kernel_congruence(GammaHomomorphism const& f);

  struct IsoReport {
    bool                      well_defined   = false;
    bool                      homomorphism   = false;
    bool                      injective      = false;
    bool                      commutes       = false;
    std::size_t               quotient_size  = 0;
    std::size_t               image_size     = 0;
    //! ψ: quotient element -> target element.
    std::vector<ElementIndex> psi;

    bool all_pass() const noexcept {
      return well_defined && homomorphism && injective && commutes;
    }
  };

  //! Builds ψ([x]) = f′(x) on S/ker f and checks that ψ is well defined, a
  //! homomorphism onto im f, injective, and that ψ∘ρ# = f′. Throws
  //! NotAHomomorphism.
  IsoReport first_isomorphism_check(GammaHomomorphism const& f);

  //! "a~b,c~d" into name pairs. Throws SyntaxError.
  std::vector<std::pair<std::string, std::string>>
  parse_pair_list(std::string_view text);

}  // namespace gsg

#endif  // GSG_CONGRUENCE_HPP_
