#ifndef GSG_HOMOMORPHISM_HPP_
#define GSG_HOMOMORPHISM_HPP_

#include <memory>    // for shared_ptr
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "gamma_semigroup.hpp"

namespace gsg {

  //! A pair (f′, f″) of maps on carriers and gamma sets. Construction only
  //! checks that both maps are total and in range; the compatibility law
  //! f′(aγb) = f′(a) f″(γ) f′(b) is checked by verify_homomorphism.
  class GammaHomomorphism {
   public:
    GammaHomomorphism(std::string                           name,
                      std::shared_ptr<GammaSemigroup const> source,
                      std::shared_ptr<GammaSemigroup const> target,
                      std::vector<ElementIndex>             carrier_map,
                      std::vector<GammaIndex>               gamma_map);

    std::string const& name() const noexcept {
      return _name;
    }

    GammaSemigroup const& source() const noexcept {
      return *_source;
    }

    GammaSemigroup const& target() const noexcept {
      return *_target;
    }

    std::shared_ptr<GammaSemigroup const> const& source_ptr() const noexcept {
      return _source;
    }

    std::shared_ptr<GammaSemigroup const> const& target_ptr() const noexcept {
      return _target;
    }

    std::vector<ElementIndex> const& carrier_map() const noexcept {
      return _carrier;
    }

    std::vector<GammaIndex> const& gamma_map() const noexcept {
      return _gamma;
    }

    ElementIndex operator()(ElementIndex a) const {
      return _carrier.at(a);
    }

    GammaIndex gamma(GammaIndex g) const {
      return _gamma.at(g);
    }

    //! Structural equality: names, maps, and source/target by value.
    friend bool operator==(GammaHomomorphism const& x,
                           GammaHomomorphism const& y);

   private:
    std::string                           _name;
    std::shared_ptr<GammaSemigroup const> _source;
    std::shared_ptr<GammaSemigroup const> _target;
    std::vector<ElementIndex>             _carrier;
    std::vector<GammaIndex>               _gamma;
  };

  struct HomomorphismWitness {
    ElementIndex a;
    GammaIndex   gamma;
    ElementIndex b;
    ElementIndex image_of_product;  // f′(aγb)
    ElementIndex product_of_images;  // f′(a) f″(γ) f′(b)

    friend bool operator==(HomomorphismWitness const&,
                           HomomorphismWitness const&)
        = default;
  };

  //! First (a, γ, b) in index order violating compatibility, if any.
  std::optional<HomomorphismWitness>
  verify_homomorphism(GammaHomomorphism const& f);

  //! Throws NotAHomomorphism carrying the first witness.
  void require_homomorphism(GammaHomomorphism const& f);

  //! True iff f′ and f″ are both injective. Throws NotAHomomorphism when f
  //! does not verify.
  bool is_monomorphism(GammaHomomorphism const& f);

  //! The composite (h′∘f′, h″∘f″). Throws InvalidArgument when the target
  //! of \p f is not the source of \p h.
  GammaHomomorphism compose(GammaHomomorphism const& f,
                            GammaHomomorphism const& h,
                            std::string              name = {});

  GammaHomomorphism identity(std::shared_ptr<GammaSemigroup const> s,
                             std::string                           name = {});

  //! Optional extra check: f(e) is a left identity of the target whenever e
  //! is a left identity of the source. Not part of verify_homomorphism.
  bool preserves_left_identity(GammaHomomorphism const& f);

  std::string describe(GammaHomomorphism const&   f,
                       HomomorphismWitness const& w);

}  // namespace gsg

#endif  // GSG_HOMOMORPHISM_HPP_
