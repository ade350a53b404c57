#ifndef GSG_REGULARITY_HPP_
#define GSG_REGULARITY_HPP_

#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "gamma_semigroup.hpp"

namespace gsg {

  //! An element x and a single gamma α used in both positions of a
  //! regularity equation.
  struct RegularityWitness {
    ElementIndex x;
    GammaIndex   alpha;

    friend bool operator==(RegularityWitness const&, RegularityWitness const&)
        = default;
  };

  //! First (x, α) in element-then-gamma order with a = aαxαa.
  std::optional<RegularityWitness> alpha_regular_witness(GammaSemigroup const& s,
                                                         ElementIndex a);

  //! All (b, α) with a = aαbαa and b = bαaαb, in element-then-gamma order.
  std::vector<RegularityWitness> alpha_inverses(GammaSemigroup const& s,
                                                ElementIndex          a);

  //! First (x, α) with a = aαxαa and aαx = xαa.
  std::optional<RegularityWitness>
  completely_alpha_regular_witness(GammaSemigroup const& s, ElementIndex a);

  struct ElementRegularity {
    std::optional<RegularityWitness> alpha_regular;
    std::optional<RegularityWitness> completely_regular;
    std::vector<RegularityWitness>   alpha_inverses;
  };

  struct RegularityReport {
    std::vector<ElementRegularity> elements;
    bool                           is_alpha_regular            = false;
    bool                           is_gamma_inverse            = false;
    bool                           is_completely_alpha_regular = false;

    //! First element lacking an α-regularity witness.
    std::optional<ElementIndex> first_not_alpha_regular() const;
    //! First element lacking a complete regularity witness.
    std::optional<ElementIndex> first_not_completely_regular() const;
  };

  //! Throws NotAssociative.
  RegularityReport classify(GammaSemigroup const& s);

  std::string format_report(GammaSemigroup const&   s,
                            RegularityReport const& report);

}  // namespace gsg

#endif  // GSG_REGULARITY_HPP_
