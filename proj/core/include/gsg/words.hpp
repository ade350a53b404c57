#ifndef GSG_WORDS_HPP_
#define GSG_WORDS_HPP_

#include <compare>      // for strong_ordering
#include <cstddef>      // for size_t
#include <functional>   // for less
#include <map>          // for map
#include <memory>       // for shared_ptr
#include <optional>     // for optional
#include <span>         // for span
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "gamma_semigroup.hpp"
#include "homomorphism.hpp"

namespace gsg {

  //! SameGamma: every member is a Γ-semigroup over one shared Γ and any
  //! gamma may join any two letters. DisjointFamilies: each member carries
  //! its own Γ_i, gamma letters have a pointer, and a junction merges only
  //! when both letters and the gamma share it.
  enum class Mode { same_gamma, disjoint_families };

  std::string_view         to_string(Mode mode) noexcept;
  std::optional<Mode>      parse_mode(std::string_view text) noexcept;

  //! An element letter; `part` is its pointer ζ(x).
  struct Letter {
    std::size_t  part;
    ElementIndex element;

    friend auto operator<=>(Letter const&, Letter const&) = default;
  };

  //! A gamma letter. The pointer is present exactly in DisjointFamilies
  //! mode; in SameGamma mode `gamma` indexes the shared Γ.
  struct GammaLetter {
    std::optional<std::size_t> part;
    GammaIndex                 gamma;

    friend bool operator==(GammaLetter const&, GammaLetter const&) = default;
    friend std::strong_ordering operator<=>(GammaLetter const& x,
                                            GammaLetter const& y) {
      if (auto c = x.part.has_value() <=> y.part.has_value(); c != 0) {
        return c;
      }
      if (x.part) {
        if (auto c = *x.part <=> *y.part; c != 0) {
          return c;
        }
      }
      return x.gamma <=> y.gamma;
    }
  };

  //! An alternating sequence x₁ γ₁ x₂ … x_m with no reducedness promise.
  struct Sequence {
    std::vector<Letter>      letters;
    std::vector<GammaLetter> gammas;

    std::size_t length() const noexcept {
      return letters.size();
    }

    friend bool operator==(Sequence const&, Sequence const&) = default;
  };

  //! Canonical order: length first, then x₁, γ₁, x₂, … lexicographically.
  std::strong_ordering canonical_compare(Sequence const& x, Sequence const& y);

  //! Compact byte key for hashing sequences.
  std::string sequence_key(Sequence const& s);

  class Family;
  class Word;

  namespace detail {
    struct WordFactory;
  }

  //! An element of the free Γ-product: a nonempty reduced alternating
  //! sequence. Only the operations below produce words, so every Word
  //! satisfies the reducedness invariant of its family.
  class Word {
   public:
    Mode mode() const noexcept {
      return _mode;
    }

    std::size_t length() const noexcept {
      return _seq.letters.size();
    }

    std::span<Letter const> letters() const noexcept {
      return _seq.letters;
    }

    std::span<GammaLetter const> gammas() const noexcept {
      return _seq.gammas;
    }

    Sequence const& sequence() const noexcept {
      return _seq;
    }

    friend bool operator==(Word const&, Word const&) = default;

    friend std::strong_ordering operator<=>(Word const& x, Word const& y) {
      if (auto c = x._mode <=> y._mode; c != 0) {
        return c;
      }
      return canonical_compare(x._seq, y._seq);
    }

   private:
    Word(Mode mode, Sequence seq) : _mode(mode), _seq(std::move(seq)) {}

    friend struct detail::WordFactory;

    Mode     _mode;
    Sequence _seq;
  };

  //! A finite family of Γ-semigroups with pairwise disjoint element names,
  //! the alphabet of a free Γ-product.
  class Family {
   public:
    //! Throws NameClash when element names (or, in DisjointFamilies mode,
    //! gamma names) are shared between members, and GammaMismatch when
    //! SameGamma members do not have identical gamma lists.
    Family(std::vector<std::shared_ptr<GammaSemigroup const>> members,
           Mode                                               mode);

    Mode mode() const noexcept {
      return _mode;
    }

    std::size_t size() const noexcept {
      return _members.size();
    }

    GammaSemigroup const& member(std::size_t i) const {
      return *_members.at(i);
    }

    std::shared_ptr<GammaSemigroup const> const& member_ptr(std::size_t i) const {
      return _members.at(i);
    }

    std::optional<Letter>      find_letter(std::string_view id) const;
    std::optional<GammaLetter> find_gamma(std::string_view id) const;

    //! Throws UnknownIdentifier.
    Letter letter(std::string_view id) const;
    //! Throws UnknownIdentifier.
    GammaLetter gamma(std::string_view id) const;

    bool contains(Letter x) const noexcept;
    //! The gamma letter has the right shape for the mode and is in range.
    bool valid(GammaLetter g) const noexcept;

    //! The junction condition: ζ(x) = ζ(y) in SameGamma mode,
    //! ζ(x) = ζ(γ) = ζ(y) in DisjointFamilies mode.
    bool mergeable(Letter x, GammaLetter g, Letter y) const noexcept;

    //! xγy computed in S_ζ(x). Pre: mergeable(x, g, y).
    Letter merge(Letter x, GammaLetter g, Letter y) const noexcept {
      return {x.part, _members[x.part]->product(x.element, g.gamma, y.element)};
    }

    //! The gamma letters usable inside member \p part.
    std::vector<GammaLetter> gammas_of(std::size_t part) const;

    std::string const& name_of(Letter x) const;
    std::string const& name_of(GammaLetter g) const;

    //! Shared gamma names; meaningful in SameGamma mode only.
    std::vector<std::string> const& shared_gammas() const noexcept {
      return _members.front()->gammas();
    }

   private:
    std::vector<std::shared_ptr<GammaSemigroup const>> _members;
    Mode                                               _mode;
    std::map<std::string, Letter, std::less<>>         _letters;
    std::map<std::string, GammaLetter, std::less<>>    _gammas;
  };

  //! θ_i: the one-letter word (a) with pointer i. Throws UnknownIdentifier.
  Word embed(Family const& family, std::size_t part, ElementIndex a);
  Word embed(Family const& family, std::size_t part, std::string_view a);

  //! Left-to-right replacement of every mergeable factor (x, γ, y) by the
  //! letter xγy. Throws MalformedSequence and ModeMismatch; with
  //! \p reject_cross_sites set, also throws CrossFamilyGamma for a site with
  //! ζ(x) = ζ(y) ≠ ζ(γ) (DisjointFamilies mode only).
  Word normalize(Family const&   family,
                 Sequence const& raw,
                 bool            reject_cross_sites = false);

  //! No factor of \p s satisfies the junction condition.
  bool is_reduced(Family const& family, Sequence const& s) noexcept;

  //! The product aγb: concatenation with at most one merge at the junction.
  //! Throws ModeMismatch.
  Word gamma_multiply(Family const&     family,
                      Word const&       a,
                      GammaLetter const gamma,
                      Word const&       b);

  struct FoldOptions {
    //! Map gamma letters through ψ_ζ(γ)″ (DisjointFamilies mode). Without it
    //! fold is defined for SameGamma families only, where a gamma maps to
    //! the gamma of the same name in the target.
    bool use_gamma_maps = false;
  };

  //! λ(w) = ψ_ζ(x₁)(x₁) γ₁ ψ_ζ(x₂)(x₂) … evaluated left to right in \p t.
  //! \p psi[i] must map member i into \p t. Throws MissingHomomorphism,
  //! ModeMismatch, GammaMismatch.
  ElementIndex fold(Family const&                      family,
                    Word const&                        w,
                    GammaSemigroup const&              t,
                    std::span<GammaHomomorphism const> psi,
                    FoldOptions                        options = {});

  //! Tokens separated by whitespace, alternating element and gamma names,
  //! e.g. "1 g p". Throws MalformedSequence and UnknownIdentifier.
  Sequence parse_sequence(Family const& family, std::string_view text);
  Word     parse_word(Family const& family, std::string_view text);

  std::string format(Family const& family, Sequence const& s);
  std::string format(Family const& family, Word const& w);

  //! Every word of the family with at most \p max_length element letters,
  //! in canonical order.
  std::vector<Word> enumerate_words(Family const& family,
                                    std::size_t   max_length);

}  // namespace gsg

#endif  // GSG_WORDS_HPP_
