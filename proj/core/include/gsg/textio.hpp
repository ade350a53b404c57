#ifndef GSG_TEXTIO_HPP_
#define GSG_TEXTIO_HPP_

#include <memory>       // for shared_ptr
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "amalgam.hpp"
#include "gamma_semigroup.hpp"
#include "homomorphism.hpp"

namespace gsg {

  //! Named objects read from one file, plus their declaration order.
  class Workspace {
   public:
    enum class Kind { semigroup, homomorphism, amalgam };

    struct Entry {
      Kind        kind;
      std::string name;

      friend bool operator==(Entry const&, Entry const&) = default;
    };

    //! Each add throws DuplicateIdentifier when the name is taken for that
    //! kind. References are not checked here.
    void add(std::shared_ptr<GammaSemigroup const> s);
    void add(std::shared_ptr<GammaHomomorphism const> f);
    void add(std::shared_ptr<GammaAmalgam const> a);

    std::shared_ptr<GammaSemigroup const>    find_semigroup(std::string_view name) const;
    std::shared_ptr<GammaHomomorphism const> find_homomorphism(std::string_view name) const;
    std::shared_ptr<GammaAmalgam const>      find_amalgam(std::string_view name) const;

    //! Throw UnresolvedReference.
    std::shared_ptr<GammaSemigroup const>    semigroup(std::string_view name) const;
    std::shared_ptr<GammaHomomorphism const> homomorphism(std::string_view name) const;
    std::shared_ptr<GammaAmalgam const>      amalgam(std::string_view name) const;

    std::vector<std::shared_ptr<GammaSemigroup const>> const& semigroups() const noexcept {
      return _semigroups;
    }

    std::vector<std::shared_ptr<GammaHomomorphism const>> const&
    homomorphisms() const noexcept {
      return _homomorphisms;
    }

    std::vector<std::shared_ptr<GammaAmalgam const>> const& amalgams() const noexcept {
      return _amalgams;
    }

    std::vector<Entry> const& order() const noexcept {
      return _order;
    }

    //! Same declarations in the same order with equal contents.
    friend bool operator==(Workspace const& x, Workspace const& y);

   private:
    std::vector<std::shared_ptr<GammaSemigroup const>>    _semigroups;
    std::vector<std::shared_ptr<GammaHomomorphism const>> _homomorphisms;
    std::vector<std::shared_ptr<GammaAmalgam const>>      _amalgams;
    std::vector<Entry>                                    _order;
  };

  std::string_view to_string(Workspace::Kind kind) noexcept;

  //! Reads the line-based workspace format. References may point forward.
  //! Throws SyntaxError, UnresolvedReference, and the table, homomorphism
  //! and amalgam validation errors, each with a source location.
  Workspace parse(std::string_view text);

  //! Canonical text: blocks in declaration order, op lines in index order,
  //! every map and gmap line explicit.
  std::string serialize(Workspace const& w);

  //! One semigroup block, as emitted by serialize.
  std::string serialize(GammaSemigroup const& s);

}  // namespace gsg

#endif  // GSG_TEXTIO_HPP_
