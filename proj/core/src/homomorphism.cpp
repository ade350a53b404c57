#include "gsg/homomorphism.hpp"

#include <algorithm>  // for all_of

namespace gsg {

  GammaHomomorphism::GammaHomomorphism(
      std::string                           name,
      std::shared_ptr<GammaSemigroup const> source,
      std::shared_ptr<GammaSemigroup const> target,
      std::vector<ElementIndex>             carrier_map,
      std::vector<GammaIndex>               gamma_map)
      : _name(std::move(name)),
        _source(std::move(source)),
        _target(std::move(target)),
        _carrier(std::move(carrier_map)),
        _gamma(std::move(gamma_map)) {
    if (!_source || !_target) {
      throw Error(ErrorKind::invalid_argument,
                  "homomorphism '" + _name + "' needs a source and a target");
    }
    if (_carrier.size() != _source->size()
        || _gamma.size() != _source->gamma_count()) {
      throw Error(ErrorKind::invalid_argument,
                  "homomorphism '" + _name + "' is not total on its source");
    }
    auto in_range = [](auto const& v, std::size_t bound) {
      return std::all_of(
          v.begin(), v.end(), [bound](std::size_t x) { return x < bound; });
    };
    if (!in_range(_carrier, _target->size())
        || !in_range(_gamma, _target->gamma_count())) {
      throw Error(ErrorKind::invalid_argument,
                  "homomorphism '" + _name + "' maps outside its target");
    }
  }

  bool operator==(GammaHomomorphism const& x, GammaHomomorphism const& y) {
    return x._name == y._name && x._carrier == y._carrier
           && x._gamma == y._gamma && *x._source == *y._source
           && *x._target == *y._target;
  }

  std::optional<HomomorphismWitness>
  verify_homomorphism(GammaHomomorphism const& f) {
    auto const& s = f.source();
    auto const& t = f.target();
    for (ElementIndex a = 0; a < s.size(); ++a) {
      for (GammaIndex g = 0; g < s.gamma_count(); ++g) {
        for (ElementIndex b = 0; b < s.size(); ++b) {
          ElementIndex const lhs = f(s.product(a, g, b));
          ElementIndex const rhs = t.product(f(a), f.gamma(g), f(b));
          if (lhs != rhs) {
            return HomomorphismWitness{a, g, b, lhs, rhs};
          }
        }
      }
    }
    return std::nullopt;
  }

  void require_homomorphism(GammaHomomorphism const& f) {
    if (auto w = verify_homomorphism(f)) {
      throw Error(ErrorKind::not_a_homomorphism, describe(f, *w));
    }
  }

  namespace {
    bool injective(std::vector<std::size_t> const& map, std::size_t range) {
      std::vector<bool> seen(range, false);
      for (auto x : map) {
        if (seen[x]) {
          return false;
        }
        seen[x] = true;
      }
      return true;
    }
  }  // namespace

  bool is_monomorphism(GammaHomomorphism const& f) {
    require_homomorphism(f);
    return injective(f.carrier_map(), f.target().size())
           && injective(f.gamma_map(), f.target().gamma_count());
  }

  GammaHomomorphism compose(GammaHomomorphism const& f,
                            GammaHomomorphism const& h,
                            std::string              name) {
    if (!(f.target() == h.source())) {
      throw Error(ErrorKind::invalid_argument,
                  "cannot compose '" + h.name() + "' after '" + f.name()
                      + "': target and source differ");
    }
    std::vector<ElementIndex> carrier(f.source().size());
    for (ElementIndex a = 0; a < carrier.size(); ++a) {
      carrier[a] = h(f(a));
    }
    std::vector<GammaIndex> gamma(f.source().gamma_count());
    for (GammaIndex g = 0; g < gamma.size(); ++g) {
      gamma[g] = h.gamma(f.gamma(g));
    }
    if (name.empty()) {
      name = h.name() + "." + f.name();
    }
    return GammaHomomorphism(std::move(name),
                             f.source_ptr(),
                             h.target_ptr(),
                             std::move(carrier),
                             std::move(gamma));
  }

  GammaHomomorphism identity(std::shared_ptr<GammaSemigroup const> s,
                             std::string                           name) {
    std::vector<ElementIndex> carrier(s->size());
    for (ElementIndex a = 0; a < carrier.size(); ++a) {
      carrier[a] = a;
    }
    std::vector<GammaIndex> gamma(s->gamma_count());
    for (GammaIndex g = 0; g < gamma.size(); ++g) {
      gamma[g] = g;
    }
    if (name.empty()) {
      name = "id_" + s->name();
    }
    return GammaHomomorphism(
        std::move(name), s, s, std::move(carrier), std::move(gamma));
  }

  namespace {
    bool is_left_identity(GammaSemigroup const& s, ElementIndex e) {
      for (GammaIndex g = 0; g < s.gamma_count(); ++g) {
        for (ElementIndex b = 0; b < s.size(); ++b) {
          if (s.product(e, g, b) != b) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace

  bool preserves_left_identity(GammaHomomorphism const& f) {
    for (ElementIndex e = 0; e < f.source().size(); ++e) {
      if (is_left_identity(f.source(), e)
          && !is_left_identity(f.target(), f(e))) {
        return false;
      }
    }
    return true;
  }

  std::string describe(GammaHomomorphism const&   f,
                       HomomorphismWitness const& w) {
    auto const& s = f.source();
    auto const& t = f.target();
    return "'" + f.name() + "' at (" + s.element_name(w.a) + ", "
           + s.gamma_name(w.gamma) + ", " + s.element_name(w.b) + "): f(" +
           s.element_name(w.a) + " " + s.gamma_name(w.gamma) + " "
           + s.element_name(w.b) + ") = " + t.element_name(w.image_of_product)
           + " but f(" + s.element_name(w.a) + ") "
           + t.gamma_name(f.gamma(w.gamma)) + " f(" + s.element_name(w.b)
           + ") = " + t.element_name(w.product_of_images);
  }

}  // namespace gsg
