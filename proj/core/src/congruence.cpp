#include "gsg/congruence.hpp"

#include <deque>    // for deque
#include <numeric>  // for iota
#include <set>      // for set

namespace gsg {

  DisjointSets::DisjointSets(std::size_t n) : _parent(n), _size(n, 1) {
    std::iota(_parent.begin(), _parent.end(), std::size_t{0});
  }

  std::size_t DisjointSets::find(std::size_t x) noexcept {
    while (_parent[x] != x) {
      _parent[x] = _parent[_parent[x]];
      x          = _parent[x];
    }
    return x;
  }

  bool DisjointSets::unite(std::size_t x, std::size_t y) noexcept {
    x = find(x);
    y = find(y);
    if (x == y) {
      return false;
    }
    if (_size[x] < _size[y]) {
      std::swap(x, y);
    }
    _parent[y] = x;
    _size[x] += _size[y];
    return true;
  }

  std::vector<std::size_t> DisjointSets::least_representatives() {
    std::vector<std::size_t> least(size(), size());
    for (std::size_t x = 0; x < size(); ++x) {
      auto r = find(x);
      if (least[r] == size()) {
        least[r] = x;
      }
    }
    std::vector<std::size_t> out(size());
    for (std::size_t x = 0; x < size(); ++x) {
      out[x] = least[find(x)];
    }
    return out;
  }

  Congruence::Congruence(std::shared_ptr<GammaSemigroup const> subject,
                         std::vector<ElementIndex>             representative)
      : _subject(std::move(subject)), _rep(std::move(representative)) {
    if (!_subject || _rep.size() != _subject->size()) {
      throw Error(ErrorKind::invalid_argument,
                  "partition size does not match the Γ-semigroup");
    }
    for (ElementIndex x = 0; x < _rep.size(); ++x) {
      if (_rep[x] > x || _rep[_rep[x]] != _rep[x]) {
        throw Error(ErrorKind::invalid_argument,
                    "representatives must be least class members");
      }
    }
  }

  Congruence Congruence::identity(std::shared_ptr<GammaSemigroup const> subject) {
    std::vector<ElementIndex> rep(subject->size());
    std::iota(rep.begin(), rep.end(), ElementIndex{0});
    return Congruence(std::move(subject), std::move(rep));
  }

  Congruence Congruence::universal(std::shared_ptr<GammaSemigroup const> subject) {
    std::vector<ElementIndex> rep(subject->size(), 0);
    return Congruence(std::move(subject), std::move(rep));
  }

  std::vector<std::vector<ElementIndex>> Congruence::classes() const {
    std::vector<std::vector<ElementIndex>> out;
    std::vector<std::size_t>               slot(_rep.size(), _rep.size());
    for (ElementIndex x = 0; x < _rep.size(); ++x) {
      if (_rep[x] == x) {
        slot[x] = out.size();
        out.emplace_back();
      }
      out[slot[_rep[x]]].push_back(x);
    }
    return out;
  }

  std::size_t Congruence::class_count() const {
    std::size_t count = 0;
    for (ElementIndex x = 0; x < _rep.size(); ++x) {
      count += (_rep[x] == x);
    }
    return count;
  }

  std::optional<CompatibilityWitness> find_incompatibility(Congruence const& rho) {
    auto const& s = rho.subject();
    for (ElementIndex x = 0; x < s.size(); ++x) {
      ElementIndex const y = rho.representative(x);
      if (y == x) {
        continue;
      }
      // Relating each element to its representative covers every pair.
      for (GammaIndex g = 0; g < s.gamma_count(); ++g) {
        for (ElementIndex z = 0; z < s.size(); ++z) {
          if (!rho.related(s.product(x, g, z), s.product(y, g, z))) {
            return CompatibilityWitness{x, y, g, z, false};
          }
          if (!rho.related(s.product(z, g, x), s.product(z, g, y))) {
            return CompatibilityWitness{x, y, g, z, true};
          }
        }
      }
    }
    return std::nullopt;
  }

  Congruence generate_congruence(
      std::shared_ptr<GammaSemigroup const>                     s,
      std::vector<std::pair<ElementIndex, ElementIndex>> const& pairs) {
    require_associative(*s);
    std::size_t const n = s->size();
    std::deque<std::pair<ElementIndex, ElementIndex>> work;
    for (auto const& [x, y] : pairs) {
      if (x >= n || y >= n) {
        throw Error(ErrorKind::invalid_argument, "pair member out of range");
      }
      work.emplace_back(x, y);
    }
    DisjointSets sets(n);
    while (!work.empty()) {
      auto [x, y] = work.front();
      work.pop_front();
      if (!sets.unite(x, y)) {
        continue;
      }
      // Every translate of a newly joined pair is forced.
      for (GammaIndex g = 0; g < s->gamma_count(); ++g) {
        for (ElementIndex z = 0; z < n; ++z) {
          work.emplace_back(s->product(x, g, z), s->product(y, g, z));
          work.emplace_back(s->product(z, g, x), s->product(z, g, y));
        }
      }
    }
    return Congruence(std::move(s), sets.least_representatives());
  }

  Congruence generate_congruence(
      std::shared_ptr<GammaSemigroup const>                   s,
      std::vector<std::pair<std::string, std::string>> const& pairs) {
    std::vector<std::pair<ElementIndex, ElementIndex>> indices;
    for (auto const& [x, y] : pairs) {
      indices.emplace_back(s->element_index(x), s->element_index(y));
    }
    return generate_congruence(std::move(s), indices);
  }

  Quotient quotient(Congruence const& rho, std::string name) {
    auto const& s       = rho.subject();
    auto const  classes = rho.classes();
    std::size_t const k = classes.size();

    std::vector<ElementIndex> projection(s.size());
    std::vector<std::string>  names;
    for (std::size_t c = 0; c < k; ++c) {
      names.push_back(s.element_name(classes[c].front()));
      for (auto x : classes[c]) {
        projection[x] = c;
      }
    }

    std::size_t const          g = s.gamma_count();
    std::vector<std::uint32_t> table(k * g * k);
    for (std::size_t cx = 0; cx < k; ++cx) {
      for (GammaIndex gamma = 0; gamma < g; ++gamma) {
        for (std::size_t cy = 0; cy < k; ++cy) {
          ElementIndex const x0 = classes[cx].front();
          ElementIndex const y0 = classes[cy].front();
          auto const expected = projection[s.product(x0, gamma, y0)];
          for (auto x : classes[cx]) {
            for (auto y : classes[cy]) {
              if (projection[s.product(x, gamma, y)] != expected) {
                throw Error(ErrorKind::not_compatible,
                            "[" + s.element_name(x) + "] "
                                + s.gamma_name(gamma) + " ["
                                + s.element_name(y)
                                + "] depends on the choice of representatives");
              }
            }
          }
          table[(cx * g + gamma) * k + cy] = static_cast<std::uint32_t>(expected);
        }
      }
    }
    if (name.empty()) {
      name = s.name() + "/rho";
    }
    return Quotient{GammaSemigroup(std::move(name), std::move(names), s.gammas(),
                                   std::move(table)),
                    std::move(projection)};
  }

  Congruence kernel_congruence(GammaHomomorphism const& f) {
    require_homomorphism(f);
    auto const&               s = f.source();
    std::size_t const         unset = s.size();
    std::vector<ElementIndex> first_with_image(f.target().size(), unset);
    std::vector<ElementIndex> rep(s.size());
    for (ElementIndex x = 0; x < s.size(); ++x) {
      auto& first = first_with_image[f(x)];
      if (first == unset) {
        first = x;
      }
      rep[x] = first;
    }
    Congruence rho(f.source_ptr(), std::move(rep));
    if (find_incompatibility(rho)) {
      throw Error(ErrorKind::not_compatible,
                  "kernel of '" + f.name() + "' is not a congruence");
    }
    return rho;
  }

  IsoReport first_isomorphism_check(GammaHomomorphism const& f) {
    auto const  rho = kernel_congruence(f);
    auto const  q   = quotient(rho);
    auto const& s   = f.source();
    auto const& t   = f.target();

    IsoReport report;
    report.quotient_size = q.semigroup.size();

    std::set<ElementIndex> image;
    for (ElementIndex x = 0; x < s.size(); ++x) {
      image.insert(f(x));
    }
    report.image_size = image.size();

    // ψ([x]) = f′(x), read off the class representative.
    auto const classes = rho.classes();
    report.psi.resize(classes.size());
    report.well_defined = true;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      report.psi[c] = f(classes[c].front());
      for (auto x : classes[c]) {
        report.well_defined = report.well_defined && f(x) == report.psi[c];
      }
    }

    // ψ([x] γ [y]) = ψ([x]) f″(γ) ψ([y]) and ψ lands exactly on im f.
    report.homomorphism = true;
    for (std::size_t cx = 0; cx < q.semigroup.size(); ++cx) {
      for (GammaIndex g = 0; g < s.gamma_count(); ++g) {
        for (std::size_t cy = 0; cy < q.semigroup.size(); ++cy) {
          auto lhs = report.psi[q.semigroup.product(cx, g, cy)];
          auto rhs = t.product(report.psi[cx], f.gamma(g), report.psi[cy]);
          report.homomorphism = report.homomorphism && lhs == rhs;
        }
      }
    }
    std::set<ElementIndex> psi_image(report.psi.begin(), report.psi.end());
    report.homomorphism = report.homomorphism && psi_image == image;

    report.injective = psi_image.size() == report.psi.size();

    report.commutes = true;
    for (ElementIndex x = 0; x < s.size(); ++x) {
      report.commutes = report.commutes && report.psi[q.projection[x]] == f(x);
    }
    return report;
  }

  std::vector<std::pair<std::string, std::string>>
  parse_pair_list(std::string_view text) {
    std::vector<std::pair<std::string, std::string>> out;
    auto trim = [](std::string_view v) {
      auto const ws = " \t\r\n";
      auto       b  = v.find_first_not_of(ws);
      if (b == std::string_view::npos) {
        return std::string_view{};
      }
      auto e = v.find_last_not_of(ws);
      return v.substr(b, e - b + 1);
    };
    if (trim(text).empty()) {
      return out;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find(',', start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      auto item  = trim(text.substr(start, end - start));
      auto tilde = item.find('~');
      if (tilde == std::string_view::npos || item.find('~', tilde + 1) != std::string_view::npos) {
        throw Error(ErrorKind::syntax_error,
                    "expected 'a~b' but found '" + std::string(item) + "'");
      }
      auto lhs = trim(item.substr(0, tilde));
      auto rhs = trim(item.substr(tilde + 1));
      if (lhs.empty() || rhs.empty()) {
        throw Error(ErrorKind::syntax_error,
                    "expected 'a~b' but found '" + std::string(item) + "'");
      }
      out.emplace_back(std::string(lhs), std::string(rhs));
      start = end + 1;
    }
    return out;
  }

}  // namespace gsg
