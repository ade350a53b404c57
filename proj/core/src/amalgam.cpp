#include "gsg/amalgam.hpp"

#include <algorithm>  // for min_element, sort, unique
#include <limits>     // for numeric_limits
#include <set>        // for set

namespace gsg {

  namespace {
    constexpr std::size_t no_parent = std::numeric_limits<std::size_t>::max();
  }

  Family GammaAmalgam::family() const {
    return Family({parts[0], parts[1]}, mode);
  }

  bool operator==(GammaAmalgam const& x, GammaAmalgam const& y) {
    auto same = [](auto const& p, auto const& q) {
      return (p == nullptr) == (q == nullptr) && (p == nullptr || *p == *q);
    };
    return x.name == y.name && x.mode == y.mode && same(x.core, y.core)
           && same(x.parts[0], y.parts[0]) && same(x.parts[1], y.parts[1])
           && same(x.maps[0], y.maps[0]) && same(x.maps[1], y.maps[1]);
  }

  ////////////////////////////////////////////////////////////////////////
  // Validation and R
  ////////////////////////////////////////////////////////////////////////

  std::vector<AmalgamIssue> validate_amalgam(GammaAmalgam const& a) {
    std::vector<AmalgamIssue> issues;
    if (!a.core || !a.parts[0] || !a.parts[1] || !a.maps[0] || !a.maps[1]) {
      issues.push_back({ErrorKind::invalid_argument,
                        "amalgam '" + a.name + "' is missing a component"});
      return issues;
    }

    std::array<GammaSemigroup const*, 3> const all{
        a.core.get(), a.parts[0].get(), a.parts[1].get()};
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        for (auto const& id : all[i]->elements()) {
          if (all[j]->find_element(id)) {
            issues.push_back({ErrorKind::name_clash,
                              "element name '" + id + "' is shared by '"
                                  + all[i]->name() + "' and '" + all[j]->name()
                                  + "'"});
          }
        }
      }
    }
    if (a.mode == Mode::disjoint_families) {
      for (auto const& id : a.parts[0]->gammas()) {
        if (a.parts[1]->find_gamma(id)) {
          issues.push_back({ErrorKind::name_clash,
                            "gamma name '" + id + "' is shared by both parts"});
        }
      }
    }

    for (std::size_t i = 0; i < 2; ++i) {
      auto const& f = *a.maps[i];
      std::string const which = "f" + std::to_string(i + 1);
      if (!(f.source() == *a.core) || !(f.target() == *a.parts[i])) {
        issues.push_back({ErrorKind::invalid_argument,
                          which + " ('" + f.name() + "') does not map '"
                              + a.core->name() + "' into '" + a.parts[i]->name()
                              + "'"});
        continue;
      }
      if (auto w = verify_homomorphism(f)) {
        issues.push_back({ErrorKind::not_monomorphism,
                          which + " is not a homomorphism: " + describe(f, *w)});
      } else if (!is_monomorphism(f)) {
        issues.push_back({ErrorKind::not_monomorphism,
                          which + " ('" + f.name() + "') is not injective"});
      }
      if (a.mode == Mode::same_gamma) {
        if (a.parts[i]->gammas() != a.core->gammas()) {
          issues.push_back({ErrorKind::gamma_mismatch,
                            "'" + a.parts[i]->name() + "' and '" + a.core->name()
                                + "' do not share the same Γ"});
        } else {
          for (GammaIndex g = 0; g < a.core->gamma_count(); ++g) {
            if (f.gamma(g) != g) {
              issues.push_back({ErrorKind::gamma_mismatch,
                                which + " does not map gamma '"
                                    + a.core->gamma_name(g) + "' to itself"});
              break;
            }
          }
        }
      }
    }
    return issues;
  }

  void require_valid(GammaAmalgam const& a) {
    auto issues = validate_amalgam(a);
    if (!issues.empty()) {
      throw Error(issues.front().kind, issues.front().message);
    }
  }

  RelationSet relation_generators(GammaAmalgam const& a, bool identify_elements) {
    require_valid(a);
    auto const&            u  = *a.core;
    auto const&            f1 = *a.maps[0];
    auto const&            f2 = *a.maps[1];
    std::set<RelationPair> pairs;
    for (ElementIndex x = 0; x < u.size(); ++x) {
      for (GammaIndex g = 0; g < u.gamma_count(); ++g) {
        for (ElementIndex y = 0; y < u.size(); ++y) {
          ElementIndex const p = u.product(x, g, y);
          pairs.insert({Letter{0, f1(p)}, Letter{1, f2(p)}});
        }
      }
    }
    if (identify_elements) {
      for (ElementIndex x = 0; x < u.size(); ++x) {
        pairs.insert({Letter{0, f1(x)}, Letter{1, f2(x)}});
      }
    }
    RelationSet r;
    r.pairs.assign(pairs.begin(), pairs.end());
    if (a.mode == Mode::disjoint_families) {
      for (GammaIndex g = 0; g < u.gamma_count(); ++g) {
        GammaRelation rel{GammaLetter{0, f1.gamma(g)}, GammaLetter{1, f2.gamma(g)}};
        if (std::find(r.gamma_pairs.begin(), r.gamma_pairs.end(), rel)
            == r.gamma_pairs.end()) {
          r.gamma_pairs.push_back(rel);
        }
      }
    }
    return r;
  }

  std::string_view to_string(MoveKind kind) noexcept {
    switch (kind) {
      case MoveKind::substitute:
        return "substitute";
      case MoveKind::substitute_gamma:
        return "substitute-gamma";
      case MoveKind::merge:
        return "merge";
      case MoveKind::unmerge:
        return "unmerge";
    }
    return "move";
  }

  ////////////////////////////////////////////////////////////////////////
  // WordSearch
  ////////////////////////////////////////////////////////////////////////

  WordSearch::WordSearch(Family       family,
                         RelationSet  relations,
                         Word         start,
                         SearchLimits limits)
      : _family(std::move(family)),
        _relations(std::move(relations)),
        _limits(limits),
        _start(std::move(start)) {
    if (_start.mode() != _family.mode()) {
      throw Error(ErrorKind::mode_mismatch, "start word and family differ in mode");
    }
    _factors.resize(_family.size());
    for (std::size_t i = 0; i < _family.size(); ++i) {
      auto const& s = _family.member(i);
      _factors[i].resize(s.size());
      auto const gammas = _family.gammas_of(i);
      for (ElementIndex x = 0; x < s.size(); ++x) {
        for (auto const& g : gammas) {
          for (ElementIndex y = 0; y < s.size(); ++y) {
            _factors[i][s.product(x, g.gamma, y)].push_back(
                {Letter{i, x}, g, Letter{i, y}});
          }
        }
      }
    }
    add(_start.sequence(), no_parent, MoveKind::merge, 0);
  }

  bool WordSearch::add(Sequence seq, std::size_t parent, MoveKind kind, std::size_t pos) {
    auto key = sequence_key(seq);
    if (_visited.count(key) != 0) {
      return true;
    }
    if (_nodes.size() >= _limits.budget) {
      _budget_hit = true;
      return false;
    }
    Word nf      = normalize(_family, seq);
    auto nf_key  = sequence_key(nf.sequence());
    auto const id = _nodes.size();
    _visited.emplace(std::move(key), id);
    _nodes.push_back({std::move(seq), parent, kind, pos});
    if (_normal_forms.emplace(std::move(nf_key), id).second) {
      _normal_order.push_back(id);
      _normal_words.push_back(std::move(nf));
    }
    return true;
  }

  void WordSearch::expand() {
    std::size_t const id  = _next;
    Sequence const    seq = _nodes[id].seq;
    std::size_t const m   = seq.letters.size();

    for (std::size_t k = 0; k < m; ++k) {
      Letter const x = seq.letters[k];
      for (auto const& r : _relations.pairs) {
        for (auto [from, to] : {std::pair{r.first, r.second}, std::pair{r.second, r.first}}) {
          if (x == from) {
            Sequence child       = seq;
            child.letters[k]     = to;
            if (!add(std::move(child), id, MoveKind::substitute, k)) {
              return;
            }
          }
        }
      }
      if (k + 1 < m) {
        GammaLetter const g = seq.gammas[k];
        if (_family.mergeable(x, g, seq.letters[k + 1])) {
          Sequence child = seq;
          child.letters[k] = _family.merge(x, g, seq.letters[k + 1]);
          child.letters.erase(child.letters.begin() + static_cast<std::ptrdiff_t>(k) + 1);
          child.gammas.erase(child.gammas.begin() + static_cast<std::ptrdiff_t>(k));
          if (!add(std::move(child), id, MoveKind::merge, k)) {
            return;
          }
        }
        for (auto const& r : _relations.gamma_pairs) {
          for (auto [from, to] : {std::pair{r.first, r.second}, std::pair{r.second, r.first}}) {
            if (g == from) {
              Sequence child  = seq;
              child.gammas[k] = to;
              if (!add(std::move(child), id, MoveKind::substitute_gamma, k)) {
                return;
              }
            }
          }
        }
      }
      if (m + 1 <= _limits.bound) {
        for (auto const& f : _factors[x.part][x.element]) {
          Sequence child = seq;
          child.letters[k] = f.x;
          child.letters.insert(child.letters.begin() + static_cast<std::ptrdiff_t>(k) + 1, f.y);
          child.gammas.insert(child.gammas.begin() + static_cast<std::ptrdiff_t>(k), f.gamma);
          if (!add(std::move(child), id, MoveKind::unmerge, k)) {
            return;
          }
        }
      }
    }
    ++_next;
  }

  std::vector<RewriteStep> WordSearch::chain_to(std::size_t node) const {
    std::vector<RewriteStep> chain;
    while (_nodes[node].parent != no_parent) {
      chain.push_back({_nodes[node].kind, _nodes[node].position, _nodes[node].seq});
      node = _nodes[node].parent;
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
  }

  EqualityVerdict WordSearch::find(Word const& target) {
    if (target.mode() != _family.mode()) {
      throw Error(ErrorKind::mode_mismatch, "target word and family differ in mode");
    }
    auto const key = sequence_key(target.sequence());
    while (true) {
      if (auto it = _normal_forms.find(key); it != _normal_forms.end()) {
        return Equal{chain_to(it->second)};
      }
      if (done()) {
        return InconclusiveWithinBound{_limits.bound, _nodes.size(), _budget_hit};
      }
      expand();
    }
  }

  void WordSearch::run() {
    while (!done()) {
      expand();
    }
  }

  Word WordSearch::least() const {
    return *std::min_element(_normal_words.begin(), _normal_words.end());
  }

  std::vector<Word> WordSearch::discovered() const {
    return _normal_words;
  }

  EqualityVerdict words_equal_within(GammaAmalgam const& a,
                                     RelationSet const&  relations,
                                     Word const&         w1,
                                     Word const&         w2,
                                     SearchLimits        limits) {
    if (w1.mode() != a.mode || w2.mode() != a.mode) {
      throw Error(ErrorKind::mode_mismatch, "words and amalgam differ in mode");
    }
    WordSearch search(a.family(), relations, w1, limits);
    return search.find(w2);
  }

  ////////////////////////////////////////////////////////////////////////
  // Replay
  ////////////////////////////////////////////////////////////////////////

  namespace {
    bool well_formed(Family const& family, Sequence const& s) {
      if (s.letters.empty() || s.gammas.size() + 1 != s.letters.size()) {
        return false;
      }
      for (auto const& x : s.letters) {
        if (!family.contains(x)) {
          return false;
        }
      }
      for (auto const& g : s.gammas) {
        if (!family.valid(g)) {
          return false;
        }
      }
      return true;
    }

    template <typename T>
    bool equal_except(std::vector<T> const& x, std::vector<T> const& y, std::size_t k) {
      if (x.size() != y.size()) {
        return false;
      }
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (i != k && !(x[i] == y[i])) {
          return false;
        }
      }
      return true;
    }

    std::optional<std::string> check_step(Family const&      family,
                                          RelationSet const& r,
                                          Sequence const&    prev,
                                          RewriteStep const& step) {
      Sequence const&   next = step.result;
      std::size_t const k    = step.position;
      if (!well_formed(family, next)) {
        return "result is not a well-formed sequence";
      }
      switch (step.kind) {
        case MoveKind::substitute: {
          if (k >= prev.letters.size() || prev.gammas != next.gammas
              || !equal_except(prev.letters, next.letters, k)) {
            return "substitution changes more than one letter";
          }
          Letter const from = prev.letters[k];
          Letter const to   = next.letters[k];
          for (auto const& p : r.pairs) {
            if ((p.first == from && p.second == to) || (p.second == from && p.first == to)) {
              return std::nullopt;
            }
          }
          return "substituted letters are not related by R";
        }
        case MoveKind::substitute_gamma: {
          if (k >= prev.gammas.size() || prev.letters != next.letters
              || !equal_except(prev.gammas, next.gammas, k)) {
            return "gamma substitution changes more than one letter";
          }
          for (auto const& p : r.gamma_pairs) {
            if ((p.first == prev.gammas[k] && p.second == next.gammas[k])
                || (p.second == prev.gammas[k] && p.first == next.gammas[k])) {
              return std::nullopt;
            }
          }
          return "substituted gammas are not related";
        }
        case MoveKind::merge: {
          if (k >= prev.gammas.size() || next.letters.size() + 1 != prev.letters.size()) {
            return "merge site out of range";
          }
          Letter const      x = prev.letters[k];
          GammaLetter const g = prev.gammas[k];
          Letter const      y = prev.letters[k + 1];
          if (!family.mergeable(x, g, y)) {
            return "merge site does not satisfy the junction condition";
          }
          Sequence expected = prev;
          expected.letters[k] = Letter{x.part, family.member(x.part).product(x.element, g.gamma, y.element)};
          expected.letters.erase(expected.letters.begin() + static_cast<std::ptrdiff_t>(k) + 1);
          expected.gammas.erase(expected.gammas.begin() + static_cast<std::ptrdiff_t>(k));
          if (!(expected == next)) {
            return "merge result disagrees with the table";
          }
          return std::nullopt;
        }
        case MoveKind::unmerge: {
          if (k >= prev.letters.size() || next.letters.size() != prev.letters.size() + 1) {
            return "unmerge position out of range";
          }
          Letter const      z = prev.letters[k];
          Letter const      x = next.letters[k];
          GammaLetter const g = next.gammas[k];
          Letter const      y = next.letters[k + 1];
          if (x.part != z.part || y.part != z.part || !family.mergeable(x, g, y)) {
            return "unmerged factor does not belong to one member";
          }
          if (family.member(z.part).product(x.element, g.gamma, y.element) != z.element) {
            return "unmerged factor does not multiply back to the letter";
          }
          Sequence expected = next;
          expected.letters[k] = z;
          expected.letters.erase(expected.letters.begin() + static_cast<std::ptrdiff_t>(k) + 1);
          expected.gammas.erase(expected.gammas.begin() + static_cast<std::ptrdiff_t>(k));
          if (!(expected == prev)) {
            return "unmerge changes other letters";
          }
          return std::nullopt;
        }
      }
      return "unknown move";
    }
  }  // namespace

  std::optional<std::string> replay_chain(GammaAmalgam const&             a,
                                          RelationSet const&              relations,
                                          Word const&                     w1,
                                          Word const&                     w2,
                                          std::vector<RewriteStep> const& chain) {
    Family const family = a.family();
    Sequence     current = w1.sequence();
    for (std::size_t i = 0; i < chain.size(); ++i) {
      if (auto why = check_step(family, relations, current, chain[i])) {
        return "step " + std::to_string(i + 1) + " (" + std::string(to_string(chain[i].kind))
               + "): " + *why;
      }
      current = chain[i].result;
    }
    if (!(normalize(family, current) == w2)) {
      return "chain ends at '" + format(family, current) + "', which does not reduce to '"
             + format(family, w2) + "'";
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // μ and natural embedding
  ////////////////////////////////////////////////////////////////////////

  Word mu(GammaAmalgam const& a,
          RelationSet const&  relations,
          std::size_t         part,
          ElementIndex        s,
          SearchLimits        limits) {
    Family     family = a.family();
    Word       start  = embed(family, part, s);
    WordSearch search(std::move(family), relations, std::move(start), limits);
    search.run();
    return search.least();
  }

  bool EmbeddingReport::all_resolved() const noexcept {
    return std::all_of(intersection.begin(), intersection.end(), [](CrossPair const& p) {
      return p.resolving_u.has_value();
    });
  }

  EmbeddingReport check_natural_embedding(GammaAmalgam const& a,
                                          RelationSet const&  relations,
                                          SearchLimits        limits) {
    require_valid(a);
    Family const family = a.family();

    std::array<std::vector<std::unique_ptr<WordSearch>>, 2> searches;
    for (std::size_t i = 0; i < 2; ++i) {
      searches[i].resize(a.parts[i]->size());
    }
    auto search_from = [&](std::size_t i, ElementIndex s) -> WordSearch& {
      auto& slot = searches[i][s];
      if (!slot) {
        slot = std::make_unique<WordSearch>(family, relations, embed(family, i, s), limits);
      }
      return *slot;
    };

    EmbeddingReport report;
    for (std::size_t i = 0; i < 2; ++i) {
      auto& inj = report.injectivity[i];
      for (ElementIndex s = 0; s < a.parts[i]->size(); ++s) {
        for (ElementIndex t = s + 1; t < a.parts[i]->size(); ++t) {
          auto v = search_from(i, s).find(embed(family, i, t));
          if (auto* eq = std::get_if<Equal>(&v)) {
            inj.collisions.push_back({i, s, t, std::move(eq->chain)});
          }
        }
      }
      inj.none_found_within_bound = inj.collisions.empty();
    }

    for (ElementIndex s1 = 0; s1 < a.parts[0]->size(); ++s1) {
      for (ElementIndex s2 = 0; s2 < a.parts[1]->size(); ++s2) {
        auto v = search_from(0, s1).find(embed(family, 1, s2));
        auto* eq = std::get_if<Equal>(&v);
        if (eq == nullptr) {
          continue;
        }
        CrossPair pair{s1, s2, std::move(eq->chain), std::nullopt, {}};
        for (ElementIndex u = 0; u < a.core->size(); ++u) {
          auto r = search_from(0, (*a.maps[0])(u)).find(embed(family, 0, s1));
          if (auto* req = std::get_if<Equal>(&r)) {
            pair.resolving_u      = u;
            pair.resolution_chain = std::move(req->chain);
            break;
          }
        }
        report.intersection.push_back(std::move(pair));
      }
    }

    for (auto const& part : searches) {
      for (auto const& s : part) {
        report.budget_exhausted = report.budget_exhausted || (s && s->budget_exhausted());
      }
    }
    bool const violation = !report.injectivity[0].collisions.empty()
                           || !report.injectivity[1].collisions.empty();
    report.verdict = violation ? EmbeddingVerdict::violation_found
                               : EmbeddingVerdict::consistent_within_bound;
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Pushout mediator
  ////////////////////////////////////////////////////////////////////////

  MediatorReport pushout_mediator(GammaAmalgam const&      a,
                                  RelationSet const&       relations,
                                  GammaSemigroup const&    v,
                                  GammaHomomorphism const& g1,
                                  GammaHomomorphism const& g2,
                                  SearchLimits             limits) {
    require_valid(a);
    std::array<GammaHomomorphism const*, 2> const g{&g1, &g2};
    for (std::size_t i = 0; i < 2; ++i) {
      if (!(g[i]->source() == *a.parts[i]) || !(g[i]->target() == v)) {
        throw Error(ErrorKind::invalid_argument,
                    "'" + g[i]->name() + "' does not map '" + a.parts[i]->name()
                        + "' into '" + v.name() + "'");
      }
    }
    auto const& u  = *a.core;
    auto const& f1 = *a.maps[0];
    auto const& f2 = *a.maps[1];
    for (ElementIndex x = 0; x < u.size(); ++x) {
      if (g1(f1(x)) != g2(f2(x))) {
        throw Error(ErrorKind::commuting_square_fails,
                    "g1 f1(" + u.element_name(x) + ") = " + v.element_name(g1(f1(x)))
                        + " but g2 f2(" + u.element_name(x)
                        + ") = " + v.element_name(g2(f2(x))));
      }
    }
    require_homomorphism(g1);
    require_homomorphism(g2);

    Family const                         family = a.family();
    std::vector<GammaHomomorphism> const psi{g1, g2};
    FoldOptions const options{a.mode == Mode::disjoint_families};
    auto delta = [&](Word const& w) { return fold(family, w, v, psi, options); };
    auto v_gamma = [&](GammaLetter gl) -> GammaIndex {
      if (gl.part) {
        return g[*gl.part]->gamma(gl.gamma);
      }
      return v.gamma_index(family.shared_gammas()[gl.gamma]);
    };

    MediatorReport report;
    for (auto const& p : relations.pairs) {
      auto lhs = delta(embed(family, 0, p.first.element));
      auto rhs = delta(embed(family, 1, p.second.element));
      if (lhs != rhs) {
        report.generators_respected = false;
        report.failures.push_back("R pair (" + family.name_of(p.first) + ", "
                                  + family.name_of(p.second) + ") maps to "
                                  + v.element_name(lhs) + " and " + v.element_name(rhs));
      }
    }
    for (auto const& p : relations.gamma_pairs) {
      if (v_gamma(p.first) != v_gamma(p.second)) {
        report.generators_respected = false;
        report.failures.push_back("gamma pair (" + family.name_of(p.first) + ", "
                                  + family.name_of(p.second) + ") maps to different gammas");
      }
    }

    for (std::size_t i = 0; i < 2; ++i) {
      for (ElementIndex s = 0; s < a.parts[i]->size(); ++s) {
        auto const rep = mu(a, relations, i, s, limits);
        if (delta(rep) != (*g[i])(s)) {
          report.diagram_commutes = false;
          report.failures.push_back("δ(μ" + std::to_string(i + 1) + "("
                                    + a.parts[i]->element_name(s) + ")) = "
                                    + v.element_name(delta(rep)) + " but g"
                                    + std::to_string(i + 1) + "("
                                    + a.parts[i]->element_name(s)
                                    + ") = " + v.element_name((*g[i])(s)));
        }
      }
    }

    std::vector<GammaLetter> gammas;
    if (family.mode() == Mode::same_gamma) {
      gammas = family.gammas_of(0);
    } else {
      for (std::size_t i = 0; i < 2; ++i) {
        auto gs = family.gammas_of(i);
        gammas.insert(gammas.end(), gs.begin(), gs.end());
      }
    }
    auto const words = enumerate_words(family, 2);
    for (auto const& x : words) {
      for (auto const& gl : gammas) {
        for (auto const& y : words) {
          ++report.products_checked;
          auto lhs = delta(gamma_multiply(family, x, gl, y));
          auto rhs = v.product(delta(x), v_gamma(gl), delta(y));
          if (lhs != rhs && report.products_respected) {
            report.products_respected = false;
            report.failures.push_back("δ(" + format(family, x) + " " + family.name_of(gl)
                                      + " " + format(family, y) + ") differs from the product"
                                      + " of the images");
          }
        }
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Complete α-regularity condition
  ////////////////////////////////////////////////////////////////////////

  NecessaryVerdict decide_necessary_condition(RegularityReport const& s1,
                                              RegularityReport const& s2,
                                              RegularityReport const& u) {
    NecessaryVerdict verdict{NecessaryStatus::satisfied, {}, std::nullopt};
    if (!s1.is_completely_alpha_regular) {
      verdict.failing_parts.push_back(0);
    }
    if (!s2.is_completely_alpha_regular) {
      verdict.failing_parts.push_back(1);
    }
    if (!verdict.failing_parts.empty()) {
      verdict.status = NecessaryStatus::not_applicable;
    } else if (!u.is_completely_alpha_regular) {
      verdict.status  = NecessaryStatus::not_embeddable;
      verdict.witness = u.first_not_completely_regular();
    }
    return verdict;
  }

  NecessaryVerdict necessary_condition(GammaAmalgam const& a) {
    require_valid(a);
    return decide_necessary_condition(
        classify(*a.parts[0]), classify(*a.parts[1]), classify(*a.core));
  }

}  // namespace gsg
