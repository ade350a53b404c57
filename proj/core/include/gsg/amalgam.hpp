#ifndef GSG_AMALGAM_HPP_
#define GSG_AMALGAM_HPP_

#include <array>          // for array
#include <cstddef>        // for size_t
#include <memory>         // for shared_ptr
#include <optional>       // for optional
#include <string>         // for string
#include <unordered_map>  // for unordered_map
#include <variant>        // for variant
#include <vector>         // for vector

#include "gamma_semigroup.hpp"
#include "homomorphism.hpp"
#include "regularity.hpp"
#include "words.hpp"

namespace gsg {

  //! A core U with monomorphisms f₁: U -> S₁ and f₂: U -> S₂.
  struct GammaAmalgam {
    std::string                                             name;
    std::shared_ptr<GammaSemigroup const>                   core;
    std::array<std::shared_ptr<GammaSemigroup const>, 2>    parts;
    std::array<std::shared_ptr<GammaHomomorphism const>, 2> maps;
    Mode                                                    mode = Mode::same_gamma;

    //! The alphabet {S₁, S₂} of the free product Δ.
    Family family() const;

    friend bool operator==(GammaAmalgam const& x, GammaAmalgam const& y);
  };

  struct AmalgamIssue {
    ErrorKind   kind;
    std::string message;
  };

  //! Every violated amalgam invariant; empty means valid.
  std::vector<AmalgamIssue> validate_amalgam(GammaAmalgam const& a);

  //! Throws the first issue found by validate_amalgam.
  void require_valid(GammaAmalgam const& a);

  //! (f₁′(p), f₂′(p)) for a product p of the core; `first` lives in S₁
  //! (pointer 0) and `second` in S₂ (pointer 1).
  struct RelationPair {
    Letter first;
    Letter second;

    friend auto operator<=>(RelationPair const&, RelationPair const&) = default;
  };

  //! (f₁″(γ₀), f₂″(γ₀)); used in DisjointFamilies mode only.
  struct GammaRelation {
    GammaLetter first;
    GammaLetter second;

    friend bool operator==(GammaRelation const&, GammaRelation const&) = default;
  };

  struct RelationSet {
    std::vector<RelationPair>  pairs;
    std::vector<GammaRelation> gamma_pairs;
  };

  //! The generators of ρ: one pair per distinct product uγ₀u′ of the core,
  //! plus (f₁′(u), f₂′(u)) for every u when \p identify_elements is set.
  //! Throws the first validation issue.
  RelationSet relation_generators(GammaAmalgam const& a, bool identify_elements);

  struct SearchLimits {
    //! Maximum number of element letters in an intermediate sequence.
    std::size_t bound = 6;
    //! Maximum number of distinct sequences visited.
    std::size_t budget = 200'000;
  };

  enum class MoveKind {
    substitute,        // a letter replaced by its R-partner
    substitute_gamma,  // a gamma letter replaced by its partner
    merge,             // (x, γ, y) replaced by xγy
    unmerge            // z replaced by (x, γ, y) with xγy = z
  };

  std::string_view to_string(MoveKind kind) noexcept;

  //! One move of a rewrite chain. `position` is the letter index for
  //! substitute and unmerge, and the site (gamma) index for merge and
  //! substitute_gamma.
  struct RewriteStep {
    MoveKind    kind;
    std::size_t position;
    Sequence    result;
  };

  struct Equal {
    std::vector<RewriteStep> chain;
  };

  struct InconclusiveWithinBound {
    std::size_t bound;
    std::size_t visited;
    bool        budget_exhausted;
  };

  using EqualityVerdict = std::variant<Equal, InconclusiveWithinBound>;

  inline bool is_equal(EqualityVerdict const& v) noexcept {
    return std::holds_alternative<Equal>(v);
  }

  //! Breadth-first search over sequences reachable from a start word by
  //! substitutions, merges and un-merges. Each move preserves the ρ-class,
  //! so reaching a sequence whose normal form is w proves start ρ w. The
  //! search is lazy and resumable: later queries reuse the explored graph.
  class WordSearch {
   public:
    WordSearch(Family family, RelationSet relations, Word start, SearchLimits limits);

    //! Explores until \p target is reached or the search is exhausted.
    EqualityVerdict find(Word const& target);

    //! Explores everything within the limits.
    void run();

    //! Least normal form reached so far (canonical order).
    Word least() const;

    //! Normal forms reached so far, in discovery order.
    std::vector<Word> discovered() const;

    std::size_t visited() const noexcept {
      return _nodes.size();
    }

    bool budget_exhausted() const noexcept {
      return _budget_hit;
    }

    bool done() const noexcept {
      return _budget_hit || _next == _nodes.size();
    }

    Word const& start() const noexcept {
      return _start;
    }

   private:
    struct Node {
      Sequence    seq;
      std::size_t parent;
      MoveKind    kind;
      std::size_t position;
    };

    struct Factor {
      Letter      x;
      GammaLetter gamma;
      Letter      y;
    };

    void                     expand();
    bool                     add(Sequence seq, std::size_t parent, MoveKind kind, std::size_t pos);
    std::vector<RewriteStep> chain_to(std::size_t node) const;

    Family                                       _family;
    RelationSet                                  _relations;
    SearchLimits                                 _limits;
    Word                                         _start;
    std::vector<std::vector<std::vector<Factor>>> _factors;  // [part][element]
    std::vector<Node>                            _nodes;
    std::unordered_map<std::string, std::size_t> _visited;
    std::unordered_map<std::string, std::size_t> _normal_forms;  // key -> first node
    std::vector<std::size_t>                     _normal_order;  // first nodes
    std::vector<Word>                            _normal_words;
    std::size_t                                  _next       = 0;
    bool                                         _budget_hit = false;
  };

  //! Bounded decision of w₁ ρ w₂. Equal is a proof; Inconclusive says
  //! nothing. Throws ModeMismatch.
  EqualityVerdict words_equal_within(GammaAmalgam const& a,
                                     RelationSet const&  relations,
                                     Word const&         w1,
                                     Word const&         w2,
                                     SearchLimits        limits = {});

  //! Checks a chain move by move against the tables and R, independently
  //! of the search. Returns a description of the first bad step, if any.
  std::optional<std::string> replay_chain(GammaAmalgam const&             a,
                                          RelationSet const&              relations,
                                          Word const&                     w1,
                                          Word const&                     w2,
                                          std::vector<RewriteStep> const& chain);

  //! μ_i(s): least word proven ρ-equal to (s) within the limits.
  Word mu(GammaAmalgam const& a,
          RelationSet const&  relations,
          std::size_t         part,
          ElementIndex        s,
          SearchLimits        limits = {});

  struct Collision {
    std::size_t              part;
    ElementIndex             s;
    ElementIndex             t;
    std::vector<RewriteStep> chain;
  };

  struct PartInjectivity {
    std::vector<Collision> collisions;
    bool                   none_found_within_bound = true;
  };

  struct CrossPair {
    ElementIndex                s1;
    ElementIndex                s2;
    std::vector<RewriteStep>    chain;
    //! u with (f₁′(u)) ρ (s₁), or nothing when unresolved within the bound.
    std::optional<ElementIndex> resolving_u;
    std::vector<RewriteStep>    resolution_chain;
  };

  enum class EmbeddingVerdict { violation_found, consistent_within_bound };

  struct EmbeddingReport {
    std::array<PartInjectivity, 2> injectivity;
    std::vector<CrossPair>         intersection;
    EmbeddingVerdict               verdict = EmbeddingVerdict::consistent_within_bound;
    bool                           budget_exhausted = false;

    bool all_resolved() const noexcept;
  };

  //! Searches for proofs that some μ_i is not one-one, and resolves every
  //! proven cross equality (s₁ ρ s₂) through the core.
  EmbeddingReport check_natural_embedding(GammaAmalgam const& a,
                                          RelationSet const&  relations,
                                          SearchLimits        limits = {});

  struct MediatorReport {
    bool                     generators_respected = true;
    bool                     diagram_commutes     = true;
    bool                     products_respected   = true;
    std::size_t              products_checked     = 0;
    std::vector<std::string> failures;

    bool all_pass() const noexcept {
      return generators_respected && diagram_commutes && products_respected;
    }
  };

  //! δ = fold through g₁, g₂ on Δ_U. Throws CommutingSquareFails (first u
  //! with g₁f₁(u) ≠ g₂f₂(u)), then NotAHomomorphism.
  MediatorReport pushout_mediator(GammaAmalgam const&      a,
                                  RelationSet const&       relations,
                                  GammaSemigroup const&    v,
                                  GammaHomomorphism const& g1,
                                  GammaHomomorphism const& g2,
                                  SearchLimits             limits = {});

  enum class NecessaryStatus { satisfied, not_applicable, not_embeddable };

  struct NecessaryVerdict {
    NecessaryStatus             status;
    //! Parts (0 or 1) that are not completely α-regular.
    std::vector<std::size_t>    failing_parts;
    //! First core element lacking a complete regularity witness.
    std::optional<ElementIndex> witness;
  };

  //! The branch table on precomputed classifications.
  NecessaryVerdict decide_necessary_condition(RegularityReport const& s1,
                                              RegularityReport const& s2,
                                              RegularityReport const& u);

  //! Classifies S₁, S₂ and U. Throws NotAssociative.
  NecessaryVerdict necessary_condition(GammaAmalgam const& a);

}  // namespace gsg

#endif  // GSG_AMALGAM_HPP_
