#include "doctest.h"
#include "oracles.hpp"

using namespace gsg;

namespace {
  using Ptr = std::shared_ptr<GammaSemigroup const>;

  struct Loaded {
    Workspace    ws;
    GammaAmalgam a;
    RelationSet  r;
    Family       family;

    Word word(std::string const& text) const {
      return parse_word(family, text);
    }
  };

  Loaded load(std::string const& file, std::string const& name, bool identify = false) {
    auto ws = test::load_fixture(file);
    auto a  = *ws.amalgam(name);
    auto r  = relation_generators(a, identify);
    auto f  = a.family();
    return {std::move(ws), std::move(a), std::move(r), std::move(f)};
  }

  // Asserts Equal and replays the chain.
  std::vector<RewriteStep> proven(Loaded const& l, Word const& w1, Word const& w2,
                                  SearchLimits limits = {}) {
    auto v = words_equal_within(l.a, l.r, w1, w2, limits);
    auto* eq = std::get_if<Equal>(&v);
    REQUIRE(eq != nullptr);
    CHECK(test::record_replay(l.a, l.r, w1, w2, eq->chain));
    return eq->chain;
  }

  Ptr point(std::string const& name, std::string const& e) {
    return std::make_shared<GammaSemigroup const>(
        GammaSemigroup::from_function(name, {e}, {"g"}, [](auto, auto, auto) { return 0; }));
  }

  std::shared_ptr<GammaHomomorphism const> hom(std::string name, Ptr s, Ptr t,
                                               std::vector<ElementIndex> m) {
    std::vector<GammaIndex> g(s->gamma_count());
    for (std::size_t i = 0; i < g.size(); ++i) {
      g[i] = i;
    }
    return std::make_shared<GammaHomomorphism const>(std::move(name), s, t, std::move(m), g);
  }

  bool has_issue(GammaAmalgam const& a, ErrorKind k) {
    auto issues = validate_amalgam(a);
    return std::any_of(issues.begin(), issues.end(),
                       [k](AmalgamIssue const& i) { return i.kind == k; });
  }
}  // namespace

TEST_SUITE("amalgam") {
  TEST_CASE("validation of the trivial amalgam and broken variants") {
    auto l = load("trivial.gsg", "A");
    CHECK(validate_amalgam(l.a).empty());

    auto u  = point("U", "u");
    auto s1 = point("S1", "u1");
    auto clash = point("S2", "u1");
    GammaAmalgam bad{"X", u, {s1, clash}, {hom("f1", u, s1, {0}), hom("f2", u, clash, {0})}};
    CHECK(has_issue(bad, ErrorKind::name_clash));

    auto z2 = std::make_shared<GammaSemigroup const>(GammaSemigroup::from_function(
        "Z2", {"v0", "v1"}, {"g"}, [](auto a, auto, auto b) { return (a + b) % 2; }));
    auto zero = std::make_shared<GammaSemigroup const>(GammaSemigroup::from_function(
        "Zero", {"w"}, {"g"}, [](auto, auto, auto) { return 0; }));
    auto z2b = std::make_shared<GammaSemigroup const>(GammaSemigroup::from_function(
        "Z2b", {"y0", "y1"}, {"g"}, [](auto a, auto, auto b) { return (a + b) % 2; }));
    GammaAmalgam collapse{"Y", z2, {zero, z2b},
                          {hom("f1", z2, zero, {0, 0}), hom("f2", z2, z2b, {0, 1})}};
    auto issues = validate_amalgam(collapse);
    REQUIRE(issues.size() == 1);
    CHECK(issues[0].kind == ErrorKind::not_monomorphism);
    CHECK(issues[0].message.find("f1") == 0);
    CHECK_THROWS_AS(require_valid(collapse), Error);

    auto h = std::make_shared<GammaSemigroup const>(
        GammaSemigroup::from_function("H", {"h0"}, {"h"}, [](auto, auto, auto) { return 0; }));
    GammaAmalgam mixed{"W", u, {s1, h},
                       {hom("f1", u, s1, {0}),
                        std::make_shared<GammaHomomorphism const>("f2", u, h,
                                                                  std::vector<ElementIndex>{0},
                                                                  std::vector<GammaIndex>{0})}};
    CHECK(has_issue(mixed, ErrorKind::gamma_mismatch));
  }

  TEST_CASE("relation generators") {
    auto l = load("trivial.gsg", "A");
    REQUIRE(l.r.pairs.size() == 1);
    CHECK(l.family.name_of(l.r.pairs[0].first) == "u1");
    CHECK(l.family.name_of(l.r.pairs[0].second) == "u2");

    auto c = load("z2_copies.gsg", "Z");
    REQUIRE(c.r.pairs.size() == 2);
    CHECK(c.family.name_of(c.r.pairs[0].first) == "p0");
    CHECK(c.family.name_of(c.r.pairs[0].second) == "q0");
    CHECK(c.family.name_of(c.r.pairs[1].first) == "p1");
    CHECK(c.family.name_of(c.r.pairs[1].second) == "q1");
    CHECK(c.r.gamma_pairs.empty());
  }

  TEST_CASE("identify-elements adds pairs outside the product image") {
    // U = {u, v} with every product u: v is not a product.
    auto make = [](std::string const& name, std::string const& x, std::string const& y) {
      return std::make_shared<GammaSemigroup const>(
          GammaSemigroup::from_function(name, {x, y}, {"g"}, [](auto, auto, auto) { return 0; }));
    };
    auto u  = make("U", "u", "v");
    auto s1 = make("S1", "u1", "v1");
    auto s2 = make("S2", "u2", "v2");
    GammaAmalgam a{"I", u, {s1, s2}, {hom("f1", u, s1, {0, 1}), hom("f2", u, s2, {0, 1})}};
    CHECK(relation_generators(a, false).pairs.size() == 1);
    CHECK(relation_generators(a, true).pairs.size() == 2);
  }

  TEST_CASE("word equality on the trivial amalgam") {
    auto l = load("trivial.gsg", "A");
    CHECK(proven(l, l.word("u1"), l.word("u1")).empty());
    auto chain = proven(l, l.word("u1"), l.word("u2"), {4, 200'000});
    REQUIRE(chain.size() == 1);
    CHECK(chain[0].kind == MoveKind::substitute);
  }

  TEST_CASE("left-zero amalgam: (a) and (b) stay apart") {
    auto l = load("left_zero_amalgam.gsg", "B");
    auto v = words_equal_within(l.a, l.r, l.word("a"), l.word("b"), {4, 200'000});
    auto* inc = std::get_if<InconclusiveWithinBound>(&v);
    REQUIRE(inc != nullptr);
    CHECK(inc->bound == 4);
    CHECK_FALSE(inc->budget_exhausted);
    proven(l, l.word("a"), l.word("c"));
  }

  TEST_CASE("mu picks the least proven word") {
    auto t = load("trivial.gsg", "A");
    CHECK(format(t.family, mu(t.a, t.r, 0, 0)) == "u1");
    CHECK(format(t.family, mu(t.a, t.r, 1, 0)) == "u1");

    auto l = load("left_zero_amalgam.gsg", "B");
    CHECK(format(l.family, mu(l.a, l.r, 0, 1)) == "b");
    CHECK(format(l.family, mu(l.a, l.r, 1, 0)) == "a");
  }

  TEST_CASE("mu respects the core maps") {
    for (auto [file, name] : {std::pair{"trivial.gsg", "A"}, std::pair{"z2_copies.gsg", "Z"},
                              std::pair{"left_zero_amalgam.gsg", "B"}}) {
      auto l = load(file, name);
      for (ElementIndex u = 0; u < l.a.core->size(); ++u) {
        auto m1 = mu(l.a, l.r, 0, (*l.a.maps[0])(u));
        auto m2 = mu(l.a, l.r, 1, (*l.a.maps[1])(u));
        proven(l, m1, m2);
      }
    }
  }

  TEST_CASE("natural embedding reports") {
    {
      auto l = load("trivial.gsg", "A");
      auto rep = check_natural_embedding(l.a, l.r, {4, 200'000});
      CHECK(rep.verdict == EmbeddingVerdict::consistent_within_bound);
      REQUIRE(rep.intersection.size() == 1);
      CHECK(rep.intersection[0].resolving_u == ElementIndex{0});
      CHECK(rep.all_resolved());
      CHECK(test::record_replays(l.a, l.r, rep));
    }
    {
      auto l = load("left_zero_amalgam.gsg", "B");
      auto rep = check_natural_embedding(l.a, l.r);
      CHECK(rep.verdict == EmbeddingVerdict::consistent_within_bound);
      CHECK(rep.injectivity[0].none_found_within_bound);
      REQUIRE(rep.intersection.size() == 1);
      CHECK(rep.intersection[0].s1 == 0);
      CHECK(rep.intersection[0].resolving_u == ElementIndex{0});
      CHECK(test::record_replays(l.a, l.r, rep));
    }
    {
      auto l = load("point_z2.gsg", "E");
      auto rep = check_natural_embedding(l.a, l.r, {4, 200'000});
      CHECK(rep.injectivity[0].collisions.empty());
      CHECK(rep.injectivity[1].collisions.empty());
      REQUIRE(rep.intersection.size() == 1);
      CHECK(l.a.parts[0]->element_name(rep.intersection[0].s1) == "z0");
      CHECK(rep.intersection[0].resolving_u == ElementIndex{0});
      CHECK(test::record_replays(l.a, l.r, rep));
    }
  }

  TEST_CASE("a part with a zero stays injective") {
    auto z2 = std::make_shared<GammaSemigroup const>(GammaSemigroup::from_function(
        "U", {"u0", "u1"}, {"g"}, [](auto a, auto, auto b) { return (a + b) % 2; }));
    auto p  = std::make_shared<GammaSemigroup const>(GammaSemigroup::from_function(
        "P", {"p0", "p1"}, {"g"}, [](auto a, auto, auto b) { return (a + b) % 2; }));
    // Q: {q0, q1, e} where q0, q1 form Z2 and e is a zero.
    auto q = std::make_shared<GammaSemigroup const>(GammaSemigroup::from_function(
        "Q", {"q0", "q1", "e"}, {"g"},
        [](auto a, auto, auto b) -> std::size_t { return (a == 2 || b == 2) ? 2 : (a + b) % 2; }));
    GammaAmalgam a{"C", z2, {p, q}, {hom("f1", z2, p, {0, 1}), hom("f2", z2, q, {0, 1})}};
    REQUIRE(validate_amalgam(a).empty());
    auto r   = relation_generators(a, false);
    auto rep = check_natural_embedding(a, r, {4, 200'000});
    CHECK(rep.injectivity[0].collisions.empty());
    CHECK(test::record_replays(a, r, rep));
  }

  TEST_CASE("disjoint families substitute gamma letters") {
    auto l = load("disjoint.gsg", "D");
    REQUIRE(l.r.gamma_pairs.size() == 1);
    CHECK(l.family.name_of(l.r.gamma_pairs[0].first) == "g1");
    CHECK(l.family.name_of(l.r.gamma_pairs[0].second) == "g2");
    auto chain = proven(l, l.word("a1 g1 b1"), l.word("a1 g2 b1"));
    CHECK(std::any_of(chain.begin(), chain.end(),
                      [](RewriteStep const& s) { return s.kind == MoveKind::substitute_gamma; }));
    proven(l, l.word("a0"), l.word("b0"));
  }

  TEST_CASE("equal verdicts are monotone in the bound") {
    auto l = load("z2_copies.gsg", "Z");
    for (ElementIndex u = 0; u < 2; ++u) {
      auto w1 = embed(l.family, 0, u);
      auto w2 = embed(l.family, 1, u);
      for (std::size_t bound = 1; bound <= 6; ++bound) {
        CHECK(is_equal(words_equal_within(l.a, l.r, w1, w2, {bound, 200'000})));
      }
    }
    // p1 g q1 equals p1 g p1 = p0 after one substitution and a merge.
    proven(l, l.word("p1 g q1"), l.word("p0"));
  }

  TEST_CASE("budget exhaustion is reported as inconclusive") {
    auto l = load("z2_copies.gsg", "Z");
    auto v = words_equal_within(l.a, l.r, l.word("p0"), l.word("p1"), {6, 10});
    auto* inc = std::get_if<InconclusiveWithinBound>(&v);
    REQUIRE(inc != nullptr);
    CHECK(inc->budget_exhausted);
    CHECK(inc->visited == 10);
  }

  TEST_CASE("replay rejects tampered chains") {
    auto l     = load("z2_copies.gsg", "Z");
    auto chain = proven(l, l.word("p1 g q1"), l.word("p0"));
    REQUIRE_FALSE(chain.empty());
    auto bad = chain;
    bad[0].result.letters[0] = Letter{0, 0};
    CHECK(replay_chain(l.a, l.r, l.word("p1 g q1"), l.word("p0"), bad).has_value());
    CHECK(replay_chain(l.a, l.r, l.word("p1 g q1"), l.word("p1"), chain).has_value());
    std::vector<RewriteStep> fake{{MoveKind::merge, 0, l.word("p0").sequence()}};
    CHECK(replay_chain(l.a, l.r, l.word("p1 g q1"), l.word("p0"), fake).has_value());
  }

  TEST_CASE("mode mismatch") {
    auto l    = load("z2_copies.gsg", "Z");
    auto disj = load("disjoint.gsg", "D");
    CHECK_THROWS_AS(words_equal_within(l.a, l.r, disj.word("a0"), disj.word("b0")), Error);
  }

  TEST_CASE("pushout mediator") {
    {
      auto l = load("trivial.gsg", "A");
      auto rep = pushout_mediator(l.a, l.r, *l.ws.semigroup("V"), *l.ws.homomorphism("g1"),
                                  *l.ws.homomorphism("g2"));
      CHECK(rep.all_pass());
    }
    auto l  = load("z2_copies.gsg", "Z");
    auto v  = l.ws.semigroup("V");
    auto g1 = l.ws.homomorphism("g1");
    auto g2 = l.ws.homomorphism("g2");
    auto rep = pushout_mediator(l.a, l.r, *v, *g1, *g2);
    CHECK(rep.all_pass());
    CHECK(rep.products_checked == 12 * 12);
    std::vector<GammaHomomorphism> psi{*g1, *g2};
    CHECK(fold(l.family, l.word("p1 g q1"), *v, psi) == 0);

    try {
      pushout_mediator(l.a, l.r, *v, *g1, *l.ws.homomorphism("g2swap"));
      FAIL("expected CommutingSquareFails");
    } catch (Error const& e) {
      CHECK(e.kind() == ErrorKind::commuting_square_fails);
      CHECK(e.detail().find("f1(u0)") != std::string::npos);
    }
  }

  TEST_CASE("necessary condition branch table") {
    auto sat = load("z2_copies.gsg", "Z");
    CHECK(necessary_condition(sat.a).status == NecessaryStatus::satisfied);

    auto na = load("k2_amalgam.gsg", "N");
    auto v  = necessary_condition(na.a);
    CHECK(v.status == NecessaryStatus::not_applicable);
    CHECK(v.failing_parts == std::vector<std::size_t>{1});

    auto good = classify(*sat.a.core);
    auto k2   = classify(*na.a.parts[1]);
    auto ne   = decide_necessary_condition(good, good, k2);
    CHECK(ne.status == NecessaryStatus::not_embeddable);
    CHECK(ne.witness == ElementIndex{0});
    auto both = decide_necessary_condition(k2, k2, good);
    CHECK(both.failing_parts == std::vector<std::size_t>{0, 1});
  }

  TEST_CASE("every chain produced in this suite replayed") {
    CHECK(test::replay_log().failures == 0);
    CHECK(test::replay_log().replays > 0);
  }
}
