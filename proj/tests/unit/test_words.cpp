#include "doctest.h"
#include "oracles.hpp"

using namespace gsg;

namespace {
  using Ptr = std::shared_ptr<GammaSemigroup const>;

  Ptr z2(std::string const& gamma = "g") {
    return std::make_shared<GammaSemigroup const>(GammaSemigroup::from_function(
        "Z2", {"0", "1"}, {gamma}, [](auto a, auto, auto b) { return (a + b) % 2; }));
  }

  Ptr lz(std::string const& gamma = "g") {
    return std::make_shared<GammaSemigroup const>(GammaSemigroup::from_function(
        "L", {"p", "q"}, {gamma}, [](auto a, auto, auto) { return a; }));
  }

  Family pair_family() {
    return Family({z2(), lz()}, Mode::same_gamma);
  }

  Sequence seq(Family const& f, std::string const& text) {
    return parse_sequence(f, text);
  }

  std::string fmt(Family const& f, Word const& w) {
    return format(f, w);
  }

  ErrorKind kind_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.kind();
    }
    FAIL("expected an exception");
    return ErrorKind::invalid_argument;
  }
}  // namespace

TEST_SUITE("words") {
  TEST_CASE("embed gives one-letter words") {
    auto f = pair_family();
    auto a = embed(f, 0, "1");
    CHECK(a.length() == 1);
    CHECK(a.letters()[0] == Letter{0, 1});
    auto p = embed(f, 1, "p");
    CHECK(p.letters()[0] == Letter{1, 0});
    CHECK(kind_of([&] { embed(f, 0, "z"); }) == ErrorKind::unknown_identifier);
    CHECK(kind_of([&] { embed(f, 0, "p"); }) == ErrorKind::unknown_identifier);
  }

  TEST_CASE("normalize merges left to right") {
    auto f = pair_family();
    CHECK(fmt(f, normalize(f, seq(f, "1 g 1"))) == "0");
    CHECK(fmt(f, normalize(f, seq(f, "1 g p"))) == "1 g p");
    CHECK(fmt(f, normalize(f, seq(f, "1 g 1 g p g q"))) == "0 g p");
  }

  TEST_CASE("normalize rejects malformed input") {
    auto     f = pair_family();
    Sequence empty;
    CHECK(kind_of([&] { normalize(f, empty); }) == ErrorKind::malformed_sequence);
    Sequence uneven{{Letter{0, 0}, Letter{0, 1}}, {}};
    CHECK(kind_of([&] { normalize(f, uneven); }) == ErrorKind::malformed_sequence);
    Sequence range{{Letter{0, 5}}, {}};
    CHECK(kind_of([&] { normalize(f, range); }) == ErrorKind::malformed_sequence);
    Sequence pointed{{Letter{0, 0}, Letter{1, 0}}, {GammaLetter{0, 0}}};
    CHECK(kind_of([&] { normalize(f, pointed); }) == ErrorKind::mode_mismatch);
  }

  TEST_CASE("gamma_multiply follows the junction case split") {
    auto f = pair_family();
    auto g = f.gamma("g");
    CHECK(fmt(f, gamma_multiply(f, parse_word(f, "1"), g, parse_word(f, "1"))) == "0");
    CHECK(fmt(f, gamma_multiply(f, parse_word(f, "1"), g, parse_word(f, "p"))) == "1 g p");
    CHECK(fmt(f, gamma_multiply(f, parse_word(f, "1 g p"), g, parse_word(f, "q"))) == "1 g p");
  }

  TEST_CASE("fold evaluates through the component maps") {
    auto                           f = pair_family();
    auto                           t = z2();
    std::vector<GammaHomomorphism> psi{identity(f.member_ptr(0), "id"),
                                       GammaHomomorphism("zero", f.member_ptr(1), t, {0, 0}, {0})};
    CHECK(fold(f, parse_word(f, "1"), *t, psi) == 1);
    CHECK(fold(f, parse_word(f, "1 g p"), *t, psi) == 1);
    CHECK(fold(f, parse_word(f, "0 g q g 1"), *t, psi) == 1);
    std::vector<GammaHomomorphism> short_psi{psi[0]};
    CHECK(kind_of([&] { fold(f, parse_word(f, "1"), *t, short_psi); })
          == ErrorKind::missing_homomorphism);
  }

  TEST_CASE("free product is associative on short words") {
    auto f     = pair_family();
    auto words = enumerate_words(f, 2);
    auto g     = f.gamma("g");
    for (auto const& a : words) {
      for (auto const& b : words) {
        for (auto const& c : words) {
          CHECK(gamma_multiply(f, gamma_multiply(f, a, g, b), g, c)
                == gamma_multiply(f, a, g, gamma_multiply(f, b, g, c)));
        }
      }
    }
  }

  TEST_CASE("every word is the product of its letters") {
    auto f = pair_family();
    for (auto const& w : enumerate_words(f, 3)) {
      auto acc = embed(f, w.letters()[0].part, w.letters()[0].element);
      for (std::size_t i = 0; i < w.gammas().size(); ++i) {
        auto const x = w.letters()[i + 1];
        acc          = gamma_multiply(f, acc, w.gammas()[i], embed(f, x.part, x.element));
      }
      CHECK(acc == w);
    }
  }

  TEST_CASE("normalize is idempotent and matches the naive reducer") {
    auto f   = pair_family();
    auto all = std::vector<Letter>{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    // Every raw sequence with up to four element letters.
    for (std::size_t m = 1; m <= 4; ++m) {
      std::vector<std::size_t> pick(m, 0);
      while (true) {
        Sequence s;
        for (std::size_t i = 0; i < m; ++i) {
          s.letters.push_back(all[pick[i]]);
          if (i > 0) {
            s.gammas.push_back(GammaLetter{std::nullopt, 0});
          }
        }
        auto w = normalize(f, s);
        CHECK(is_reduced(f, w.sequence()));
        CHECK(normalize(f, w.sequence()) == w);
        CHECK(w.sequence() == test::oracle_normalize(f, s));
        std::size_t i = 0;
        while (i < m && ++pick[i] == all.size()) {
          pick[i++] = 0;
        }
        if (i == m) {
          break;
        }
      }
    }
  }

  TEST_CASE("fold is a homomorphism and extends the component maps") {
    auto f     = pair_family();
    auto words = enumerate_words(f, 2);
    auto g     = f.gamma("g");
    auto k2    = std::make_shared<GammaSemigroup const>(GammaSemigroup::from_function(
        "K2", {"a", "b"}, {"g"}, [](auto, auto, auto) { return 1; }));
    for (auto const& t : {z2(), lz(), k2}) {
      auto h0 = test::all_homomorphisms(f.member_ptr(0), t);
      auto h1 = test::all_homomorphisms(f.member_ptr(1), t);
      for (auto const& p0 : h0) {
        for (auto const& p1 : h1) {
          std::vector<GammaHomomorphism> psi{p0, p1};
          for (std::size_t i = 0; i < 2; ++i) {
            for (ElementIndex x = 0; x < 2; ++x) {
              CHECK(fold(f, embed(f, i, x), *t, psi) == psi[i](x));
            }
          }
          for (auto const& a : words) {
            CHECK(fold(f, a, *t, psi) == test::oracle_fold(f, a.sequence(), *t, psi));
            for (auto const& b : words) {
              CHECK(fold(f, gamma_multiply(f, a, g, b), *t, psi)
                    == t->product(fold(f, a, *t, psi), 0, fold(f, b, *t, psi)));
            }
          }
        }
      }
    }
  }

  TEST_CASE("relabelling the family is a structure-preserving bijection") {
    // The same free product built with the members in the other order.
    auto f  = pair_family();
    auto f2 = Family({lz(), z2()}, Mode::same_gamma);
    auto relabel = [](Family const& from, Family const& to, Word const& w) {
      return parse_word(to, format(from, w));
    };
    auto g  = f.gamma("g");
    auto g2 = f2.gamma("g");
    auto words = enumerate_words(f, 2);
    for (auto const& a : words) {
      CHECK(relabel(f2, f, relabel(f, f2, a)) == a);
      for (auto const& b : words) {
        CHECK(relabel(f, f2, gamma_multiply(f, a, g, b))
              == gamma_multiply(f2, relabel(f, f2, a), g2, relabel(f, f2, b)));
      }
    }
    CHECK(enumerate_words(f2, 2).size() == words.size());
  }

  TEST_CASE("enumerate_words counts and order") {
    auto f = pair_family();
    CHECK(enumerate_words(f, 1).size() == 4);
    CHECK(enumerate_words(f, 2).size() == 12);
    auto w3 = enumerate_words(f, 3);
    CHECK(w3.size() == 28);
    CHECK(std::is_sorted(w3.begin(), w3.end()));
    for (auto const& w : w3) {
      CHECK(is_reduced(f, w.sequence()));
    }
  }

  TEST_CASE("family construction checks names") {
    CHECK(kind_of([] { Family({z2(), z2()}, Mode::same_gamma); }) == ErrorKind::name_clash);
    CHECK(kind_of([] { Family({z2("g"), lz("h")}, Mode::same_gamma); })
          == ErrorKind::gamma_mismatch);
    CHECK(kind_of([] { Family({z2("g"), lz("g")}, Mode::disjoint_families); })
          == ErrorKind::name_clash);
    CHECK_NOTHROW(Family({z2("g"), lz("h")}, Mode::disjoint_families));
  }

  TEST_CASE("disjoint families merge only inside one member") {
    auto f  = Family({z2("g"), lz("h")}, Mode::disjoint_families);
    auto g  = f.gamma("g");
    auto h  = f.gamma("h");
    auto w1 = parse_word(f, "1");
    CHECK(fmt(f, gamma_multiply(f, w1, g, w1)) == "0");
    // The gamma belongs to the other member: kept as a separator.
    CHECK(fmt(f, gamma_multiply(f, w1, h, w1)) == "1 h 1");
    CHECK(fmt(f, gamma_multiply(f, parse_word(f, "p"), h, parse_word(f, "q"))) == "p");
    CHECK(fmt(f, normalize(f, seq(f, "1 h 1"))) == "1 h 1");
    CHECK(kind_of([&] { normalize(f, seq(f, "1 h 1"), true); })
          == ErrorKind::cross_family_gamma);
    CHECK(kind_of([&] { fold(f, w1, *z2(), {}); }) == ErrorKind::mode_mismatch);
  }

  TEST_CASE("fold over disjoint families uses the gamma maps") {
    auto                           f = Family({z2("g"), lz("h")}, Mode::disjoint_families);
    auto                           t = z2("t");
    std::vector<GammaHomomorphism> psi{
        GammaHomomorphism("a", f.member_ptr(0), t, {0, 1}, {0}),
        GammaHomomorphism("b", f.member_ptr(1), t, {0, 0}, {0})};
    FoldOptions opts{true};
    CHECK(fold(f, parse_word(f, "1 h 1"), *t, psi, opts) == 0);
    CHECK(fold(f, parse_word(f, "1 g p"), *t, psi, opts) == 1);
  }

  TEST_CASE("mixing modes is rejected") {
    auto same = pair_family();
    auto disj = Family({z2("g"), lz("h")}, Mode::disjoint_families);
    auto a    = parse_word(same, "1");
    CHECK(kind_of([&] { gamma_multiply(disj, a, disj.gamma("g"), a); })
          == ErrorKind::mode_mismatch);
  }

  TEST_CASE("word text syntax") {
    auto f = pair_family();
    CHECK(kind_of([&] { parse_word(f, "1 g"); }) == ErrorKind::malformed_sequence);
    CHECK(kind_of([&] { parse_word(f, ""); }) == ErrorKind::malformed_sequence);
    CHECK(kind_of([&] { parse_word(f, "1 g x"); }) == ErrorKind::unknown_identifier);
    CHECK(fmt(f, parse_word(f, "  1   g  p ")) == "1 g p");
    CHECK(to_string(Mode::disjoint_families) == "disjoint");
    CHECK(parse_mode("same-gamma") == Mode::same_gamma);
    CHECK_FALSE(parse_mode("other").has_value());
  }

  TEST_CASE("canonical order compares length first") {
    auto f = pair_family();
    CHECK(parse_word(f, "q") < parse_word(f, "0 g p"));
    CHECK(parse_word(f, "0") < parse_word(f, "1"));
    CHECK(parse_word(f, "1") < parse_word(f, "p"));
  }
}
