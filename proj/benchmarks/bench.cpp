#include <benchmark/benchmark.h>

#include "gsg/gsg.hpp"

namespace {
  gsg::GammaSemigroup cyclic(std::size_t n, std::size_t k) {
    std::vector<std::string> els, gammas;
    for (std::size_t i = 0; i < n; ++i) {
      els.push_back("e" + std::to_string(i));
    }
    for (std::size_t j = 0; j < k; ++j) {
      gammas.push_back("g" + std::to_string(j));
    }
    return gsg::GammaSemigroup::from_function(
        "Z", els, gammas, [n](std::size_t a, std::size_t j, std::size_t b) { return (a + b + j) % n; });
  }

  void associativity(benchmark::State& state) {
    auto const s = cyclic(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) {
      benchmark::DoNotOptimize(gsg::check_associativity(s));
    }
    state.SetComplexityN(state.range(0));
  }
  BENCHMARK(associativity)->RangeMultiplier(2)->Range(4, 32)->Complexity();

  void congruence(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    auto const s = std::make_shared<gsg::GammaSemigroup const>(cyclic(n, 2));
    std::vector<std::pair<gsg::ElementIndex, gsg::ElementIndex>> seed{{0, n / 2}};
    for (auto _ : state) {
      benchmark::DoNotOptimize(gsg::generate_congruence(s, seed));
    }
  }
  BENCHMARK(congruence)->RangeMultiplier(2)->Range(4, 64);

  void word_search(benchmark::State& state) {
    auto z2 = [](std::string name, std::string p) {
      return std::make_shared<gsg::GammaSemigroup const>(gsg::GammaSemigroup::from_function(
          std::move(name), {p + "0", p + "1"}, {"g"},
          [](std::size_t a, std::size_t, std::size_t b) { return (a + b) % 2; }));
    };
    auto u = z2("U", "u"), p = z2("P", "p"), q = z2("Q", "q");
    std::vector<gsg::GammaIndex> g{0};
    gsg::GammaAmalgam a{"Z", u, {p, q},
                        {std::make_shared<gsg::GammaHomomorphism const>(
                             "f1", u, p, std::vector<gsg::ElementIndex>{0, 1}, g),
                         std::make_shared<gsg::GammaHomomorphism const>(
                             "f2", u, q, std::vector<gsg::ElementIndex>{0, 1}, g)}};
    auto const r = gsg::relation_generators(a, false);
    auto const f = a.family();
    gsg::SearchLimits const limits{static_cast<std::size_t>(state.range(0)), 200'000};
    for (auto _ : state) {
      gsg::WordSearch search(f, r, gsg::embed(f, 0, 1), limits);
      search.run();
      benchmark::DoNotOptimize(search.visited());
    }
  }
  BENCHMARK(word_search)->DenseRange(2, 6);
}  // namespace
BENCHMARK_MAIN();
