#include "oracles.hpp"

#include <algorithm>   // for sort
#include <filesystem>  // for directory_iterator
#include <fstream>     // for ifstream
#include <sstream>     // for ostringstream

#ifndef GSG_FIXTURE_DIR
#error "GSG_FIXTURE_DIR must be defined"
#endif

namespace gsg::test {

  std::string fixture_path(std::string const& name) {
    return std::string(GSG_FIXTURE_DIR) + "/" + name;
  }

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
  }

  Workspace load_fixture(std::string const& name) {
    return parse(read_file(fixture_path(name)));
  }

  std::vector<std::string> fixture_names() {
    std::vector<std::string> out;
    for (auto const& e : std::filesystem::directory_iterator(GSG_FIXTURE_DIR)) {
      if (e.path().extension() == ".gsg") {
        out.push_back(e.path().filename().string());
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::string> names(std::string const& prefix, std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(prefix + std::to_string(i));
    }
    return out;
  }

  namespace {
    template <typename Op>
    SemigroupPtr build(std::string name, std::size_t n, std::size_t k, std::string const& prefix,
                       Op op) {
      return std::make_shared<GammaSemigroup const>(
          GammaSemigroup::from_function(std::move(name), names(prefix, n), names("g", k), op));
    }
  }  // namespace

  SemigroupPtr cyclic(std::size_t n, std::size_t k, std::string const& prefix) {
    return build("Z" + std::to_string(n) + "_" + std::to_string(k), n, k, prefix,
                 [n](std::size_t a, std::size_t j, std::size_t b) { return (a + b + j) % n; });
  }

  SemigroupPtr left_zero(std::size_t n, std::size_t k, std::string const& prefix) {
    return build("L" + std::to_string(n), n, k, prefix,
                 [](std::size_t a, std::size_t, std::size_t) { return a; });
  }

  SemigroupPtr right_zero(std::size_t n, std::size_t k, std::string const& prefix) {
    return build("R" + std::to_string(n), n, k, prefix,
                 [](std::size_t, std::size_t, std::size_t b) { return b; });
  }

  SemigroupPtr constant(std::size_t n, std::size_t k, std::string const& prefix) {
    return build("K" + std::to_string(n), n, k, prefix,
                 [n](std::size_t, std::size_t, std::size_t) { return n - 1; });
  }

  SemigroupPtr with_cell(GammaSemigroup const& s,
                         ElementIndex          a,
                         GammaIndex            g,
                         ElementIndex          b,
                         ElementIndex          value) {
    return std::make_shared<GammaSemigroup const>(GammaSemigroup::from_function(
        s.name() + "'", s.elements(), s.gammas(),
        [&](std::size_t x, std::size_t k, std::size_t y) {
          return (x == a && k == g && y == b) ? value : s.product(x, k, y);
        }));
  }

  std::optional<std::array<std::size_t, 5>> oracle_first_violation(GammaSemigroup const& s) {
    std::size_t const n = s.size();
    std::size_t const g = s.gamma_count();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t x = 0; x < g; ++x) {
        for (std::size_t b = 0; b < n; ++b) {
          for (std::size_t y = 0; y < g; ++y) {
            for (std::size_t c = 0; c < n; ++c) {
              if (s.product(s.product(a, x, b), y, c) != s.product(a, x, s.product(b, y, c))) {
                return std::array<std::size_t, 5>{a, x, b, y, c};
              }
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  bool oracle_is_homomorphism(GammaHomomorphism const& f) {
    auto const& s = f.source();
    auto const& t = f.target();
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (std::size_t g = 0; g < s.gamma_count(); ++g) {
        for (std::size_t b = 0; b < s.size(); ++b) {
          if (f(s.product(a, g, b)) != t.product(f(a), f.gamma(g), f(b))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  namespace {
    // Advances a base-`radix` counter; false once it wraps around.
    bool next_tuple(std::vector<std::size_t>& digits, std::size_t radix) {
      for (auto& d : digits) {
        if (++d < radix) {
          return true;
        }
        d = 0;
      }
      return false;
    }

    std::vector<std::vector<std::size_t>> associative_ops(std::size_t n) {
      std::vector<std::vector<std::size_t>> out;
      std::vector<std::size_t>              t(n * n, 0);
      do {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) {
          for (std::size_t b = 0; b < n && ok; ++b) {
            for (std::size_t c = 0; c < n && ok; ++c) {
              ok = t[t[a * n + b] * n + c] == t[a * n + t[b * n + c]];
            }
          }
        }
        if (ok) {
          out.push_back(t);
        }
      } while (next_tuple(t, n));
      return out;
    }
  }  // namespace

  std::vector<SemigroupPtr> all_gamma_semigroups(std::size_t n, std::size_t g) {
    auto const               ops = associative_ops(n);
    std::vector<SemigroupPtr> out;
    std::vector<std::size_t> pick(g, 0);
    std::size_t              count = 0;
    do {
      bool ok = true;
      for (std::size_t x = 0; x < g && ok; ++x) {
        for (std::size_t y = 0; y < g && ok; ++y) {
          if (x == y) {
            continue;
          }
          auto const& p = ops[pick[x]];
          auto const& q = ops[pick[y]];
          for (std::size_t a = 0; a < n && ok; ++a) {
            for (std::size_t b = 0; b < n && ok; ++b) {
              for (std::size_t c = 0; c < n && ok; ++c) {
                ok = q[p[a * n + b] * n + c] == p[a * n + q[b * n + c]];
              }
            }
          }
        }
      }
      if (ok) {
        out.push_back(std::make_shared<GammaSemigroup const>(GammaSemigroup::from_function(
            "E" + std::to_string(n) + "_" + std::to_string(g) + "_" + std::to_string(count++),
            names("e", n), names("g", g),
            [&](std::size_t a, std::size_t k, std::size_t b) { return ops[pick[k]][a * n + b]; })));
      }
    } while (next_tuple(pick, ops.size()));
    return out;
  }

  std::vector<GammaHomomorphism> all_homomorphisms(SemigroupPtr const& s, SemigroupPtr const& t) {
    std::vector<GammaHomomorphism> out;
    std::vector<std::size_t>       carrier(s->size(), 0);
    do {
      std::vector<std::size_t> gammas(s->gamma_count(), 0);
      do {
        GammaHomomorphism f("h" + std::to_string(out.size()), s, t, carrier, gammas);
        if (oracle_is_homomorphism(f)) {
          out.push_back(std::move(f));
        }
      } while (next_tuple(gammas, t->gamma_count()));
    } while (next_tuple(carrier, t->size()));
    return out;
  }

  namespace {
    void grow(std::size_t                             n,
              std::vector<std::size_t>&               rgs,
              std::size_t                             blocks,
              std::vector<std::vector<std::size_t>>& out) {
      if (rgs.size() == n) {
        // Restricted growth string to least representatives.
        std::vector<std::size_t> first(n, n);
        std::vector<std::size_t> rep(n);
        for (std::size_t i = 0; i < n; ++i) {
          if (first[rgs[i]] == n) {
            first[rgs[i]] = i;
          }
          rep[i] = first[rgs[i]];
        }
        out.push_back(std::move(rep));
        return;
      }
      for (std::size_t b = 0; b <= blocks; ++b) {
        rgs.push_back(b);
        grow(n, rgs, std::max(blocks, b + 1), out);
        rgs.pop_back();
      }
    }
  }  // namespace

  std::vector<std::vector<std::size_t>> all_partitions(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t>              rgs;
    if (n == 0) {
      return out;
    }
    rgs.push_back(0);
    grow(n, rgs, 1, out);
    return out;
  }

  bool oracle_compatible(GammaSemigroup const& s, std::vector<std::size_t> const& rep) {
    for (std::size_t x = 0; x < s.size(); ++x) {
      for (std::size_t y = 0; y < s.size(); ++y) {
        if (rep[x] != rep[y]) {
          continue;
        }
        for (std::size_t g = 0; g < s.gamma_count(); ++g) {
          for (std::size_t z = 0; z < s.size(); ++z) {
            if (rep[s.product(x, g, z)] != rep[s.product(y, g, z)]
                || rep[s.product(z, g, x)] != rep[s.product(z, g, y)]) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  std::vector<std::size_t> oracle_least_congruence(GammaSemigroup const& s,
                                                   std::size_t           x,
                                                   std::size_t           y) {
    std::vector<std::vector<std::size_t>> candidates;
    for (auto const& p : all_partitions(s.size())) {
      if (p[x] == p[y] && oracle_compatible(s, p)) {
        candidates.push_back(p);
      }
    }
    // The least candidate refines every other candidate.
    for (auto const& p : candidates) {
      bool least = true;
      for (auto const& q : candidates) {
        for (std::size_t i = 0; i < s.size() && least; ++i) {
          for (std::size_t j = 0; j < s.size() && least; ++j) {
            if (p[i] == p[j] && q[i] != q[j]) {
              least = false;
            }
          }
        }
      }
      if (least) {
        return p;
      }
    }
    throw std::logic_error("no least congruence found");
  }

  OracleRegularity oracle_regularity(GammaSemigroup const& s, ElementIndex a) {
    OracleRegularity out{false, false, {}};
    for (std::size_t x = 0; x < s.size(); ++x) {
      for (std::size_t g = 0; g < s.gamma_count(); ++g) {
        bool const regular = s.product(s.product(a, g, x), g, a) == a;
        out.alpha_regular  = out.alpha_regular || regular;
        out.completely_regular
            = out.completely_regular || (regular && s.product(a, g, x) == s.product(x, g, a));
        if (regular && s.product(s.product(x, g, a), g, x) == x) {
          out.inverses.emplace(x, g);
        }
      }
    }
    return out;
  }

  Sequence oracle_normalize(Family const& family, Sequence s) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i + 1 < s.letters.size(); ++i) {
        auto const x = s.letters[i];
        auto const y = s.letters[i + 1];
        auto const g = s.gammas[i];
        bool const ok = x.part == y.part
                        && (family.mode() == Mode::same_gamma || (g.part && *g.part == x.part));
        if (ok) {
          s.letters[i].element = family.member(x.part).product(x.element, g.gamma, y.element);
          s.letters.erase(s.letters.begin() + static_cast<std::ptrdiff_t>(i) + 1);
          s.gammas.erase(s.gammas.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
      }
    }
    return s;
  }

  ElementIndex oracle_fold(Family const&                         family,
                           Sequence const&                       s,
                           GammaSemigroup const&                 t,
                           std::vector<GammaHomomorphism> const& psi) {
    auto image = [&](Letter x) { return psi[x.part](x.element); };
    auto gamma = [&](GammaLetter g) -> GammaIndex {
      if (g.part) {
        return psi[*g.part].gamma(g.gamma);
      }
      return t.gamma_index(family.member(0).gamma_name(g.gamma));
    };
    ElementIndex v = image(s.letters[0]);
    for (std::size_t i = 0; i < s.gammas.size(); ++i) {
      v = t.product(v, gamma(s.gammas[i]), image(s.letters[i + 1]));
    }
    return v;
  }

  ReplayLog& replay_log() {
    static ReplayLog log;
    return log;
  }

  bool record_replay(GammaAmalgam const&             a,
                     RelationSet const&              r,
                     Word const&                     w1,
                     Word const&                     w2,
                     std::vector<RewriteStep> const& chain) {
    auto& log = replay_log();
    ++log.replays;
    if (auto why = replay_chain(a, r, w1, w2, chain)) {
      ++log.failures;
      log.messages.push_back(*why);
      return false;
    }
    return true;
  }

  bool record_replays(GammaAmalgam const& a, RelationSet const& r, EmbeddingReport const& report) {
    auto const family = a.family();
    bool       ok     = true;
    for (std::size_t i = 0; i < 2; ++i) {
      for (auto const& c : report.injectivity[i].collisions) {
        ok = record_replay(a, r, embed(family, i, c.s), embed(family, i, c.t), c.chain) && ok;
      }
    }
    for (auto const& p : report.intersection) {
      ok = record_replay(a, r, embed(family, 0, p.s1), embed(family, 1, p.s2), p.chain) && ok;
      if (p.resolving_u) {
        ok = record_replay(a, r, embed(family, 0, (*a.maps[0])(*p.resolving_u)),
                           embed(family, 0, p.s1), p.resolution_chain)
             && ok;
      }
    }
    return ok;
  }

}  // namespace gsg::test
