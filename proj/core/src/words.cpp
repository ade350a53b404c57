#include "gsg/words.hpp"

#include <cstring>  // for memcpy
#include <sstream>  // for istringstream

namespace gsg {

  namespace detail {
    struct WordFactory {
      static Word make(Mode mode, Sequence seq) {
        return Word(mode, std::move(seq));
      }
    };
  }  // namespace detail

  std::string_view to_string(Mode mode) noexcept {
    return mode == Mode::same_gamma ? "same-gamma" : "disjoint";
  }

  std::optional<Mode> parse_mode(std::string_view text) noexcept {
    if (text == "same-gamma") {
      return Mode::same_gamma;
    }
    if (text == "disjoint") {
      return Mode::disjoint_families;
    }
    return std::nullopt;
  }

  std::strong_ordering canonical_compare(Sequence const& x, Sequence const& y) {
    if (auto c = x.letters.size() <=> y.letters.size(); c != 0) {
      return c;
    }
    for (std::size_t i = 0; i < x.letters.size(); ++i) {
      if (auto c = x.letters[i] <=> y.letters[i]; c != 0) {
        return c;
      }
      if (i < x.gammas.size() && i < y.gammas.size()) {
        if (auto c = x.gammas[i] <=> y.gammas[i]; c != 0) {
          return c;
        }
      }
    }
    return std::strong_ordering::equal;
  }

  std::string sequence_key(Sequence const& s) {
    std::string key;
    key.reserve(s.letters.size() * 8 + s.gammas.size() * 8);
    auto put = [&key](std::size_t v) {
      auto const w = static_cast<std::uint32_t>(v);
      char       buf[sizeof(w)];
      std::memcpy(buf, &w, sizeof(w));
      key.append(buf, sizeof(w));
    };
    for (std::size_t i = 0; i < s.letters.size(); ++i) {
      put(s.letters[i].part);
      put(s.letters[i].element);
      if (i < s.gammas.size()) {
        put(s.gammas[i].part ? *s.gammas[i].part + 1 : 0);
        put(s.gammas[i].gamma);
      }
    }
    return key;
  }

  ////////////////////////////////////////////////////////////////////////
  // Family
  ////////////////////////////////////////////////////////////////////////

  Family::Family(std::vector<std::shared_ptr<GammaSemigroup const>> members,
                 Mode                                               mode)
      : _members(std::move(members)), _mode(mode) {
    if (_members.empty()) {
      throw Error(ErrorKind::invalid_argument, "a family needs a member");
    }
    for (std::size_t i = 0; i < _members.size(); ++i) {
      auto const& s = *_members[i];
      for (ElementIndex a = 0; a < s.size(); ++a) {
        if (!_letters.emplace(s.element_name(a), Letter{i, a}).second) {
          throw Error(ErrorKind::name_clash,
                      "element name '" + s.element_name(a)
                          + "' occurs in more than one member");
        }
      }
      if (mode == Mode::same_gamma) {
        if (s.gammas() != _members.front()->gammas()) {
          throw Error(ErrorKind::gamma_mismatch,
                      "'" + s.name() + "' and '" + _members.front()->name()
                          + "' do not share the same Γ");
        }
      } else {
        for (GammaIndex g = 0; g < s.gamma_count(); ++g) {
          if (!_gammas.emplace(s.gamma_name(g), GammaLetter{i, g}).second) {
            throw Error(ErrorKind::name_clash,
                        "gamma name '" + s.gamma_name(g)
                            + "' occurs in more than one member");
          }
        }
      }
    }
    if (mode == Mode::same_gamma) {
      auto const& shared = _members.front()->gammas();
      for (GammaIndex g = 0; g < shared.size(); ++g) {
        _gammas.emplace(shared[g], GammaLetter{std::nullopt, g});
      }
    }
  }

  std::optional<Letter> Family::find_letter(std::string_view id) const {
    auto it = _letters.find(id);
    if (it == _letters.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::optional<GammaLetter> Family::find_gamma(std::string_view id) const {
    auto it = _gammas.find(id);
    if (it == _gammas.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  Letter Family::letter(std::string_view id) const {
    if (auto x = find_letter(id)) {
      return *x;
    }
    throw Error(ErrorKind::unknown_identifier,
                "'" + std::string(id) + "' is not an element of the family");
  }

  GammaLetter Family::gamma(std::string_view id) const {
    if (auto g = find_gamma(id)) {
      return *g;
    }
    throw Error(ErrorKind::unknown_identifier,
                "'" + std::string(id) + "' is not a gamma of the family");
  }

  bool Family::contains(Letter x) const noexcept {
    return x.part < _members.size() && x.element < _members[x.part]->size();
  }

  bool Family::valid(GammaLetter g) const noexcept {
    if (_mode == Mode::same_gamma) {
      return !g.part && g.gamma < _members.front()->gamma_count();
    }
    return g.part && *g.part < _members.size()
           && g.gamma < _members[*g.part]->gamma_count();
  }

  bool Family::mergeable(Letter x, GammaLetter g, Letter y) const noexcept {
    if (x.part != y.part) {
      return false;
    }
    return _mode == Mode::same_gamma || (g.part && *g.part == x.part);
  }

  std::vector<GammaLetter> Family::gammas_of(std::size_t part) const {
    std::vector<GammaLetter> out;
    auto const&              s = member(part);
    for (GammaIndex g = 0; g < s.gamma_count(); ++g) {
      if (_mode == Mode::same_gamma) {
        out.push_back({std::nullopt, g});
      } else {
        out.push_back({part, g});
      }
    }
    return out;
  }

  std::string const& Family::name_of(Letter x) const {
    return member(x.part).element_name(x.element);
  }

  std::string const& Family::name_of(GammaLetter g) const {
    return member(g.part.value_or(0)).gamma_name(g.gamma);
  }

  ////////////////////////////////////////////////////////////////////////
  // Word operations
  ////////////////////////////////////////////////////////////////////////

  Word embed(Family const& family, std::size_t part, ElementIndex a) {
    if (!family.contains(Letter{part, a})) {
      throw Error(ErrorKind::unknown_identifier,
                  "no element " + std::to_string(a) + " in member "
                      + std::to_string(part));
    }
    return detail::WordFactory::make(family.mode(), Sequence{{Letter{part, a}}, {}});
  }

  Word embed(Family const& family, std::size_t part, std::string_view a) {
    if (part >= family.size()) {
      throw Error(ErrorKind::unknown_identifier,
                  "no member " + std::to_string(part) + " in the family");
    }
    return embed(family, part, family.member(part).element_index(a));
  }

  namespace {
    void check_gamma_shape(Family const& family, GammaLetter g) {
      bool const shaped = (family.mode() == Mode::same_gamma) != g.part.has_value();
      if (!shaped) {
        throw Error(ErrorKind::mode_mismatch,
                    family.mode() == Mode::same_gamma
                        ? "gamma letter carries a pointer in same-gamma mode"
                        : "gamma letter lacks a pointer in disjoint mode");
      }
      if (!family.valid(g)) {
        throw Error(ErrorKind::malformed_sequence, "gamma letter out of range");
      }
    }
  }  // namespace

  Word normalize(Family const& family, Sequence const& raw, bool reject_cross_sites) {
    if (raw.letters.empty()) {
      throw Error(ErrorKind::malformed_sequence, "empty sequence");
    }
    if (raw.gammas.size() + 1 != raw.letters.size()) {
      throw Error(ErrorKind::malformed_sequence,
                  "a sequence must alternate element and gamma letters");
    }
    for (auto const& x : raw.letters) {
      if (!family.contains(x)) {
        throw Error(ErrorKind::malformed_sequence, "element letter out of range");
      }
    }
    for (auto const& g : raw.gammas) {
      check_gamma_shape(family, g);
    }

    // Merging never changes a pointer, so a site left of the stack top that
    // was not mergeable stays that way: one pass suffices.
    Sequence out;
    out.letters.reserve(raw.letters.size());
    out.gammas.reserve(raw.gammas.size());
    out.letters.push_back(raw.letters.front());
    for (std::size_t i = 0; i < raw.gammas.size(); ++i) {
      Letter const      top = out.letters.back();
      GammaLetter const g   = raw.gammas[i];
      Letter const      y   = raw.letters[i + 1];
      if (family.mergeable(top, g, y)) {
        out.letters.back() = family.merge(top, g, y);
      } else {
        if (reject_cross_sites && top.part == y.part) {
          throw Error(ErrorKind::cross_family_gamma,
                      "'" + family.name_of(top) + " " + family.name_of(g) + " "
                          + family.name_of(y)
                          + "' joins two letters of one member by a foreign gamma");
        }
        out.gammas.push_back(g);
        out.letters.push_back(y);
      }
    }
    return detail::WordFactory::make(family.mode(), std::move(out));
  }

  bool is_reduced(Family const& family, Sequence const& s) noexcept {
    if (s.letters.empty() || s.gammas.size() + 1 != s.letters.size()) {
      return false;
    }
    for (std::size_t i = 0; i < s.gammas.size(); ++i) {
      if (family.mergeable(s.letters[i], s.gammas[i], s.letters[i + 1])) {
        return false;
      }
    }
    return true;
  }

  Word gamma_multiply(Family const&     family,
                      Word const&       a,
                      GammaLetter const gamma,
                      Word const&       b) {
    if (a.mode() != family.mode() || b.mode() != family.mode()) {
      throw Error(ErrorKind::mode_mismatch,
                  "words and family are in different modes");
    }
    check_gamma_shape(family, gamma);

    Sequence seq = a.sequence();
    auto const& rhs = b.sequence();
    if (family.mergeable(seq.letters.back(), gamma, rhs.letters.front())) {
      seq.letters.back() = family.merge(seq.letters.back(), gamma, rhs.letters.front());
      seq.letters.insert(seq.letters.end(), rhs.letters.begin() + 1, rhs.letters.end());
      seq.gammas.insert(seq.gammas.end(), rhs.gammas.begin(), rhs.gammas.end());
    } else {
      seq.gammas.push_back(gamma);
      seq.letters.insert(seq.letters.end(), rhs.letters.begin(), rhs.letters.end());
      seq.gammas.insert(seq.gammas.end(), rhs.gammas.begin(), rhs.gammas.end());
    }
    return detail::WordFactory::make(family.mode(), std::move(seq));
  }

  ElementIndex fold(Family const&                      family,
                    Word const&                        w,
                    GammaSemigroup const&              t,
                    std::span<GammaHomomorphism const> psi,
                    FoldOptions                        options) {
    if (w.mode() != family.mode()) {
      throw Error(ErrorKind::mode_mismatch, "word and family are in different modes");
    }
    if (family.mode() == Mode::disjoint_families && !options.use_gamma_maps) {
      throw Error(ErrorKind::mode_mismatch,
                  "fold over disjoint families needs gamma maps");
    }
    if (psi.size() < family.size()) {
      throw Error(ErrorKind::missing_homomorphism,
                  "no homomorphism for member " + std::to_string(psi.size()));
    }
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (!(psi[i].source() == family.member(i)) || !(psi[i].target() == t)) {
        throw Error(ErrorKind::invalid_argument,
                    "homomorphism '" + psi[i].name() + "' does not map member "
                        + std::to_string(i) + " into '" + t.name() + "'");
      }
    }

    auto image = [&](Letter x) { return psi[x.part](x.element); };
    auto image_gamma = [&](GammaLetter g) -> GammaIndex {
      if (family.mode() == Mode::disjoint_families) {
        return psi[*g.part].gamma(g.gamma);
      }
      auto const& id = family.shared_gammas()[g.gamma];
      if (auto k = t.find_gamma(id)) {
        return *k;
      }
      throw Error(ErrorKind::gamma_mismatch,
                  "gamma '" + id + "' is not a gamma of '" + t.name() + "'");
    };

    auto letters = w.letters();
    auto gammas  = w.gammas();
    ElementIndex acc = image(letters[0]);
    for (std::size_t i = 0; i < gammas.size(); ++i) {
      acc = t.product(acc, image_gamma(gammas[i]), image(letters[i + 1]));
    }
    return acc;
  }

  Sequence parse_sequence(Family const& family, std::string_view text) {
    std::istringstream       in{std::string(text)};
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) {
      tokens.push_back(std::move(tok));
    }
    if (tokens.size() % 2 == 0) {
      throw Error(ErrorKind::malformed_sequence,
                  "a word needs an odd number of tokens, starting and ending "
                  "with an element");
    }
    Sequence seq;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (i % 2 == 0) {
        seq.letters.push_back(family.letter(tokens[i]));
      } else {
        seq.gammas.push_back(family.gamma(tokens[i]));
      }
    }
    return seq;
  }

  Word parse_word(Family const& family, std::string_view text) {
    return normalize(family, parse_sequence(family, text));
  }

  std::string format(Family const& family, Sequence const& s) {
    std::string out;
    for (std::size_t i = 0; i < s.letters.size(); ++i) {
      if (i > 0) {
        out += ' ';
        out += family.name_of(s.gammas[i - 1]);
        out += ' ';
      }
      out += family.name_of(s.letters[i]);
    }
    return out;
  }

  std::string format(Family const& family, Word const& w) {
    return format(family, w.sequence());
  }

  std::vector<Word> enumerate_words(Family const& family, std::size_t max_length) {
    std::vector<Letter>      letters;
    std::vector<GammaLetter> gammas;
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (ElementIndex a = 0; a < family.member(i).size(); ++a) {
        letters.push_back({i, a});
      }
      if (family.mode() == Mode::disjoint_families || i == 0) {
        auto gs = family.gammas_of(i);
        gammas.insert(gammas.end(), gs.begin(), gs.end());
      }
    }

    std::vector<Word> out;
    Sequence          seq;
    // Depth-first in letter order yields lexicographic order per length.
    auto extend = [&](auto& self, std::size_t target) -> void {
      if (seq.letters.size() == target) {
        out.push_back(detail::WordFactory::make(family.mode(), seq));
        return;
      }
      for (auto const& g : gammas) {
        for (auto const& y : letters) {
          if (family.mergeable(seq.letters.back(), g, y)) {
            continue;
          }
          seq.gammas.push_back(g);
          seq.letters.push_back(y);
          self(self, target);
          seq.gammas.pop_back();
          seq.letters.pop_back();
        }
      }
    };
    for (std::size_t m = 1; m <= max_length; ++m) {
      for (auto const& x : letters) {
        seq.letters.assign(1, x);
        seq.gammas.clear();
        extend(extend, m);
      }
    }
    return out;
  }

}  // namespace gsg
