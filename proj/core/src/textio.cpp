#include "gsg/textio.hpp"

#include <algorithm>  // for find_if
#include <map>        // for map
#include <optional>   // for optional

namespace gsg {

  ////////////////////////////////////////////////////////////////////////
  // Workspace
  ////////////////////////////////////////////////////////////////////////

  namespace {
    template <typename T>
    std::shared_ptr<T const> find_named(std::vector<std::shared_ptr<T const>> const& v,
                                        std::string_view                             name) {
      auto it = std::find_if(v.begin(), v.end(), [&](auto const& p) {
        if constexpr (std::is_same_v<T, GammaAmalgam>) {
          return p->name == name;
        } else {
          return p->name() == name;
        }
      });
      return it == v.end() ? nullptr : *it;
    }

    template <typename T>
    bool same_contents(std::vector<std::shared_ptr<T const>> const& x,
                       std::vector<std::shared_ptr<T const>> const& y) {
      return std::equal(x.begin(), x.end(), y.begin(), y.end(), [](auto const& p, auto const& q) {
        return *p == *q;
      });
    }
  }  // namespace

  std::string_view to_string(Workspace::Kind kind) noexcept {
    switch (kind) {
      case Workspace::Kind::semigroup:
        return "semigroup";
      case Workspace::Kind::homomorphism:
        return "hom";
      case Workspace::Kind::amalgam:
        return "amalgam";
    }
    return "block";
  }

  void Workspace::add(std::shared_ptr<GammaSemigroup const> s) {
    if (find_semigroup(s->name())) {
      throw Error(ErrorKind::duplicate_identifier, "semigroup '" + s->name() + "' is declared twice");
    }
    _order.push_back({Kind::semigroup, s->name()});
    _semigroups.push_back(std::move(s));
  }

  void Workspace::add(std::shared_ptr<GammaHomomorphism const> f) {
    if (find_homomorphism(f->name())) {
      throw Error(ErrorKind::duplicate_identifier, "hom '" + f->name() + "' is declared twice");
    }
    _order.push_back({Kind::homomorphism, f->name()});
    _homomorphisms.push_back(std::move(f));
  }

  void Workspace::add(std::shared_ptr<GammaAmalgam const> a) {
    if (find_amalgam(a->name)) {
      throw Error(ErrorKind::duplicate_identifier, "amalgam '" + a->name + "' is declared twice");
    }
    _order.push_back({Kind::amalgam, a->name});
    _amalgams.push_back(std::move(a));
  }

  std::shared_ptr<GammaSemigroup const> Workspace::find_semigroup(std::string_view name) const {
    return find_named(_semigroups, name);
  }

  std::shared_ptr<GammaHomomorphism const>
  Workspace::find_homomorphism(std::string_view name) const {
    return find_named(_homomorphisms, name);
  }

  std::shared_ptr<GammaAmalgam const> Workspace::find_amalgam(std::string_view name) const {
    return find_named(_amalgams, name);
  }

  std::shared_ptr<GammaSemigroup const> Workspace::semigroup(std::string_view name) const {
    if (auto p = find_semigroup(name)) {
      return p;
    }
    throw Error(ErrorKind::unresolved_reference, "no semigroup named '" + std::string(name) + "'");
  }

  std::shared_ptr<GammaHomomorphism const> Workspace::homomorphism(std::string_view name) const {
    if (auto p = find_homomorphism(name)) {
      return p;
    }
    throw Error(ErrorKind::unresolved_reference, "no hom named '" + std::string(name) + "'");
  }

  std::shared_ptr<GammaAmalgam const> Workspace::amalgam(std::string_view name) const {
    if (auto p = find_amalgam(name)) {
      return p;
    }
    throw Error(ErrorKind::unresolved_reference, "no amalgam named '" + std::string(name) + "'");
  }

  bool operator==(Workspace const& x, Workspace const& y) {
    return x._order == y._order && same_contents(x._semigroups, y._semigroups)
           && same_contents(x._homomorphisms, y._homomorphisms)
           && same_contents(x._amalgams, y._amalgams);
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Tables beyond this many cells are rejected before allocation.
    constexpr std::size_t max_cells = std::size_t{1} << 24;

    struct Token {
      std::string    text;
      SourceLocation where;
      bool           punct = false;  // "=" or "->"
    };

    using Line = std::vector<Token>;

    Line tokenize(std::string_view line, std::size_t number) {
      Line        out;
      std::size_t i = 0;
      auto        is_space = [](char c) {
        return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
      };
      while (i < line.size()) {
        char const c = line[i];
        if (c == '#') {
          break;
        }
        if (is_space(c)) {
          ++i;
          continue;
        }
        SourceLocation const at{number, i + 1};
        if (c == '=') {
          out.push_back({"=", at, true});
          ++i;
          continue;
        }
        if (line.substr(i, 2) == "->") {
          out.push_back({"->", at, true});
          i += 2;
          continue;
        }
        std::size_t j = i;
        while (j < line.size() && !is_space(line[j]) && line[j] != '#' && line[j] != '='
               && line.substr(j, 2) != "->") {
          ++j;
        }
        out.push_back({std::string(line.substr(i, j - i)), at, false});
        i = j;
      }
      return out;
    }

    [[noreturn]] void syntax(SourceLocation where, std::string const& message) {
      throw Error(ErrorKind::syntax_error, message, where);
    }

    SourceLocation end_of(Line const& line) {
      auto const& last = line.back();
      return {last.where.line, last.where.column + last.text.size()};
    }

    std::string const& name_at(Line const& line, std::size_t i, std::string const& what) {
      if (i >= line.size()) {
        syntax(end_of(line), "expected " + what);
      }
      if (line[i].punct) {
        syntax(line[i].where, "expected " + what + " but found '" + line[i].text + "'");
      }
      return line[i].text;
    }

    void expect_punct(Line const& line, std::size_t i, std::string const& p) {
      if (i >= line.size()) {
        syntax(end_of(line), "expected '" + p + "'");
      }
      if (line[i].text != p || !line[i].punct) {
        syntax(line[i].where, "expected '" + p + "' but found '" + line[i].text + "'");
      }
    }

    void expect_end_of_line(Line const& line, std::size_t i) {
      if (i < line.size()) {
        syntax(line[i].where, "expected end of line but found '" + line[i].text + "'");
      }
    }

    std::vector<std::string> names_from(Line const& line, std::size_t i) {
      std::vector<std::string> out;
      for (; i < line.size(); ++i) {
        out.push_back(name_at(line, i, "a name"));
      }
      return out;
    }

    struct Named {
      std::string    name;
      SourceLocation where;
    };

    Named named(Line const& line, std::size_t i, std::string const& what) {
      auto const& text = name_at(line, i, what);
      return {text, line[i].where};
    }

    struct Arrow {
      Named from;
      Named to;
    };

    struct RawHom {
      Named              name;
      Named              source;
      Named              target;
      std::vector<Arrow> maps;
      std::vector<Arrow> gmaps;
    };

    struct RawAmalgam {
      Named                name;
      std::optional<Named> core;
      std::optional<Named> parts[2];
      std::optional<Named> maps[2];
      Mode                 mode = Mode::same_gamma;
    };

    struct Block {
      Workspace::Kind kind;
      std::size_t     index;
    };

    struct RawWorkspace {
      std::vector<RawTable>   tables;
      std::vector<RawHom>     homs;
      std::vector<RawAmalgam> amalgams;
      std::vector<Block>      blocks;
    };

    class Reader {
     public:
      explicit Reader(std::string_view text) {
        std::size_t number = 0;
        std::size_t start  = 0;
        while (start <= text.size()) {
          auto end = text.find('\n', start);
          if (end == std::string_view::npos) {
            end = text.size();
          }
          ++number;
          auto line = tokenize(text.substr(start, end - start), number);
          if (!line.empty()) {
            _lines.push_back(std::move(line));
          }
          _last_line = number;
          start      = end + 1;
        }
      }

      RawWorkspace read() {
        RawWorkspace out;
        while (_pos < _lines.size()) {
          Line const& head = _lines[_pos++];
          auto const& kw   = head.front().text;
          if (kw == "semigroup" && !head.front().punct) {
            out.blocks.push_back({Workspace::Kind::semigroup, out.tables.size()});
            out.tables.push_back(read_semigroup(head));
          } else if (kw == "hom" && !head.front().punct) {
            out.blocks.push_back({Workspace::Kind::homomorphism, out.homs.size()});
            out.homs.push_back(read_hom(head));
          } else if (kw == "amalgam" && !head.front().punct) {
            out.blocks.push_back({Workspace::Kind::amalgam, out.amalgams.size()});
            out.amalgams.push_back(read_amalgam(head));
          } else {
            syntax(head.front().where,
                   "expected 'semigroup', 'hom' or 'amalgam' but found '" + kw + "'");
          }
        }
        return out;
      }

     private:
      Line const& next_in_block(std::string const& block) {
        if (_pos >= _lines.size()) {
          syntax({_last_line, 1}, "expected 'end' to close " + block);
        }
        return _lines[_pos++];
      }

      static bool is_end(Line const& line) {
        if (line.front().text == "end" && !line.front().punct) {
          expect_end_of_line(line, 1);
          return true;
        }
        return false;
      }

      RawTable read_semigroup(Line const& head) {
        RawTable raw;
        raw.name  = name_at(head, 1, "a semigroup name");
        raw.where = head[1].where;
        expect_end_of_line(head, 2);
        bool have_elements = false;
        bool have_gammas   = false;
        while (true) {
          Line const& line = next_in_block("semigroup '" + raw.name + "'");
          if (is_end(line)) {
            break;
          }
          auto const& kw = line.front().text;
          if (kw == "elements" && !line.front().punct) {
            if (have_elements) {
              syntax(line.front().where, "'elements' appears twice");
            }
            have_elements = true;
            raw.elements  = names_from(line, 1);
          } else if (kw == "gammas" && !line.front().punct) {
            if (have_gammas) {
              syntax(line.front().where, "'gammas' appears twice");
            }
            have_gammas = true;
            raw.gammas  = names_from(line, 1);
          } else if (kw == "op" && !line.front().punct) {
            TableEntry e;
            e.left   = name_at(line, 1, "an element");
            e.gamma  = name_at(line, 2, "a gamma");
            e.right  = name_at(line, 3, "an element");
            expect_punct(line, 4, "=");
            e.result = name_at(line, 5, "an element");
            expect_end_of_line(line, 6);
            e.where = line.front().where;
            raw.entries.push_back(std::move(e));
          } else {
            syntax(line.front().where,
                   "expected 'elements', 'gammas', 'op' or 'end' but found '" + kw + "'");
          }
        }
        if (!have_elements || raw.elements.empty()) {
          syntax(*raw.where, "semigroup '" + raw.name + "' declares no elements");
        }
        if (!have_gammas || raw.gammas.empty()) {
          syntax(*raw.where, "semigroup '" + raw.name + "' declares no gammas");
        }
        return raw;
      }

      RawHom read_hom(Line const& head) {
        RawHom raw;
        raw.name = named(head, 1, "a hom name");
        if (head.size() <= 2 || head[2].text != ":") {
          syntax(head.size() <= 2 ? end_of(head) : head[2].where, "expected ':'");
        }
        raw.source = named(head, 3, "a source semigroup");
        expect_punct(head, 4, "->");
        raw.target = named(head, 5, "a target semigroup");
        expect_end_of_line(head, 6);
        while (true) {
          Line const& line = next_in_block("hom '" + raw.name.name + "'");
          if (is_end(line)) {
            break;
          }
          auto const& kw = line.front().text;
          if ((kw == "map" || kw == "gmap") && !line.front().punct) {
            Arrow a;
            a.from = named(line, 1, "a name");
            expect_punct(line, 2, "->");
            a.to = named(line, 3, "a name");
            expect_end_of_line(line, 4);
            (kw == "map" ? raw.maps : raw.gmaps).push_back(std::move(a));
          } else {
            syntax(line.front().where, "expected 'map', 'gmap' or 'end' but found '" + kw + "'");
          }
        }
        return raw;
      }

      RawAmalgam read_amalgam(Line const& head) {
        RawAmalgam raw;
        raw.name = named(head, 1, "an amalgam name");
        expect_end_of_line(head, 2);
        bool have_mode = false;
        auto once = [](bool seen, Token const& t) {
          if (seen) {
            syntax(t.where, "'" + t.text + "' appears twice");
          }
        };
        while (true) {
          Line const& line = next_in_block("amalgam '" + raw.name.name + "'");
          if (is_end(line)) {
            break;
          }
          auto const& kw = line.front();
          if (kw.punct) {
            syntax(kw.where, "expected a keyword but found '" + kw.text + "'");
          }
          if (kw.text == "core") {
            once(raw.core.has_value(), kw);
            raw.core = named(line, 1, "a core semigroup");
            expect_end_of_line(line, 2);
          } else if (kw.text == "parts") {
            once(raw.parts[0].has_value(), kw);
            raw.parts[0] = named(line, 1, "a semigroup");
            raw.parts[1] = named(line, 2, "a semigroup");
            expect_end_of_line(line, 3);
          } else if (kw.text == "maps") {
            once(raw.maps[0].has_value(), kw);
            raw.maps[0] = named(line, 1, "a hom");
            raw.maps[1] = named(line, 2, "a hom");
            expect_end_of_line(line, 3);
          } else if (kw.text == "mode") {
            once(have_mode, kw);
            have_mode = true;
            auto const& m = name_at(line, 1, "a mode");
            auto        parsed = parse_mode(m);
            if (!parsed) {
              syntax(line[1].where, "expected 'same-gamma' or 'disjoint' but found '" + m + "'");
            }
            raw.mode = *parsed;
            expect_end_of_line(line, 2);
          } else {
            syntax(kw.where, "expected 'core', 'parts', 'maps', 'mode' or 'end' but found '"
                                 + kw.text + "'");
          }
        }
        if (!raw.core) {
          syntax(raw.name.where, "amalgam '" + raw.name.name + "' has no 'core' line");
        }
        if (!raw.parts[0]) {
          syntax(raw.name.where, "amalgam '" + raw.name.name + "' has no 'parts' line");
        }
        if (!raw.maps[0]) {
          syntax(raw.name.where, "amalgam '" + raw.name.name + "' has no 'maps' line");
        }
        return raw;
      }

      std::vector<Line> _lines;
      std::size_t       _pos       = 0;
      std::size_t       _last_line = 1;
    };

    [[noreturn]] void unresolved(Named const& n, std::string const& what) {
      throw Error(ErrorKind::unresolved_reference, "no " + what + " named '" + n.name + "'",
                  n.where);
    }

    GammaSemigroup resolve_table(RawTable const& raw) {
      std::size_t const n = raw.elements.size();
      std::size_t const g = raw.gammas.size();
      if (n > max_cells || g > max_cells || n * n > max_cells || n * n * g > max_cells) {
        syntax(*raw.where, "semigroup '" + raw.name + "' is too large");
      }
      auto declared = [](std::vector<std::string> const& names, std::string const& id) {
        return std::find(names.begin(), names.end(), id) != names.end();
      };
      for (auto const& e : raw.entries) {
        for (auto const* id : {&e.left, &e.right, &e.result}) {
          if (!declared(raw.elements, *id)) {
            throw Error(ErrorKind::unresolved_reference,
                        "'" + *id + "' is not an element of '" + raw.name + "'", e.where);
          }
        }
        if (!declared(raw.gammas, e.gamma)) {
          throw Error(ErrorKind::unresolved_reference,
                      "'" + e.gamma + "' is not a gamma of '" + raw.name + "'", e.where);
        }
      }
      return validate_table(raw);
    }

    GammaHomomorphism resolve_hom(RawHom const& raw, Workspace const& ws) {
      auto src = ws.find_semigroup(raw.source.name);
      if (!src) {
        unresolved(raw.source, "semigroup");
      }
      auto dst = ws.find_semigroup(raw.target.name);
      if (!dst) {
        unresolved(raw.target, "semigroup");
      }

      auto fill = [&](std::vector<Arrow> const& arrows,
                      std::size_t               count,
                      auto                      find_from,
                      auto                      find_to,
                      std::string const&        what) {
        std::vector<std::optional<std::size_t>> image(count);
        for (auto const& a : arrows) {
          auto x = find_from(a.from.name);
          if (!x) {
            unresolved(a.from, what + " of '" + src->name() + "'");
          }
          auto y = find_to(a.to.name);
          if (!y) {
            unresolved(a.to, what + " of '" + dst->name() + "'");
          }
          if (image[*x] && *image[*x] != *y) {
            throw Error(ErrorKind::duplicate_entry,
                        "'" + a.from.name + "' is mapped twice by '" + raw.name.name + "'",
                        a.from.where);
          }
          image[*x] = *y;
        }
        return image;
      };

      auto elements = fill(
          raw.maps, src->size(),
          [&](std::string const& id) { return src->find_element(id); },
          [&](std::string const& id) { return dst->find_element(id); }, "element");
      auto gammas = fill(
          raw.gmaps, src->gamma_count(),
          [&](std::string const& id) { return src->find_gamma(id); },
          [&](std::string const& id) { return dst->find_gamma(id); }, "gamma");

      std::vector<ElementIndex> carrier(src->size());
      for (ElementIndex x = 0; x < src->size(); ++x) {
        if (!elements[x]) {
          throw Error(ErrorKind::missing_entry,
                      "'" + raw.name.name + "' does not map element '" + src->element_name(x)
                          + "'",
                      raw.name.where);
        }
        carrier[x] = *elements[x];
      }
      std::vector<GammaIndex> gamma_map(src->gamma_count());
      for (GammaIndex k = 0; k < src->gamma_count(); ++k) {
        if (!gammas[k]) {
          // An omitted gmap line means the gamma of the same name.
          gammas[k] = dst->find_gamma(src->gamma_name(k));
        }
        if (!gammas[k]) {
          throw Error(ErrorKind::missing_entry,
                      "'" + raw.name.name + "' does not map gamma '" + src->gamma_name(k) + "'",
                      raw.name.where);
        }
        gamma_map[k] = *gammas[k];
      }
      return GammaHomomorphism(raw.name.name, src, dst, std::move(carrier), std::move(gamma_map));
    }

    GammaAmalgam resolve_amalgam(RawAmalgam const& raw, Workspace const& ws) {
      GammaAmalgam a;
      a.name = raw.name.name;
      a.mode = raw.mode;
      a.core = ws.find_semigroup(raw.core->name);
      if (!a.core) {
        unresolved(*raw.core, "semigroup");
      }
      for (std::size_t i = 0; i < 2; ++i) {
        a.parts[i] = ws.find_semigroup(raw.parts[i]->name);
        if (!a.parts[i]) {
          unresolved(*raw.parts[i], "semigroup");
        }
        a.maps[i] = ws.find_homomorphism(raw.maps[i]->name);
        if (!a.maps[i]) {
          unresolved(*raw.maps[i], "hom");
        }
      }
      auto issues = validate_amalgam(a);
      if (!issues.empty()) {
        throw Error(issues.front().kind, issues.front().message, raw.name.where);
      }
      return a;
    }

    template <typename F>
    auto located(SourceLocation where, F&& f) {
      try {
        return f();
      } catch (Error const& e) {
        if (e.location()) {
          throw;
        }
        throw Error(e.kind(), e.detail(), where);
      }
    }
  }  // namespace

  Workspace parse(std::string_view text) {
    RawWorkspace raw = Reader(text).read();
    Workspace    ws;
    // Semigroups first, then homs, then amalgams, so references may point
    // forward; the declaration order is restored at the end.
    std::vector<std::shared_ptr<GammaSemigroup const>>    tables;
    std::vector<std::shared_ptr<GammaHomomorphism const>> homs;
    std::vector<std::shared_ptr<GammaAmalgam const>>      amalgams;
    Workspace                                             scope;
    for (auto const& t : raw.tables) {
      auto where = *t.where;
      auto s     = located(where, [&] { return std::make_shared<GammaSemigroup const>(resolve_table(t)); });
      located(where, [&] { scope.add(s); });
      tables.push_back(std::move(s));
    }
    for (auto const& h : raw.homs) {
      auto f = located(h.name.where, [&] {
        return std::make_shared<GammaHomomorphism const>(resolve_hom(h, scope));
      });
      located(h.name.where, [&] { scope.add(f); });
      homs.push_back(std::move(f));
    }
    for (auto const& r : raw.amalgams) {
      auto a = located(r.name.where, [&] {
        return std::make_shared<GammaAmalgam const>(resolve_amalgam(r, scope));
      });
      located(r.name.where, [&] { scope.add(a); });
      amalgams.push_back(std::move(a));
    }
    for (auto const& b : raw.blocks) {
      switch (b.kind) {
        case Workspace::Kind::semigroup:
          ws.add(tables[b.index]);
          break;
        case Workspace::Kind::homomorphism:
          ws.add(homs[b.index]);
          break;
        case Workspace::Kind::amalgam:
          ws.add(amalgams[b.index]);
          break;
      }
    }
    return ws;
  }

  ////////////////////////////////////////////////////////////////////////
  // Serialization
  ////////////////////////////////////////////////////////////////////////

  std::string serialize(GammaSemigroup const& s) {
    std::string out = "semigroup " + s.name() + "\nelements";
    for (auto const& x : s.elements()) {
      out += " " + x;
    }
    out += "\ngammas";
    for (auto const& g : s.gammas()) {
      out += " " + g;
    }
    out += "\n";
    for (ElementIndex x = 0; x < s.size(); ++x) {
      for (GammaIndex g = 0; g < s.gamma_count(); ++g) {
        for (ElementIndex y = 0; y < s.size(); ++y) {
          out += "op " + s.element_name(x) + " " + s.gamma_name(g) + " " + s.element_name(y)
                 + " = " + s.element_name(s.product(x, g, y)) + "\n";
        }
      }
    }
    out += "end\n";
    return out;
  }

  namespace {
    std::string serialize(GammaHomomorphism const& f) {
      auto const& src = f.source();
      auto const& dst = f.target();
      std::string out = "hom " + f.name() + " : " + src.name() + " -> " + dst.name() + "\n";
      for (ElementIndex x = 0; x < src.size(); ++x) {
        out += "map " + src.element_name(x) + " -> " + dst.element_name(f(x)) + "\n";
      }
      for (GammaIndex g = 0; g < src.gamma_count(); ++g) {
        out += "gmap " + src.gamma_name(g) + " -> " + dst.gamma_name(f.gamma(g)) + "\n";
      }
      out += "end\n";
      return out;
    }

    std::string serialize(GammaAmalgam const& a) {
      return "amalgam " + a.name + "\ncore " + a.core->name() + "\nparts " + a.parts[0]->name()
             + " " + a.parts[1]->name() + "\nmaps " + a.maps[0]->name() + " "
             + a.maps[1]->name() + "\nmode " + std::string(to_string(a.mode)) + "\nend\n";
    }
  }  // namespace

  std::string serialize(Workspace const& w) {
    std::string out;
    for (auto const& e : w.order()) {
      if (!out.empty()) {
        out += "\n";
      }
      switch (e.kind) {
        case Workspace::Kind::semigroup:
          out += serialize(*w.semigroup(e.name));
          break;
        case Workspace::Kind::homomorphism:
          out += serialize(*w.homomorphism(e.name));
          break;
        case Workspace::Kind::amalgam:
          out += serialize(*w.amalgam(e.name));
          break;
      }
    }
    return out;
  }

}  // namespace gsg
