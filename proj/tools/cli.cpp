#include "cli.hpp"

#include <algorithm>  // for reverse
#include <fstream>    // for ifstream
#include <sstream>    // for ostringstream
#include <variant>    // for get_if

#include "CLI11.hpp"
#include "gsg/gsg.hpp"

namespace gsg::cli {

  namespace {

    // Thrown by a command when the input cannot be used at all.
    struct InputError {
      std::string message;
    };

    Workspace load(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw InputError{"cannot read '" + path + "'"};
      }
      std::ostringstream text;
      text << in.rdbuf();
      return parse(text.str());
    }

    std::string yes_no(bool b) {
      return b ? "yes" : "no";
    }

    std::string echo(std::vector<std::string> const& args) {
      std::string out = "# gsg";
      for (auto const& a : args) {
        out += " ";
        bool const quote = a.empty() || a.find_first_of(" \t\"") != std::string::npos;
        out += quote ? "\"" + a + "\"" : a;
      }
      return out + "\n";
    }

    void print_chain(std::ostream&                   out,
                     Family const&                   family,
                     Word const&                     start,
                     std::vector<RewriteStep> const& chain,
                     std::string const&              indent) {
      out << indent << "0. start: " << format(family, start) << "\n";
      for (std::size_t i = 0; i < chain.size(); ++i) {
        out << indent << i + 1 << ". " << to_string(chain[i].kind) << " at "
            << chain[i].position << ": " << format(family, chain[i].result) << "\n";
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // Commands
    ////////////////////////////////////////////////////////////////////////

    int validate(std::string const& path, std::ostream& out) {
      auto ws   = load(path);
      bool pass = true;
      for (auto const& s : ws.semigroups()) {
        out << "semigroup " << s->name() << ": total";
        if (auto w = check_associativity(*s)) {
          pass = false;
          out << ", not associative: " << describe(*s, *w) << "\n";
        } else {
          out << ", associative\n";
        }
      }
      for (auto const& f : ws.homomorphisms()) {
        out << "hom " << f->name() << ": ";
        if (auto w = verify_homomorphism(*f)) {
          pass = false;
          out << "not a homomorphism: " << describe(*f, *w) << "\n";
        } else {
          out << "homomorphism\n";
        }
      }
      for (auto const& a : ws.amalgams()) {
        out << "amalgam " << a->name << ": valid\n";
      }
      out << "result: " << (pass ? "pass" : "fail") << "\n";
      return pass ? 0 : 1;
    }

    int classify_cmd(std::string const& path, std::string const& name, std::ostream& out) {
      auto ws     = load(path);
      auto s      = ws.semigroup(name);
      auto report = classify(*s);
      out << format_report(*s, report);
      if (auto a = report.first_not_alpha_regular()) {
        out << "not α-regular, witness " << s->element_name(*a) << "\n";
        return 1;
      }
      return 0;
    }

    int hom_check(std::string const& path, std::string const& name, std::ostream& out) {
      auto ws = load(path);
      auto f  = ws.homomorphism(name);
      out << "hom " << f->name() << " : " << f->source().name() << " -> "
          << f->target().name() << "\n";
      if (auto w = verify_homomorphism(*f)) {
        out << "compatible: no, witness " << describe(*f, *w) << "\n";
        out << "monomorphism: no\n";
        return 1;
      }
      out << "compatible: yes\n";
      out << "monomorphism: " << yes_no(is_monomorphism(*f)) << "\n";
      return 0;
    }

    int quotient_cmd(std::string const& path,
                     std::string const& name,
                     std::string const& pairs,
                     std::ostream&      out) {
      auto ws  = load(path);
      auto s   = ws.semigroup(name);
      auto rho = generate_congruence(s, parse_pair_list(pairs));
      auto q   = quotient(rho);
      out << serialize(q.semigroup);
      return 0;
    }

    int word_mul(std::string const& path,
                 std::string const& mode_text,
                 std::string const& family_text,
                 std::string const& gamma,
                 std::string const& left,
                 std::string const& right,
                 std::ostream&      out) {
      auto mode = parse_mode(mode_text);
      if (!mode) {
        throw InputError{"unknown mode '" + mode_text + "'"};
      }
      auto ws = load(path);
      std::vector<std::shared_ptr<GammaSemigroup const>> members;
      if (family_text.empty()) {
        members = ws.semigroups();
      } else {
        std::istringstream names(family_text);
        for (std::string n; std::getline(names, n, ',');) {
          members.push_back(ws.semigroup(n));
        }
      }
      Family const family(members, *mode);
      auto const   x = parse_word(family, left);
      auto const   y = parse_word(family, right);
      auto const   p = gamma_multiply(family, x, family.gamma(gamma), y);
      out << format(family, p) << "\n";
      return 0;
    }

    int amalgam_check(std::string const& path,
                      std::string const& name,
                      SearchLimits       limits,
                      bool               identify,
                      std::ostream&      out) {
      auto        ws = load(path);
      auto        a  = ws.amalgam(name);
      auto const& u  = *a->core;
      out << "amalgam " << a->name << " (" << to_string(a->mode) << "), bound " << limits.bound
          << ", budget " << limits.budget << "\n";

      auto nc = necessary_condition(*a);
      switch (nc.status) {
        case NecessaryStatus::satisfied:
          out << "necessary condition: satisfied\n";
          break;
        case NecessaryStatus::not_applicable:
          out << "necessary condition: not applicable (";
          for (std::size_t i = 0; i < nc.failing_parts.size(); ++i) {
            out << (i == 0 ? "" : ", ") << a->parts[nc.failing_parts[i]]->name();
          }
          out << " not completely α-regular)\n";
          break;
        case NecessaryStatus::not_embeddable:
          out << "necessary condition: not embeddable, core element " << u.element_name(*nc.witness)
              << " is not completely α-regular\n";
          out << "verdict: not embeddable\n";
          return 1;
      }

      auto const r      = relation_generators(*a, identify);
      auto const family = a->family();
      out << "relations: " << r.pairs.size() << " pair(s)";
      if (!r.gamma_pairs.empty()) {
        out << ", " << r.gamma_pairs.size() << " gamma pair(s)";
      }
      out << "\n";
      for (auto const& p : r.pairs) {
        out << "  (" << family.name_of(p.first) << ", " << family.name_of(p.second) << ")\n";
      }
      for (auto const& p : r.gamma_pairs) {
        out << "  (" << family.name_of(p.first) << ", " << family.name_of(p.second) << ")\n";
      }

      auto const report = check_natural_embedding(*a, r, limits);
      for (std::size_t i = 0; i < 2; ++i) {
        auto const& part = *a->parts[i];
        auto const& inj  = report.injectivity[i];
        out << "injectivity " << part.name() << ": ";
        if (inj.collisions.empty()) {
          out << "no collision found within bound\n";
        } else {
          out << inj.collisions.size() << " collision(s)\n";
        }
        for (auto const& c : inj.collisions) {
          out << "  " << part.element_name(c.s) << " ~ " << part.element_name(c.t) << "\n";
          print_chain(out, family, embed(family, i, c.s), c.chain, "    ");
        }
      }
      out << "cross pairs: " << report.intersection.size() << "\n";
      for (auto const& p : report.intersection) {
        out << "  (" << a->parts[0]->element_name(p.s1) << ", "
            << a->parts[1]->element_name(p.s2) << ") ";
        if (p.resolving_u) {
          out << "resolved by " << u.element_name(*p.resolving_u) << "\n";
        } else {
          out << "unresolved within bound\n";
        }
        print_chain(out, family, embed(family, 0, p.s1), p.chain, "    ");
      }
      if (report.budget_exhausted) {
        out << "budget exhausted\n";
      }
      if (report.verdict == EmbeddingVerdict::violation_found) {
        out << "verdict: violation found\n";
        return 1;
      }
      if (!report.all_resolved() || report.budget_exhausted) {
        out << "verdict: inconclusive within bound\n";
        return 3;
      }
      out << "verdict: consistent within bound\n";
      return 0;
    }

    int iso_check(std::string const& path, std::string const& name, std::ostream& out) {
      auto ws = load(path);
      auto f  = ws.homomorphism(name);
      if (auto w = verify_homomorphism(*f)) {
        out << "not a homomorphism: " << describe(*f, *w) << "\n";
        return 1;
      }
      auto const report = first_isomorphism_check(*f);
      out << "quotient size: " << report.quotient_size << "\n";
      out << "image size: " << report.image_size << "\n";
      out << "well defined: " << yes_no(report.well_defined) << "\n";
      out << "homomorphism onto image: " << yes_no(report.homomorphism) << "\n";
      out << "injective: " << yes_no(report.injective) << "\n";
      out << "commutes with projection: " << yes_no(report.commutes) << "\n";
      out << "result: " << (report.all_pass() ? "pass" : "fail") << "\n";
      return report.all_pass() ? 0 : 1;
    }

  }  // namespace

  Verdict run(std::vector<std::string> const& args) {
    CLI::App app{"Finite Γ-semigroup toolkit", "gsg"};
    app.require_subcommand(1);

    std::string  file;
    std::string  name;
    std::string  pairs;
    std::string  mode = "same-gamma";
    std::string  family;
    std::string  gamma;
    std::string  left;
    std::string  right;
    SearchLimits limits;
    bool         identify = false;

    auto* validate_app = app.add_subcommand("validate", "Check totality, associativity and homs");
    validate_app->add_option("file", file, "Workspace file")->required();

    auto* classify_app = app.add_subcommand("classify", "Regularity report for a semigroup");
    classify_app->add_option("file", file, "Workspace file")->required();
    classify_app->add_option("--semigroup", name, "Semigroup name")->required();

    auto* hom_app = app.add_subcommand("hom-check", "Compatibility and injectivity of a hom");
    hom_app->add_option("file", file, "Workspace file")->required();
    hom_app->add_option("--hom", name, "Hom name")->required();

    auto* quotient_app = app.add_subcommand("quotient", "Quotient by a generated congruence");
    quotient_app->add_option("file", file, "Workspace file")->required();
    quotient_app->add_option("--semigroup", name, "Semigroup name")->required();
    quotient_app->add_option("--pairs", pairs, "Generating pairs, e.g. \"a~b,c~d\"")->required();

    auto* mul_app = app.add_subcommand("word-mul", "Product of two words of a free product");
    mul_app->add_option("file", file, "Workspace file")->required();
    mul_app->add_option("--mode", mode, "same-gamma or disjoint");
    mul_app->add_option("--family", family, "Comma-separated semigroup names (default: all)");
    mul_app->add_option("--gamma", gamma, "Gamma letter")->required();
    mul_app->add_option("--left", left, "Left word")->required();
    mul_app->add_option("--right", right, "Right word")->required();

    auto* amalgam_app = app.add_subcommand("amalgam-check", "Bounded natural embedding check");
    amalgam_app->add_option("file", file, "Workspace file")->required();
    amalgam_app->add_option("--amalgam", name, "Amalgam name")->required();
    amalgam_app->add_option("--bound", limits.bound, "Maximum word length in the search")
        ->check(CLI::PositiveNumber);
    amalgam_app->add_option("--budget", limits.budget, "Maximum visited sequences per search")
        ->check(CLI::PositiveNumber);
    amalgam_app->add_flag("--identify-elements", identify, "Also identify f1(u) with f2(u)");

    auto* iso_app = app.add_subcommand("iso-check", "First isomorphism check for a hom");
    iso_app->add_option("file", file, "Workspace file")->required();
    iso_app->add_option("--hom", name, "Hom name")->required();

    Verdict verdict;
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      verdict.out = app.help();
      return verdict;
    } catch (CLI::ParseError const& e) {
      verdict.exit_code = 2;
      verdict.err       = std::string(e.what()) + "\n\n" + app.help();
      return verdict;
    }

    std::ostringstream out;
    out << echo(args);
    try {
      if (*validate_app) {
        verdict.exit_code = validate(file, out);
      } else if (*classify_app) {
        verdict.exit_code = classify_cmd(file, name, out);
      } else if (*hom_app) {
        verdict.exit_code = hom_check(file, name, out);
      } else if (*quotient_app) {
        verdict.exit_code = quotient_cmd(file, name, pairs, out);
      } else if (*mul_app) {
        verdict.exit_code = word_mul(file, mode, family, gamma, left, right, out);
      } else if (*amalgam_app) {
        verdict.exit_code = amalgam_check(file, name, limits, identify, out);
      } else if (*iso_app) {
        verdict.exit_code = iso_check(file, name, out);
      }
    } catch (Error const& e) {
      verdict.exit_code = 2;
      verdict.err       = std::string("error: ") + e.what() + "\n";
    } catch (InputError const& e) {
      verdict.exit_code = 2;
      verdict.err       = "error: " + e.message + "\n";
    }
    verdict.out = out.str();
    return verdict;
  }

}  // namespace gsg::cli
