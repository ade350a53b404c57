#include "gsg/regularity.hpp"

#include <algorithm>  // for all_of
#include <set>        // for set
#include <sstream>    // for ostringstream

namespace gsg {

  namespace {
    void check_element(GammaSemigroup const& s, ElementIndex a) {
      if (a >= s.size()) {
        throw Error(ErrorKind::unknown_identifier,
                    "element index " + std::to_string(a) + " is not in '"
                        + s.name() + "'");
      }
    }

    // a α x α a
    ElementIndex sandwich(GammaSemigroup const& s,
                          ElementIndex          a,
                          GammaIndex            alpha,
                          ElementIndex          x) {
      return s.product(s.product(a, alpha, x), alpha, a);
    }
  }  // namespace

  std::optional<RegularityWitness> alpha_regular_witness(GammaSemigroup const& s,
                                                         ElementIndex a) {
    check_element(s, a);
    for (ElementIndex x = 0; x < s.size(); ++x) {
      for (GammaIndex alpha = 0; alpha < s.gamma_count(); ++alpha) {
        if (sandwich(s, a, alpha, x) == a) {
          return RegularityWitness{x, alpha};
        }
      }
    }
    return std::nullopt;
  }

  std::vector<RegularityWitness> alpha_inverses(GammaSemigroup const& s,
                                                ElementIndex          a) {
    check_element(s, a);
    std::vector<RegularityWitness> out;
    for (ElementIndex b = 0; b < s.size(); ++b) {
      for (GammaIndex alpha = 0; alpha < s.gamma_count(); ++alpha) {
        if (sandwich(s, a, alpha, b) == a && sandwich(s, b, alpha, a) == b) {
          out.push_back({b, alpha});
        }
      }
    }
    return out;
  }

  std::optional<RegularityWitness>
  completely_alpha_regular_witness(GammaSemigroup const& s, ElementIndex a) {
    check_element(s, a);
    for (ElementIndex x = 0; x < s.size(); ++x) {
      for (GammaIndex alpha = 0; alpha < s.gamma_count(); ++alpha) {
        if (sandwich(s, a, alpha, x) == a
            && s.product(a, alpha, x) == s.product(x, alpha, a)) {
          return RegularityWitness{x, alpha};
        }
      }
    }
    return std::nullopt;
  }

  std::optional<ElementIndex>
  RegularityReport::first_not_alpha_regular() const {
    for (ElementIndex a = 0; a < elements.size(); ++a) {
      if (!elements[a].alpha_regular) {
        return a;
      }
    }
    return std::nullopt;
  }

  std::optional<ElementIndex>
  RegularityReport::first_not_completely_regular() const {
    for (ElementIndex a = 0; a < elements.size(); ++a) {
      if (!elements[a].completely_regular) {
        return a;
      }
    }
    return std::nullopt;
  }

  RegularityReport classify(GammaSemigroup const& s) {
    require_associative(s);
    RegularityReport report;
    report.elements.reserve(s.size());
    for (ElementIndex a = 0; a < s.size(); ++a) {
      report.elements.push_back({alpha_regular_witness(s, a),
                                 completely_alpha_regular_witness(s, a),
                                 alpha_inverses(s, a)});
    }
    auto const& el = report.elements;
    report.is_alpha_regular = std::all_of(
        el.begin(), el.end(), [](auto const& e) { return e.alpha_regular; });
    report.is_completely_alpha_regular
        = std::all_of(el.begin(), el.end(), [](auto const& e) {
            return e.completely_regular.has_value();
          });
    report.is_gamma_inverse
        = report.is_alpha_regular
          && std::all_of(el.begin(), el.end(), [](auto const& e) {
               std::set<ElementIndex> inverse_elements;
               for (auto const& w : e.alpha_inverses) {
                 inverse_elements.insert(w.x);
               }
               return inverse_elements.size() == 1;
             });
    return report;
  }

  std::string format_report(GammaSemigroup const&   s,
                            RegularityReport const& report) {
    std::ostringstream out;
    auto witness = [&](std::optional<RegularityWitness> const& w) {
      if (!w) {
        return std::string("none");
      }
      return "(" + s.element_name(w->x) + ", " + s.gamma_name(w->alpha) + ")";
    };
    for (ElementIndex a = 0; a < report.elements.size(); ++a) {
      auto const& e = report.elements[a];
      out << "element " << s.element_name(a)
          << ": α-regular " << witness(e.alpha_regular)
          << "; completely α-regular " << witness(e.completely_regular)
          << "; α-inverses {";
      for (std::size_t i = 0; i < e.alpha_inverses.size(); ++i) {
        out << (i == 0 ? "" : ", ") << witness(e.alpha_inverses[i]);
      }
      out << "}\n";
    }
    auto flag = [](bool b) { return b ? "yes" : "no"; };
    out << "α-regular: " << flag(report.is_alpha_regular) << "\n";
    out << "Γ-inverse: " << flag(report.is_gamma_inverse) << "\n";
    out << "completely α-regular: " << flag(report.is_completely_alpha_regular)
        << "\n";
    return out.str();
  }

}  // namespace gsg
