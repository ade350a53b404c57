#include "gsg/error.hpp"

namespace gsg {

  std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::missing_entry:
        return "MissingEntry";
      case ErrorKind::duplicate_entry:
        return "DuplicateEntry";
      case ErrorKind::unknown_identifier:
        return "UnknownIdentifier";
      case ErrorKind::duplicate_identifier:
        return "DuplicateIdentifier";
      case ErrorKind::not_associative:
        return "NotAssociative";
      case ErrorKind::not_a_homomorphism:
        return "NotAHomomorphism";
      case ErrorKind::not_monomorphism:
        return "NotMonomorphism";
      case ErrorKind::not_compatible:
        return "NotCompatible";
      case ErrorKind::missing_homomorphism:
        return "MissingHomomorphism";
      case ErrorKind::mode_mismatch:
        return "ModeMismatch";
      case ErrorKind::malformed_sequence:
        return "MalformedSequence";
      case ErrorKind::cross_family_gamma:
        return "CrossFamilyGamma";
      case ErrorKind::name_clash:
        return "NameClash";
      case ErrorKind::gamma_mismatch:
        return "GammaMismatch";
      case ErrorKind::commuting_square_fails:
        return "CommutingSquareFails";
      case ErrorKind::syntax_error:
        return "SyntaxError";
      case ErrorKind::unresolved_reference:
        return "UnresolvedReference";
      case ErrorKind::invalid_argument:
        return "InvalidArgument";
    }
    return "Error";
  }

  namespace {
    std::string format_what(ErrorKind                            kind,
                            std::string const&                   message,
                            std::optional<SourceLocation> const& where) {
      std::string out;
      if (where) {
        out += "line " + std::to_string(where->line) + ", column "
               + std::to_string(where->column) + ": ";
      }
      out += to_string(kind);
      out += ": ";
      out += message;
      return out;
    }
  }  // namespace

  Error::Error(ErrorKind                     kind,
               std::string const&            message,
               std::optional<SourceLocation> where)
      : std::runtime_error(format_what(kind, message, where)),
        _kind(kind),
        _where(where),
        _detail(message) {}

}  // namespace gsg
