#ifndef GSG_ERROR_HPP_
#define GSG_ERROR_HPP_

#include <cstddef>      // for size_t
#include <optional>     // for optional
#include <stdexcept>    // for runtime_error
#include <string>       // for string
#include <string_view>  // for string_view

namespace gsg {

  enum class ErrorKind {
    missing_entry,
    duplicate_entry,
    unknown_identifier,
    duplicate_identifier,
    not_associative,
    not_a_homomorphism,
    not_monomorphism,
    not_compatible,
    missing_homomorphism,
    mode_mismatch,
    malformed_sequence,
    cross_family_gamma,
    name_clash,
    gamma_mismatch,
    commuting_square_fails,
    syntax_error,
    unresolved_reference,
    invalid_argument
  };

  std::string_view to_string(ErrorKind kind) noexcept;

  struct SourceLocation {
    std::size_t line   = 0;
    std::size_t column = 0;
  };

  //! The single exception type thrown by the library. The kind says which
  //! contract was violated; parse errors also carry a location.
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind                     kind,
          std::string const&            message,
          std::optional<SourceLocation> where = std::nullopt);

    ErrorKind kind() const noexcept {
      return _kind;
    }

    std::optional<SourceLocation> const& location() const noexcept {
      return _where;
    }

    //! The message without the kind and location prefix.
    std::string const& detail() const noexcept {
      return _detail;
    }

   private:
    ErrorKind                     _kind;
    std::optional<SourceLocation> _where;
    std::string                   _detail;
  };

}  // namespace gsg

#endif  // GSG_ERROR_HPP_
