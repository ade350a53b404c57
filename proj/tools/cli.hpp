#ifndef GSG_TOOLS_CLI_HPP_
#define GSG_TOOLS_CLI_HPP_

#include <string>  // for string
#include <vector>  // for vector

namespace gsg::cli {

  //! Exit codes: 0 all checks pass, 1 a check failed (certificate printed),
  //! 2 input or usage error, 3 inconclusive within the search bound.
  struct Verdict {
    int         exit_code = 0;
    std::string out;
    std::string err;
  };

  //! Runs one command; \p args excludes the program name.
  Verdict run(std::vector<std::string> const& args);

}  // namespace gsg::cli

#endif  // GSG_TOOLS_CLI_HPP_
