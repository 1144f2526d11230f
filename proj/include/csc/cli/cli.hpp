#ifndef CSC_CLI_CLI_HPP
#define CSC_CLI_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace csc::cli {

enum ExitCode
{
  kCertified = 0,
  kRefuted = 1,
  kUnknown = 2,
  kInputError = 3,
};

/** Run one command; the report goes to @b out, usage and input errors to @b err. */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

} // namespace csc::cli

#endif
