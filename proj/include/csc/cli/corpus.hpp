#ifndef CSC_CLI_CORPUS_HPP
#define CSC_CLI_CORPUS_HPP

#include <string>
#include <vector>

namespace csc::cli {

struct CorpusFile
{
  std::string name;
  std::string text;
};

/** The problem files shipped in problems/. */
const std::vector<CorpusFile>& corpus();

} // namespace csc::cli

#endif
