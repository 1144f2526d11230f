#include "csc/cli/cli.hpp"

int main(int argc, char** argv)
{
  return csc::cli::run(argc, argv);
}
