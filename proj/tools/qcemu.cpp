#include <string>
#include <vector>

#include "qcemu/cli.hpp"

int main(int argc, char** argv) {
  return qcemu::cli::main(std::vector<std::string>(argv, argv + argc));
}
