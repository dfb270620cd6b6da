#include "aqrm/cli.hpp"

int main(int argc, char** argv) {
  return aqrm::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
