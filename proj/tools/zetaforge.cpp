#include "cli.hpp"

int main(int argc, char** argv) {
  return zf::cli::run_cli(argc, argv, std::cout, std::cerr);
}
