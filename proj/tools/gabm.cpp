#include "gabm/cli.hpp"

int main(int argc, char** argv) {
  return gabm::run_cli(argc, argv);
}
