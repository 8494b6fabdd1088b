#include <iostream>

#include "plan_strings/cli.h"

int main(int argc, char** argv) {
  return plan_strings::cli::run(argc, argv, std::cout, std::cerr);
}
