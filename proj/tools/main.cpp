#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
  return laxalg::cli::run(argc, argv, std::cout, std::cerr);
}
