#include <iostream>
#include <string>
#include <vector>

#include "incidence/workbench.hpp"

int main(int argc, char **argv)
{
  std::vector<std::string> args(argv, argv + argc);
  return incidence::run_workbench(args, std::cout, std::cerr);
}
