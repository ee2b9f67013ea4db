#include <iostream>

#include "dsg/app.hpp"

int main(int argc, char** argv) { return dsg::run_command(argc, argv, std::cout, std::cerr); }
