#include <iostream>

#include "gyro/cli.hpp"

int main(int argc, char** argv) { return gyro::runCli(argc, argv, std::cout, std::cerr); }
